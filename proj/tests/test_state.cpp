#include "doctest.h"

#include "em1/sampler.hpp"
#include "em1/state.hpp"
#include "support/test_util.hpp"

using namespace em1;
using em1::test::atom;

TEST_SUITE_BEGIN("knowledge-state");

TEST_CASE("try_insert enforces the model and consistency conditions") {
  RegistryPtr reg = sample_registry();
  State s = State::bottom().try_insert(*reg, atom("LT", {1}, 2));
  CHECK(s.size() == 1);
  CHECK(s.lookup_witness("LT", {Nat(1)}) == Nat(2));

  CHECK_THROWS_AS(State::bottom().try_insert(*reg, atom("LT", {2}, 1)), StateError);
  try {
    State::bottom().try_insert(*reg, atom("LT", {2}, 1));
  } catch (const StateError& e) {
    CHECK(e.kind == StateError::Kind::kModelViolation);
  }

  CHECK_THROWS_AS(s.try_insert(*reg, atom("LT", {1}, 3)), StateError);
  try {
    s.try_insert(*reg, atom("LT", {1}, 3));
  } catch (const StateError& e) {
    CHECK(e.kind == StateError::Kind::kInconsistentWitness);
  }

  // Re-inserting the stored atom is a no-op.
  CHECK(s.try_insert(*reg, atom("LT", {1}, 2)) == s);
}

TEST_CASE("order, compatibility, join") {
  RegistryPtr reg = sample_registry();
  State a = test::state_of(*reg, {atom("LT", {1}, 2)});
  State b = test::state_of(*reg, {atom("LT", {0}, 1)});
  State conflict = test::state_of(*reg, {atom("LT", {1}, 3)});

  CHECK(leq(State::bottom(), a));
  CHECK(leq(a, a));
  CHECK_FALSE(leq(a, b));

  CHECK(compatible(a, State::bottom()));
  CHECK(compatible(a, b));
  CHECK_FALSE(compatible(a, conflict));

  CHECK(join(a, State::bottom()) == a);
  State both = join(a, b);
  CHECK(both.size() == 2);
  CHECK(both.contains(atom("LT", {1}, 2)));
  CHECK(both.contains(atom("LT", {0}, 1)));
  CHECK_THROWS_AS(join(a, conflict), StateError);
}

TEST_CASE("lookup_witness") {
  RegistryPtr reg = sample_registry();
  State s = test::state_of(*reg, {atom("LT", {1}, 2)});
  CHECK_FALSE(State::bottom().lookup_witness("LT", {Nat(1)}).has_value());
  CHECK(s.lookup_witness("LT", {Nat(1)}) == Nat(2));
  CHECK_FALSE(s.lookup_witness("LT", {Nat(0)}).has_value());
}

TEST_CASE("join is the least upper bound of compatible pairs") {
  Sampler gen(sample_registry(), 11);
  for (int i = 0; i < 100; ++i) {
    State pool = gen.state(8);
    State a = gen.substate(pool);
    State b = gen.substate(pool);
    State j = join(a, b);
    CHECK(leq(a, j));
    CHECK(leq(b, j));
    CHECK(leq(j, pool));  // pool is an upper bound, join must sit below it
  }
}

TEST_CASE("subsets of a state are states") {
  Sampler gen(sample_registry(), 12);
  const Registry& reg = *gen.registry();
  for (int i = 0; i < 50; ++i) {
    State s = gen.state(6);
    State sub = gen.substate(s);
    // Revalidating from scratch must succeed.
    CHECK(State::from_atoms(reg, sub.atoms()) == sub);
    CHECK(leq(sub, s));
  }
}

TEST_CASE("JSON round trip in canonical order") {
  RegistryPtr reg = sample_registry();
  State s = test::state_of(
      *reg, {atom("LT", {1}, 2), atom("LT", {0}, 1), atom("SQ", {9}, 3)});
  nlohmann::json j = s.to_json();
  CHECK(j["atoms"].size() == 3);
  // (pred, args) sorted: LT [0], LT [1], SQ [9]
  CHECK(j["atoms"][0]["args"][0] == 0);
  CHECK(j["atoms"][1]["args"][0] == 1);
  CHECK(j["atoms"][2]["pred"] == "SQ");
  CHECK(State::from_json(*reg, j) == s);

  CHECK_THROWS_AS(
      State::from_json(*reg, nlohmann::json::parse(
                                 R"({"atoms":[{"pred":"LT","args":[2],"witness":1}]})")),
      StateError);
}

TEST_SUITE_END();
