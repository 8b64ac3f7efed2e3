#include "doctest.h"

#include "em1/extract.hpp"
#include "em1/parser.hpp"
#include "em1/sampler.hpp"
#include "support/test_util.hpp"

using namespace em1;
using em1::test::atom;

namespace {

Environment numerals(std::map<std::string, Nat> values) {
  return Environment::of_numerals(values);
}

}  // namespace

TEST_SUITE_BEGIN("extraction");

TEST_CASE("the square-root syllogism learns its witness") {
  Program p = test::load_corpus("sq.em1");
  RegistryPtr reg = p.registry_ptr();
  State learned = test::state_of(*reg, {atom("SQ", {9}, 3)});

  for (auto policy :
       {MergePolicy::kFirst, MergePolicy::kOverride, MergePolicy::kMin}) {
    WitnessResult w = extract_witness(reg, p.proof("main"),
                                      numerals({{"x", 9}, {"y", 3}}), "SQ",
                                      State::bottom(), 100, policy);
    CHECK(w.witness == 3);
    CHECK(w.final_state == learned);
    CHECK(w.trace.entries.size() == 2);
  }
}

TEST_CASE("a false hypothesis leaves the state untouched") {
  Program p = test::load_corpus("sq.em1");
  RegistryPtr reg = p.registry_ptr();

  // 8 is not a square, so the guard step never fires.
  Realizer r = extract_realizer(reg, p.proof("main"),
                                numerals({{"x", 8}, {"y", 3}}),
                                MergePolicy::kOverride);
  Formula concl = check_proof(*reg, p.proof("main"));
  ForcesResult res = forces_check(r, reg, numerals({{"x", 8}, {"y", 3}}), concl,
                                  State::bottom(), 100);
  CHECK(res.holds);
  CHECK(res.final_state.empty());

  // 7 has no root at all: the Skolem value stays at its default.
  WitnessResult w = extract_witness(reg, p.proof("main"),
                                    numerals({{"x", 7}, {"y", 3}}), "SQ",
                                    State::bottom(), 100, MergePolicy::kOverride);
  CHECK(w.witness == 0);
  CHECK(w.final_state.empty());
}

TEST_CASE("proofs without guard leaves extract to the trivial transformer") {
  Program p = test::load_corpus("arith.em1");
  RegistryPtr reg = p.registry_ptr();
  Sampler gen(sample_registry(), 101);

  for (const char* name :
       {"add_zero_right", "no_confusion", "refl", "sym_example", "add_zero_left",
        "add_zero_left_at7"}) {
    CAPTURE(name);
    Realizer r = extract_realizer(reg, p.proof(name),
                                  numerals({{"x", 4}, {"y", 5}}),
                                  MergePolicy::kOverride);
    CHECK(r.eval(State::bottom()).empty());
    LearningTrace t = find_prefix_point(r, State::bottom(), 100);
    CHECK(t.entries.size() == 1);
  }
  (void)gen;
}

TEST_CASE("extraction mirrors the proof structure") {
  Program p = test::load_corpus("sq.em1");
  RegistryPtr reg = p.registry_ptr();
  Environment env = numerals({{"x", 9}, {"y", 3}});

  // mp(mp(taut, chi), phiax) collapses to merged(merged(trivial, chi), trivial).
  const RealizerTag& tag =
      extract_realizer(reg, p.proof("main"), env, MergePolicy::kOverride).tag();
  REQUIRE(tag.kind() == RealizerTag::Kind::kMerged);
  REQUIRE(tag.left()->kind() == RealizerTag::Kind::kMerged);
  CHECK(tag.left()->left()->kind() == RealizerTag::Kind::kTrivial);
  CHECK(tag.left()->right()->kind() == RealizerTag::Kind::kChi);
  CHECK(tag.right()->kind() == RealizerTag::Kind::kTrivial);

  // Substitution shifts the environment without adding structure.
  Program lt = test::load_corpus("lt_chain.em1");
  const RealizerTag& sub_tag =
      extract_realizer(lt.registry_ptr(), lt.proof("shifted"),
                       numerals({{"x", 0}, {"y2", 5}}), MergePolicy::kOverride)
          .tag();
  CHECK(sub_tag.kind() == RealizerTag::Kind::kMerged);

  // Induction carries its base and step shapes.
  const RealizerTag& ind_tag =
      extract_realizer(reg, p.proof("all_y"), env, MergePolicy::kOverride).tag();
  REQUIRE(ind_tag.kind() == RealizerTag::Kind::kInduction);
  CHECK(ind_tag.left()->kind() == RealizerTag::Kind::kMerged);
  CHECK(ind_tag.right()->kind() == RealizerTag::Kind::kMerged);
}

TEST_CASE("induction searches candidate roots bottom-up") {
  Program p = test::load_corpus("sq.em1");
  RegistryPtr reg = p.registry_ptr();
  Formula concl = check_proof(*reg, p.proof("all_y"));

  for (auto policy :
       {MergePolicy::kFirst, MergePolicy::kOverride, MergePolicy::kMin}) {
    Environment env = numerals({{"x", 9}, {"y", 5}});
    Realizer r = extract_realizer(reg, p.proof("all_y"), env, policy);
    ForcesResult res = forces_check(r, reg, env, concl, State::bottom(), 100);
    CHECK(res.holds);
    CHECK(res.final_state == test::state_of(*reg, {atom("SQ", {9}, 3)}));
  }
}

TEST_CASE("merged goals interact through the state") {
  Program p = test::load_corpus("lt_chain.em1");
  RegistryPtr reg = p.registry_ptr();
  Environment env = numerals({{"x", 0}, {"y", 1}, {"y2", 5}});
  Formula concl = check_proof(*reg, p.proof("pair"));

  for (auto policy :
       {MergePolicy::kFirst, MergePolicy::kOverride, MergePolicy::kMin}) {
    Realizer r = extract_realizer(reg, p.proof("pair"), env, policy);
    ForcesResult res = forces_check(r, reg, env, concl, State::bottom(), 100);
    CHECK(res.holds);
    // phi LT 0 settles to 1, then the shifted goal bounds that bound by 5.
    CHECK(res.final_state ==
          test::state_of(*reg, {atom("LT", {0}, 1), atom("LT", {1}, 5)}));
    CHECK(res.trace.expansions() == 2);
  }
}

TEST_CASE("missing Skolem occurrence is reported") {
  Program p = test::load_corpus("arith.em1");
  CHECK_THROWS_WITH_AS(
      extract_witness(p.registry_ptr(), p.proof("refl"), Environment(), "LT",
                      State::bottom(), 100, MergePolicy::kOverride),
      doctest::Contains("no occurrence"), EvalError);
}

TEST_CASE("corpus soundness from random initial states") {
  Sampler seeds(sample_registry(), 1234);
  for (const char* file : {"sq.em1", "arith.em1", "lt_chain.em1"}) {
    CAPTURE(file);
    Program p = test::load_corpus(file);
    RegistryPtr reg = p.registry_ptr();
    Sampler gen(reg, seeds.rng()());
    for (const auto& [name, proof] : p.proofs) {
      CAPTURE(name);
      Formula concl = check_proof(*reg, proof);
      for (int round = 0; round < 3; ++round) {
        std::map<std::string, Nat> values;
        for (const auto& v : free_vars(concl)) values[v] = gen.small_nat(8);
        Environment env = numerals(values);
        for (auto policy :
             {MergePolicy::kFirst, MergePolicy::kOverride, MergePolicy::kMin}) {
          Realizer r = extract_realizer(reg, proof, env, policy);
          ForcesResult res =
              forces_check(r, reg, env, concl, gen.state(5), 100);
          CHECK(res.holds);
        }
      }
    }
  }
}

TEST_SUITE_END();
