#include "doctest.h"

#include "em1/laws.hpp"
#include "em1/parser.hpp"
#include "em1/sampler.hpp"
#include "em1/semantics.hpp"
#include "support/test_util.hpp"

using namespace em1;
using em1::test::atom;

TEST_SUITE_BEGIN("state-semantics");

TEST_CASE("guard and Skolem lookups") {
  RegistryPtr reg = sample_registry();
  State s = test::state_of(*reg, {atom("LT", {1}, 2)});
  State s2 = test::state_of(*reg, {atom("LT", {1}, 2), atom("LT", {0}, 1)});

  CHECK_FALSE(sem_chi(*reg, "LT", {Nat(1)}, State::bottom()));
  CHECK(sem_chi(*reg, "LT", {Nat(1)}, s));
  CHECK_FALSE(sem_chi(*reg, "LT", {Nat(0)}, s));

  CHECK(sem_phi(*reg, "LT", {Nat(1)}, State::bottom()) == 0);
  CHECK(sem_phi(*reg, "LT", {Nat(1)}, s) == 2);
  CHECK(sem_phi(*reg, "LT", {Nat(1)}, s2) == 2);

  CHECK_THROWS_AS(sem_phi(*reg, "LT", {Nat(1), Nat(2)}, s), EvalError);
}

TEST_CASE("term denotation evaluates every part at the same state") {
  RegistryPtr reg = sample_registry();
  Environment env = Environment().with("x", Individual::constant(1));
  Individual one = denote_term(parse_term(*reg, "(succ 0)"), Environment(), reg);
  State s = test::state_of(*reg, {atom("LT", {1}, 2)});
  CHECK(one.eval(State::bottom()) == 1);
  CHECK(one.eval(s) == 1);

  Individual bound = denote_term(parse_term(*reg, "(phi LT x)"), env, reg);
  CHECK(bound.eval(s) == 2);
  CHECK(bound.eval(State::bottom()) == 0);
}

TEST_CASE("the Kripke monotonicity counterexample") {
  RegistryPtr reg = sample_registry();
  // LT(x, y) plays x < y; chi LT x -> x = succ x flips from true to false
  // when the state learns a bound for 0.
  State s = test::state_of(*reg, {atom("LT", {1}, 2)});
  State s2 = test::state_of(*reg, {atom("LT", {1}, 2), atom("LT", {0}, 1)});
  Formula a = parse_formula(*reg, "(-> (chi LT x) (= x (succ x)))");
  Environment env = Environment().with("x", Individual::constant(0));
  BoolIndividual v = denote_formula(a, env, reg);
  CHECK(v.eval(s) == true);
  CHECK(v.eval(s2) == false);
}

TEST_CASE("guard truth is monotone, formulas are not") {
  Sampler gen(sample_registry(), 5);
  const Registry& reg = *gen.registry();
  for (int i = 0; i < 100; ++i) {
    State s = gen.state(4);
    State larger = gen.grow(s, 2);
    for (const auto& a : s)
      if (sem_chi(reg, a.pred, a.args, s)) CHECK(sem_chi(reg, a.pred, a.args, larger));
  }
  // The converse fails on the pair (bottom, {<P, m, n>}).
  State grown = test::state_of(reg, {atom("LT", {3}, 7)});
  CHECK(sem_chi(reg, "LT", {Nat(3)}, grown));
  CHECK_FALSE(sem_chi(reg, "LT", {Nat(3)}, State::bottom()));
}

TEST_CASE("base-language denotations are constant in the state") {
  Sampler gen(sample_registry(), 17);
  RegistryPtr reg = gen.registry();
  const std::vector<std::string> vars = {"x", "y"};
  int sampled = 0;
  for (int i = 0; i < 120 && sampled < 40; ++i) {
    Term t = gen.term(3, vars);
    if (!in_base_language(t)) continue;
    ++sampled;
    Environment env = Environment()
                          .with("x", Individual::constant(gen.small_nat(9)))
                          .with("y", Individual::constant(gen.small_nat(9)));
    Individual v = denote_term(t, env, reg);
    Nat at_bottom = v.eval(State::bottom());
    for (int k = 0; k < 3; ++k) CHECK(v.eval(gen.state(5)) == at_bottom);
  }
  CHECK(sampled > 0);
}

TEST_CASE("denotation maps are global; moving the state breaks globality") {
  Sampler gen(sample_registry(), 23);
  RegistryPtr reg = gen.registry();
  const std::vector<std::string> vars = {"x", "y"};
  for (int i = 0; i < 60; ++i) {
    Formula a = gen.formula(2, vars);
    Environment env = gen.environment(vars);
    auto f = [&](const Individual& alpha, const State& s) {
      return denote_formula(a, env.with("x", alpha), reg).eval(s);
    };
    CHECK(is_global_at(f, gen.individual(vars), gen.state(5)));

    Term t = gen.term(2, vars);
    auto g = [&](const Individual& alpha, const State& s) {
      return denote_term(t, env.with("x", alpha), reg).eval(s);
    };
    CHECK(is_global_at(g, gen.individual(vars), gen.state(5)));
  }

  // A map that reads its argument at a shifted state is not global.
  RegistryPtr sreg = sample_registry();
  State shifted_target = test::state_of(*sreg, {atom("LT", {4}, 9)});
  auto shifted = [&](const Individual& alpha, const State&) {
    return alpha.eval(shifted_target);
  };
  Individual probe = denote_term(parse_term(*sreg, "(phi LT 4)"), Environment(), sreg);
  CHECK_FALSE(is_global_at(shifted, probe, State::bottom()));

  // Constant maps are trivially global.
  auto constant = [](const Individual&, const State&) { return Nat(5); };
  CHECK(is_global_at(constant, probe, State::bottom()));
}

TEST_CASE("stabilization points") {
  RegistryPtr reg = sample_registry();
  State s1 = test::state_of(*reg, {atom("LT", {1}, 2)});
  State s2 = test::state_of(*reg, {atom("LT", {1}, 2), atom("LT", {0}, 1)});
  WISequence seq({State::bottom(), s1, s2});

  CHECK(stabilization_point(Individual::constant(7), seq) == 0);
  Individual v = denote_term(parse_term(*reg, "(phi LT x)"),
                             Environment().with("x", Individual::constant(1)), reg);
  CHECK(stabilization_point(v, seq) == 1);  // 0 -> 2, then stays

  WISequence flat({s1, s1, s1});
  CHECK(stabilization_point(v, flat) == 0);

  CHECK_THROWS_AS(WISequence({s1, State::bottom()}), Error);
}

TEST_CASE("density: global maps agreeing on constants agree on individuals") {
  Sampler gen(sample_registry(), 31);
  RegistryPtr reg = gen.registry();
  const std::vector<std::string> vars = {"x"};
  const unsigned kBound = 12;
  int agreements = 0;
  for (int i = 0; i < 60; ++i) {
    Formula a = gen.formula(2, vars);
    // A partner with the same denotation map but different syntax, plus an
    // unrelated sample that only sometimes agrees.
    Formula b = gen.coin(50) ? Formula::conj(a, a)
                             : Formula::negation(Formula::negation(a));
    Formula c = gen.formula(2, vars);
    Environment env = gen.environment({"z"});
    auto map_of = [&](const Formula& f) {
      return [&, f](const Individual& alpha, const State& s) {
        return denote_formula(f, env.with("x", alpha), reg).eval(s);
      };
    };
    auto fa = map_of(a), fb = map_of(b), fc = map_of(c);
    State s = gen.state(5);

    for (auto* partner : {&fb, &fc}) {
      bool agree_on_constants = true;
      for (unsigned n = 0; n <= kBound; ++n) {
        if (fa(Individual::constant(n), s) != (*partner)(Individual::constant(n), s)) {
          agree_on_constants = false;
          break;
        }
      }
      if (!agree_on_constants) continue;
      for (int k = 0; k < 5; ++k) {
        Individual alpha = gen.individual(vars);
        if (alpha.eval(s) > kBound) continue;
        ++agreements;
        CHECK(fa(alpha, s) == (*partner)(alpha, s));
      }
    }
  }
  CHECK(agreements > 50);
}

TEST_CASE("substitution and monad law suites at smoke scale") {
  CHECK(laws::substitution_suite(3, 50).ok());
  CHECK(laws::state_monad_suite(4, 50).ok());
  CHECK(laws::conservativity_suite(5, 40, 5).ok());
  CHECK(laws::convergence_suite(6, 40, 40).ok());
}

TEST_SUITE_END();
