#include "doctest.h"

#include "em1/proof.hpp"
#include "em1/parser.hpp"
#include "em1/sampler.hpp"
#include "em1/semantics.hpp"
#include "support/test_util.hpp"

using namespace em1;

TEST_SUITE_BEGIN("proof-system");

TEST_CASE("tautology check") {
  RegistryPtr reg = sample_registry();
  CHECK(tautology_check(parse_formula(*reg, "(or (LT x y) (not (LT x y)))")));
  CHECK_FALSE(tautology_check(parse_formula(*reg, "(-> (LT x y) (= x y))")));
  // Peirce's law needs the full classical table.
  CHECK(tautology_check(parse_formula(
      *reg, "(-> (-> (-> (LT x y) (= x y)) (LT x y)) (LT x y))")));
  // Distinct atoms are matched syntactically: x = y versus y = x differ.
  CHECK_FALSE(tautology_check(parse_formula(*reg, "(-> (= x y) (= y x))")));

  Formula big = parse_formula(*reg, "(= x0 x0)");
  for (int i = 1; i < 17; ++i)
    big = Formula::conj(big, Formula::eq(Term::var("x" + std::to_string(i)),
                                         Term::var("x" + std::to_string(i))));
  CHECK_THROWS_AS(tautology_check(big), ProofError);
}

TEST_CASE("defining-equation instances") {
  RegistryPtr reg = sample_registry();
  CHECK(pra_axiom_check(*reg, parse_formula(*reg, "(= (add x 0) x)")));
  CHECK(pra_axiom_check(
      *reg, parse_formula(*reg, "(= (add x (succ y)) (succ (add x y)))")));
  // Instances substitute arbitrary terms for the schema arguments.
  CHECK(pra_axiom_check(
      *reg, parse_formula(*reg, "(= (add (mul x x) 0) (mul x x))")));
  CHECK(pra_axiom_check(
      *reg,
      parse_formula(*reg, "(= (mul x (succ (phi LT y))) (add x (mul x (phi LT y))))")));
  CHECK(pra_axiom_check(*reg, parse_formula(*reg, "(not (= (succ 0) 0))")));
  // Composed bodies unfold symbolically.
  CHECK(pra_axiom_check(
      *reg, parse_formula(*reg, "(= (iszero x) (monus (succ 0) (sig x)))")));

  CHECK_FALSE(pra_axiom_check(*reg, parse_formula(*reg, "(= x (succ x))")));
  CHECK_FALSE(pra_axiom_check(*reg, parse_formula(*reg, "(= (add x 0) y)")));
  CHECK_FALSE(pra_axiom_check(*reg, parse_formula(*reg, "(= (add 0 x) x)")));
}

TEST_CASE("equality axioms") {
  RegistryPtr reg = sample_registry();
  CHECK(eq_axiom_check(*reg, parse_formula(*reg, "(= x x)")));
  CHECK(eq_axiom_check(*reg, parse_formula(*reg, "(-> (= x y) (= y x))")));
  CHECK(eq_axiom_check(
      *reg, parse_formula(*reg, "(-> (and (= x y) (= y z)) (= x z))")));
  CHECK(eq_axiom_check(
      *reg, parse_formula(*reg, "(-> (= x y) (= (succ x) (succ y)))")));
  CHECK(eq_axiom_check(
      *reg, parse_formula(
                *reg, "(-> (and (= x y) (= u v)) (= (add x u) (add y v)))")));
  CHECK(eq_axiom_check(
      *reg, parse_formula(*reg, "(-> (= x y) (= (phi LT x) (phi LT y)))")));
  CHECK(eq_axiom_check(
      *reg,
      parse_formula(*reg, "(-> (and (= x y) (= u v)) (-> (LT x u) (LT y v)))")));
  CHECK(eq_axiom_check(
      *reg, parse_formula(*reg, "(-> (= x y) (-> (chi LT x) (chi LT y)))")));

  CHECK_FALSE(eq_axiom_check(*reg, parse_formula(*reg, "(-> (= x y) (= y z))")));
  CHECK_FALSE(eq_axiom_check(
      *reg, parse_formula(*reg, "(-> (= x y) (= (succ x) (succ z)))")));
  CHECK_FALSE(eq_axiom_check(*reg, parse_formula(*reg, "(= x y)")));
}

TEST_CASE("axiom leaf checking in proofs") {
  RegistryPtr reg = sample_registry();
  Formula chi_concl = check_proof(*reg, parse_proof(*reg, "(chi SQ (x) y)"));
  CHECK(chi_concl == parse_formula(*reg, "(-> (SQ x y) (chi SQ x))"));

  Formula phi_concl = check_proof(*reg, parse_proof(*reg, "(phiax SQ (x))"));
  CHECK(phi_concl == parse_formula(*reg, "(-> (chi SQ x) (SQ x (phi SQ x)))"));

  CHECK_THROWS_AS(check_proof(*reg, parse_proof(*reg, "(taut (= x y))")),
                  ProofError);
  CHECK_THROWS_AS(check_proof(*reg, parse_proof(*reg, "(pra (= x (succ x)))")),
                  ProofError);
  CHECK_THROWS_AS(check_proof(*reg, parse_proof(*reg, "(eqax (-> (= x y) (= y z)))")),
                  ProofError);
}

TEST_CASE("modus ponens validates the premise shapes") {
  RegistryPtr reg = sample_registry();
  Proof good = parse_proof(
      *reg, "(mp (phiax SQ (x)) (mp (taut (-> (SQ x y) (-> (SQ x y) (SQ x y)))) "
            "(taut (or (SQ x y) (not (SQ x y))))))");
  CHECK_THROWS_WITH_AS(check_proof(*reg, good),
                       doctest::Contains("premises do not match"), ProofError);

  Proof not_implication = parse_proof(*reg, "(mp (eqax (= x x)) (eqax (= x x)))");
  CHECK_THROWS_WITH_AS(check_proof(*reg, not_implication),
                       doctest::Contains("not an implication"), ProofError);
}

TEST_CASE("substitution rule") {
  RegistryPtr reg = sample_registry();
  Proof p = parse_proof(*reg, "(sub (eqax (-> (= x y) (= y x))) x (mul z z))");
  CHECK(check_proof(*reg, p) ==
        parse_formula(*reg, "(-> (= (mul z z) y) (= y (mul z z)))"));
}

TEST_CASE("induction shape inference") {
  Program p = test::load_corpus("arith.em1");
  const Registry& reg = *p.registry;

  Formula base = parse_formula(reg, "(= (add 0 0) 0)");
  Formula step = parse_formula(
      reg, "(-> (= (add 0 y) y) (= (add 0 (succ y)) (succ y)))");
  IndShape shape = infer_induction(base, step, "y");
  CHECK(shape.rec_var == "y");
  CHECK(shape.pattern == parse_formula(reg, "(= (add 0 y) y)"));

  // Renaming the conclusion variable is allowed when it is fresh.
  IndShape renamed = infer_induction(base, step, "w");
  CHECK(substitute(renamed.pattern, renamed.rec_var, Term::var("w")) ==
        parse_formula(reg, "(= (add 0 w) w)"));

  // ... and rejected when it collides with another free variable.
  Formula base2 = parse_formula(reg, "(= (add x 0) x)");
  Formula step2 = parse_formula(
      reg, "(-> (= (add x y) x) (= (add x (succ y)) x))");
  CHECK_THROWS_WITH_AS(infer_induction(base2, step2, "x"),
                       doctest::Contains("already occurs"), ProofError);

  CHECK_THROWS_AS(
      infer_induction(base, parse_formula(reg, "(= (add 0 y) y)"), "y"),
      ProofError);
  CHECK_THROWS_AS(
      infer_induction(parse_formula(reg, "(= (add 0 1) 1)"), step, "y"),
      ProofError);
}

TEST_CASE("checker is deterministic and bounds free variables") {
  for (const char* file : {"sq.em1", "arith.em1", "lt_chain.em1"}) {
    Program p = test::load_corpus(file);
    for (const auto& [name, proof] : p.proofs) {
      CAPTURE(name);
      Formula once = check_proof(*p.registry, proof);
      CHECK(check_proof(*p.registry, proof) == once);
    }
  }
}

TEST_CASE("accepted leaves denote true everywhere, except guard axioms") {
  Program p = test::load_corpus("sq.em1");
  RegistryPtr reg = p.registry_ptr();
  Sampler gen(sample_registry(), 3);

  // Leaf formulas from the corpus syllogism.
  Formula taut_leaf = parse_formula(
      *reg,
      "(-> (-> (SQ x y) (chi SQ x)) (-> (-> (chi SQ x) (SQ x (phi SQ x))) "
      "(-> (SQ x y) (SQ x (phi SQ x)))))");
  Formula phi_leaf = check_proof(*reg, parse_proof(*reg, "(phiax SQ (x))"));
  Formula pra_leaf = parse_formula(*reg, "(= (add x 0) x)");
  Formula eq_leaf = parse_formula(*reg, "(-> (= x y) (= y x))");

  Sampler local(reg, 9);
  for (int i = 0; i < 30; ++i) {
    State s = local.state(5);
    Environment env = Environment()
                          .with("x", Individual::constant(local.small_nat(9)))
                          .with("y", Individual::constant(local.small_nat(9)));
    for (const Formula* f : {&taut_leaf, &phi_leaf, &pra_leaf, &eq_leaf})
      CHECK(denote_formula(*f, env, reg).eval(s));
  }

  // The guard axiom fails at the empty state whenever its premise holds.
  Formula chi_leaf = check_proof(*reg, parse_proof(*reg, "(chi SQ (x) y)"));
  Environment env = Environment()
                        .with("x", Individual::constant(9))
                        .with("y", Individual::constant(3));
  CHECK_FALSE(denote_formula(chi_leaf, env, reg).eval(State::bottom()));
  (void)gen;
}

TEST_SUITE_END();
