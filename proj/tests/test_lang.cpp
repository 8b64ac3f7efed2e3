#include "doctest.h"

#include "em1/ast.hpp"
#include "em1/eval.hpp"
#include "em1/parser.hpp"
#include "em1/sampler.hpp"
#include "support/test_util.hpp"

using namespace em1;

TEST_SUITE_BEGIN("lang");

TEST_CASE("empty source yields an empty program") {
  Program p = parse_program("");
  CHECK(p.registry->size() == 0);
  CHECK(p.terms.empty());
  CHECK(p.proofs.empty());
}

TEST_CASE("declarations receive indices in order") {
  Program p = parse_program(
      "(deffun pred (x) (primrec (zero 0) (proj 1 2)))\n"
      "(defpred LT (x y) (comp succ (zero 2)))");
  CHECK(p.registry->at("pred").index == 0);
  CHECK(p.registry->at("LT").index == 1);
  CHECK(p.registry->at("LT").is_predicate());
  CHECK(p.registry->at("pred").arity == 1);
}

TEST_CASE("chi formula over a declared predicate") {
  Program p = parse_program(
      "(defpred LT (x y) (comp succ (zero 2)))\n"
      "(formula A (chi LT x))");
  const Formula& a = p.formula("A");
  CHECK(a.kind() == Formula::Kind::kChi);
  CHECK(a.name() == "LT");
  CHECK(a.terms().size() == 1);
}

TEST_CASE("phi arity mismatch is a located parse error") {
  CHECK_THROWS_WITH_AS(
      parse_program("(defpred LT (x y) (comp succ (zero 2)))\n"
                    "(term t (phi LT x y))"),
      doctest::Contains("phi LT expects 1 arguments"), ParseError);
}

TEST_CASE("undeclared and cyclic references are rejected") {
  CHECK_THROWS_WITH_AS(parse_program("(deffun f (x) (comp g (proj 1 1)))"),
                       doctest::Contains("undeclared"), ParseError);
  CHECK_THROWS_WITH_AS(parse_program("(deffun f (x) (comp f (proj 1 1)))"),
                       doctest::Contains("cyclic"), ParseError);
}

TEST_CASE("declared arity must match the schema") {
  CHECK_THROWS_WITH_AS(parse_program("(deffun f (x y) (proj 1 1))"),
                       doctest::Contains("arity"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_program("(deffun f (x)\n  (proj 2 1))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("free variables") {
  RegistryPtr reg = sample_registry();
  CHECK(free_vars(parse_term(*reg, "(phi LT x)")) == std::set<std::string>{"x"});
  CHECK(free_vars(parse_formula(*reg, "(-> (LT x y) (chi LT x))")) ==
        std::set<std::string>{"x", "y"});
  CHECK(free_vars(parse_term(*reg, "(succ 0)")).empty());
}

TEST_CASE("substitution") {
  RegistryPtr reg = sample_registry();
  Formula a = parse_formula(*reg, "(-> (LT x y) (chi LT x))");
  Formula expected = parse_formula(*reg, "(-> (LT x (phi LT x)) (chi LT x))");
  CHECK(substitute(a, "y", parse_term(*reg, "(phi LT x)")) == expected);
  CHECK(substitute(Term::zero(), "x", Term::var("t")) == Term::zero());
  Term x = Term::var("x");
  CHECK(substitute(x, "x", Term::succ(x)) == Term::succ(x));
}

TEST_CASE("free variables of a substitution") {
  Sampler gen(sample_registry(), 2024);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int i = 0; i < 200; ++i) {
    Term e = gen.term(3, vars);
    Term t = gen.term(2, vars);
    const std::string& x = vars[gen.below(vars.size())];
    auto expected = free_vars(e);
    bool occurred = expected.erase(x) > 0;
    if (occurred) {
      auto tv = free_vars(t);
      expected.insert(tv.begin(), tv.end());
    }
    CHECK(free_vars(substitute(e, x, t)) == expected);
  }
}

TEST_CASE("print then parse is the identity") {
  Sampler gen(sample_registry(), 99);
  RegistryPtr reg = gen.registry();
  const std::vector<std::string> vars = {"x", "y"};
  for (int i = 0; i < 200; ++i) {
    Term t = gen.term(3, vars);
    CHECK(parse_term(*reg, t.to_string()) == t);
    Formula a = gen.formula(3, vars);
    CHECK(parse_formula(*reg, a.to_string()) == a);
  }
  for (const char* file : {"sq.em1", "arith.em1", "lt_chain.em1"}) {
    Program p = test::load_corpus(file);
    for (const auto& [name, proof] : p.proofs) {
      CAPTURE(name);
      Proof reparsed = parse_proof(*p.registry, proof.to_string());
      CHECK(check_proof(*p.registry, reparsed) == check_proof(*p.registry, proof));
      CHECK(reparsed.to_string() == proof.to_string());
    }
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("standard-model");

TEST_CASE("schema evaluation") {
  RegistryPtr reg = sample_registry();
  CHECK(eval_fun(*reg, "add", {Nat(2), Nat(3)}) == 5);
  CHECK(eval_fun(*reg, "pred", {Nat(0)}) == 0);
  CHECK(eval_fun(*reg, "pred", {Nat(9)}) == 8);
  CHECK(eval_fun(*reg, "mul", {Nat(6), Nat(7)}) == 42);
  CHECK(eval_fun(*reg, "monus", {Nat(3), Nat(5)}) == 0);
  CHECK(eval_pred(*reg, "LT", {Nat(1), Nat(2)}));
  CHECK_FALSE(eval_pred(*reg, "LT", {Nat(2), Nat(2)}));
  CHECK(eval_pred(*reg, "SQ", {Nat(9), Nat(3)}));
  CHECK_FALSE(eval_pred(*reg, "SQ", {Nat(8), Nat(3)}));
}

TEST_CASE("budget exhaustion fails loudly") {
  Program p = parse_program(
      "(deffun double (x) (primrec (zero 0) (comp succ (comp succ (proj 2 2)))))\n"
      "(deffun exp2 (x) (primrec (comp succ (zero 0)) (comp double (proj 2 2))))");
  CHECK(eval_fun(*p.registry, "exp2", {Nat(4)}) == 16);
  CHECK_THROWS_AS(eval_fun(*p.registry, "exp2", {Nat(64)}, 100000), BudgetError);
}

TEST_CASE("closed formula evaluation") {
  RegistryPtr reg = sample_registry();
  std::map<std::string, Nat> rho;
  CHECK(eval_closed_formula(
      *reg, Formula::negation(Formula::eq(Term::succ(Term::zero()), Term::zero())),
      rho));
  rho["x"] = 7;
  CHECK(eval_closed_formula(*reg, parse_formula(*reg, "(= x x)"), rho));
  rho["y"] = 2;
  rho["x"] = 1;
  CHECK_FALSE(eval_closed_formula(
      *reg, parse_formula(*reg, "(and (LT x y) (LT y x))"), rho));
  CHECK_THROWS_AS(
      eval_closed_formula(*reg, parse_formula(*reg, "(= z z)"), rho), EvalError);
  CHECK_THROWS_AS(
      eval_closed_formula(*reg, parse_formula(*reg, "(chi LT x)"), rho), EvalError);
}

TEST_CASE("connective truth tables") {
  RegistryPtr reg = sample_registry();
  std::map<std::string, Nat> rho;
  Formula tt = parse_formula(*reg, "(= 0 0)");
  Formula ff = parse_formula(*reg, "(= 0 1)");
  auto ev = [&](const Formula& f) { return eval_closed_formula(*reg, f, rho); };
  const Formula rows[2] = {ff, tt};
  for (int a = 0; a < 2; ++a) {
    CHECK(ev(Formula::negation(rows[a])) == !a);
    for (int b = 0; b < 2; ++b) {
      CHECK(ev(Formula::conj(rows[a], rows[b])) == (a && b));
      CHECK(ev(Formula::disj(rows[a], rows[b])) == (a || b));
      CHECK(ev(Formula::implies(rows[a], rows[b])) == (!a || b));
    }
  }
}

TEST_SUITE_END();
