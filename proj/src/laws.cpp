#include "em1/laws.hpp"

#include <chrono>
#include <functional>
#include <utility>

#include "em1/extract.hpp"
#include "em1/merge.hpp"
#include "em1/proof.hpp"
#include "em1/sampler.hpp"

namespace em1::laws {

namespace {

constexpr std::size_t kMaxFailureMessages = 5;

class Suite {
 public:
  explicit Suite(std::string name) : start_(clock::now()) {
    result_.name = std::move(name);
  }

  void check(bool condition, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (condition) return;
    ++result_.failed;
    if (result_.failures.size() < kMaxFailureMessages)
      result_.failures.push_back(describe());
  }

  void check(bool condition, const char* label) {
    check(condition, [label] { return std::string(label); });
  }

  SuiteResult finish() {
    result_.seconds =
        std::chrono::duration<double>(clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  using clock = std::chrono::steady_clock;
  SuiteResult result_;
  clock::time_point start_;
};

const std::vector<MergePolicy>& all_policies() {
  static const std::vector<MergePolicy> policies = {
      MergePolicy::kFirst, MergePolicy::kOverride, MergePolicy::kMin};
  return policies;
}

bool subset_of_union(const State& m, const State& a, const State& b) {
  for (const auto& atom : m) {
    if (!a.contains(atom) && !b.contains(atom)) return false;
  }
  return true;
}

}  // namespace

std::string SuiteResult::summary() const {
  std::string out = (ok() ? "pass  " : "FAIL  ") + name + ": " +
                    std::to_string(checked) + " checks, " +
                    std::to_string(failed) + " failures, " +
                    std::to_string(seconds) + " s";
  for (const auto& f : failures) out += "\n      " + f;
  return out;
}

// ---------------------------------------------------------------------------
// Merge axioms

SuiteResult merge_axiom_suite(std::uint64_t seed, std::size_t iters) {
  Suite suite("merge-axioms");
  Sampler gen(sample_registry(), seed);
  const Registry& reg = *gen.registry();

  for (MergePolicy policy : all_policies()) {
    std::string pname = to_string(policy);
    for (std::size_t i = 0; i < iters; ++i) {
      // Shared pool makes compatible pairs frequent without forcing them.
      State pool = gen.state(8);
      auto draw = [&]() {
        return gen.coin(50) ? gen.substate(pool) : gen.state(5);
      };
      State s1 = draw(), s2 = draw(), s3 = draw();

      State m12 = merge(s1, s2, policy);
      suite.check(merge(State::bottom(), s1, policy) == s1,
                  ("left unit: " + pname).c_str());
      suite.check(merge(s1, State::bottom(), policy) == s1,
                  ("right unit: " + pname).c_str());
      suite.check(merge(m12, s3, policy) == merge(s1, merge(s2, s3, policy), policy),
                  ("associativity: " + pname).c_str());
      suite.check(!m12.empty() || (s1.empty() && s2.empty()),
                  ("unit reflection: " + pname).c_str());
      suite.check(subset_of_union(m12, s1, s2),
                  ("union bound: " + pname).c_str());

      State s = gen.coin(60) ? gen.substate(pool) : gen.state(4);
      if (compatible(s, s1) && compatible(s, s2))
        suite.check(compatible(s, m12),
                    ("compatibility preservation: " + pname).c_str());
      if (s.intersect(s1).empty() && s.intersect(s2).empty())
        suite.check(s.intersect(m12).empty(),
                    ("disjointness preservation: " + pname).c_str());

      if (policy == MergePolicy::kMin)
        suite.check(m12 == merge(s2, s1, policy), "min commutativity");
    }
  }

  // Pinned witnesses: the first and override policies are order-sensitive.
  State w1 = State::from_atoms(reg, {Atom{"LT", {Nat(1)}, Nat(2)}});
  State w2 = State::from_atoms(reg, {Atom{"LT", {Nat(1)}, Nat(3)}});
  suite.check(merge(w1, w2, MergePolicy::kFirst) != merge(w2, w1, MergePolicy::kFirst),
              "first policy has a non-commutativity witness");
  suite.check(merge(w1, w2, MergePolicy::kOverride) !=
                  merge(w2, w1, MergePolicy::kOverride),
              "override policy has a non-commutativity witness");
  return suite.finish();
}

// ---------------------------------------------------------------------------
// State monad laws

namespace {

using NatToBool = std::function<BoolIndividual(const Nat&)>;
using BoolToNat = std::function<Individual(bool)>;

BoolIndividual sext_apply(const NatToBool& f, const Individual& alpha) {
  return BoolIndividual::from_function(
      [f, alpha](const State& s) { return f(alpha.eval(s)).eval(s); },
      "ext(" + alpha.description() + ")");
}

Individual sext_apply(const BoolToNat& g, const BoolIndividual& beta) {
  return Individual::from_function(
      [g, beta](const State& s) { return g(beta.eval(s)).eval(s); },
      "ext(" + beta.description() + ")");
}

}  // namespace

SuiteResult state_monad_suite(std::uint64_t seed, std::size_t iters) {
  Suite suite("state-monad-laws");
  Sampler gen(sample_registry(), seed);
  RegistryPtr reg = gen.registry();
  const std::vector<std::string> vars = {"n"};

  for (std::size_t i = 0; i < iters; ++i) {
    Formula body = gen.formula(2, vars);
    Environment base = gen.environment({"z"});
    NatToBool f = [body, base, reg](const Nat& n) {
      return denote_formula(body, base.with("n", Individual::constant(n)), reg);
    };
    Term out_true = gen.term(2, {});
    Term out_false = gen.term(2, {});
    BoolToNat g = [out_true, out_false, base, reg](bool b) {
      return denote_term(b ? out_true : out_false, base, reg);
    };
    Individual alpha = gen.individual({});
    State s = gen.state(5);
    Nat x = gen.small_nat(9);

    // extension o unit = f
    suite.check(sext_apply(f, Individual::constant(x)).eval(s) == f(x).eval(s),
                "extension of unit composes to f");
    // extension of the unit arrow is the identity
    BoolIndividual beta = denote_formula(body, base, reg);
    BoolIndividual ext_unit = BoolIndividual::from_function(
        [beta](const State& st) {
          return BoolIndividual::constant(beta.eval(st)).eval(st);
        },
        "ext(unit)");
    suite.check(ext_unit.eval(s) == beta.eval(s),
                "extension of unit arrow is identity");
    // composition law
    Individual lhs = sext_apply(g, sext_apply(f, alpha));
    Individual rhs = Individual::from_function(
        [f, g, alpha](const State& st) {
          return sext_apply(g, f(alpha.eval(st))).eval(st);
        },
        "ext(ext(g) o f)");
    suite.check(lhs.eval(s) == rhs.eval(s), "extension composition law");
  }
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Realizer monad laws

namespace {

using Transformer = std::function<State(const State&)>;

struct RPair {
  Individual value;
  Transformer shift;
};

using NatToR = std::function<RPair(const Nat&)>;

RPair rext_apply(const NatToR& f, const RPair& input, MergePolicy policy) {
  Individual value = Individual::from_function(
      [f, in = input.value](const State& s) { return f(in.eval(s)).value.eval(s); },
      "rext-value");
  Transformer shift = [f, input, policy](const State& s) {
    return merge(input.shift(s), f(input.value.eval(s)).shift(s), policy);
  };
  return RPair{std::move(value), std::move(shift)};
}

RPair runit(const Nat& n) {
  return RPair{Individual::constant(n),
               [](const State&) { return State::bottom(); }};
}

}  // namespace

SuiteResult realizer_monad_suite(std::uint64_t seed, std::size_t iters) {
  Suite suite("realizer-monad-laws");
  Sampler gen(sample_registry(), seed);
  RegistryPtr reg = gen.registry();

  for (MergePolicy policy : all_policies()) {
    std::string pname = to_string(policy);
    for (std::size_t i = 0; i < iters; ++i) {
      // Arrows into the paired representation: a value map from a term
      // with a distinguished variable, a transformer from a guard step.
      auto arrow = [&]() -> NatToR {
        Term value_body = gen.term(2, {"n"});
        const std::string pred = gen.pick_predicate();
        Term arg_body = gen.term(1, {"n"});
        Term wit_body = gen.term(1, {"n"});
        RegistryPtr r = reg;
        return [value_body, pred, arg_body, wit_body, r](const Nat& n) {
          Environment env =
              Environment().with("n", Individual::constant(n));
          Individual value = denote_term(value_body, env, r);
          Realizer step = chi_realizer(r, pred, {denote_term(arg_body, env, r)},
                                       denote_term(wit_body, env, r));
          return RPair{value, [step](const State& s) { return step.eval(s); }};
        };
      };
      NatToR f = arrow();
      NatToR g = arrow();
      RPair input{gen.individual({}),
                  [r = gen.realizer(1)](const State& s) { return r.eval(s); }};
      State s = gen.state(5);
      Nat x = gen.small_nat(9);

      // unit law: rext(f)(unit(x)) = f(x)
      RPair left = rext_apply(f, runit(x), policy);
      RPair expect = f(x);
      suite.check(left.value.eval(s) == expect.value.eval(s) &&
                      left.shift(s) == expect.shift(s),
                  ("R unit left: " + pname).c_str());

      // identity law: rext(unit) = id
      RPair ident = rext_apply(&runit, input, policy);
      suite.check(ident.value.eval(s) == input.value.eval(s) &&
                      ident.shift(s) == input.shift(s),
                  ("R unit right: " + pname).c_str());

      // composition law
      RPair two_step = rext_apply(g, rext_apply(f, input, policy), policy);
      NatToR composed = [f, g, policy](const Nat& n) {
        return rext_apply(g, f(n), policy);
      };
      RPair fused = rext_apply(composed, input, policy);
      suite.check(two_step.value.eval(s) == fused.value.eval(s) &&
                      two_step.shift(s) == fused.shift(s),
                  ("R composition: " + pname).c_str());
    }
  }
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Prefix intersection

SuiteResult prefix_intersection_suite(std::uint64_t seed, std::size_t pairs,
                                      std::size_t states_each) {
  Suite suite("prefix-intersection");
  Sampler gen(sample_registry(), seed);

  for (std::size_t i = 0; i < pairs; ++i) {
    Realizer r1 = gen.realizer(2);
    Realizer r2 = gen.realizer(2);
    for (MergePolicy policy : all_policies()) {
      Realizer merged = merge_lifted(r1, r2, policy);
      for (std::size_t k = 0; k < states_each; ++k) {
        State s = gen.state(6);
        bool in_merged = merged.eval(s).empty();
        bool in_both = r1.eval(s).empty() && r2.eval(s).empty();
        suite.check(in_merged == in_both,
                    "prefix of merge is intersection of prefixes");
        suite.check(check_realizer_contract(merged, s),
                    "merged realizer satisfies the contract");
      }
    }
  }
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Substitution

SuiteResult substitution_suite(std::uint64_t seed, std::size_t iters) {
  Suite suite("substitution");
  Sampler gen(sample_registry(), seed);
  RegistryPtr reg = gen.registry();
  const std::vector<std::string> vars = {"x", "y", "z"};

  for (std::size_t i = 0; i < iters; ++i) {
    const std::string& x = vars[gen.below(vars.size())];
    Term inner = gen.term(2, vars);
    Environment env = gen.environment(vars);
    State s = gen.state(5);
    Individual bound = denote_term(inner, env, reg);

    Term outer = gen.term(3, vars);
    suite.check(denote_term(substitute(outer, x, inner), env, reg).eval(s) ==
                    denote_term(outer, env.with(x, bound), reg).eval(s),
                "term substitution");

    Formula shape = gen.formula(2, vars);
    suite.check(denote_formula(substitute(shape, x, inner), env, reg).eval(s) ==
                    denote_formula(shape, env.with(x, bound), reg).eval(s),
                "formula substitution");
  }
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Conservativity

namespace {

// Closed tautology skeletons instantiated with sampled formulas.
Formula taut_instance(Sampler& gen, const std::vector<std::string>& vars) {
  Formula p = gen.formula(1, vars);
  Formula q = gen.formula(1, vars);
  Formula r = gen.formula(1, vars);
  switch (gen.below(6)) {
    case 0:
      return Formula::disj(p, Formula::negation(p));
    case 1:
      return Formula::implies(p, p);
    case 2:  // Peirce
      return Formula::implies(Formula::implies(Formula::implies(p, q), p), p);
    case 3:  // syllogism
      return Formula::implies(
          Formula::implies(p, q),
          Formula::implies(Formula::implies(q, r), Formula::implies(p, r)));
    case 4:
      return Formula::implies(Formula::conj(p, q), p);
    default:
      return Formula::negation(Formula::conj(p, Formula::negation(p)));
  }
}

Formula pra_instance(Sampler& gen, const Registry& reg,
                     const std::vector<std::string>& vars) {
  if (gen.coin(10))
    return Formula::negation(Formula::eq(Term::succ(Term::zero()), Term::zero()));
  for (int attempt = 0; attempt < 32; ++attempt) {
    const PrimRecDef& def = reg.at_index(gen.below(reg.size()));
    auto equations = defining_equations(reg, def);
    if (equations.empty()) continue;
    const auto& [lhs, rhs] = equations[gen.below(equations.size())];
    Formula out = Formula::eq(lhs, rhs);
    for (const auto& v : free_vars(out))
      out = substitute(out, v, gen.term(1, vars));
    return out;
  }
  return Formula::negation(Formula::eq(Term::succ(Term::zero()), Term::zero()));
}

Formula eq_instance(Sampler& gen, const std::vector<std::string>& vars) {
  Term t = gen.term(2, vars);
  Term u = gen.term(2, vars);
  Term v = gen.term(2, vars);
  switch (gen.below(5)) {
    case 0:
      return Formula::eq(t, t);
    case 1:
      return Formula::implies(Formula::eq(t, u), Formula::eq(u, t));
    case 2:
      return Formula::implies(
          Formula::conj(Formula::eq(t, u), Formula::eq(u, v)),
          Formula::eq(t, v));
    case 3:
      return Formula::implies(Formula::eq(t, u),
                              Formula::eq(Term::succ(t), Term::succ(u)));
    default: {
      const std::string& pred = gen.pick_predicate();
      return Formula::implies(
          Formula::conj(Formula::eq(t, u), Formula::eq(u, v)),
          Formula::implies(Formula::pred(pred, {t, u}),
                           Formula::pred(pred, {u, v})));
    }
  }
}

Formula phi_instance(Sampler& gen, const Registry& reg,
                     const std::vector<std::string>& vars) {
  const std::string& pred = gen.pick_predicate();
  const PrimRecDef& def = reg.predicate(pred);
  std::vector<Term> args;
  for (std::size_t i = 0; i + 1 < def.arity; ++i)
    args.push_back(gen.term(1, vars));
  std::vector<Term> full = args;
  full.push_back(Term::phi(pred, args));
  return Formula::implies(Formula::chi(pred, args),
                          Formula::pred(pred, std::move(full)));
}

}  // namespace

SuiteResult conservativity_suite(std::uint64_t seed, std::size_t instances,
                                 std::size_t states_each) {
  Suite suite("conservativity");
  Sampler gen(sample_registry(), seed);
  RegistryPtr reg = gen.registry();
  const std::vector<std::string> vars = {"x", "y"};

  for (std::size_t i = 0; i < instances; ++i) {
    Formula a = [&] {
      switch (i % 4) {
        case 0:
          return pra_instance(gen, *reg, vars);
        case 1:
          return taut_instance(gen, vars);
        case 2:
          return eq_instance(gen, vars);
        default:
          return phi_instance(gen, *reg, vars);
      }
    }();
    Environment env = gen.environment(vars);
    BoolIndividual denot = denote_formula(a, env, reg);
    suite.check(denot.eval(State::bottom()),
                [&] { return "axiom false at bottom: " + a.to_string(); });
    for (std::size_t k = 0; k + 1 < states_each; ++k) {
      State s = gen.state(6);
      suite.check(denot.eval(s), [&] {
        return "axiom false: " + a.to_string() + " at " + s.to_string();
      });
    }
  }

  // The guard axiom is the one class that can fail: find a sampled
  // instance that is false somewhere.
  bool found_false_chi = false;
  for (std::size_t i = 0; i < 64 && !found_false_chi; ++i) {
    Atom a = gen.atom();
    std::vector<Term> args;
    for (const auto& m : a.args) args.push_back(Term::numeral(m));
    std::vector<Term> full = args;
    full.push_back(Term::numeral(a.witness));
    Formula instance = Formula::implies(Formula::pred(a.pred, full),
                                        Formula::chi(a.pred, args));
    State s = gen.state(4);
    if (!denote_formula(instance, Environment(), reg).eval(s))
      found_false_chi = true;
    if (!denote_formula(instance, Environment(), reg).eval(State::bottom()))
      found_false_chi = true;
  }
  suite.check(found_false_chi, "a guard-axiom instance is false at some state");
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Convergence sampling

SuiteResult convergence_suite(std::uint64_t seed, std::size_t individuals,
                              std::size_t sequences) {
  Suite suite("convergence");
  Sampler gen(sample_registry(), seed);
  RegistryPtr reg = gen.registry();
  const std::vector<std::string> vars = {"x"};

  std::size_t count = std::max(individuals, sequences);
  for (std::size_t i = 0; i < count; ++i) {
    WISequence seq = gen.wi_sequence(12, 2);
    Environment env = gen.environment(vars);

    if (gen.coin(50)) {
      Individual v = denote_term(gen.term(3, vars), env, reg);
      std::size_t point = stabilization_point(v, seq);
      Nat settled = v.eval(seq.at(point));
      suite.check(v.eval(seq.back()) == settled, "stabilized value at the end");
      for (int k = 0; k < 3; ++k) {
        State extended = gen.fresh_extension(seq.back(), 2);
        suite.check(v.eval(extended) == settled,
                    "stabilized value survives fresh extensions");
      }
    } else {
      BoolIndividual v = denote_formula(gen.formula(2, vars), env, reg);
      std::size_t point = stabilization_point(v, seq);
      bool settled = v.eval(seq.at(point));
      suite.check(v.eval(seq.back()) == settled, "stabilized value at the end");
      for (int k = 0; k < 3; ++k) {
        State extended = gen.fresh_extension(seq.back(), 2);
        suite.check(v.eval(extended) == settled,
                    "stabilized value survives fresh extensions");
      }
    }
  }
  return suite.finish();
}

}  // namespace em1::laws
