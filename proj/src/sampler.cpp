#include "em1/sampler.hpp"

#include <algorithm>

#include "em1/parser.hpp"

namespace em1 {

namespace {

constexpr const char* kPrelude = R"((deffun pred (x) (primrec (zero 0) (proj 1 2)))
(deffun add (x y) (primrec (proj 1 1) (comp succ (proj 3 3))))
(deffun mul (x y) (primrec (zero 1) (comp add (proj 1 3) (proj 3 3))))
(deffun monus (x y) (primrec (proj 1 1) (comp pred (proj 3 3))))
(deffun sig (x) (primrec (zero 0) (comp succ (zero 2))))
(deffun iszero (x) (comp monus (comp succ (zero 1)) (comp sig (proj 1 1))))
(defpred LT (x y) (comp sig (comp monus (proj 2 2) (proj 1 2))))
(defpred LE (x y) (comp iszero (comp monus (proj 1 2) (proj 2 2))))
(defpred EQN (x y) (comp iszero (comp add (comp monus (proj 1 2) (proj 2 2)) (comp monus (proj 2 2) (proj 1 2)))))
(defpred SQ (x y) (comp EQN (comp mul (proj 2 2) (proj 2 2)) (proj 1 2)))
(defpred ANY (x y) (comp succ (zero 2)))
(defpred ANY3 (x y z) (comp succ (zero 3)))
)";

}  // namespace

RegistryPtr sample_registry() {
  static const RegistryPtr instance = parse_program(kPrelude).registry;
  return instance;
}

Sampler::Sampler(RegistryPtr reg, std::uint64_t seed)
    : reg_(std::move(reg)), rng_(seed) {
  // ANY and ANY3 are set aside as fresh symbols when present; everything
  // else is fair game for atoms, terms and formulas.
  for (const auto& def : reg_->definitions()) {
    if (def.is_predicate()) {
      if (def.name == "ANY" || def.name == "ANY3") {
        fresh_preds_.push_back(def.name);
      } else {
        atom_preds_.push_back(def.name);
      }
    } else {
      fun_names_.push_back(def.name);
    }
  }
}

std::uint64_t Sampler::below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

bool Sampler::coin(unsigned percent) { return below(100) < percent; }

Nat Sampler::small_nat(std::uint64_t max) { return Nat(below(max + 1)); }

const std::string& Sampler::pick_predicate() {
  if (atom_preds_.empty())
    throw Error("registry has no predicates to sample from");
  return atom_preds_[below(atom_preds_.size())];
}

Atom Sampler::atom() {
  if (atom_preds_.empty())
    throw Error("registry has no predicates to build atoms from");
  // Rejection sampling: pick a predicate and arguments, then look for a
  // witness that makes the atom true in the standard model.
  for (int attempt = 0; attempt < 256; ++attempt) {
    const std::string& pred = pick_predicate();
    const PrimRecDef& def = reg_->predicate(pred);
    std::vector<Nat> args;
    for (std::size_t i = 0; i + 1 < def.arity; ++i)
      args.push_back(small_nat(9));
    std::vector<std::uint64_t> candidates(13);
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
    std::shuffle(candidates.begin(), candidates.end(), rng_);
    for (auto candidate : candidates) {
      std::vector<Nat> full = args;
      full.push_back(Nat(candidate));
      if (eval_pred(*reg_, pred, full))
        return Atom{pred, std::move(args), Nat(candidate)};
    }
  }
  throw Error("could not sample a true atom");
}

State Sampler::state(std::size_t max_atoms) {
  State s;
  if (atom_preds_.empty()) return s;
  std::size_t count = below(max_atoms + 1);
  for (std::size_t i = 0; i < count; ++i) {
    Atom a = atom();
    if (s.contains_key(a.pred, a.args)) continue;  // keep consistency
    s = s.try_insert(*reg_, std::move(a));
  }
  return s;
}

State Sampler::substate(const State& s) {
  std::vector<Atom> kept;
  for (const auto& a : s) {
    if (coin(60)) kept.push_back(a);
  }
  return State::unchecked(std::move(kept));
}

State Sampler::grow(const State& s, std::size_t extra) {
  State out = s;
  if (atom_preds_.empty()) return out;
  for (std::size_t i = 0; i < extra; ++i) {
    Atom a = atom();
    if (out.contains_key(a.pred, a.args)) continue;
    out = out.try_insert(*reg_, std::move(a));
  }
  return out;
}

WISequence Sampler::wi_sequence(std::size_t max_len, std::size_t growth) {
  std::vector<State> states;
  State current = state(3);
  std::size_t len = 1 + below(max_len);
  for (std::size_t i = 0; i < len; ++i) {
    states.push_back(current);
    current = grow(current, below(growth + 1));
  }
  return WISequence(std::move(states));
}

State Sampler::fresh_extension(const State& s, std::size_t extra) {
  State out = s;
  if (fresh_preds_.empty()) return out;
  for (std::size_t i = 0; i < extra; ++i) {
    const std::string& pred = fresh_preds_[below(fresh_preds_.size())];
    const PrimRecDef& def = reg_->predicate(pred);
    std::vector<Nat> args;
    for (std::size_t k = 0; k + 1 < def.arity; ++k)
      args.push_back(small_nat(20));
    if (out.contains_key(pred, args)) continue;
    out = out.try_insert(*reg_, Atom{pred, std::move(args), small_nat(20)});
  }
  return out;
}

Term Sampler::term(std::size_t depth, const std::vector<std::string>& vars) {
  if (depth == 0 || coin(25)) {
    if (!vars.empty() && coin(50)) return Term::var(vars[below(vars.size())]);
    return Term::numeral(small_nat(6));
  }
  switch (below(4)) {
    case 0:
      return Term::succ(term(depth - 1, vars));
    case 1: {
      const std::string& name = fun_names_[below(fun_names_.size())];
      const PrimRecDef& def = reg_->at(name);
      std::vector<Term> args;
      for (std::size_t i = 0; i < def.arity; ++i)
        args.push_back(term(depth - 1, vars));
      return Term::fun(name, std::move(args));
    }
    default: {
      const std::string& pred = pick_predicate();
      const PrimRecDef& def = reg_->predicate(pred);
      std::vector<Term> args;
      for (std::size_t i = 0; i + 1 < def.arity; ++i)
        args.push_back(term(depth - 1, vars));
      return Term::phi(pred, std::move(args));
    }
  }
}

Formula Sampler::formula(std::size_t depth, const std::vector<std::string>& vars) {
  if (depth == 0 || coin(30)) {
    switch (below(3)) {
      case 0: {
        const std::string& pred = pick_predicate();
        const PrimRecDef& def = reg_->predicate(pred);
        std::vector<Term> args;
        for (std::size_t i = 0; i < def.arity; ++i)
          args.push_back(term(1, vars));
        return Formula::pred(pred, std::move(args));
      }
      case 1:
        return Formula::eq(term(1, vars), term(1, vars));
      default: {
        const std::string& pred = pick_predicate();
        const PrimRecDef& def = reg_->predicate(pred);
        std::vector<Term> args;
        for (std::size_t i = 0; i + 1 < def.arity; ++i)
          args.push_back(term(1, vars));
        return Formula::chi(pred, std::move(args));
      }
    }
  }
  switch (below(4)) {
    case 0:
      return Formula::negation(formula(depth - 1, vars));
    case 1:
      return Formula::conj(formula(depth - 1, vars), formula(depth - 1, vars));
    case 2:
      return Formula::disj(formula(depth - 1, vars), formula(depth - 1, vars));
    default:
      return Formula::implies(formula(depth - 1, vars), formula(depth - 1, vars));
  }
}

Individual Sampler::individual(const std::vector<std::string>& vars) {
  if (coin(40)) return Individual::constant(small_nat(9));
  return denote_term(term(2, vars), environment(vars), reg_);
}

Environment Sampler::environment(const std::vector<std::string>& vars) {
  Environment env;
  for (const auto& v : vars) {
    if (coin(85)) {
      if (coin(70)) {
        env = env.with(v, Individual::constant(small_nat(9)));
      } else {
        // A state-sensitive binding: the denotation of a small phi-term.
        const std::string& pred = pick_predicate();
        const PrimRecDef& def = reg_->predicate(pred);
        std::vector<Term> args;
        for (std::size_t i = 0; i + 1 < def.arity; ++i)
          args.push_back(Term::numeral(small_nat(6)));
        env = env.with(v, denote_term(Term::phi(pred, std::move(args)),
                                      Environment(), reg_));
      }
    }
  }
  return env;
}

Realizer Sampler::realizer(std::size_t depth) {
  if (depth == 0 || coin(30)) {
    if (coin(25)) return trivial_realizer();
    const std::string& pred = pick_predicate();
    const PrimRecDef& def = reg_->predicate(pred);
    std::vector<Individual> args;
    for (std::size_t i = 0; i + 1 < def.arity; ++i)
      args.push_back(individual({}));
    return chi_realizer(reg_, pred, std::move(args), individual({}));
  }
  MergePolicy policy = static_cast<MergePolicy>(below(3));
  return merge_lifted(realizer(depth - 1), realizer(depth - 1), policy);
}

}  // namespace em1
