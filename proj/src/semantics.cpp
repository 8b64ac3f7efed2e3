#include "em1/semantics.hpp"

#include <utility>

namespace em1 {

Individual Individual::constant(Nat n) {
  std::string desc = n.str();
  return Individual([n = std::move(n)](const State&) { return n; },
                    std::move(desc));
}

Individual Individual::from_function(std::function<Nat(const State&)> fn,
                                     std::string description) {
  return Individual(std::move(fn), std::move(description));
}

BoolIndividual BoolIndividual::constant(bool b) {
  return BoolIndividual([b](const State&) { return b; },
                        b ? "true" : "false");
}

BoolIndividual BoolIndividual::from_function(
    std::function<bool(const State&)> fn, std::string description) {
  return BoolIndividual(std::move(fn), std::move(description));
}

Environment::Environment() : vars_(std::make_shared<const Map>()) {}

Individual Environment::lookup(const std::string& name) const {
  auto it = vars_->find(name);
  if (it == vars_->end()) return Individual::constant(0);
  return it->second;
}

bool Environment::binds(const std::string& name) const {
  return vars_->count(name) > 0;
}

Environment Environment::with(const std::string& name, Individual value) const {
  auto copy = std::make_shared<Map>(*vars_);
  copy->insert_or_assign(name, std::move(value));
  return Environment(std::move(copy));
}

Environment Environment::of_numerals(const std::map<std::string, Nat>& values) {
  auto map = std::make_shared<Map>();
  for (const auto& [name, value] : values)
    map->emplace(name, Individual::constant(value));
  return Environment(std::move(map));
}

bool sem_chi(const Registry& reg, const std::string& pred,
             const std::vector<Nat>& args, const State& s) {
  const PrimRecDef& def = reg.predicate(pred);
  if (args.size() + 1 != def.arity)
    throw EvalError("chi_" + pred + " expects " + std::to_string(def.arity - 1) +
                    " arguments, got " + std::to_string(args.size()));
  return s.lookup_witness(pred, args).has_value();
}

Nat sem_phi(const Registry& reg, const std::string& pred,
            const std::vector<Nat>& args, const State& s) {
  const PrimRecDef& def = reg.predicate(pred);
  if (args.size() + 1 != def.arity)
    throw EvalError("phi_" + pred + " expects " + std::to_string(def.arity - 1) +
                    " arguments, got " + std::to_string(args.size()));
  if (auto witness = s.lookup_witness(pred, args)) return *witness;
  return 0;
}

namespace {

// Every part of the expression reads the one state `s` being evaluated;
// environment individuals are consulted at that same state.
Nat eval_term_at(const Registry& reg, const Term& t, const Environment& env,
                 const State& s, Budget& budget) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return env.lookup(t.name()).eval(s);
    case Term::Kind::kZero:
      return 0;
    case Term::Kind::kSucc:
      return eval_term_at(reg, t.args()[0], env, s, budget) + 1;
    case Term::Kind::kFun: {
      const PrimRecDef& def = reg.at(t.name());
      if (t.args().size() != def.arity)
        throw EvalError(t.name() + " expects " + std::to_string(def.arity) +
                        " arguments, got " + std::to_string(t.args().size()));
      std::vector<Nat> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args())
        args.push_back(eval_term_at(reg, a, env, s, budget));
      return eval_fun(reg, t.name(), args, budget);
    }
    case Term::Kind::kPhi: {
      std::vector<Nat> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args())
        args.push_back(eval_term_at(reg, a, env, s, budget));
      return sem_phi(reg, t.name(), args, s);
    }
  }
  throw Error("unreachable term kind");
}

bool eval_formula_at(const Registry& reg, const Formula& a,
                     const Environment& env, const State& s, Budget& budget) {
  switch (a.kind()) {
    case Formula::Kind::kPred: {
      const PrimRecDef& def = reg.predicate(a.name());
      if (a.terms().size() != def.arity)
        throw EvalError(a.name() + " expects " + std::to_string(def.arity) +
                        " arguments, got " + std::to_string(a.terms().size()));
      std::vector<Nat> args;
      args.reserve(a.terms().size());
      for (const auto& t : a.terms())
        args.push_back(eval_term_at(reg, t, env, s, budget));
      return eval_pred(reg, a.name(), args, budget);
    }
    case Formula::Kind::kEq:
      return eval_term_at(reg, a.terms()[0], env, s, budget) ==
             eval_term_at(reg, a.terms()[1], env, s, budget);
    case Formula::Kind::kChi: {
      std::vector<Nat> args;
      args.reserve(a.terms().size());
      for (const auto& t : a.terms())
        args.push_back(eval_term_at(reg, t, env, s, budget));
      return sem_chi(reg, a.name(), args, s);
    }
    case Formula::Kind::kNot:
      return !eval_formula_at(reg, a.subs()[0], env, s, budget);
    case Formula::Kind::kAnd: {
      bool l = eval_formula_at(reg, a.subs()[0], env, s, budget);
      bool r = eval_formula_at(reg, a.subs()[1], env, s, budget);
      return l && r;
    }
    case Formula::Kind::kOr: {
      bool l = eval_formula_at(reg, a.subs()[0], env, s, budget);
      bool r = eval_formula_at(reg, a.subs()[1], env, s, budget);
      return l || r;
    }
    case Formula::Kind::kImplies: {
      bool l = eval_formula_at(reg, a.subs()[0], env, s, budget);
      bool r = eval_formula_at(reg, a.subs()[1], env, s, budget);
      return !l || r;
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace

Individual denote_term(const Term& t, const Environment& env, RegistryPtr reg) {
  std::string desc = "[[" + t.to_string() + "]]";
  return Individual(
      [t, env, reg = std::move(reg)](const State& s) {
        Budget budget(default_step_budget());
        return eval_term_at(*reg, t, env, s, budget);
      },
      std::move(desc));
}

BoolIndividual denote_formula(const Formula& a, const Environment& env,
                              RegistryPtr reg) {
  std::string desc = "[[" + a.to_string() + "]]";
  return BoolIndividual(
      [a, env, reg = std::move(reg)](const State& s) {
        Budget budget(default_step_budget());
        return eval_formula_at(*reg, a, env, s, budget);
      },
      std::move(desc));
}

WISequence::WISequence(std::vector<State> states) : states_(std::move(states)) {
  if (states_.empty()) throw Error("a weakly increasing sequence cannot be empty");
  for (std::size_t i = 0; i + 1 < states_.size(); ++i) {
    if (!leq(states_[i], states_[i + 1]))
      throw Error("sequence is not weakly increasing at index " +
                  std::to_string(i + 1));
  }
}

}  // namespace em1
