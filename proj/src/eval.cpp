#include "em1/eval.hpp"

#include <cstdlib>

namespace em1 {

std::uint64_t default_step_budget() {
  static const std::uint64_t value = [] {
    if (const char* env = std::getenv("EM1_BUDGET")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) return std::uint64_t(parsed);
    }
    return std::uint64_t(10'000'000);
  }();
  return value;
}

namespace {

Nat eval_schema(const Registry& reg, const SchemaExpr& e,
                const std::vector<Nat>& args, Budget& budget) {
  budget.tick();
  switch (e.kind()) {
    case SchemaExpr::Kind::kZero:
      return 0;
    case SchemaExpr::Kind::kSucc:
      return args[0] + 1;
    case SchemaExpr::Kind::kProj:
      return args[e.proj_index() - 1];
    case SchemaExpr::Kind::kComp: {
      const auto& parts = e.children();
      std::vector<Nat> inner;
      inner.reserve(parts.size() - 1);
      for (std::size_t i = 1; i < parts.size(); ++i)
        inner.push_back(eval_schema(reg, parts[i], args, budget));
      return eval_schema(reg, parts[0], inner, budget);
    }
    case SchemaExpr::Kind::kPrimRec: {
      // args = x ++ [n]; iterate the step from the base value.
      const SchemaExpr& base = e.children()[0];
      const SchemaExpr& step = e.children()[1];
      std::vector<Nat> prefix(args.begin(), args.end() - 1);
      const Nat& n = args.back();
      Nat acc = eval_schema(reg, base, prefix, budget);
      std::vector<Nat> step_args = prefix;
      step_args.push_back(0);
      step_args.push_back(0);
      for (Nat i = 0; i < n; ++i) {
        budget.tick();
        step_args[prefix.size()] = i;
        step_args[prefix.size() + 1] = std::move(acc);
        acc = eval_schema(reg, step, step_args, budget);
      }
      return acc;
    }
    case SchemaExpr::Kind::kRef:
      return eval_schema(reg, reg.at(e.ref_name()).body, args, budget);
  }
  throw Error("unreachable schema kind");
}

Nat eval_def(const Registry& reg, const std::string& name,
             const std::vector<Nat>& args, Budget& budget) {
  const PrimRecDef& def = reg.at(name);
  if (args.size() != def.arity)
    throw EvalError(name + " expects " + std::to_string(def.arity) +
                    " arguments, got " + std::to_string(args.size()));
  return eval_schema(reg, def.body, args, budget);
}

Nat eval_term_rec(const Registry& reg, const Term& t,
                  const std::map<std::string, Nat>& rho, Budget& budget) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      auto it = rho.find(t.name());
      if (it == rho.end()) throw EvalError("unbound variable: " + t.name());
      return it->second;
    }
    case Term::Kind::kZero:
      return 0;
    case Term::Kind::kSucc:
      return eval_term_rec(reg, t.args()[0], rho, budget) + 1;
    case Term::Kind::kFun: {
      std::vector<Nat> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args())
        args.push_back(eval_term_rec(reg, a, rho, budget));
      return eval_def(reg, t.name(), args, budget);
    }
    case Term::Kind::kPhi:
      throw EvalError("Skolem symbol outside the base language: " +
                      t.to_string());
  }
  throw Error("unreachable term kind");
}

bool eval_formula_rec(const Registry& reg, const Formula& a,
                      const std::map<std::string, Nat>& rho, Budget& budget) {
  switch (a.kind()) {
    case Formula::Kind::kPred: {
      const PrimRecDef& def = reg.predicate(a.name());
      if (a.terms().size() != def.arity)
        throw EvalError(a.name() + " expects " + std::to_string(def.arity) +
                        " arguments, got " + std::to_string(a.terms().size()));
      std::vector<Nat> args;
      args.reserve(a.terms().size());
      for (const auto& t : a.terms())
        args.push_back(eval_term_rec(reg, t, rho, budget));
      return eval_schema(reg, def.body, args, budget) != 0;
    }
    case Formula::Kind::kEq:
      return eval_term_rec(reg, a.terms()[0], rho, budget) ==
             eval_term_rec(reg, a.terms()[1], rho, budget);
    case Formula::Kind::kChi:
      throw EvalError("guard symbol outside the base language: " +
                      a.to_string());
    case Formula::Kind::kNot:
      return !eval_formula_rec(reg, a.subs()[0], rho, budget);
    case Formula::Kind::kAnd: {
      bool l = eval_formula_rec(reg, a.subs()[0], rho, budget);
      bool r = eval_formula_rec(reg, a.subs()[1], rho, budget);
      return l && r;
    }
    case Formula::Kind::kOr: {
      bool l = eval_formula_rec(reg, a.subs()[0], rho, budget);
      bool r = eval_formula_rec(reg, a.subs()[1], rho, budget);
      return l || r;
    }
    case Formula::Kind::kImplies: {
      bool l = eval_formula_rec(reg, a.subs()[0], rho, budget);
      bool r = eval_formula_rec(reg, a.subs()[1], rho, budget);
      return !l || r;
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace

Nat eval_fun(const Registry& reg, const std::string& name,
             const std::vector<Nat>& args, std::uint64_t budget) {
  Budget b(budget);
  return eval_def(reg, name, args, b);
}

bool eval_pred(const Registry& reg, const std::string& name,
               const std::vector<Nat>& args, std::uint64_t budget) {
  reg.predicate(name);
  Budget b(budget);
  return eval_def(reg, name, args, b) != 0;
}

Nat eval_fun(const Registry& reg, const std::string& name,
             const std::vector<Nat>& args, Budget& budget) {
  return eval_def(reg, name, args, budget);
}

bool eval_pred(const Registry& reg, const std::string& name,
               const std::vector<Nat>& args, Budget& budget) {
  reg.predicate(name);
  return eval_def(reg, name, args, budget) != 0;
}

Nat eval_term_std(const Registry& reg, const Term& t,
                  const std::map<std::string, Nat>& rho, std::uint64_t budget) {
  Budget b(budget);
  return eval_term_rec(reg, t, rho, b);
}

bool eval_closed_formula(const Registry& reg, const Formula& a,
                         const std::map<std::string, Nat>& rho,
                         std::uint64_t budget) {
  Budget b(budget);
  return eval_formula_rec(reg, a, rho, b);
}

}  // namespace em1
