#include "em1/proof.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "em1/errors.hpp"

namespace em1 {

Proof Proof::taut(Formula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kTaut;
  node->formulas.push_back(std::move(a));
  return Proof(std::move(node));
}

Proof Proof::pra(Formula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kPra;
  node->formulas.push_back(std::move(a));
  return Proof(std::move(node));
}

Proof Proof::eq_ax(Formula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kEqAx;
  node->formulas.push_back(std::move(a));
  return Proof(std::move(node));
}

Proof Proof::chi_ax(std::string pred, std::vector<Term> args, Term witness) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kChiAx;
  node->symbol = std::move(pred);
  node->terms = std::move(args);
  node->terms.push_back(std::move(witness));
  return Proof(std::move(node));
}

Proof Proof::phi_ax(std::string pred, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kPhiAx;
  node->symbol = std::move(pred);
  node->terms = std::move(args);
  return Proof(std::move(node));
}

Proof Proof::mp(Proof major, Proof minor) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kMp;
  node->premises.push_back(std::move(major));
  node->premises.push_back(std::move(minor));
  return Proof(std::move(node));
}

Proof Proof::sub(Proof premise, std::string var, Term t) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSub;
  node->symbol = std::move(var);
  node->terms.push_back(std::move(t));
  node->premises.push_back(std::move(premise));
  return Proof(std::move(node));
}

Proof Proof::ind(Proof base, Proof step, std::string var) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kInd;
  node->symbol = std::move(var);
  node->premises.push_back(std::move(base));
  node->premises.push_back(std::move(step));
  return Proof(std::move(node));
}

std::string Proof::to_string() const {
  switch (kind()) {
    case Kind::kTaut:
      return "(taut " + formula().to_string() + ")";
    case Kind::kPra:
      return "(pra " + formula().to_string() + ")";
    case Kind::kEqAx:
      return "(eqax " + formula().to_string() + ")";
    case Kind::kChiAx: {
      std::string out = "(chi " + symbol() + " (";
      for (std::size_t i = 0; i + 1 < terms().size(); ++i) {
        if (i) out += " ";
        out += terms()[i].to_string();
      }
      return out + ") " + terms().back().to_string() + ")";
    }
    case Kind::kPhiAx: {
      std::string out = "(phiax " + symbol() + " (";
      for (std::size_t i = 0; i < terms().size(); ++i) {
        if (i) out += " ";
        out += terms()[i].to_string();
      }
      return out + "))";
    }
    case Kind::kMp:
      return "(mp " + premises()[0].to_string() + " " +
             premises()[1].to_string() + ")";
    case Kind::kSub:
      return "(sub " + premises()[0].to_string() + " " + symbol() + " " +
             subst_term().to_string() + ")";
    case Kind::kInd:
      return "(ind " + premises()[0].to_string() + " " +
             premises()[1].to_string() + " " + symbol() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Tautology check

namespace {

void collect_atoms(const Formula& a, std::vector<Formula>& atoms) {
  if (a.is_atomic()) {
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
      atoms.push_back(a);
    return;
  }
  for (const auto& s : a.subs()) collect_atoms(s, atoms);
}

bool eval_skeleton(const Formula& a, const std::vector<Formula>& atoms,
                   unsigned assignment) {
  if (a.is_atomic()) {
    auto it = std::find(atoms.begin(), atoms.end(), a);
    return (assignment >> (it - atoms.begin())) & 1u;
  }
  switch (a.kind()) {
    case Formula::Kind::kNot:
      return !eval_skeleton(a.subs()[0], atoms, assignment);
    case Formula::Kind::kAnd:
      return eval_skeleton(a.subs()[0], atoms, assignment) &&
             eval_skeleton(a.subs()[1], atoms, assignment);
    case Formula::Kind::kOr:
      return eval_skeleton(a.subs()[0], atoms, assignment) ||
             eval_skeleton(a.subs()[1], atoms, assignment);
    case Formula::Kind::kImplies:
      return !eval_skeleton(a.subs()[0], atoms, assignment) ||
             eval_skeleton(a.subs()[1], atoms, assignment);
    default:
      throw Error("unreachable connective");
  }
}

}  // namespace

bool tautology_check(const Formula& a) {
  std::vector<Formula> atoms;
  collect_atoms(a, atoms);
  if (atoms.size() > 16)
    throw ProofError("tautology check limited to 16 distinct atoms, formula has " +
                     std::to_string(atoms.size()));
  unsigned rows = 1u << atoms.size();
  for (unsigned assignment = 0; assignment < rows; ++assignment) {
    if (!eval_skeleton(a, atoms, assignment)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Defining equations and the PRA axiom check

namespace {

// Symbolic application of a schema expression to argument terms. Returns
// nothing when the expression nests an anonymous recursion, which has no
// term form: such a recursion must be declared under its own name to get
// defining equations.
std::optional<Term> apply_schema(const SchemaExpr& e, const std::vector<Term>& args) {
  switch (e.kind()) {
    case SchemaExpr::Kind::kZero:
      return Term::zero();
    case SchemaExpr::Kind::kSucc:
      return Term::succ(args[0]);
    case SchemaExpr::Kind::kProj:
      return args[e.proj_index() - 1];
    case SchemaExpr::Kind::kComp: {
      const auto& parts = e.children();
      std::vector<Term> inner;
      inner.reserve(parts.size() - 1);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        auto t = apply_schema(parts[i], args);
        if (!t) return std::nullopt;
        inner.push_back(std::move(*t));
      }
      return apply_schema(parts[0], inner);
    }
    case SchemaExpr::Kind::kPrimRec:
      return std::nullopt;
    case SchemaExpr::Kind::kRef:
      return Term::fun(e.ref_name(), args);
  }
  throw Error("unreachable schema kind");
}

// Argument variables v1..vk for the equation patterns. The names never
// collide with user variables because matching binds them, not the user's.
std::vector<Term> pattern_vars(std::size_t count) {
  std::vector<Term> vars;
  vars.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    vars.push_back(Term::var("v" + std::to_string(i + 1)));
  return vars;
}

// One-sided matching of a pattern term (variables bind) against a term.
bool match_term(const Term& pattern, const Term& t,
                std::map<std::string, Term>& binding) {
  if (pattern.kind() == Term::Kind::kVar) {
    auto [it, fresh] = binding.emplace(pattern.name(), t);
    return fresh || it->second == t;
  }
  if (pattern.kind() != t.kind() || pattern.name() != t.name()) return false;
  if (pattern.args().size() != t.args().size()) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!match_term(pattern.args()[i], t.args()[i], binding)) return false;
  }
  return true;
}

// Simultaneous replacement of the pattern variables; every variable in an
// equation right-hand side is bound by matching the left-hand side.
Term apply_binding(const Term& pattern, const std::map<std::string, Term>& binding) {
  switch (pattern.kind()) {
    case Term::Kind::kVar:
      return binding.at(pattern.name());
    case Term::Kind::kZero:
      return pattern;
    case Term::Kind::kSucc:
      return Term::succ(apply_binding(pattern.args()[0], binding));
    case Term::Kind::kFun:
    case Term::Kind::kPhi: {
      std::vector<Term> args;
      args.reserve(pattern.args().size());
      for (const auto& a : pattern.args())
        args.push_back(apply_binding(a, binding));
      return pattern.kind() == Term::Kind::kFun
                 ? Term::fun(pattern.name(), std::move(args))
                 : Term::phi(pattern.name(), std::move(args));
    }
  }
  throw Error("unreachable term kind");
}

}  // namespace

std::vector<std::pair<Term, Term>> defining_equations(const Registry& reg,
                                                      const PrimRecDef& def) {
  std::vector<std::pair<Term, Term>> equations;
  std::vector<Term> vars = pattern_vars(def.arity);
  const SchemaExpr& body = def.body;
  if (body.kind() == SchemaExpr::Kind::kPrimRec) {
    const SchemaExpr& base = body.children()[0];
    const SchemaExpr& step = body.children()[1];
    std::vector<Term> prefix(vars.begin(), vars.end() - 1);
    Term rec_var = vars.back();

    std::vector<Term> zero_args = prefix;
    zero_args.push_back(Term::zero());
    auto base_rhs = apply_schema(base, prefix);

    std::vector<Term> succ_args = prefix;
    succ_args.push_back(Term::succ(rec_var));
    std::vector<Term> rec_args = prefix;
    rec_args.push_back(rec_var);
    std::vector<Term> step_args = prefix;
    step_args.push_back(rec_var);
    step_args.push_back(Term::fun(def.name, rec_args));
    auto step_rhs = apply_schema(step, step_args);

    if (base_rhs)
      equations.emplace_back(Term::fun(def.name, zero_args), std::move(*base_rhs));
    if (step_rhs)
      equations.emplace_back(Term::fun(def.name, succ_args), std::move(*step_rhs));
  } else {
    auto rhs = apply_schema(body, vars);
    if (rhs) equations.emplace_back(Term::fun(def.name, vars), std::move(*rhs));
  }
  (void)reg;
  return equations;
}

bool pra_axiom_check(const Registry& reg, const Formula& a) {
  // not succ(0) = 0
  static const Formula no_confusion =
      Formula::negation(Formula::eq(Term::succ(Term::zero()), Term::zero()));
  if (a == no_confusion) return true;

  if (a.kind() != Formula::Kind::kEq) return false;
  const Term& lhs = a.terms()[0];
  const Term& rhs = a.terms()[1];
  if (lhs.kind() != Term::Kind::kFun) return false;
  const PrimRecDef* def = reg.find(lhs.name());
  if (def == nullptr) return false;
  for (const auto& [pat_lhs, pat_rhs] : defining_equations(reg, *def)) {
    std::map<std::string, Term> binding;
    if (!match_term(pat_lhs, lhs, binding)) continue;
    if (apply_binding(pat_rhs, binding) == rhs) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Equality axiom check

namespace {

void flatten_conj(const Formula& a, std::vector<Formula>& out) {
  if (a.kind() == Formula::Kind::kAnd) {
    flatten_conj(a.subs()[0], out);
    flatten_conj(a.subs()[1], out);
    return;
  }
  out.push_back(a);
}

// Extracts the k equation pairs t_i = u_i from a conjunction, in order.
std::optional<std::vector<std::pair<Term, Term>>> equation_list(const Formula& a) {
  std::vector<Formula> parts;
  flatten_conj(a, parts);
  std::vector<std::pair<Term, Term>> pairs;
  pairs.reserve(parts.size());
  for (const auto& p : parts) {
    if (p.kind() != Formula::Kind::kEq) return std::nullopt;
    pairs.emplace_back(p.terms()[0], p.terms()[1]);
  }
  return pairs;
}

bool pairs_match_args(const std::vector<std::pair<Term, Term>>& pairs,
                      const std::vector<Term>& lhs_args,
                      const std::vector<Term>& rhs_args) {
  if (pairs.size() != lhs_args.size() || lhs_args.size() != rhs_args.size())
    return false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first != lhs_args[i] || pairs[i].second != rhs_args[i])
      return false;
  }
  return true;
}

// Congruence for term-formers: (t1=u1 /\ ... /\ tk=uk) -> F(t...) = F(u...)
// where F is succ, a declared definition, or a Skolem symbol.
bool is_fun_congruence(const Registry& reg, const Formula& premise,
                       const Formula& conclusion) {
  if (conclusion.kind() != Formula::Kind::kEq) return false;
  const Term& l = conclusion.terms()[0];
  const Term& r = conclusion.terms()[1];
  if (l.kind() != r.kind()) return false;
  if (l.kind() != Term::Kind::kSucc && l.kind() != Term::Kind::kFun &&
      l.kind() != Term::Kind::kPhi)
    return false;
  if (l.name() != r.name()) return false;
  if (l.kind() == Term::Kind::kFun && reg.find(l.name()) == nullptr) return false;
  if (l.kind() == Term::Kind::kPhi) reg.predicate(l.name());
  auto pairs = equation_list(premise);
  return pairs && pairs_match_args(*pairs, l.args(), r.args());
}

// Congruence for atoms: (t1=u1 /\ ...) -> (P(t...) -> P(u...)), with P a
// declared predicate or a guard symbol.
bool is_pred_congruence(const Registry& reg, const Formula& premise,
                        const Formula& conclusion) {
  if (conclusion.kind() != Formula::Kind::kImplies) return false;
  const Formula& l = conclusion.subs()[0];
  const Formula& r = conclusion.subs()[1];
  if (l.kind() != r.kind()) return false;
  if (l.kind() != Formula::Kind::kPred && l.kind() != Formula::Kind::kChi)
    return false;
  if (l.name() != r.name()) return false;
  reg.predicate(l.name());
  auto pairs = equation_list(premise);
  return pairs && pairs_match_args(*pairs, l.terms(), r.terms());
}

}  // namespace

bool eq_axiom_check(const Registry& reg, const Formula& a) {
  // t = t
  if (a.kind() == Formula::Kind::kEq && a.terms()[0] == a.terms()[1]) return true;

  if (a.kind() != Formula::Kind::kImplies) return false;
  const Formula& premise = a.subs()[0];
  const Formula& conclusion = a.subs()[1];

  // t = u -> u = t
  if (premise.kind() == Formula::Kind::kEq &&
      conclusion.kind() == Formula::Kind::kEq &&
      premise.terms()[0] == conclusion.terms()[1] &&
      premise.terms()[1] == conclusion.terms()[0])
    return true;

  // (t = u /\ u = v) -> t = v
  if (premise.kind() == Formula::Kind::kAnd &&
      conclusion.kind() == Formula::Kind::kEq) {
    const Formula& first = premise.subs()[0];
    const Formula& second = premise.subs()[1];
    if (first.kind() == Formula::Kind::kEq &&
        second.kind() == Formula::Kind::kEq &&
        first.terms()[1] == second.terms()[0] &&
        first.terms()[0] == conclusion.terms()[0] &&
        second.terms()[1] == conclusion.terms()[1])
      return true;
  }

  return is_fun_congruence(reg, premise, conclusion) ||
         is_pred_congruence(reg, premise, conclusion);
}

// ---------------------------------------------------------------------------
// Induction shape inference and the checker

IndShape infer_induction(const Formula& base, const Formula& step,
                         const std::string& concl_var) {
  if (step.kind() != Formula::Kind::kImplies)
    throw ProofError("induction step must be an implication, got " +
                     step.to_string());
  const Formula& pattern = step.subs()[0];
  const Formula& successor = step.subs()[1];

  std::optional<std::string> rec_var;
  for (const auto& x : free_vars(pattern)) {
    if (substitute(pattern, x, Term::succ(Term::var(x))) == successor) {
      rec_var = x;
      break;
    }
  }
  if (!rec_var) {
    // Degenerate induction: the variable occurs nowhere.
    if (successor == pattern && base == pattern)
      return IndShape{pattern, concl_var};
    throw ProofError("induction step " + step.to_string() +
                     " does not have the shape A -> A[succ(x)/x]");
  }
  if (substitute(pattern, *rec_var, Term::zero()) != base)
    throw ProofError("induction base " + base.to_string() +
                     " does not match A[0/" + *rec_var + "] for A = " +
                     pattern.to_string());
  if (concl_var != *rec_var) {
    auto fv = free_vars(pattern);
    fv.erase(*rec_var);
    if (fv.count(concl_var))
      throw ProofError("induction conclusion variable " + concl_var +
                       " already occurs in " + pattern.to_string());
  }
  return IndShape{pattern, *rec_var};
}

namespace {

void validate_terms_arity(const Registry& reg, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
    case Term::Kind::kZero:
      return;
    case Term::Kind::kSucc:
      validate_terms_arity(reg, t.args()[0]);
      return;
    case Term::Kind::kFun: {
      const PrimRecDef& def = reg.at(t.name());
      if (t.args().size() != def.arity)
        throw ProofError(t.name() + " expects " + std::to_string(def.arity) +
                         " arguments, got " + std::to_string(t.args().size()));
      break;
    }
    case Term::Kind::kPhi: {
      const PrimRecDef& def = reg.predicate(t.name());
      if (t.args().size() + 1 != def.arity)
        throw ProofError("phi " + t.name() + " expects " +
                         std::to_string(def.arity - 1) + " arguments, got " +
                         std::to_string(t.args().size()));
      break;
    }
  }
  for (const auto& a : t.args()) validate_terms_arity(reg, a);
}

void validate_formula_arity(const Registry& reg, const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::kPred: {
      const PrimRecDef& def = reg.predicate(a.name());
      if (a.terms().size() != def.arity)
        throw ProofError(a.name() + " expects " + std::to_string(def.arity) +
                         " arguments, got " + std::to_string(a.terms().size()));
      break;
    }
    case Formula::Kind::kChi: {
      const PrimRecDef& def = reg.predicate(a.name());
      if (a.terms().size() + 1 != def.arity)
        throw ProofError("chi " + a.name() + " expects " +
                         std::to_string(def.arity - 1) + " arguments, got " +
                         std::to_string(a.terms().size()));
      break;
    }
    default:
      break;
  }
  for (const auto& t : a.terms()) validate_terms_arity(reg, t);
  for (const auto& s : a.subs()) validate_formula_arity(reg, s);
}

}  // namespace

Formula check_proof(const Registry& reg, const Proof& p) {
  switch (p.kind()) {
    case Proof::Kind::kTaut: {
      validate_formula_arity(reg, p.formula());
      if (!tautology_check(p.formula()))
        throw ProofError("not a tautology instance: " + p.formula().to_string());
      return p.formula();
    }
    case Proof::Kind::kPra: {
      validate_formula_arity(reg, p.formula());
      if (!pra_axiom_check(reg, p.formula()))
        throw ProofError("not a defining-equation instance or succ axiom: " +
                         p.formula().to_string());
      return p.formula();
    }
    case Proof::Kind::kEqAx: {
      validate_formula_arity(reg, p.formula());
      if (!eq_axiom_check(reg, p.formula()))
        throw ProofError("not an equality axiom: " + p.formula().to_string());
      return p.formula();
    }
    case Proof::Kind::kChiAx: {
      const PrimRecDef& def = reg.predicate(p.symbol());
      if (p.terms().size() != def.arity)
        throw ProofError("guard axiom for " + p.symbol() + " expects " +
                         std::to_string(def.arity - 1) +
                         " arguments and a witness term");
      std::vector<Term> args(p.terms().begin(), p.terms().end() - 1);
      for (const auto& t : p.terms()) validate_terms_arity(reg, t);
      std::vector<Term> full = args;
      full.push_back(p.witness_term());
      return Formula::implies(Formula::pred(p.symbol(), std::move(full)),
                              Formula::chi(p.symbol(), std::move(args)));
    }
    case Proof::Kind::kPhiAx: {
      const PrimRecDef& def = reg.predicate(p.symbol());
      if (p.terms().size() + 1 != def.arity)
        throw ProofError("Skolem axiom for " + p.symbol() + " expects " +
                         std::to_string(def.arity - 1) + " arguments, got " +
                         std::to_string(p.terms().size()));
      for (const auto& t : p.terms()) validate_terms_arity(reg, t);
      std::vector<Term> args = p.terms();
      std::vector<Term> full = args;
      full.push_back(Term::phi(p.symbol(), args));
      return Formula::implies(Formula::chi(p.symbol(), std::move(args)),
                              Formula::pred(p.symbol(), std::move(full)));
    }
    case Proof::Kind::kMp: {
      Formula major = check_proof(reg, p.premises()[0]);
      Formula minor = check_proof(reg, p.premises()[1]);
      if (major.kind() != Formula::Kind::kImplies)
        throw ProofError("modus ponens major premise is not an implication: " +
                         major.to_string());
      if (major.subs()[0] != minor)
        throw ProofError("modus ponens premises do not match: major " +
                         major.to_string() + ", minor " + minor.to_string());
      return major.subs()[1];
    }
    case Proof::Kind::kSub: {
      Formula premise = check_proof(reg, p.premises()[0]);
      validate_terms_arity(reg, p.subst_term());
      return substitute(premise, p.symbol(), p.subst_term());
    }
    case Proof::Kind::kInd: {
      Formula base = check_proof(reg, p.premises()[0]);
      Formula step = check_proof(reg, p.premises()[1]);
      IndShape shape = infer_induction(base, step, p.symbol());
      return substitute(shape.pattern, shape.rec_var, Term::var(p.symbol()));
    }
  }
  throw Error("unreachable proof kind");
}

}  // namespace em1
