#include "em1/ast.hpp"

#include <utility>

#include "em1/errors.hpp"

namespace em1 {

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVar;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::zero() {
  static const Term instance = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kZero;
    return Term(std::move(node));
  }();
  return instance;
}

Term Term::succ(Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSucc;
  node->args.push_back(std::move(arg));
  return Term(std::move(node));
}

Term Term::fun(std::string name, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kFun;
  node->name = std::move(name);
  node->args = std::move(args);
  return Term(std::move(node));
}

Term Term::phi(std::string pred, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kPhi;
  node->name = std::move(pred);
  node->args = std::move(args);
  return Term(std::move(node));
}

Term Term::numeral(const Nat& n) {
  Term t = zero();
  for (Nat i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name()) return false;
  const auto& a = args();
  const auto& b = other.args();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

namespace {

// Numerals print as decimal literals; anything else in s-expression form.
bool as_numeral(const Term& t, Nat& out) {
  Nat n = 0;
  const Term* cur = &t;
  while (cur->kind() == Term::Kind::kSucc) {
    ++n;
    cur = &cur->args()[0];
  }
  if (cur->kind() != Term::Kind::kZero) return false;
  out = n;
  return true;
}

}  // namespace

std::string Term::to_string() const {
  Nat n;
  if (as_numeral(*this, n)) return n.str();
  switch (kind()) {
    case Kind::kVar:
      return name();
    case Kind::kZero:
      return "0";
    case Kind::kSucc:
      return "(succ " + args()[0].to_string() + ")";
    case Kind::kFun: {
      std::string out = "(" + name();
      for (const auto& a : args()) out += " " + a.to_string();
      return out + ")";
    }
    case Kind::kPhi: {
      std::string out = "(phi " + name();
      for (const auto& a : args()) out += " " + a.to_string();
      return out + ")";
    }
  }
  return "?";
}

Formula Formula::pred(std::string name, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kPred;
  node->name = std::move(name);
  node->terms = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::eq(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kEq;
  node->terms.push_back(std::move(lhs));
  node->terms.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::chi(std::string pred, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kChi;
  node->name = std::move(pred);
  node->terms = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula sub) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNot;
  node->subs.push_back(std::move(sub));
  return Formula(std::move(node));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAnd;
  node->subs.push_back(std::move(lhs));
  node->subs.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kOr;
  node->subs.push_back(std::move(lhs));
  node->subs.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kImplies;
  node->subs.push_back(std::move(lhs));
  node->subs.push_back(std::move(rhs));
  return Formula(std::move(node));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name()) return false;
  if (terms().size() != other.terms().size()) return false;
  for (std::size_t i = 0; i < terms().size(); ++i)
    if (terms()[i] != other.terms()[i]) return false;
  if (subs().size() != other.subs().size()) return false;
  for (std::size_t i = 0; i < subs().size(); ++i)
    if (subs()[i] != other.subs()[i]) return false;
  return true;
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::kPred: {
      std::string out = "(" + name();
      for (const auto& t : terms()) out += " " + t.to_string();
      return out + ")";
    }
    case Kind::kEq:
      return "(= " + terms()[0].to_string() + " " + terms()[1].to_string() + ")";
    case Kind::kChi: {
      std::string out = "(chi " + name();
      for (const auto& t : terms()) out += " " + t.to_string();
      return out + ")";
    }
    case Kind::kNot:
      return "(not " + subs()[0].to_string() + ")";
    case Kind::kAnd:
      return "(and " + subs()[0].to_string() + " " + subs()[1].to_string() + ")";
    case Kind::kOr:
      return "(or " + subs()[0].to_string() + " " + subs()[1].to_string() + ")";
    case Kind::kImplies:
      return "(-> " + subs()[0].to_string() + " " + subs()[1].to_string() + ")";
  }
  return "?";
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::kVar) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

void collect_vars(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) collect_vars(t, out);
  for (const auto& s : f.subs()) collect_vars(s, out);
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& a) {
  std::set<std::string> out;
  collect_vars(a, out);
  return out;
}

Term substitute(const Term& e, const std::string& x, const Term& t) {
  switch (e.kind()) {
    case Term::Kind::kVar:
      return e.name() == x ? t : e;
    case Term::Kind::kZero:
      return e;
    case Term::Kind::kSucc:
      return Term::succ(substitute(e.args()[0], x, t));
    case Term::Kind::kFun:
    case Term::Kind::kPhi: {
      std::vector<Term> args;
      args.reserve(e.args().size());
      for (const auto& a : e.args()) args.push_back(substitute(a, x, t));
      return e.kind() == Term::Kind::kFun ? Term::fun(e.name(), std::move(args))
                                          : Term::phi(e.name(), std::move(args));
    }
  }
  throw Error("unreachable term kind");
}

Formula substitute(const Formula& e, const std::string& x, const Term& t) {
  switch (e.kind()) {
    case Formula::Kind::kPred:
    case Formula::Kind::kChi: {
      std::vector<Term> args;
      args.reserve(e.terms().size());
      for (const auto& a : e.terms()) args.push_back(substitute(a, x, t));
      return e.kind() == Formula::Kind::kPred
                 ? Formula::pred(e.name(), std::move(args))
                 : Formula::chi(e.name(), std::move(args));
    }
    case Formula::Kind::kEq:
      return Formula::eq(substitute(e.terms()[0], x, t),
                         substitute(e.terms()[1], x, t));
    case Formula::Kind::kNot:
      return Formula::negation(substitute(e.subs()[0], x, t));
    case Formula::Kind::kAnd:
      return Formula::conj(substitute(e.subs()[0], x, t),
                           substitute(e.subs()[1], x, t));
    case Formula::Kind::kOr:
      return Formula::disj(substitute(e.subs()[0], x, t),
                           substitute(e.subs()[1], x, t));
    case Formula::Kind::kImplies:
      return Formula::implies(substitute(e.subs()[0], x, t),
                              substitute(e.subs()[1], x, t));
  }
  throw Error("unreachable formula kind");
}

bool in_base_language(const Term& t) {
  if (t.kind() == Term::Kind::kPhi) return false;
  for (const auto& a : t.args())
    if (!in_base_language(a)) return false;
  return true;
}

bool in_base_language(const Formula& a) {
  if (a.kind() == Formula::Kind::kChi) return false;
  for (const auto& t : a.terms())
    if (!in_base_language(t)) return false;
  for (const auto& s : a.subs())
    if (!in_base_language(s)) return false;
  return true;
}

}  // namespace em1
