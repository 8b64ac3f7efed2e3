#ifndef EM1_AST_HPP
#define EM1_AST_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "em1/nat.hpp"

namespace em1 {

// Terms of the language: variables, zero, successor, applications of
// declared definitions, and applications of the Skolem function symbols
// attached to declared predicates. There are no binders, so substitution
// is capture-free by construction.
class Term {
 public:
  enum class Kind { kVar, kZero, kSucc, kFun, kPhi };

  static Term var(std::string name);
  static Term zero();
  static Term succ(Term arg);
  static Term fun(std::string name, std::vector<Term> args);
  // phi(P, args): the Skolem function of a (k+1)-ary predicate P applied
  // to k arguments.
  static Term phi(std::string pred, std::vector<Term> args);
  // Builds the numeral succ^n(0).
  static Term numeral(const Nat& n);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;        // kVar, kFun, kPhi
    std::vector<Term> args;  // kSucc: 1, kFun/kPhi: any
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Quantifier-free formulas: atomic predicate applications, equations,
// guard predicates chi_P, and the propositional connectives.
class Formula {
 public:
  enum class Kind { kPred, kEq, kChi, kNot, kAnd, kOr, kImplies };

  static Formula pred(std::string name, std::vector<Term> args);
  static Formula eq(Term lhs, Term rhs);
  // chi(P, args): the guard predicate of a (k+1)-ary P on k arguments.
  static Formula chi(std::string pred, std::vector<Term> args);
  static Formula negation(Formula sub);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& terms() const { return node_->terms; }
  const std::vector<Formula>& subs() const { return node_->subs; }

  bool is_atomic() const {
    return kind() == Kind::kPred || kind() == Kind::kEq || kind() == Kind::kChi;
  }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;           // kPred, kChi
    std::vector<Term> terms;    // kPred/kChi args; kEq: exactly 2
    std::vector<Formula> subs;  // kNot: 1; binary connectives: 2
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& a);

// Replaces every occurrence of variable x by t.
Term substitute(const Term& e, const std::string& x, const Term& t);
Formula substitute(const Formula& e, const std::string& x, const Term& t);

// True when no Skolem or guard symbol occurs, i.e. the expression lies in
// the base language interpreted by the standard model alone.
bool in_base_language(const Term& t);
bool in_base_language(const Formula& a);

}  // namespace em1

#endif  // EM1_AST_HPP
