#ifndef EM1_PROOF_HPP
#define EM1_PROOF_HPP

#include <memory>
#include <string>
#include <vector>

#include "em1/ast.hpp"
#include "em1/registry.hpp"

namespace em1 {

// Hilbert-style proof trees. Leaves cite an axiom class and carry the
// axiom instance (or the data determining it); inner nodes apply modus
// ponens, substitution, or quantifier-free induction.
class Proof {
 public:
  enum class Kind { kTaut, kPra, kEqAx, kChiAx, kPhiAx, kMp, kSub, kInd };

  static Proof taut(Formula a);
  static Proof pra(Formula a);
  static Proof eq_ax(Formula a);
  // Guard axiom for predicate P: P(args, witness) -> chi_P(args).
  static Proof chi_ax(std::string pred, std::vector<Term> args, Term witness);
  // Skolem axiom for P: chi_P(args) -> P(args, phi_P(args)).
  static Proof phi_ax(std::string pred, std::vector<Term> args);
  // major proves A -> B, minor proves A; concludes B.
  static Proof mp(Proof major, Proof minor);
  // premise proves A; concludes A[t/x].
  static Proof sub(Proof premise, std::string var, Term t);
  // base proves A[0/x], step proves A -> A[succ(x)/x] for the inferred
  // induction variable x; concludes A[var/x].
  static Proof ind(Proof base, Proof step, std::string var);

  Kind kind() const { return node_->kind; }
  const Formula& formula() const { return node_->formulas[0]; }  // leaf axioms
  const std::string& symbol() const { return node_->symbol; }    // kChiAx/kPhiAx pred, kSub/kInd var
  const std::vector<Term>& terms() const { return node_->terms; }
  const Term& witness_term() const { return node_->terms.back(); }  // kChiAx
  const Term& subst_term() const { return node_->terms[0]; }        // kSub
  const std::vector<Proof>& premises() const { return node_->premises; }

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::vector<Formula> formulas;
    std::string symbol;
    std::vector<Term> terms;
    std::vector<Proof> premises;
  };
  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// True when the propositional skeleton of `a` — atoms are its distinct
// atomic subformulas up to syntactic identity — is a classical tautology.
// Throws ProofError past 16 distinct atoms.
bool tautology_check(const Formula& a);

// True when `a` is an instance of a defining equation generated from the
// schema of a declared definition, or the axiom not succ(0) = 0.
bool pra_axiom_check(const Registry& reg, const Formula& a);

// True when `a` matches reflexivity, symmetry, transitivity, or a
// congruence schema for succ, a declared symbol, or a Skolem/guard symbol.
bool eq_axiom_check(const Registry& reg, const Formula& a);

// The induction shape recovered from the two premises of an induction
// node: the formula pattern A and the variable it recurses on.
struct IndShape {
  Formula pattern;
  std::string rec_var;
};

// Determines A and x from base : A[0/x] and step : A -> A[succ(x)/x], and
// validates that `concl_var` may replace x. Throws ProofError on mismatch.
IndShape infer_induction(const Formula& base, const Formula& step,
                         const std::string& concl_var);

// Validates the whole tree and returns its conclusion. Throws ProofError
// on any rule or axiom violation.
Formula check_proof(const Registry& reg, const Proof& p);

// Defining equations of one declared definition, as (lhs, rhs) pairs over
// the declared argument names. Empty when the body nests an anonymous
// recursion that has no equational form; name the inner recursion instead.
std::vector<std::pair<Term, Term>> defining_equations(const Registry& reg,
                                                      const PrimRecDef& def);

}  // namespace em1

#endif  // EM1_PROOF_HPP
