#ifndef EM1_SEMANTICS_HPP
#define EM1_SEMANTICS_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "em1/ast.hpp"
#include "em1/eval.hpp"
#include "em1/state.hpp"

namespace em1 {

class Environment;

// A number that depends on the current state of knowledge. Values of this
// type are built only through constant() and denote_term(), both of which
// stabilize along every weakly increasing sequence of states.
class Individual {
 public:
  static Individual constant(Nat n);

  Nat eval(const State& s) const { return fn_(s); }
  const std::string& description() const { return desc_; }

  // Test-only escape hatch for maps that are not built from the safe
  // constructors (counterexamples to globality and convergence).
  static Individual from_function(std::function<Nat(const State&)> fn,
                                  std::string description);

 private:
  friend Individual denote_term(const Term&, const Environment&, RegistryPtr);
  Individual(std::function<Nat(const State&)> fn, std::string desc)
      : fn_(std::move(fn)), desc_(std::move(desc)) {}
  std::function<Nat(const State&)> fn_;
  std::string desc_;
};

// A truth value that depends on the current state of knowledge.
class BoolIndividual {
 public:
  static BoolIndividual constant(bool b);

  bool eval(const State& s) const { return fn_(s); }
  const std::string& description() const { return desc_; }

  static BoolIndividual from_function(std::function<bool(const State&)> fn,
                                      std::string description);

 private:
  friend BoolIndividual denote_formula(const Formula&, const Environment&,
                                       RegistryPtr);
  BoolIndividual(std::function<bool(const State&)> fn, std::string desc)
      : fn_(std::move(fn)), desc_(std::move(desc)) {}
  std::function<bool(const State&)> fn_;
  std::string desc_;
};

// Finite map from variables to individuals. Unbound variables read as the
// constant 0, which keeps denotation total. Functional updates share
// structure; copies are cheap.
class Environment {
 public:
  Environment();

  Individual lookup(const std::string& name) const;
  bool binds(const std::string& name) const;
  Environment with(const std::string& name, Individual value) const;

  static Environment of_numerals(const std::map<std::string, Nat>& values);

 private:
  using Map = std::map<std::string, Individual>;
  explicit Environment(std::shared_ptr<const Map> vars) : vars_(std::move(vars)) {}
  std::shared_ptr<const Map> vars_;
};

// Truth of the guard predicate chi_P on arguments m at state s: true
// exactly when s stores a witness for (P, m).
bool sem_chi(const Registry& reg, const std::string& pred,
             const std::vector<Nat>& args, const State& s);

// Value of the Skolem function phi_P on m at s: the stored witness if any,
// 0 otherwise.
Nat sem_phi(const Registry& reg, const std::string& pred,
            const std::vector<Nat>& args, const State& s);

// Denotation of a term: the map sending a state s to the value of the
// term with every part evaluated at that same s — variables through the
// environment, declared functions pointwise, Skolem symbols through
// sem_phi.
Individual denote_term(const Term& t, const Environment& env, RegistryPtr reg);

// Denotation of a formula; atoms are evaluated at the single global state
// and combined by the boolean tables.
BoolIndividual denote_formula(const Formula& a, const Environment& env,
                              RegistryPtr reg);

// A finite weakly increasing sequence of states; the test-harness stand-in
// for infinite sequences. Construction checks adjacent containment.
class WISequence {
 public:
  explicit WISequence(std::vector<State> states);
  std::size_t size() const { return states_.size(); }
  const State& at(std::size_t i) const { return states_.at(i); }
  const State& back() const { return states_.back(); }
  const std::vector<State>& states() const { return states_; }

 private:
  std::vector<State> states_;
};

// Least index i such that the value at every later state of the sequence
// equals the value at i. Always exists for finite sequences.
template <class V>
std::size_t stabilization_point(const V& value, const WISequence& seq) {
  std::size_t n = seq.size();
  if (n == 0) return 0;
  auto last = value.eval(seq.at(n - 1));
  std::size_t point = n - 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    if (value.eval(seq.at(i)) != last) break;
    point = i;
  }
  return point;
}

// Checks at one state whether f consults its individual argument only
// there: f(alpha, s) must agree with f on the constant frozen at alpha(s).
template <class F>
bool is_global_at(F&& f, const Individual& alpha, const State& s) {
  return f(alpha, s) == f(Individual::constant(alpha.eval(s)), s);
}

}  // namespace em1

#endif  // EM1_SEMANTICS_HPP
