#ifndef EM1_LAWS_HPP
#define EM1_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace em1::laws {

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  double seconds = 0.0;
  std::vector<std::string> failures;  // first few messages

  bool ok() const { return failed == 0; }
  std::string summary() const;
};

// Merge laws for all three policies on randomized state triples: monoid
// laws with the empty state as unit, reflection of the unit, containment
// in the union, compatibility and disjointness preservation, commutativity
// of the min policy, and pinned non-commutativity witnesses for the other
// two.
SuiteResult merge_axiom_suite(std::uint64_t seed, std::size_t iters);

// Kleisli laws of the state-indexed values on generated (f, alpha, s)
// triples, exact equality at the sampled state.
SuiteResult state_monad_suite(std::uint64_t seed, std::size_t iters);

// Kleisli laws of the paired (value, transformer) representation under
// each merge policy; `iters` triples per policy.
SuiteResult realizer_monad_suite(std::uint64_t seed, std::size_t iters);

// Prefix points of a pointwise merge are exactly the common prefix points,
// sampled over random realizer pairs and states.
SuiteResult prefix_intersection_suite(std::uint64_t seed, std::size_t pairs,
                                      std::size_t states_each);

// Denoting a substituted expression equals denoting under the extended
// environment, on random terms and formulas.
SuiteResult substitution_suite(std::uint64_t seed, std::size_t iters);

// Instances of the always-true axiom classes (defining equations,
// tautologies, equality axioms, Skolem axioms) denote true at every
// sampled state; also requires at least one sampled guard-axiom instance
// that is false somewhere.
SuiteResult conservativity_suite(std::uint64_t seed, std::size_t instances,
                                 std::size_t states_each);

// Generated denotations stabilize along generated weakly increasing
// sequences and keep their stabilized value under extensions by atoms over
// unused predicates.
SuiteResult convergence_suite(std::uint64_t seed, std::size_t individuals,
                              std::size_t sequences);

}  // namespace em1::laws

#endif  // EM1_LAWS_HPP
