#ifndef EM1_EXTRACT_HPP
#define EM1_EXTRACT_HPP

#include <cstddef>
#include <string>

#include "em1/proof.hpp"
#include "em1/realizer.hpp"
#include "em1/semantics.hpp"

namespace em1 {

// Compiles a checked proof into a state transformer, structurally:
// tautology, equation, defining-equation and Skolem-axiom leaves become
// the trivial transformer; a guard-axiom leaf becomes its learning step;
// modus ponens merges the two extractions; substitution shifts the
// environment; induction folds the step extraction up to the value of the
// conclusion variable. The caller must have run check_proof.
Realizer extract_realizer(RegistryPtr reg, const Proof& p,
                          const Environment& env, MergePolicy policy);

struct ForcesResult {
  LearningTrace trace;
  State final_state;
  bool holds = false;  // truth of the formula at the final state
};

// Runs the learning loop of r from s0 and evaluates the formula at the
// prefix point reached. For a realizer extracted from a proof of `a` the
// result always holds.
ForcesResult forces_check(const Realizer& r, RegistryPtr reg,
                          const Environment& env, const Formula& a,
                          const State& s0,
                          std::size_t cap = kDefaultIterationCap);

struct WitnessResult {
  Nat witness;
  State final_state;
  LearningTrace trace;
  Formula conclusion;
};

// Checks the proof, extracts its realizer under a numeral environment,
// runs the learning loop from s0, and reads off the Skolem value of
// target_pred at the first phi_-occurrence in the conclusion. Throws
// ExtractionError if the conclusion is false at the prefix point, which
// cannot happen for checked proofs.
WitnessResult extract_witness(RegistryPtr reg, const Proof& p,
                              const Environment& numerals,
                              const std::string& target_pred, const State& s0,
                              std::size_t cap, MergePolicy policy);

}  // namespace em1

#endif  // EM1_EXTRACT_HPP
