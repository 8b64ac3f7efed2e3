#ifndef EM1_SAMPLER_HPP
#define EM1_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "em1/realizer.hpp"
#include "em1/semantics.hpp"
#include "em1/state.hpp"

namespace em1 {

// A small arithmetic vocabulary used by the randomized suites: pred, add,
// mul, monus, sig, iszero, and the predicates LT, LE, EQN, SQ plus the
// always-true ANY and ANY3 kept aside as fresh symbols.
RegistryPtr sample_registry();

// Seeded generator of states, terms, formulas, individuals, environments
// and realizers over a fixed registry. Deterministic for a given seed.
class Sampler {
 public:
  Sampler(RegistryPtr reg, std::uint64_t seed);

  const RegistryPtr& registry() const { return reg_; }

  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  bool coin(unsigned percent = 50);
  Nat small_nat(std::uint64_t max = 9);

  // Predicates eligible for atoms and formulas; excludes ANY and ANY3.
  const std::string& pick_predicate();

  // An atom true in the standard model.
  Atom atom();
  State state(std::size_t max_atoms);
  // A random subset of the given state.
  State substate(const State& s);
  // s extended by up to `extra` atoms compatible with it.
  State grow(const State& s, std::size_t extra);
  WISequence wi_sequence(std::size_t max_len, std::size_t growth);

  // Atoms over the reserved always-true predicates, for extending states
  // without touching any sampled expression.
  State fresh_extension(const State& s, std::size_t extra);

  Term term(std::size_t depth, const std::vector<std::string>& vars);
  Formula formula(std::size_t depth, const std::vector<std::string>& vars);
  Individual individual(const std::vector<std::string>& vars);
  Environment environment(const std::vector<std::string>& vars);
  Realizer realizer(std::size_t depth);

  std::mt19937_64& rng() { return rng_; }

 private:
  RegistryPtr reg_;
  std::mt19937_64 rng_;
  std::vector<std::string> atom_preds_;
  std::vector<std::string> fresh_preds_;
  std::vector<std::string> fun_names_;
};

}  // namespace em1

#endif  // EM1_SAMPLER_HPP
