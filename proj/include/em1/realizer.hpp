#ifndef EM1_REALIZER_HPP
#define EM1_REALIZER_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "em1/merge.hpp"
#include "em1/semantics.hpp"
#include "em1/state.hpp"
#include "json.hpp"

namespace em1 {

// Printable shape of a realizer; mirrors the proof it was extracted from,
// with all trivially realized leaves collapsed to kTrivial.
class RealizerTag {
 public:
  enum class Kind { kTrivial, kChi, kMerged, kInduction };
  using Ptr = std::shared_ptr<const RealizerTag>;

  static Ptr trivial();
  static Ptr chi(std::string label);
  static Ptr merged(Ptr left, Ptr right);
  static Ptr induction(Ptr base, Ptr step, std::string label);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const Ptr& left() const { return left_; }
  const Ptr& right() const { return right_; }

  std::string to_string() const;

 private:
  RealizerTag(Kind kind, std::string label, Ptr left, Ptr right)
      : kind_(kind), label_(std::move(label)), left_(std::move(left)),
        right_(std::move(right)) {}
  Kind kind_;
  std::string label_;
  Ptr left_, right_;
};

// A state transformer r: once r satisfies the contract checked by
// check_realizer_contract at every reachable state, r(s) holds exactly the
// new atoms needed to move toward the goal, and r(s) empty means the goal
// is met at s (s is a prefix point of r).
class Realizer {
 public:
  State eval(const State& s) const { return fn_(s); }
  const RealizerTag& tag() const { return *tag_; }
  RealizerTag::Ptr tag_ptr() const { return tag_; }

  static Realizer from_function(std::function<State(const State&)> fn,
                                RealizerTag::Ptr tag);

 private:
  Realizer(std::function<State(const State&)> fn, RealizerTag::Ptr tag)
      : fn_(std::move(fn)), tag_(std::move(tag)) {}
  std::function<State(const State&)> fn_;
  RealizerTag::Ptr tag_;
};

// The transformer that never adds anything; every state is a prefix point.
Realizer trivial_realizer();

// The learning step for one guard axiom instance: at state s it proposes
// the atom <P, args(s), witness(s)> when that atom is true in the standard
// model and s stores no witness for the key yet, and proposes nothing
// otherwise.
Realizer chi_realizer(RegistryPtr reg, const std::string& pred,
                      std::vector<Individual> args, Individual witness);

// Pointwise merge of two transformers under the given policy.
Realizer merge_lifted(const Realizer& left, const Realizer& right,
                      MergePolicy policy);

// Recursion on the value of `bound` at the evaluation state: the base
// transformer merged with the fold of step(0) ... step(bound(s)-1), all
// evaluated at s. Equals the base alone where bound evaluates to 0.
Realizer induction_realizer(const Realizer& base,
                            std::function<Realizer(const Nat&)> step,
                            Individual bound, MergePolicy policy,
                            std::string label = "");

// True when r(s) is compatible with s and shares no atom with it.
bool check_realizer_contract(const Realizer& r, const State& s);

// One step of the learning loop: the state seen and what the realizer
// proposed there.
struct TraceEntry {
  State state;
  State output;
};

// The full run of the learning loop: states weakly increase and the final
// entry has empty output (a prefix point was reached).
struct LearningTrace {
  std::vector<TraceEntry> entries;

  // Number of strict expansions; entries.size() - 1.
  std::size_t expansions() const { return entries.empty() ? 0 : entries.size() - 1; }
  const State& final_state() const { return entries.back().state; }

  nlohmann::json to_json() const;
};

inline constexpr std::size_t kDefaultIterationCap = 10000;

// Iterates s -> s join r(s) from s0 until r proposes nothing, checking the
// realizer contract at every visited state. Throws LoopError past `cap`
// iterations and ContractError on a contract violation.
LearningTrace find_prefix_point(const Realizer& r, const State& s0,
                                std::size_t cap = kDefaultIterationCap);

}  // namespace em1

#endif  // EM1_REALIZER_HPP
