#ifndef EM1_MERGE_HPP
#define EM1_MERGE_HPP

#include <string>

#include "em1/state.hpp"

namespace em1 {

// How to combine two possibly incompatible states into one. All three
// policies are monoids with the empty state as unit, reflect the unit, and
// stay inside the union of their arguments.
enum class MergePolicy {
  kFirst,     // keep the first state unless it is empty
  kOverride,  // keep the second state's atoms except where the first claims the key
  kMin,       // keep the smallest witness per key across both states
};

State merge(const State& a, const State& b, MergePolicy policy);

std::string to_string(MergePolicy policy);
// Parses "first" | "override" | "min". Throws Error on anything else.
MergePolicy merge_policy_from_string(const std::string& text);

}  // namespace em1

#endif  // EM1_MERGE_HPP
