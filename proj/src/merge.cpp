#include "em1/merge.hpp"

#include <algorithm>

namespace em1 {

namespace {

// Atoms of b whose (pred, args) key is not claimed by a, appended to a.
State merge_override(const State& a, const State& b) {
  std::vector<Atom> out = a.atoms();
  for (const auto& atom : b) {
    if (!a.contains_key(atom.pred, atom.args)) out.push_back(atom);
  }
  return State::unchecked(std::move(out));
}

// Smallest witness per key across the union; commutative.
State merge_min(const State& a, const State& b) {
  std::vector<Atom> all = a.atoms();
  all.insert(all.end(), b.atoms().begin(), b.atoms().end());
  std::sort(all.begin(), all.end());
  std::vector<Atom> out;
  for (auto& atom : all) {
    // Sorted order puts the smallest witness of each key first.
    if (!out.empty() && out.back().same_key(atom)) continue;
    out.push_back(std::move(atom));
  }
  return State::unchecked(std::move(out));
}

}  // namespace

State merge(const State& a, const State& b, MergePolicy policy) {
  switch (policy) {
    case MergePolicy::kFirst:
      return a.empty() ? b : a;
    case MergePolicy::kOverride:
      return merge_override(a, b);
    case MergePolicy::kMin:
      return merge_min(a, b);
  }
  throw Error("unreachable merge policy");
}

std::string to_string(MergePolicy policy) {
  switch (policy) {
    case MergePolicy::kFirst:
      return "first";
    case MergePolicy::kOverride:
      return "override";
    case MergePolicy::kMin:
      return "min";
  }
  return "?";
}

MergePolicy merge_policy_from_string(const std::string& text) {
  if (text == "first") return MergePolicy::kFirst;
  if (text == "override") return MergePolicy::kOverride;
  if (text == "min") return MergePolicy::kMin;
  throw Error("unknown merge policy: " + text +
              " (expected first, override, or min)");
}

}  // namespace em1
