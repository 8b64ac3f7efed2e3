#ifndef EM1_STATE_HPP
#define EM1_STATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "em1/eval.hpp"
#include "em1/nat.hpp"
#include "em1/registry.hpp"
#include "json.hpp"

namespace em1 {

// One piece of positive knowledge: the predicate `pred` holds on
// args ++ [witness] in the standard model, and `witness` is the value the
// Skolem function of `pred` takes on `args`.
struct Atom {
  std::string pred;
  std::vector<Nat> args;
  Nat witness;

  // Key identity: same predicate and arguments, witness ignored.
  bool same_key(const Atom& other) const {
    return pred == other.pred && args == other.args;
  }

  bool operator==(const Atom& other) const = default;
  // (pred, args, witness) lexicographic; gives the canonical atom order.
  bool operator<(const Atom& other) const;

  std::string to_string() const;
};

// A state of knowledge: a finite set of atoms, each true in the standard
// model, with at most one witness per (pred, args) key. Kept sorted in the
// canonical atom order; immutable value type.
class State {
 public:
  State() = default;  // bottom, the empty state

  static const State& bottom();

  // Builds a state from arbitrary atoms, enforcing both the model
  // condition (via eval_pred) and witness consistency.
  static State from_atoms(const Registry& reg, std::vector<Atom> atoms,
                          std::uint64_t budget = default_step_budget());

  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  bool contains(const Atom& atom) const;
  bool contains_key(const std::string& pred, const std::vector<Nat>& args) const;

  // The unique witness stored for (pred, args), if any.
  std::optional<Nat> lookup_witness(const std::string& pred,
                                    const std::vector<Nat>& args) const;

  // Returns this state extended with one atom. Throws StateError when the
  // atom is false in the standard model or clashes with a stored witness.
  State try_insert(const Registry& reg, Atom atom,
                   std::uint64_t budget = default_step_budget()) const;

  State intersect(const State& other) const;

  bool operator==(const State& other) const = default;

  nlohmann::json to_json() const;
  static State from_json(const Registry& reg, const nlohmann::json& j,
                         std::uint64_t budget = default_step_budget());
  std::string to_string() const { return to_json().dump(); }

  // Wraps atoms already known to be valid (subsets and unions of valid
  // states). Sorts and deduplicates; consistency is the caller's burden.
  static State unchecked(std::vector<Atom> atoms);

 private:
  std::vector<Atom> atoms_;
};

// Subset test: the partial order on states.
bool leq(const State& a, const State& b);

// True when the union of the two states is again a state, i.e. no key is
// mapped to two different witnesses. Unions of states need no model check.
bool compatible(const State& a, const State& b);

// Set union of compatible states; least upper bound. Throws StateError
// when the states disagree on a witness.
State join(const State& a, const State& b);

}  // namespace em1

#endif  // EM1_STATE_HPP
