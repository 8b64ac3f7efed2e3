#include "em1/state.hpp"

#include <algorithm>
#include <utility>

namespace em1 {

bool Atom::operator<(const Atom& other) const {
  if (pred != other.pred) return pred < other.pred;
  if (args != other.args)
    return std::lexicographical_compare(args.begin(), args.end(),
                                        other.args.begin(), other.args.end());
  return witness < other.witness;
}

std::string Atom::to_string() const {
  std::string out = "<" + pred + ",[";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i].str();
  }
  out += "]," + witness.str() + ">";
  return out;
}

const State& State::bottom() {
  static const State instance;
  return instance;
}

State State::unchecked(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  State s;
  s.atoms_ = std::move(atoms);
  return s;
}

State State::from_atoms(const Registry& reg, std::vector<Atom> atoms,
                        std::uint64_t budget) {
  State s;
  for (auto& atom : atoms) s = s.try_insert(reg, std::move(atom), budget);
  return s;
}

bool State::contains(const Atom& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

bool State::contains_key(const std::string& pred,
                         const std::vector<Nat>& args) const {
  return lookup_witness(pred, args).has_value();
}

std::optional<Nat> State::lookup_witness(const std::string& pred,
                                         const std::vector<Nat>& args) const {
  // Atoms sharing (pred, args) are adjacent in the canonical order, and
  // consistency allows at most one of them.
  Atom probe{pred, args, Nat(0)};
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), probe);
  if (it != atoms_.end() && it->same_key(probe)) return it->witness;
  return std::nullopt;
}

State State::try_insert(const Registry& reg, Atom atom,
                        std::uint64_t budget) const {
  const PrimRecDef& def = reg.predicate(atom.pred);
  if (def.arity != atom.args.size() + 1)
    throw EvalError("atom arity mismatch for " + atom.pred + ": expected " +
                    std::to_string(def.arity - 1) + " arguments, got " +
                    std::to_string(atom.args.size()));
  if (auto existing = lookup_witness(atom.pred, atom.args)) {
    if (*existing == atom.witness) return *this;
    throw StateError(StateError::Kind::kInconsistentWitness,
                     "inconsistent witness for " + atom.to_string() +
                         ": state already holds witness " + existing->str());
  }
  std::vector<Nat> full = atom.args;
  full.push_back(atom.witness);
  if (!eval_pred(reg, atom.pred, full, budget))
    throw StateError(StateError::Kind::kModelViolation,
                     "atom is false in the standard model: " + atom.to_string());
  State out = *this;
  auto it = std::lower_bound(out.atoms_.begin(), out.atoms_.end(), atom);
  out.atoms_.insert(it, std::move(atom));
  return out;
}

State State::intersect(const State& other) const {
  std::vector<Atom> common;
  std::set_intersection(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                        other.atoms_.end(), std::back_inserter(common));
  return unchecked(std::move(common));
}

nlohmann::json State::to_json() const {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& atom : atoms_) {
    nlohmann::json args = nlohmann::json::array();
    for (const auto& a : atom.args) args.push_back(nat_to_json(a));
    atoms.push_back({{"pred", atom.pred},
                     {"args", std::move(args)},
                     {"witness", nat_to_json(atom.witness)}});
  }
  return nlohmann::json{{"atoms", std::move(atoms)}};
}

State State::from_json(const Registry& reg, const nlohmann::json& j,
                       std::uint64_t budget) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    throw EvalError("state JSON must be an object with an \"atoms\" array");
  State s;
  for (const auto& entry : j["atoms"]) {
    Atom atom;
    atom.pred = entry.at("pred").get<std::string>();
    for (const auto& a : entry.at("args")) atom.args.push_back(nat_from_json(a));
    atom.witness = nat_from_json(entry.at("witness"));
    s = s.try_insert(reg, std::move(atom), budget);
  }
  return s;
}

bool leq(const State& a, const State& b) {
  return std::includes(b.atoms().begin(), b.atoms().end(), a.atoms().begin(),
                       a.atoms().end());
}

bool compatible(const State& a, const State& b) {
  const State& small = a.size() <= b.size() ? a : b;
  const State& large = a.size() <= b.size() ? b : a;
  for (const auto& atom : small) {
    auto other = large.lookup_witness(atom.pred, atom.args);
    if (other && *other != atom.witness) return false;
  }
  return true;
}

State join(const State& a, const State& b) {
  if (!compatible(a, b))
    throw StateError(StateError::Kind::kIncompatibleStates,
                     "join of incompatible states");
  std::vector<Atom> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.atoms().begin(), a.atoms().end(), b.atoms().begin(),
                 b.atoms().end(), std::back_inserter(merged));
  return State::unchecked(std::move(merged));
}

}  // namespace em1
