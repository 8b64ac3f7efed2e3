#include "em1/realizer.hpp"

#include <limits>
#include <utility>

namespace em1 {

RealizerTag::Ptr RealizerTag::trivial() {
  static const Ptr instance(new RealizerTag(Kind::kTrivial, "", nullptr, nullptr));
  return instance;
}

RealizerTag::Ptr RealizerTag::chi(std::string label) {
  return Ptr(new RealizerTag(Kind::kChi, std::move(label), nullptr, nullptr));
}

RealizerTag::Ptr RealizerTag::merged(Ptr left, Ptr right) {
  return Ptr(new RealizerTag(Kind::kMerged, "", std::move(left), std::move(right)));
}

RealizerTag::Ptr RealizerTag::induction(Ptr base, Ptr step, std::string label) {
  return Ptr(new RealizerTag(Kind::kInduction, std::move(label), std::move(base),
                             std::move(step)));
}

std::string RealizerTag::to_string() const {
  switch (kind_) {
    case Kind::kTrivial:
      return "trivial";
    case Kind::kChi:
      return "chi(" + label_ + ")";
    case Kind::kMerged:
      return "merged(" + left_->to_string() + ", " + right_->to_string() + ")";
    case Kind::kInduction:
      return "induction[" + label_ + "](" + left_->to_string() + ", " +
             right_->to_string() + ")";
  }
  return "?";
}

Realizer Realizer::from_function(std::function<State(const State&)> fn,
                                 RealizerTag::Ptr tag) {
  return Realizer(std::move(fn), std::move(tag));
}

Realizer trivial_realizer() {
  return Realizer::from_function([](const State&) { return State::bottom(); },
                                 RealizerTag::trivial());
}

Realizer chi_realizer(RegistryPtr reg, const std::string& pred,
                      std::vector<Individual> args, Individual witness) {
  const PrimRecDef& def = reg->predicate(pred);
  if (args.size() + 1 != def.arity)
    throw EvalError("chi realizer for " + pred + " expects " +
                    std::to_string(def.arity - 1) + " argument individuals, got " +
                    std::to_string(args.size()));
  std::string label = pred;
  label += "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) label += ", ";
    label += args[i].description();
  }
  label += "; " + witness.description() + ")";
  auto fn = [reg, pred, args = std::move(args),
             witness = std::move(witness)](const State& s) {
    std::vector<Nat> values;
    values.reserve(args.size());
    for (const auto& a : args) values.push_back(a.eval(s));
    Nat n = witness.eval(s);
    if (s.contains_key(pred, values)) return State::bottom();
    std::vector<Nat> full = values;
    full.push_back(n);
    if (!eval_pred(*reg, pred, full)) return State::bottom();
    return State::unchecked({Atom{pred, std::move(values), std::move(n)}});
  };
  return Realizer::from_function(std::move(fn), RealizerTag::chi(std::move(label)));
}

Realizer merge_lifted(const Realizer& left, const Realizer& right,
                      MergePolicy policy) {
  auto tag = RealizerTag::merged(left.tag_ptr(), right.tag_ptr());
  auto fn = [left, right, policy](const State& s) {
    return merge(left.eval(s), right.eval(s), policy);
  };
  return Realizer::from_function(std::move(fn), std::move(tag));
}

Realizer induction_realizer(const Realizer& base,
                            std::function<Realizer(const Nat&)> step,
                            Individual bound, MergePolicy policy,
                            std::string label) {
  // The fold length varies with the state, so step transformers are built
  // on demand at each evaluation.
  auto step_tag = step(0).tag_ptr();
  if (label.empty()) label = bound.description();
  auto tag = RealizerTag::induction(base.tag_ptr(), std::move(step_tag),
                                    std::move(label));
  auto fn = [base, step = std::move(step), bound = std::move(bound),
             policy](const State& s) {
    Nat n = bound.eval(s);
    if (n > std::numeric_limits<std::uint32_t>::max())
      throw BudgetError("induction bound too large: " + n.str());
    State folded = State::bottom();
    for (Nat i = 0; i < n; ++i)
      folded = merge(folded, step(i).eval(s), policy);
    return merge(base.eval(s), folded, policy);
  };
  return Realizer::from_function(std::move(fn), std::move(tag));
}

bool check_realizer_contract(const Realizer& r, const State& s) {
  State out = r.eval(s);
  return compatible(out, s) && out.intersect(s).empty();
}

nlohmann::json LearningTrace::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    nlohmann::json added = nlohmann::json::array();
    for (const auto& atom : entries[i].output) {
      nlohmann::json args = nlohmann::json::array();
      for (const auto& a : atom.args) args.push_back(nat_to_json(a));
      added.push_back({{"pred", atom.pred},
                       {"args", std::move(args)},
                       {"witness", nat_to_json(atom.witness)}});
    }
    out.push_back({{"step_index", i},
                   {"state", entries[i].state.to_json()},
                   {"added_atoms", std::move(added)}});
  }
  return out;
}

LearningTrace find_prefix_point(const Realizer& r, const State& s0,
                                std::size_t cap) {
  LearningTrace trace;
  State current = s0;
  for (std::size_t i = 0; i <= cap; ++i) {
    State out = r.eval(current);
    if (!compatible(out, current) || !out.intersect(current).empty())
      throw ContractError("realizer contract violated at state " +
                          current.to_string() + " with output " +
                          out.to_string());
    bool done = out.empty();
    trace.entries.push_back(TraceEntry{current, std::move(out)});
    if (done) return trace;
    current = join(current, trace.entries.back().output);
  }
  throw LoopError("no prefix point within " + std::to_string(cap) +
                  " iterations");
}

}  // namespace em1
