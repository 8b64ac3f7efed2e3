#include "em1/extract.hpp"

#include <optional>
#include <utility>

namespace em1 {

namespace {

std::vector<Individual> denote_all(const std::vector<Term>& terms,
                                   const Environment& env, const RegistryPtr& reg) {
  std::vector<Individual> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(denote_term(t, env, reg));
  return out;
}

Realizer extract_rec(const RegistryPtr& reg, const Proof& p,
                     const Environment& env, MergePolicy policy) {
  switch (p.kind()) {
    case Proof::Kind::kTaut:
    case Proof::Kind::kPra:
    case Proof::Kind::kEqAx:
    case Proof::Kind::kPhiAx:
      return trivial_realizer();
    case Proof::Kind::kChiAx: {
      std::vector<Term> args(p.terms().begin(), p.terms().end() - 1);
      return chi_realizer(reg, p.symbol(), denote_all(args, env, reg),
                          denote_term(p.witness_term(), env, reg));
    }
    case Proof::Kind::kMp:
      return merge_lifted(extract_rec(reg, p.premises()[0], env, policy),
                          extract_rec(reg, p.premises()[1], env, policy), policy);
    case Proof::Kind::kSub: {
      Individual value = denote_term(p.subst_term(), env, reg);
      return extract_rec(reg, p.premises()[0], env.with(p.symbol(), value),
                         policy);
    }
    case Proof::Kind::kInd: {
      Formula base_conclusion = check_proof(*reg, p.premises()[0]);
      Formula step_conclusion = check_proof(*reg, p.premises()[1]);
      IndShape shape = infer_induction(base_conclusion, step_conclusion,
                                       p.symbol());
      Realizer base = extract_rec(reg, p.premises()[0], env, policy);
      Proof step_proof = p.premises()[1];
      std::string rec_var = shape.rec_var;
      auto step = [reg, step_proof, env, policy, rec_var](const Nat& n) {
        return extract_rec(reg, step_proof,
                           env.with(rec_var, Individual::constant(n)), policy);
      };
      return induction_realizer(base, std::move(step),
                                env.lookup(p.symbol()), policy,
                                p.symbol() + ":=" +
                                    env.lookup(p.symbol()).description());
    }
  }
  throw Error("unreachable proof kind");
}

// First phi_P(t...) occurrence for the requested predicate, scanning terms
// left to right, outside in.
std::optional<Term> find_phi_occurrence(const Term& t, const std::string& pred) {
  if (t.kind() == Term::Kind::kPhi && t.name() == pred) return t;
  for (const auto& a : t.args()) {
    if (auto found = find_phi_occurrence(a, pred)) return found;
  }
  return std::nullopt;
}

std::optional<Term> find_phi_occurrence(const Formula& a, const std::string& pred) {
  for (const auto& t : a.terms()) {
    if (auto found = find_phi_occurrence(t, pred)) return found;
  }
  for (const auto& s : a.subs()) {
    if (auto found = find_phi_occurrence(s, pred)) return found;
  }
  return std::nullopt;
}

}  // namespace

Realizer extract_realizer(RegistryPtr reg, const Proof& p,
                          const Environment& env, MergePolicy policy) {
  return extract_rec(reg, p, env, policy);
}

ForcesResult forces_check(const Realizer& r, RegistryPtr reg,
                          const Environment& env, const Formula& a,
                          const State& s0, std::size_t cap) {
  LearningTrace trace = find_prefix_point(r, s0, cap);
  State final_state = trace.final_state();
  bool holds = denote_formula(a, env, std::move(reg)).eval(final_state);
  return ForcesResult{std::move(trace), std::move(final_state), holds};
}

WitnessResult extract_witness(RegistryPtr reg, const Proof& p,
                              const Environment& numerals,
                              const std::string& target_pred, const State& s0,
                              std::size_t cap, MergePolicy policy) {
  Formula conclusion = check_proof(*reg, p);
  auto occurrence = find_phi_occurrence(conclusion, target_pred);
  if (!occurrence)
    throw EvalError("no occurrence of phi " + target_pred +
                    " in the conclusion " + conclusion.to_string());
  Realizer r = extract_realizer(reg, p, numerals, policy);
  ForcesResult forced = forces_check(r, reg, numerals, conclusion, s0, cap);
  if (!forced.holds)
    throw ExtractionError("conclusion false at a prefix point: " +
                          conclusion.to_string() + " at " +
                          forced.final_state.to_string());
  std::vector<Nat> args;
  args.reserve(occurrence->args().size());
  for (const auto& t : occurrence->args())
    args.push_back(denote_term(t, numerals, reg).eval(forced.final_state));
  Nat witness = sem_phi(*reg, target_pred, args, forced.final_state);
  return WitnessResult{std::move(witness), std::move(forced.final_state),
                       std::move(forced.trace), std::move(conclusion)};
}

}  // namespace em1
