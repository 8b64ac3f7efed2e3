#ifndef EM1_EVAL_HPP
#define EM1_EVAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "em1/ast.hpp"
#include "em1/nat.hpp"
#include "em1/registry.hpp"

namespace em1 {

// Default schema step budget: 10^7 steps, overridable through the
// EM1_BUDGET environment variable. Read once per process.
std::uint64_t default_step_budget();

// Mutable step counter threaded through one evaluation.
struct Budget {
  explicit Budget(std::uint64_t steps) : remaining(steps) {}
  std::uint64_t remaining;
  void tick() {
    if (remaining == 0) throw BudgetError("schema step budget exhausted");
    --remaining;
  }
};

// Value of a declared function on the given arguments, computed by
// structural interpretation of its schema.
Nat eval_fun(const Registry& reg, const std::string& name,
             const std::vector<Nat>& args,
             std::uint64_t budget = default_step_budget());

// Truth of a declared predicate: nonzero result means true.
bool eval_pred(const Registry& reg, const std::string& name,
               const std::vector<Nat>& args,
               std::uint64_t budget = default_step_budget());

// Shared-counter variants: one budget spans a whole outer evaluation.
Nat eval_fun(const Registry& reg, const std::string& name,
             const std::vector<Nat>& args, Budget& budget);
bool eval_pred(const Registry& reg, const std::string& name,
               const std::vector<Nat>& args, Budget& budget);

// Value of a base-language term under a numeric environment. Throws
// EvalError on unbound variables or Skolem symbols.
Nat eval_term_std(const Registry& reg, const Term& t,
                  const std::map<std::string, Nat>& rho,
                  std::uint64_t budget = default_step_budget());

// Classical truth value of a base-language formula under rho.
bool eval_closed_formula(const Registry& reg, const Formula& a,
                         const std::map<std::string, Nat>& rho,
                         std::uint64_t budget = default_step_budget());

}  // namespace em1

#endif  // EM1_EVAL_HPP
