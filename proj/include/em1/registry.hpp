#ifndef EM1_REGISTRY_HPP
#define EM1_REGISTRY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "em1/errors.hpp"

namespace em1 {

// A schema expression in the Kleene basis: the zero functions, successor,
// projections, composition, primitive recursion, and references to
// previously declared definitions. Every node has a definite arity, so
// well-formedness is a local check.
class SchemaExpr {
 public:
  enum class Kind { kZero, kSucc, kProj, kComp, kPrimRec, kRef };

  static SchemaExpr zero(std::size_t arity);
  static SchemaExpr succ();
  // 1-based projection index into an `arity`-tuple.
  static SchemaExpr proj(std::size_t index, std::size_t arity);
  static SchemaExpr comp(SchemaExpr outer, std::vector<SchemaExpr> inner);
  static SchemaExpr prim_rec(SchemaExpr base, SchemaExpr step);
  static SchemaExpr ref(std::string name, std::size_t arity);

  Kind kind() const { return node_->kind; }
  std::size_t arity() const { return node_->arity; }
  std::size_t proj_index() const { return node_->index; }
  const std::string& ref_name() const { return node_->name; }
  // comp: children[0] is the outer function, the rest the inner ones.
  // prim_rec: children[0] is the base case, children[1] the step.
  const std::vector<SchemaExpr>& children() const { return node_->children; }

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::size_t arity = 0;
    std::size_t index = 0;  // kProj only
    std::string name;       // kRef only
    std::vector<SchemaExpr> children;
  };
  explicit SchemaExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A declared primitive recursive function or predicate. Predicates are
// functions whose result is read as a boolean: 0 is false, anything else
// is true.
struct PrimRecDef {
  enum class Kind { kFunction, kPredicate };

  std::string name;
  std::size_t arity = 0;
  Kind kind = Kind::kFunction;
  SchemaExpr body = SchemaExpr::succ();
  std::size_t index = 0;  // position in declaration order

  bool is_predicate() const { return kind == Kind::kPredicate; }
};

// Declaration-ordered symbol table. The position of a definition is its
// index in the enumeration of declared symbols; two symbols denote the
// same definition exactly when their indices coincide, which keeps symbol
// equality decidable. Bodies may only reference earlier declarations, so
// the table is cycle-free by construction.
class Registry {
 public:
  // Validates the definition and appends it. Throws Error on duplicate
  // names, unresolved references, or arity mismatches.
  const PrimRecDef& declare(std::string name, std::size_t declared_arity,
                            PrimRecDef::Kind kind, SchemaExpr body);

  const PrimRecDef* find(const std::string& name) const;
  // Throws EvalError when the name is unknown.
  const PrimRecDef& at(const std::string& name) const;
  const PrimRecDef& at_index(std::size_t index) const { return defs_[index]; }

  // Throws EvalError unless `name` is a declared predicate.
  const PrimRecDef& predicate(const std::string& name) const;

  std::size_t size() const { return defs_.size(); }
  const std::vector<PrimRecDef>& definitions() const { return defs_; }

 private:
  std::vector<PrimRecDef> defs_;
  std::map<std::string, std::size_t> by_name_;
};

using RegistryPtr = std::shared_ptr<const Registry>;

}  // namespace em1

#endif  // EM1_REGISTRY_HPP
