#include "em1/registry.hpp"

#include <utility>

namespace em1 {

SchemaExpr SchemaExpr::zero(std::size_t arity) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kZero;
  node->arity = arity;
  return SchemaExpr(std::move(node));
}

SchemaExpr SchemaExpr::succ() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSucc;
  node->arity = 1;
  return SchemaExpr(std::move(node));
}

SchemaExpr SchemaExpr::proj(std::size_t index, std::size_t arity) {
  if (index < 1 || index > arity)
    throw Error("projection index " + std::to_string(index) +
                " out of range for arity " + std::to_string(arity));
  auto node = std::make_shared<Node>();
  node->kind = Kind::kProj;
  node->arity = arity;
  node->index = index;
  return SchemaExpr(std::move(node));
}

SchemaExpr SchemaExpr::comp(SchemaExpr outer, std::vector<SchemaExpr> inner) {
  if (inner.empty()) throw Error("composition needs at least one inner function");
  if (outer.arity() != inner.size())
    throw Error("composition arity mismatch: outer expects " +
                std::to_string(outer.arity()) + " arguments, got " +
                std::to_string(inner.size()) + " inner functions");
  std::size_t arity = inner.front().arity();
  for (const auto& g : inner) {
    if (g.arity() != arity)
      throw Error("composition arity mismatch: inner functions disagree");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kComp;
  node->arity = arity;
  node->children.reserve(inner.size() + 1);
  node->children.push_back(std::move(outer));
  for (auto& g : inner) node->children.push_back(std::move(g));
  return SchemaExpr(std::move(node));
}

SchemaExpr SchemaExpr::prim_rec(SchemaExpr base, SchemaExpr step) {
  if (step.arity() != base.arity() + 2)
    throw Error("recursion arity mismatch: step must take " +
                std::to_string(base.arity() + 2) + " arguments, takes " +
                std::to_string(step.arity()));
  auto node = std::make_shared<Node>();
  node->kind = Kind::kPrimRec;
  node->arity = base.arity() + 1;
  node->children.push_back(std::move(base));
  node->children.push_back(std::move(step));
  return SchemaExpr(std::move(node));
}

SchemaExpr SchemaExpr::ref(std::string name, std::size_t arity) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kRef;
  node->arity = arity;
  node->name = std::move(name);
  return SchemaExpr(std::move(node));
}

std::string SchemaExpr::to_string() const {
  switch (kind()) {
    case Kind::kZero:
      return "(zero " + std::to_string(arity()) + ")";
    case Kind::kSucc:
      return "succ";
    case Kind::kProj:
      return "(proj " + std::to_string(proj_index()) + " " +
             std::to_string(arity()) + ")";
    case Kind::kComp: {
      std::string out = "(comp";
      for (const auto& c : children()) out += " " + c.to_string();
      return out + ")";
    }
    case Kind::kPrimRec:
      return "(primrec " + children()[0].to_string() + " " +
             children()[1].to_string() + ")";
    case Kind::kRef:
      return ref_name();
  }
  return "?";
}

namespace {

void validate_refs(const Registry& reg, const SchemaExpr& e) {
  if (e.kind() == SchemaExpr::Kind::kRef) {
    const PrimRecDef* def = reg.find(e.ref_name());
    if (def == nullptr)
      throw Error("reference to undeclared definition: " + e.ref_name());
    if (def->arity != e.arity())
      throw Error("reference arity mismatch for " + e.ref_name());
    return;
  }
  for (const auto& c : e.children()) validate_refs(reg, c);
}

}  // namespace

const PrimRecDef& Registry::declare(std::string name, std::size_t declared_arity,
                                    PrimRecDef::Kind kind, SchemaExpr body) {
  if (by_name_.count(name))
    throw Error("duplicate definition: " + name);
  if (body.arity() != declared_arity)
    throw Error("declared arity of " + name + " is " +
                std::to_string(declared_arity) + " but its schema has arity " +
                std::to_string(body.arity()));
  if (kind == PrimRecDef::Kind::kPredicate && declared_arity == 0)
    throw Error("predicate " + name + " needs arity at least 1");
  validate_refs(*this, body);
  PrimRecDef def;
  def.name = name;
  def.arity = declared_arity;
  def.kind = kind;
  def.body = std::move(body);
  def.index = defs_.size();
  by_name_.emplace(std::move(name), def.index);
  defs_.push_back(std::move(def));
  return defs_.back();
}

const PrimRecDef* Registry::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &defs_[it->second];
}

const PrimRecDef& Registry::at(const std::string& name) const {
  const PrimRecDef* def = find(name);
  if (def == nullptr) throw EvalError("undeclared definition: " + name);
  return *def;
}

const PrimRecDef& Registry::predicate(const std::string& name) const {
  const PrimRecDef& def = at(name);
  if (!def.is_predicate())
    throw EvalError(name + " is not a predicate");
  return def;
}

}  // namespace em1
