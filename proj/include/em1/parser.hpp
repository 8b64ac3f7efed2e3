#ifndef EM1_PARSER_HPP
#define EM1_PARSER_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "em1/ast.hpp"
#include "em1/proof.hpp"
#include "em1/registry.hpp"

namespace em1 {

// A parsed source file: the declaration-ordered registry plus the named
// terms, formulas and proofs it defines.
struct Program {
  std::shared_ptr<Registry> registry = std::make_shared<Registry>();
  std::map<std::string, Term> terms;
  std::map<std::string, Formula> formulas;
  std::map<std::string, Proof> proofs;
  // (kind, name) in declaration order; kind is one of
  // "deffun" | "defpred" | "term" | "formula" | "proof".
  std::vector<std::pair<std::string, std::string>> order;

  RegistryPtr registry_ptr() const { return registry; }
  const Term& term(const std::string& name) const;
  const Formula& formula(const std::string& name) const;
  const Proof& proof(const std::string& name) const;
};

// Parses a whole source text. Every top-level form is one of
//   (deffun NAME (ARG...) SCHEMA)
//   (defpred NAME (ARG...) SCHEMA)
//   (term NAME TERM)
//   (formula NAME FORMULA)
//   (proof NAME PROOF)
// Arities are checked against the registry as forms are read, so all
// references are backward. Throws ParseError with a source location.
Program parse_program(std::string_view source);

// Single-expression entry points over an existing registry; used by tests
// and the round-trip property.
Term parse_term(const Registry& reg, std::string_view source);
Formula parse_formula(const Registry& reg, std::string_view source);
Proof parse_proof(const Registry& reg, std::string_view source);

}  // namespace em1

#endif  // EM1_PARSER_HPP
