#include "em1/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "em1/errors.hpp"
#include "em1/nat.hpp"

namespace em1 {

const Term& Program::term(const std::string& name) const {
  auto it = terms.find(name);
  if (it == terms.end()) throw Error("no term named " + name);
  return it->second;
}

const Formula& Program::formula(const std::string& name) const {
  auto it = formulas.find(name);
  if (it == formulas.end()) throw Error("no formula named " + name);
  return it->second;
}

const Proof& Program::proof(const std::string& name) const {
  auto it = proofs.find(name);
  if (it == proofs.end()) throw Error("no proof named " + name);
  return it->second;
}

namespace {

struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> children;
  int line = 1;
  int col = 1;

  const SExpr& child(std::size_t i) const { return children[i]; }
  std::size_t size() const { return children.size(); }
};

[[noreturn]] void fail(const SExpr& at, const std::string& message) {
  throw ParseError(message, at.line, at.col);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> forms;
    skip_space();
    while (!eof()) {
      forms.push_back(read());
      skip_space();
    }
    return forms;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  SExpr read() {
    skip_space();
    if (eof()) throw ParseError("unexpected end of input", line_, col_);
    SExpr node;
    node.line = line_;
    node.col = col_;
    char c = peek();
    if (c == '(') {
      advance();
      skip_space();
      while (!eof() && peek() != ')') {
        node.children.push_back(read());
        skip_space();
      }
      if (eof()) throw ParseError("unclosed '('", node.line, node.col);
      advance();  // ')'
      return node;
    }
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    node.is_atom = true;
    while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) &&
           peek() != '(' && peek() != ')' && peek() != ';') {
      node.atom += advance();
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {
      "deffun", "defpred", "term",    "formula", "proof", "succ", "zero",
      "proj",   "comp",    "primrec", "phi",     "chi",   "not",  "and",
      "or",     "->",      "implies", "=",       "taut",  "pra",  "eqax",
      "phiax",  "mp",      "sub",     "ind",     "0"};
  return words;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

std::string identifier(const SExpr& e, const std::string& what) {
  if (!e.is_atom) fail(e, what + " must be a symbol");
  if (all_digits(e.atom) || reserved_words().count(e.atom))
    fail(e, "'" + e.atom + "' cannot be used as " + what);
  return e.atom;
}

std::size_t small_count(const SExpr& e, const std::string& what) {
  if (!e.is_atom || !all_digits(e.atom) || e.atom.size() > 6)
    fail(e, what + " must be a small number");
  return std::stoul(e.atom);
}

// ---------------------------------------------------------------------------
// Schema expressions

SchemaExpr parse_schema(const Registry& reg, const SExpr& e,
                        const std::string& current) {
  if (e.is_atom) {
    if (e.atom == "succ") return SchemaExpr::succ();
    if (e.atom == current)
      fail(e, "cyclic definition: " + current + " refers to itself");
    const PrimRecDef* def = reg.find(e.atom);
    if (def == nullptr) fail(e, "reference to undeclared definition: " + e.atom);
    return SchemaExpr::ref(def->name, def->arity);
  }
  if (e.size() == 0) fail(e, "empty schema expression");
  const SExpr& head = e.child(0);
  if (!head.is_atom) fail(head, "schema operator expected");
  try {
    if (head.atom == "zero") {
      if (e.size() != 2) fail(e, "zero takes one arity argument");
      return SchemaExpr::zero(small_count(e.child(1), "zero arity"));
    }
    if (head.atom == "proj") {
      if (e.size() != 3) fail(e, "proj takes an index and an arity");
      return SchemaExpr::proj(small_count(e.child(1), "projection index"),
                              small_count(e.child(2), "projection arity"));
    }
    if (head.atom == "comp") {
      if (e.size() < 3) fail(e, "comp takes an outer and at least one inner function");
      SchemaExpr outer = parse_schema(reg, e.child(1), current);
      std::vector<SchemaExpr> inner;
      for (std::size_t i = 2; i < e.size(); ++i)
        inner.push_back(parse_schema(reg, e.child(i), current));
      return SchemaExpr::comp(std::move(outer), std::move(inner));
    }
    if (head.atom == "primrec") {
      if (e.size() != 3) fail(e, "primrec takes a base and a step function");
      return SchemaExpr::prim_rec(parse_schema(reg, e.child(1), current),
                                  parse_schema(reg, e.child(2), current));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    fail(e, err.what());
  }
  fail(head, "unknown schema operator: " + head.atom);
}

// ---------------------------------------------------------------------------
// Terms, formulas, proofs

Term parse_term_expr(const Registry& reg, const SExpr& e) {
  if (e.is_atom) {
    if (all_digits(e.atom)) return Term::numeral(nat_from_string(e.atom));
    if (reg.find(e.atom) != nullptr)
      fail(e, "'" + e.atom + "' is a declared symbol; apply it as (" + e.atom +
                  " ...)");
    return Term::var(identifier(e, "a variable"));
  }
  if (e.size() == 0) fail(e, "empty term");
  const SExpr& head = e.child(0);
  if (!head.is_atom) fail(head, "term operator expected");
  if (head.atom == "succ") {
    if (e.size() != 2) fail(e, "succ takes one argument");
    return Term::succ(parse_term_expr(reg, e.child(1)));
  }
  if (head.atom == "phi") {
    if (e.size() < 2) fail(e, "phi needs a predicate name");
    const PrimRecDef* def = reg.find(e.child(1).is_atom ? e.child(1).atom : "");
    if (def == nullptr || !def->is_predicate())
      fail(e.child(1), "phi needs a declared predicate");
    std::vector<Term> args;
    for (std::size_t i = 2; i < e.size(); ++i)
      args.push_back(parse_term_expr(reg, e.child(i)));
    if (args.size() + 1 != def->arity)
      fail(e, "phi " + def->name + " expects " + std::to_string(def->arity - 1) +
                  " arguments, got " + std::to_string(args.size()));
    return Term::phi(def->name, std::move(args));
  }
  const PrimRecDef* def = reg.find(head.atom);
  if (def == nullptr) fail(head, "unknown function: " + head.atom);
  std::vector<Term> args;
  for (std::size_t i = 1; i < e.size(); ++i)
    args.push_back(parse_term_expr(reg, e.child(i)));
  if (args.size() != def->arity)
    fail(e, def->name + " expects " + std::to_string(def->arity) +
                " arguments, got " + std::to_string(args.size()));
  return Term::fun(def->name, std::move(args));
}

Formula parse_formula_expr(const Registry& reg, const SExpr& e) {
  if (e.is_atom) fail(e, "formula expected, got atom '" + e.atom + "'");
  if (e.size() == 0) fail(e, "empty formula");
  const SExpr& head = e.child(0);
  if (!head.is_atom) fail(head, "formula operator expected");
  if (head.atom == "=") {
    if (e.size() != 3) fail(e, "= takes two terms");
    return Formula::eq(parse_term_expr(reg, e.child(1)),
                       parse_term_expr(reg, e.child(2)));
  }
  if (head.atom == "chi") {
    if (e.size() < 2) fail(e, "chi needs a predicate name");
    const PrimRecDef* def = reg.find(e.child(1).is_atom ? e.child(1).atom : "");
    if (def == nullptr || !def->is_predicate())
      fail(e.child(1), "chi needs a declared predicate");
    std::vector<Term> args;
    for (std::size_t i = 2; i < e.size(); ++i)
      args.push_back(parse_term_expr(reg, e.child(i)));
    if (args.size() + 1 != def->arity)
      fail(e, "chi " + def->name + " expects " + std::to_string(def->arity - 1) +
                  " arguments, got " + std::to_string(args.size()));
    return Formula::chi(def->name, std::move(args));
  }
  if (head.atom == "not") {
    if (e.size() != 2) fail(e, "not takes one formula");
    return Formula::negation(parse_formula_expr(reg, e.child(1)));
  }
  if (head.atom == "and" || head.atom == "or" || head.atom == "->" ||
      head.atom == "implies") {
    if (e.size() != 3) fail(e, head.atom + " takes two formulas");
    Formula lhs = parse_formula_expr(reg, e.child(1));
    Formula rhs = parse_formula_expr(reg, e.child(2));
    if (head.atom == "and") return Formula::conj(std::move(lhs), std::move(rhs));
    if (head.atom == "or") return Formula::disj(std::move(lhs), std::move(rhs));
    return Formula::implies(std::move(lhs), std::move(rhs));
  }
  const PrimRecDef* def = reg.find(head.atom);
  if (def == nullptr || !def->is_predicate())
    fail(head, "unknown predicate: " + head.atom);
  std::vector<Term> args;
  for (std::size_t i = 1; i < e.size(); ++i)
    args.push_back(parse_term_expr(reg, e.child(i)));
  if (args.size() != def->arity)
    fail(e, def->name + " expects " + std::to_string(def->arity) +
                " arguments, got " + std::to_string(args.size()));
  return Formula::pred(def->name, std::move(args));
}

Proof parse_proof_expr(const Registry& reg, const SExpr& e) {
  if (e.is_atom) fail(e, "proof expected, got atom '" + e.atom + "'");
  if (e.size() == 0) fail(e, "empty proof");
  const SExpr& head = e.child(0);
  if (!head.is_atom) fail(head, "proof operator expected");
  if (head.atom == "taut" || head.atom == "pra" || head.atom == "eqax") {
    if (e.size() != 2) fail(e, head.atom + " takes one formula");
    Formula a = parse_formula_expr(reg, e.child(1));
    if (head.atom == "taut") return Proof::taut(std::move(a));
    if (head.atom == "pra") return Proof::pra(std::move(a));
    return Proof::eq_ax(std::move(a));
  }
  if (head.atom == "chi") {
    if (e.size() != 4) fail(e, "chi axiom takes a predicate, an argument list, and a witness term");
    const PrimRecDef* def = reg.find(e.child(1).is_atom ? e.child(1).atom : "");
    if (def == nullptr || !def->is_predicate())
      fail(e.child(1), "chi axiom needs a declared predicate");
    if (e.child(2).is_atom) fail(e.child(2), "chi axiom arguments must be a list");
    std::vector<Term> args;
    for (const auto& c : e.child(2).children)
      args.push_back(parse_term_expr(reg, c));
    if (args.size() + 1 != def->arity)
      fail(e, "chi axiom for " + def->name + " expects " +
                  std::to_string(def->arity - 1) + " arguments, got " +
                  std::to_string(args.size()));
    return Proof::chi_ax(def->name, std::move(args),
                         parse_term_expr(reg, e.child(3)));
  }
  if (head.atom == "phiax") {
    if (e.size() != 3) fail(e, "phiax takes a predicate and an argument list");
    const PrimRecDef* def = reg.find(e.child(1).is_atom ? e.child(1).atom : "");
    if (def == nullptr || !def->is_predicate())
      fail(e.child(1), "phiax needs a declared predicate");
    if (e.child(2).is_atom) fail(e.child(2), "phiax arguments must be a list");
    std::vector<Term> args;
    for (const auto& c : e.child(2).children)
      args.push_back(parse_term_expr(reg, c));
    if (args.size() + 1 != def->arity)
      fail(e, "phiax for " + def->name + " expects " +
                  std::to_string(def->arity - 1) + " arguments, got " +
                  std::to_string(args.size()));
    return Proof::phi_ax(def->name, std::move(args));
  }
  if (head.atom == "mp") {
    if (e.size() != 3) fail(e, "mp takes two proofs");
    return Proof::mp(parse_proof_expr(reg, e.child(1)),
                     parse_proof_expr(reg, e.child(2)));
  }
  if (head.atom == "sub") {
    if (e.size() != 4) fail(e, "sub takes a proof, a variable, and a term");
    return Proof::sub(parse_proof_expr(reg, e.child(1)),
                      identifier(e.child(2), "a variable"),
                      parse_term_expr(reg, e.child(3)));
  }
  if (head.atom == "ind") {
    if (e.size() != 4) fail(e, "ind takes two proofs and a variable");
    return Proof::ind(parse_proof_expr(reg, e.child(1)),
                      parse_proof_expr(reg, e.child(2)),
                      identifier(e.child(3), "a variable"));
  }
  fail(head, "unknown proof form: " + head.atom);
}

}  // namespace

Program parse_program(std::string_view source) {
  Reader reader(source);
  std::vector<SExpr> forms = reader.read_all();
  Program program;
  Registry& reg = *program.registry;
  for (const SExpr& form : forms) {
    if (form.is_atom || form.size() == 0 || !form.child(0).is_atom)
      fail(form, "top-level form expected");
    const std::string& kind = form.child(0).atom;
    if (kind == "deffun" || kind == "defpred") {
      if (form.size() != 4)
        fail(form, kind + " takes a name, an argument list, and a schema");
      std::string name = identifier(form.child(1), "a definition name");
      if (reg.find(name) != nullptr)
        fail(form.child(1), "duplicate definition: " + name);
      const SExpr& params = form.child(2);
      if (params.is_atom) fail(params, "argument list expected");
      std::set<std::string> seen;
      for (const auto& arg : params.children) {
        std::string id = identifier(arg, "an argument name");
        if (!seen.insert(id).second) fail(arg, "duplicate argument: " + id);
      }
      SchemaExpr body = parse_schema(reg, form.child(3), name);
      try {
        reg.declare(name, params.size(),
                    kind == "deffun" ? PrimRecDef::Kind::kFunction
                                     : PrimRecDef::Kind::kPredicate,
                    std::move(body));
      } catch (const Error& err) {
        fail(form, err.what());
      }
      program.order.emplace_back(kind, std::move(name));
    } else if (kind == "term" || kind == "formula" || kind == "proof") {
      if (form.size() != 3) fail(form, kind + " takes a name and a body");
      std::string name = identifier(form.child(1), "a name");
      if (kind == "term") {
        if (!program.terms.emplace(name, parse_term_expr(reg, form.child(2))).second)
          fail(form.child(1), "duplicate term name: " + name);
      } else if (kind == "formula") {
        if (!program.formulas
                 .emplace(name, parse_formula_expr(reg, form.child(2)))
                 .second)
          fail(form.child(1), "duplicate formula name: " + name);
      } else {
        if (!program.proofs.emplace(name, parse_proof_expr(reg, form.child(2)))
                 .second)
          fail(form.child(1), "duplicate proof name: " + name);
      }
      program.order.emplace_back(kind, std::move(name));
    } else {
      fail(form.child(0), "unknown top-level form: " + kind);
    }
  }
  return program;
}

namespace {

SExpr read_single(std::string_view source) {
  Reader reader(source);
  std::vector<SExpr> forms = reader.read_all();
  if (forms.size() != 1)
    throw ParseError("expected exactly one expression", 1, 1);
  return std::move(forms.front());
}

}  // namespace

Term parse_term(const Registry& reg, std::string_view source) {
  return parse_term_expr(reg, read_single(source));
}

Formula parse_formula(const Registry& reg, std::string_view source) {
  return parse_formula_expr(reg, read_single(source));
}

Proof parse_proof(const Registry& reg, std::string_view source) {
  return parse_proof_expr(reg, read_single(source));
}

}  // namespace em1
