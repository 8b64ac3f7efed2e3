#ifndef EM1_ERRORS_HPP
#define EM1_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace em1 {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or well-formedness error in an input file. Carries a 1-based
// source position.
struct ParseError : Error {
  ParseError(const std::string& what, int line, int col)
      : Error(format(what, line, col)), line(line), col(col) {}
  int line;
  int col;

 private:
  static std::string format(const std::string& what, int line, int col) {
    return std::to_string(line) + ":" + std::to_string(col) + ": " + what;
  }
};

// Step budget exhausted while evaluating a primitive recursive schema.
struct BudgetError : Error {
  using Error::Error;
};

// Evaluation-time error: unbound variable, arity mismatch, symbol of the
// wrong kind, term outside the base language, and the like.
struct EvalError : Error {
  using Error::Error;
};

// Violation of the conditions a state of knowledge must satisfy.
struct StateError : Error {
  enum class Kind { kModelViolation, kInconsistentWitness, kIncompatibleStates };
  StateError(Kind kind, const std::string& what) : Error(what), kind(kind) {}
  Kind kind;
};

// A proof tree failed to check.
struct ProofError : Error {
  using Error::Error;
};

// The learning loop exceeded its iteration cap.
struct LoopError : Error {
  using Error::Error;
};

// A state transformer violated the realizer contract at a visited state.
// Signals an internal bug when raised on an extracted realizer.
struct ContractError : Error {
  using Error::Error;
};

// The conclusion formula evaluated false at a prefix point. Must never
// happen for realizers extracted from checked proofs.
struct ExtractionError : Error {
  using Error::Error;
};

}  // namespace em1

#endif  // EM1_ERRORS_HPP
