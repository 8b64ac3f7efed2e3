#ifndef EM1_NAT_HPP
#define EM1_NAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "json.hpp"

namespace em1 {

// Natural numbers of the standard model. Arbitrary precision: primitive
// recursive definitions outgrow machine words after a handful of steps.
using Nat = boost::multiprecision::cpp_int;

// JSON bridge. Values that fit an unsigned 64-bit integer are emitted as
// JSON numbers, anything larger as a decimal string; parsing accepts both.
nlohmann::json nat_to_json(const Nat& n);
Nat nat_from_json(const nlohmann::json& j);

// Parses a non-negative decimal literal. Throws EvalError on junk.
Nat nat_from_string(const std::string& text);

}  // namespace em1

#endif  // EM1_NAT_HPP
