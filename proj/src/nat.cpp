#include "em1/nat.hpp"

#include <cctype>
#include <limits>

#include "em1/errors.hpp"

namespace em1 {

nlohmann::json nat_to_json(const Nat& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return nlohmann::json(n.convert_to<std::uint64_t>());
  }
  return nlohmann::json(n.str());
}

Nat nat_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw EvalError("natural number expected, got " + j.dump());
    return Nat(v);
  }
  if (j.is_string()) return nat_from_string(j.get<std::string>());
  throw EvalError("natural number expected, got " + j.dump());
}

Nat nat_from_string(const std::string& text) {
  if (text.empty()) throw EvalError("empty numeral");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw EvalError("bad numeral: " + text);
  }
  return Nat(text);
}

}  // namespace em1
