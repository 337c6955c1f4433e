#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace homlie {

/// Exact rational number. GMP keeps it canonical (positive denominator,
/// reduced) after every arithmetic operation.
using Scalar = mpq_class;

/// Malformed input or a call whose arguments do not fit together.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structure that was supposed to satisfy an axiom does not.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent criteria for the same property disagree. This means a
/// bracket or differential implementation is wrong, never the input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p", "-p" or "p/q". Non-canonical input such as "2/4" is accepted
/// and normalized; a zero denominator is rejected.
inline Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!detail::is_digit_run(num) || (slash != std::string_view::npos && !detail::is_digit_run(den))) {
    throw UsageError("not a rational number: \"" + std::string(text) + "\"");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    throw UsageError("zero denominator in \"" + std::string(text) + "\"");
  }
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Scalar value;
  if (value.set_str(canonical, 10) != 0) {
    throw UsageError("not a rational number: \"" + std::string(text) + "\"");
  }
  value.canonicalize();
  return value;
}

/// Canonical "p/q" or "p" rendering.
inline std::string to_string(const Scalar& value) { return value.get_str(); }

}  // namespace homlie
