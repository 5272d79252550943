#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace transit {

/// Arbitrary-precision rational number. Always kept canonical.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal such as "0.1" (read as 1/10
/// exactly). Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// A travel cost: a non-negative rational or +infinity.
///
/// Ordering puts every finite value below infinity, and infinity absorbs
/// addition. Multiplying infinity by zero yields zero (a zero-weight edge stays
/// free regardless of any penalty factor).
class Cost {
 public:
  Cost() = default;  // zero
  Cost(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  Cost(long value) : value_(value) {}                 // NOLINT(implicit)

  static Cost infinity() {
    Cost c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite value; throws std::logic_error when infinite.
  const Rational& value() const;

  friend Cost operator+(const Cost& a, const Cost& b);
  friend Cost operator*(const Cost& a, const Cost& b);
  Cost& operator+=(const Cost& other) { return *this = *this + other; }

  friend bool operator==(const Cost& a, const Cost& b);
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::string to_string(const Cost& cost);
Cost parse_cost(std::string_view text);  // accepts "inf" / "infinity"

std::ostream& operator<<(std::ostream& os, const Cost& cost);

}  // namespace transit
