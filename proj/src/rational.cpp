#include "transit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace transit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(body)) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    result = Rational(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

const Rational& Cost::value() const {
  if (infinite_) throw std::logic_error("value() called on infinite cost");
  return value_;
}

Cost operator+(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) return Cost::infinity();
  return Cost(a.value_ + b.value_);
}

Cost operator*(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) {
    if ((!a.infinite_ && a.value_ == 0) || (!b.infinite_ && b.value_ == 0)) return Cost();
    return Cost::infinity();
  }
  return Cost(a.value_ * b.value_);
}

bool operator==(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

std::string to_string(const Cost& cost) {
  return cost.is_infinite() ? std::string("inf") : to_string(cost.value());
}

Cost parse_cost(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Infinity") return Cost::infinity();
  return Cost(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const Cost& cost) { return os << to_string(cost); }

}  // namespace transit
