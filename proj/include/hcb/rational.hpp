#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace hcb {

/// Exact rational coefficient; always kept in lowest terms with a positive
/// denominator by GMP.
using Rational = boost::multiprecision::mpq_rational;

/// Parses `p/q`, an integer, or a decimal literal such as `-0.125` or
/// `2.5e-3` into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical `p/q` rendering (the denominator is always written).
std::string to_fraction_string(const Rational& value);

/// Human-oriented rendering: exact when the decimal expansion terminates
/// within 12 digits, otherwise rounded to 6 significant digits.
std::string to_decimal_string(const Rational& value);

/// A rational or +infinity. Used for death times of bars that never die.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw std::logic_error("value() of an infinite ExtendedRational");
    return value_;
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::string to_fraction_string(const ExtendedRational& value);
std::string to_decimal_string(const ExtendedRational& value);

}  // namespace hcb
