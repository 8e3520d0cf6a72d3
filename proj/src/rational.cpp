#include "hcb/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace hcb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

boost::multiprecision::mpz_int pow10(long exponent) {
  boost::multiprecision::mpz_int result = 1;
  for (long k = 0; k < exponent; ++k) result *= 10;
  return result;
}

// Boost's string constructor would read a leading zero as an octal prefix.
boost::multiprecision::mpz_int decimal_integer(std::string_view digits) {
  boost::multiprecision::mpz_int result;
  mpz_set_str(result.backend().data(), std::string(digits).c_str(), 10);
  return result;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::string_view s = text;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw std::invalid_argument("bad exponent in number '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  const boost::multiprecision::mpz_int numerator = decimal_integer(digits);
  exponent -= static_cast<long>(frac_part.size());
  Rational result = exponent >= 0 ? Rational(numerator * pow10(exponent))
                                  : Rational(numerator, pow10(-exponent));
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    boost::multiprecision::mpz_int n = decimal_integer(num_digits);
    if (num.front() == '-') n = -n;
    const boost::multiprecision::mpz_int d = decimal_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }
  return parse_decimal(text);
}

std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string to_decimal_string(const Rational& value) {
  auto den = boost::multiprecision::denominator(value);
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  const int places = std::max(twos, fives);
  if (den == 1 && places <= 12) {
    auto num = boost::multiprecision::numerator(value);
    const bool negative = num < 0;
    if (negative) num = -num;
    auto scaled = num * pow10(places) / boost::multiprecision::denominator(value);
    std::string digits = scaled.str();
    if (places > 0) {
      if (digits.size() <= static_cast<size_t>(places)) {
        digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
      }
      digits.insert(digits.size() - static_cast<size_t>(places), ".");
    }
    return negative ? "-" + digits : digits;
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value.convert_to<double>());
  return buffer;
}

std::string to_fraction_string(const ExtendedRational& value) {
  return value.is_infinite() ? "inf" : to_fraction_string(value.value());
}

std::string to_decimal_string(const ExtendedRational& value) {
  return value.is_infinite() ? "inf" : to_decimal_string(value.value());
}

}  // namespace hcb
