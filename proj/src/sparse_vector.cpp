#include "hcb/sparse_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcb {

namespace {

mpz_ptr raw(Integer& v) { return v.backend().data(); }
mpz_srcptr raw(const Integer& v) { return v.backend().data(); }

auto lower(const std::vector<SparseVector::IntegerEntry>& terms, std::size_t index) {
  return std::lower_bound(terms.begin(), terms.end(), index,
                          [](const SparseVector::IntegerEntry& e, std::size_t i) { return e.first < i; });
}

}  // namespace

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  for (auto& [index, value] : entries) {
    if (!merged.empty() && merged.back().first == index) {
      merged.back().second += value;
      if (merged.back().second == 0) merged.pop_back();
    } else if (value != 0) {
      merged.emplace_back(index, std::move(value));
    }
  }
  SparseVector result;
  if (merged.empty()) return result;
  Integer common = 1;
  for (const auto& [index, value] : merged) {
    common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(value));
  }
  result.terms_.reserve(merged.size());
  for (const auto& [index, value] : merged) {
    result.terms_.emplace_back(index, boost::multiprecision::numerator(value) *
                                          (common / boost::multiprecision::denominator(value)));
  }
  result.scale_ = Rational(Integer(1), common);
  result.canonicalize();
  return result;
}

SparseVector SparseVector::unit(std::size_t index, Rational coefficient) {
  SparseVector v;
  if (coefficient != 0) {
    v.terms_.emplace_back(index, Integer(1));
    v.scale_ = std::move(coefficient);
  }
  return v;
}

void SparseVector::canonicalize() {
  if (terms_.empty()) {
    scale_ = 1;
    return;
  }
  // Seeding the content with the shortest entry keeps every gcd step cheap.
  auto shortest = std::min_element(terms_.begin(), terms_.end(), [](const auto& x, const auto& y) {
    return mpz_size(raw(x.second)) < mpz_size(raw(y.second));
  });
  Integer g = abs(shortest->second);
  for (auto it = terms_.begin(); it != terms_.end() && g != 1; ++it) {
    mpz_gcd(raw(g), raw(g), raw(it->second));
  }
  if (g != 1) {
    for (auto& [index, value] : terms_) mpz_divexact(raw(value), raw(value), raw(g));
    scale_ *= g;
  }
  if (terms_.back().second < 0) {
    for (auto& [index, value] : terms_) mpz_neg(raw(value), raw(value));
    scale_ = -scale_;
  }
}

std::vector<SparseVector::Entry> SparseVector::entries() const {
  std::vector<Entry> out;
  out.reserve(terms_.size());
  for (const auto& [index, value] : terms_) out.emplace_back(index, scale_ * value);
  return out;
}

Rational SparseVector::pivot_value() const { return scale_ * terms_.back().second; }

const Integer* SparseVector::find_integer(std::size_t index) const {
  auto it = lower(terms_, index);
  if (it != terms_.end() && it->first == index) return &it->second;
  return nullptr;
}

Rational SparseVector::coefficient(std::size_t index) const {
  const Integer* value = find_integer(index);
  return value ? Rational(scale_ * *value) : Rational(0);
}

void SparseVector::push_back(std::size_t index, const Rational& coefficient) {
  if (!terms_.empty() && terms_.back().first >= index) {
    throw std::logic_error("SparseVector::push_back index out of order");
  }
  if (coefficient == 0) return;
  if (terms_.empty()) {
    *this = unit(index, coefficient);
    return;
  }
  const Rational relative = coefficient / scale_;
  const Integer& den = boost::multiprecision::denominator(relative);
  if (den != 1) {
    for (auto& [i, value] : terms_) mpz_mul(raw(value), raw(value), raw(den));
    scale_ /= den;
  }
  terms_.emplace_back(index, boost::multiprecision::numerator(relative));
  canonicalize();
}

void SparseVector::add_scaled(const Rational& factor, const SparseVector& other) {
  if (factor == 0 || other.terms_.empty()) return;
  if (&other == this) {
    *this *= 1 + factor;
    return;
  }
  if (terms_.empty()) {
    *this = other;
    scale_ *= factor;
    return;
  }
  // this + factor*other = (scale/b) * (b*w + a*w') with a/b = factor*scale'/scale.
  const Rational relative = factor * other.scale_ / scale_;
  const Integer& a = boost::multiprecision::numerator(relative);
  const Integer& b = boost::multiprecision::denominator(relative);
  const bool unit_b = b == 1;

  std::size_t fresh = 0;
  {
    auto it = terms_.begin();
    for (const auto& [index, value] : other.terms_) {
      while (it != terms_.end() && it->first < index) ++it;
      if (it == terms_.end() || it->first != index) ++fresh;
    }
  }

  bool cancelled = false;
  if (fresh == 0) {
    auto it = terms_.begin();
    for (const auto& [index, value] : other.terms_) {
      for (; it->first < index; ++it) {
        if (!unit_b) mpz_mul(raw(it->second), raw(it->second), raw(b));
      }
      if (!unit_b) mpz_mul(raw(it->second), raw(it->second), raw(b));
      mpz_addmul(raw(it->second), raw(a), raw(value));
      if (mpz_sgn(raw(it->second)) == 0) cancelled = true;
      ++it;
    }
    if (!unit_b) {
      for (; it != terms_.end(); ++it) mpz_mul(raw(it->second), raw(it->second), raw(b));
    }
  } else {
    std::vector<IntegerEntry> merged;
    merged.reserve(terms_.size() + fresh);
    auto it = terms_.begin();
    auto take = [&](IntegerEntry& e) {
      if (!unit_b) mpz_mul(raw(e.second), raw(e.second), raw(b));
      merged.push_back(std::move(e));
    };
    for (const auto& [index, value] : other.terms_) {
      while (it != terms_.end() && it->first < index) take(*it++);
      if (it != terms_.end() && it->first == index) {
        if (!unit_b) mpz_mul(raw(it->second), raw(it->second), raw(b));
        mpz_addmul(raw(it->second), raw(a), raw(value));
        if (mpz_sgn(raw(it->second)) == 0) cancelled = true;
        merged.push_back(std::move(*it++));
      } else {
        merged.emplace_back(index, Integer());
        mpz_mul(raw(merged.back().second), raw(a), raw(value));
      }
    }
    while (it != terms_.end()) take(*it++);
    terms_ = std::move(merged);
  }
  if (cancelled) {
    std::erase_if(terms_, [](const IntegerEntry& e) { return e.second == 0; });
  }
  if (!unit_b) scale_ /= b;
  canonicalize();
}

SparseVector& SparseVector::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    scale_ = 1;
  } else if (!terms_.empty()) {
    scale_ *= factor;
  }
  return *this;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  add_scaled(Rational(1), other);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  add_scaled(Rational(-1), other);
  return *this;
}

Rational SparseVector::dot(const SparseVector& other) const {
  Integer sum = 0;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      mpz_addmul(raw(sum), raw(a->second), raw(b->second));
      ++a;
      ++b;
    }
  }
  if (sum == 0) return Rational(0);
  return scale_ * other.scale_ * sum;
}

Rational SparseVector::primitive_factor() const {
  if (terms_.empty()) return Rational(1);
  return 1 / abs(scale_);
}

SparseVector SparseVector::normalized() const {
  SparseVector result = *this;
  if (!terms_.empty()) result.scale_ = Rational(Integer(1), terms_.back().second);
  return result;
}

}  // namespace hcb
