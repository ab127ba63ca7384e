#include "bsl/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsl {

namespace {

void append_term(std::ostringstream& os, const mpz_class& c, long e, bool first) {
  mpz_class mag = abs(c);
  if (c < 0)
    os << "-";
  else if (!first)
    os << "+";
  bool unit = mag == 1;
  if (e == 0 || !unit) os << mag;
  if (e != 0) {
    os << "X";
    if (e != 1) os << "^" << e;
  }
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::valuation() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k == coeffs_.size() ? 0 : k;
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& k) {
  for (auto& c : coeffs_) c *= k;
  normalize();
  return *this;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    append_term(os, coeffs_[i], static_cast<long>(i), first);
    first = false;
  }
  return os.str();
}

LaurentPoly::LaurentPoly(long offset, std::vector<mpz_class> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly::LaurentPoly(const IntPoly& p) : offset_(0), coeffs_(p.coeffs()) { normalize(); }

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    offset_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) offset_ = 0;
}

mpz_class LaurentPoly::coeff_at(long exponent) const {
  long i = exponent - offset_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  long lo = std::min(offset_, other.offset_);
  long hi = std::max(max_exponent(), other.max_exponent());
  std::vector<mpz_class> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[static_cast<std::size_t>(offset_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    v[static_cast<std::size_t>(other.offset_ - lo) + i] += other.coeffs_[i];
  offset_ = lo;
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.offset_ += k;
  return r;
}

IntPoly LaurentPoly::to_int_poly() const {
  if (!is_polynomial()) throw std::domain_error("Laurent polynomial has negative exponents");
  if (is_zero()) return {};
  std::vector<mpz_class> v(static_cast<std::size_t>(offset_));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    append_term(os, coeffs_[i], offset_ + static_cast<long>(i), first);
    first = false;
  }
  return os.str();
}

}  // namespace bsl
