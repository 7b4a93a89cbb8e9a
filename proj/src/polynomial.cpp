#include "bperm/polynomial.hpp"

#include "bperm/errors.hpp"

namespace bperm {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rational c) {
  return Polynomial(std::vector<Rational>{std::move(c)});
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[k];
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (Rational& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Rational Polynomial::eval(const Rational& t) const {
  Rational value(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * t + *it;
  return value;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational EhrhartPolynomial::eval(const Rational& t) const {
  Rational value(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * t + *it;
  return value;
}

std::string EhrhartPolynomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += to_fraction(coeffs[i]);
  }
  return out;
}

}  // namespace bperm
