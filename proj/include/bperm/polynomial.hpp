#pragma once

#include <string>
#include <vector>

#include "bperm/numeric.hpp"

namespace bperm {

// Dense univariate polynomial with exact rational coefficients; coeff(k) is
// the coefficient of t^k.  Trailing zeros are trimmed, so degree() is exact
// (the zero polynomial has degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(Rational c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator*=(const Rational& scalar);

  Rational eval(const Rational& t) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// An Ehrhart polynomial of a polytope in R^n: exactly n+1 coefficients
// c_0..c_n (trailing zeros kept so the leading slot is always the volume).
struct EhrhartPolynomial {
  std::vector<Rational> coeffs;

  int n() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational eval(const Rational& t) const;
  const Rational& constant_term() const { return coeffs.front(); }
  const Rational& leading_coeff() const { return coeffs.back(); }

  // "1, 3/2, 1/2" — constant term first.
  std::string str() const;

  friend bool operator==(const EhrhartPolynomial&, const EhrhartPolynomial&) = default;
};

}  // namespace bperm
