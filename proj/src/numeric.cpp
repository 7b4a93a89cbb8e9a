#include "bperm/numeric.hpp"

#include "bperm/errors.hpp"

namespace bperm {

Int factorial(int k) {
  if (k < 0) fail(Errc::out_of_range, "factorial of negative " + std::to_string(k));
  Int out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

std::string to_decimal(const Int& value) { return value.str(); }

std::string to_fraction(const Rational& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace bperm
