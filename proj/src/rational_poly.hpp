#pragma once

#include <string>
#include <vector>

#include "bigint.hpp"

namespace niho3 {

// Univariate polynomial over Q with exact coefficients, coefficient i being
// the coefficient of z^i. Trailing zeros are trimmed on construction; the
// zero polynomial reports degree kZeroDegree.
class RationalPoly {
 public:
  static constexpr int kZeroDegree = -1;

  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRat> coeffs);

  static RationalPoly constant(const BigRat& c);
  // (1 + c z)^e by iterated exact multiplication.
  static RationalPoly binomial_power(const BigRat& c, unsigned e);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Zero beyond the degree, so callers can read any index.
  const BigRat& coeff(size_t i) const;

  RationalPoly scaled(const BigRat& factor) const;
  RationalPoly pow(unsigned e) const;
  // Cleared-denominator composition (1+z)^deg * p(-z / (1+z)); requires
  // deg >= degree(p) so the result is a polynomial.
  RationalPoly compose_binomial(unsigned deg) const;

  std::vector<std::string> coefficient_strings() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

}  // namespace niho3
