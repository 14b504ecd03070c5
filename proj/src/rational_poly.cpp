#include "rational_poly.hpp"

#include "errors.hpp"

namespace niho3 {

namespace {
const BigRat kZero = 0;
}

RationalPoly::RationalPoly(std::vector<BigRat> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const BigRat& c) {
  return RationalPoly(std::vector<BigRat>{c});
}

RationalPoly RationalPoly::binomial_power(const BigRat& c, unsigned e) {
  RationalPoly base(std::vector<BigRat>{1, c});
  return base.pow(e);
}

const BigRat& RationalPoly::coeff(size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

RationalPoly RationalPoly::scaled(const BigRat& factor) const {
  std::vector<BigRat> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * factor;
  return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<BigRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<BigRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::pow(unsigned e) const {
  RationalPoly acc = constant(1);
  RationalPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

RationalPoly RationalPoly::compose_binomial(unsigned deg) const {
  if (is_zero()) return RationalPoly();
  if (static_cast<int>(deg) < degree()) {
    fail(Status::invalid_argument,
         "compose_binomial: clearing degree " + std::to_string(deg) +
             " is below the polynomial degree " + std::to_string(degree()));
  }
  // sum_i c_i (-z)^i (1+z)^(deg-i)
  RationalPoly result;
  RationalPoly minus_z(std::vector<BigRat>{0, -1});
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    RationalPoly term = minus_z.pow(static_cast<unsigned>(i)) *
                        binomial_power(1, deg - static_cast<unsigned>(i));
    result = result + term.scaled(coeffs_[i]);
  }
  return result;
}

std::vector<std::string> RationalPoly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

}  // namespace niho3
