#pragma once

#include <string>
#include <utility>

#include "bigint.hpp"
#include "errors.hpp"

namespace niho3 {

// Element of Z[w] with w a primitive cube root of unity, stored in the
// reduced basis {1, w}: every product is normalized with w^2 = -1 - w, so a
// value is a rational integer exactly when c1 == 0. All character sums
// evaluated by the library live in this ring.
struct Eisenstein {
  BigInt c0;  // coefficient of 1
  BigInt c1;  // coefficient of w

  Eisenstein() : c0(0), c1(0) {}
  Eisenstein(BigInt a, BigInt b) : c0(std::move(a)), c1(std::move(b)) {}

  static Eisenstein omega() { return {0, 1}; }

  bool is_rational_integer() const { return c1 == 0; }

  // Only rational integers occur as final spectrum values; a nonzero w
  // component signals a computation bug upstream.
  BigInt as_integer() const {
    if (c1 != 0) {
      fail(Status::not_rational_integer,
           "Eisenstein value " + to_string() + " has a nonzero w component");
    }
    return c0;
  }

  std::string to_string() const {
    return c0.get_str() + (sgn(c1) >= 0 ? "+" : "") + c1.get_str() + "w";
  }

  friend bool operator==(const Eisenstein& a, const Eisenstein& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }

  friend Eisenstein operator+(const Eisenstein& a, const Eisenstein& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }

  friend Eisenstein operator-(const Eisenstein& a, const Eisenstein& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }

  friend Eisenstein operator-(const Eisenstein& a) { return {-a.c0, -a.c1}; }

  // (a0 + a1 w)(b0 + b1 w) = a0 b0 - a1 b1 + (a0 b1 + a1 b0 - a1 b1) w
  friend Eisenstein operator*(const Eisenstein& a, const Eisenstein& b) {
    BigInt cross = a.c1 * b.c1;
    return {a.c0 * b.c0 - cross, a.c0 * b.c1 + a.c1 * b.c0 - cross};
  }
};

inline Eisenstein eis_pow(Eisenstein base, unsigned long e) {
  Eisenstein acc{1, 0};
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// Sum of counts[k] copies of w^k, reduced to the {1, w} basis.
inline Eisenstein eisenstein_from_counts(const BigInt& count0,
                                         const BigInt& count1,
                                         const BigInt& count2) {
  return {count0 - count2, count1 - count2};
}

}  // namespace niho3
