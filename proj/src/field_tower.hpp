#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace niho3 {

// Field element of GF(3^n) in discrete-log form: log == -1 encodes zero,
// otherwise log in [0, 3^n - 2] encodes alpha^log for the tower's fixed
// primitive element alpha.
struct Fe {
  int32_t log = -1;

  bool is_zero() const { return log < 0; }
  friend bool operator==(Fe a, Fe b) { return a.log == b.log; }
  friend bool operator!=(Fe a, Fe b) { return a.log != b.log; }
};

inline constexpr Fe kFeZero{-1};

// Arithmetic for the tower GF(3) < GF(3^m) < GF(3^n), n = 2m, with
//   alpha  a primitive element of GF(3^n),
//   gamma = alpha^(q+1)  generating the subfield GF(q)^*,  q = 3^m,
//   delta = alpha^(q-1)  generating the unit circle U of order q+1.
//
// Elements are discrete logs; multiplication and power maps are index
// arithmetic mod 3^n - 1 and addition goes through a Zech-logarithm table,
// which is the hot path of every enumeration. The modulus is chosen
// deterministically (lexicographically smallest primitive polynomial,
// constant term first), so repeated runs are bit-identical.
//
// Instances are immutable after construction and safe to share across
// threads without coordination.
class FieldTower {
 public:
  static constexpr int kMinM = 2;
  static constexpr int kMaxM = 6;

  explicit FieldTower(int m);

  int m() const { return m_; }
  int n() const { return n_; }
  int64_t q() const { return q_; }
  int64_t order() const { return order_; }       // 3^n - 1
  int64_t field_size() const { return order_ + 1; }
  int64_t unit_circle_size() const { return q_ + 1; }

  Fe zero() const { return kFeZero; }
  Fe one() const { return Fe{0}; }
  Fe alpha() const { return Fe{1}; }
  Fe gamma() const { return element(q_ + 1); }
  Fe delta() const { return element(q_ - 1); }
  Fe minus_one() const { return Fe{half_}; }
  Fe element(int64_t log) const;  // log reduced mod 3^n - 1

  Fe add(Fe a, Fe b) const { return Fe{add_log(a.log, b.log)}; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe inverse(Fe a) const;        // zero -> ZeroElement
  Fe pow(Fe a, int64_t e) const; // e >= 0; pow(zero, 0) = one
  Fe conjugate(Fe a) const;      // x^q, the involution fixing GF(q)

  // Tr to GF(3) from GF(3^from_degree); from_degree is n or m, and the
  // subfield variant requires x^q == x.
  int trace_to_prime(Fe x, int from_degree) const;

  bool in_subfield(Fe x) const;
  bool in_unit_circle(Fe x) const;
  // [delta^0, delta^1, ..., delta^q]
  std::vector<Fe> unit_circle() const;
  // The unique (beta, y) with x = beta * y, beta = alpha^i for 0 <= i <= q,
  // y in GF(q)^*.
  std::pair<Fe, Fe> polar_decompose(Fe x) const;

  // Packed base-3 coordinate vector sum_i c_i 3^i relative to the modulus
  // basis; doubles as a perfect hash over the field.
  uint32_t value(Fe x) const { return x.is_zero() ? 0 : antilog_value_[x.log]; }
  Fe from_value(uint32_t v) const;

  // Coefficients c_0..c_n of the chosen primitive polynomial.
  const std::vector<int>& modulus() const { return modulus_; }

  // Raw views for enumeration loops.
  int32_t order32() const { return static_cast<int32_t>(order_); }
  int32_t half() const { return half_; }  // log of -1
  const int32_t* zech_data() const { return zech_.data(); }
  const uint8_t* trace_n_data() const { return trace_n_.data(); }

  // Log-space addition: -1 encodes zero on both sides.
  int32_t add_log(int32_t i, int32_t j) const {
    if (i < 0) return j;
    if (j < 0) return i;
    int32_t d = j - i;
    if (d < 0) d += order32_;
    int32_t z = zech_[d];
    if (z < 0) return -1;
    int32_t r = i + z;
    if (r >= order32_) r -= order32_;
    return r;
  }

 private:
  void select_modulus();
  void build_tables();

  int m_ = 0;
  int n_ = 0;
  int64_t q_ = 0;
  int64_t order_ = 0;
  int32_t order32_ = 0;
  int32_t half_ = 0;
  std::vector<int> modulus_;             // c_0..c_n
  std::vector<uint32_t> antilog_value_;  // log -> packed value
  std::vector<int32_t> log_of_value_;    // packed value -> log (-1 for 0)
  std::vector<int32_t> zech_;            // log(1 + alpha^k), -1 where zero
  std::vector<uint8_t> trace_n_;         // Tr^n_1(alpha^k)
  std::vector<uint8_t> trace_m_;         // Tr^m_1(gamma^j)
};

// gcd(3^(m+1) - 2, 3^(2m) - 1) == 1, the condition under which the
// decimation 3^(m+1) - 2 is invertible mod 3^n - 1. Coincides with
// m mod 4 != 2.
bool is_valid_m(int m);

}  // namespace niho3
