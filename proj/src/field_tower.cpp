#include "field_tower.hpp"

#include <array>
#include <cstdlib>

#include "bigint.hpp"

namespace niho3 {

namespace {

constexpr int kMaxDegree = 2 * FieldTower::kMaxM;

using Digits = std::array<uint8_t, kMaxDegree>;

uint32_t pack(const Digits& v, int n) {
  uint32_t out = 0;
  for (int i = n - 1; i >= 0; --i) out = out * 3 + v[i];
  return out;
}

// v <- v * x mod f, f monic of degree n with coefficients f[0..n].
void mul_by_x(Digits& v, const std::vector<int>& f, int n) {
  int carry = v[n - 1];
  for (int i = n - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  if (carry != 0) {
    // x^n = -sum_i f_i x^i
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<uint8_t>((v[i] + carry * ((3 - f[i]) % 3)) % 3);
    }
  }
}

Digits add_digits(const Digits& a, const Digits& b, int n) {
  Digits out{};
  for (int i = 0; i < n; ++i) out[i] = static_cast<uint8_t>((a[i] + b[i]) % 3);
  return out;
}

int64_t pow3_i64(int e) {
  int64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

}  // namespace

FieldTower::FieldTower(int m) {
  if (m < kMinM || m > kMaxM) {
    fail(Status::unsupported_m,
         "tower requires " + std::to_string(kMinM) + " <= m <= " +
             std::to_string(kMaxM) + ", got m = " + std::to_string(m));
  }
  m_ = m;
  n_ = 2 * m;
  q_ = pow3_i64(m);
  order_ = pow3_i64(n_) - 1;
  order32_ = static_cast<int32_t>(order_);
  half_ = static_cast<int32_t>(order_ / 2);
  select_modulus();
  build_tables();
}

void FieldTower::select_modulus() {
  // Candidates are monic degree-n polynomials ordered lexicographically by
  // (c_0, c_1, ..., c_{n-1}). x generates the unit group of GF(3)[x]/(f)
  // with order 3^n - 1 exactly when f is primitive, so a plain order walk
  // both tests the candidate and, for the winner, seeds the antilog table.
  const int n = n_;
  const int64_t size = order_ + 1;
  for (int64_t key = 0; key < size; ++key) {
    std::vector<int> f(n + 1, 0);
    f[n] = 1;
    int64_t k = key;
    for (int i = n - 1; i >= 0; --i) {  // c_0 is the most significant digit
      f[i] = static_cast<int>(k % 3);
      k /= 3;
    }
    if (f[0] == 0) continue;  // x divides f
    Digits v{};
    v[0] = 1;
    int64_t steps = 0;
    do {
      mul_by_x(v, f, n);
      ++steps;
    } while (pack(v, n) != 1 && steps < order_);
    if (steps == order_ && pack(v, n) == 1) {
      modulus_ = std::move(f);
      return;
    }
  }
  fail(Status::internal, "no primitive polynomial found (unreachable)");
}

void FieldTower::build_tables() {
  const int n = n_;
  antilog_value_.assign(static_cast<size_t>(order_), 0);
  log_of_value_.assign(static_cast<size_t>(order_ + 1), -1);

  Digits v{};
  v[0] = 1;
  std::vector<Digits> digits_of(static_cast<size_t>(order_));
  for (int64_t k = 0; k < order_; ++k) {
    digits_of[k] = v;
    uint32_t packed = pack(v, n);
    antilog_value_[k] = packed;
    log_of_value_[packed] = static_cast<int32_t>(k);
    mul_by_x(v, modulus_, n);
  }
  if (pack(v, n) != 1) {
    fail(Status::internal, "alpha does not have order 3^n - 1");
  }

  zech_.assign(static_cast<size_t>(order_), -1);
  Digits one{};
  one[0] = 1;
  for (int64_t k = 0; k < order_; ++k) {
    Digits s = add_digits(one, digits_of[k], n);
    uint32_t packed = pack(s, n);
    zech_[k] = packed == 0 ? -1 : log_of_value_[packed];
  }

  // Tr(alpha^k) = sum_j alpha^(k 3^j); the sum must land in GF(3), i.e.
  // have no coordinates beyond the constant one.
  trace_n_.assign(static_cast<size_t>(order_), 0);
  for (int64_t k = 0; k < order_; ++k) {
    Digits acc{};
    int64_t e = k;
    for (int j = 0; j < n; ++j) {
      acc = add_digits(acc, digits_of[e], n);
      e = e * 3 % order_;
    }
    for (int i = 1; i < n; ++i) {
      if (acc[i] != 0) fail(Status::internal, "trace not in GF(3)");
    }
    trace_n_[k] = acc[0];
  }

  trace_m_.assign(static_cast<size_t>(q_ - 1), 0);
  for (int64_t j = 0; j < q_ - 1; ++j) {
    Digits acc{};
    int64_t e = j * (q_ + 1) % order_;
    for (int i = 0; i < m_; ++i) {
      acc = add_digits(acc, digits_of[e], n);
      e = e * 3 % order_;
    }
    for (int i = 1; i < n; ++i) {
      if (acc[i] != 0) fail(Status::internal, "subfield trace not in GF(3)");
    }
    trace_m_[j] = acc[0];
  }
}

Fe FieldTower::element(int64_t log) const {
  int64_t k = log % order_;
  if (k < 0) k += order_;
  return Fe{static_cast<int32_t>(k)};
}

Fe FieldTower::neg(Fe a) const {
  if (a.is_zero()) return a;
  int32_t r = a.log + half_;
  if (r >= order32_) r -= order32_;
  return Fe{r};
}

Fe FieldTower::mul(Fe a, Fe b) const {
  if (a.is_zero() || b.is_zero()) return kFeZero;
  int32_t r = a.log + b.log;
  if (r >= order32_) r -= order32_;
  return Fe{r};
}

Fe FieldTower::inverse(Fe a) const {
  if (a.is_zero()) fail(Status::zero_element, "inverse of zero");
  return a.log == 0 ? a : Fe{order32_ - a.log};
}

Fe FieldTower::pow(Fe a, int64_t e) const {
  if (e < 0) fail(Status::invalid_argument, "pow requires e >= 0");
  if (a.is_zero()) return e == 0 ? one() : kFeZero;
  return element(static_cast<int64_t>(a.log) * (e % order_));
}

Fe FieldTower::conjugate(Fe a) const {
  if (a.is_zero()) return a;
  return element(static_cast<int64_t>(a.log) * q_);
}

int FieldTower::trace_to_prime(Fe x, int from_degree) const {
  if (from_degree == n_) {
    return x.is_zero() ? 0 : trace_n_[x.log];
  }
  if (from_degree == m_) {
    if (x.is_zero()) return 0;
    if (!in_subfield(x)) {
      fail(Status::not_in_subfield,
           "subfield trace requires x^q == x; log " + std::to_string(x.log) +
               " is not a multiple of q + 1");
    }
    return trace_m_[x.log / (q_ + 1)];
  }
  fail(Status::invalid_argument,
       "from_degree must be n = " + std::to_string(n_) + " or m = " +
           std::to_string(m_));
}

bool FieldTower::in_subfield(Fe x) const {
  return x.is_zero() || x.log % (q_ + 1) == 0;
}

bool FieldTower::in_unit_circle(Fe x) const {
  return !x.is_zero() && x.log % (q_ - 1) == 0;
}

std::vector<Fe> FieldTower::unit_circle() const {
  std::vector<Fe> out;
  out.reserve(static_cast<size_t>(q_ + 1));
  for (int64_t i = 0; i <= q_; ++i) out.push_back(element(i * (q_ - 1)));
  return out;
}

std::pair<Fe, Fe> FieldTower::polar_decompose(Fe x) const {
  if (x.is_zero()) fail(Status::zero_element, "polar decomposition of zero");
  int64_t i = x.log % (q_ + 1);
  int64_t j = x.log / (q_ + 1);
  return {Fe{static_cast<int32_t>(i)}, element(j * (q_ + 1))};
}

Fe FieldTower::from_value(uint32_t v) const {
  if (v > order_) fail(Status::invalid_argument, "packed value out of range");
  return v == 0 ? kFeZero : Fe{log_of_value_[v]};
}

bool is_valid_m(int m) {
  if (m < 2) fail(Status::invalid_argument, "is_valid_m requires m >= 2");
  BigInt d = pow3(static_cast<unsigned long>(m) + 1) - 2;
  BigInt order = pow3(2 * static_cast<unsigned long>(m)) - 1;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), order.get_mpz_t());
  return g == 1;
}

}  // namespace niho3
