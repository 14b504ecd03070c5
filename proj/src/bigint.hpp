#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace niho3 {

// All counts, coefficients and power sums are exact. Codeword counts reach
// 3^(q-1-2m), far past any fixed-width type, so GMP integers/rationals are
// used throughout and no floating point appears anywhere in the library.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow3(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Division that must leave no remainder; `bad` names the contract violated.
inline BigInt exact_div(const BigInt& num, const BigInt& den, Status bad,
                        const std::string& what) {
  if (den == 0 || num % den != 0) {
    fail(bad, what + ": " + num.get_str() + " is not divisible by " +
                  den.get_str());
  }
  return num / den;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// mpq_class does not canonicalize two-argument construction on its own;
// every rational built from a numerator/denominator pair goes through here
// so the reduced-form, positive-denominator invariant always holds.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(Status::invalid_argument, "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}


}  // namespace niho3
