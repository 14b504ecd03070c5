#include <doctest.h>

#include <random>

#include "eisenstein.hpp"
#include "rational_poly.hpp"

using namespace niho3;

namespace {

Eisenstein random_eis(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-50, 50);
  return {coeff(rng), coeff(rng)};
}

RationalPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<BigRat> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& x : c) x = make_rat(num(rng), den(rng));
  return RationalPoly(std::move(c));
}

BigRat eval(const RationalPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(static_cast<size_t>(i));
  return acc;
}

}  // namespace

TEST_SUITE("exact_arith") {

TEST_CASE("omega squared reduces to -1 - omega") {
  Eisenstein w = Eisenstein::omega();
  CHECK(w * w == Eisenstein{-1, -1});
}

TEST_CASE("cyclotomic relation 1 + w + w^2 = 0") {
  Eisenstein w = Eisenstein::omega();
  CHECK(Eisenstein{1, 0} + w + w * w == Eisenstein{0, 0});
}

TEST_CASE("(1 - w)(1 - w^2) = 3") {
  Eisenstein w = Eisenstein::omega();
  Eisenstein one{1, 0};
  CHECK((one - w) * (one - w * w) == Eisenstein{3, 0});
}

TEST_CASE("as_integer") {
  CHECK(Eisenstein{-28, 0}.as_integer() == -28);
  CHECK(Eisenstein{0, 0}.as_integer() == 0);
  CHECK_THROWS_AS((void)Eisenstein{5, 2}.as_integer(), Error);
  try {
    (void)Eisenstein{5, 2}.as_integer();
  } catch (const Error& e) {
    CHECK(e.status() == Status::not_rational_integer);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    Eisenstein a = random_eis(rng), b = random_eis(rng), c = random_eis(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("eis_pow agrees with repeated multiplication") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Eisenstein a = random_eis(rng);
    Eisenstein acc{1, 0};
    for (unsigned e = 0; e <= 6; ++e) {
      CHECK(eis_pow(a, e) == acc);
      acc = acc * a;
    }
  }
}

TEST_CASE("eisenstein_from_counts") {
  // 2 w^0 + 5 w^1 + 3 w^2 = (2 - 3) + (5 - 3) w
  CHECK(eisenstein_from_counts(2, 5, 3) == Eisenstein{-1, 2});
  // equal counts of the three cube roots sum to zero
  CHECK(eisenstein_from_counts(7, 7, 7) == Eisenstein{0, 0});
}

TEST_CASE("(1+2z)^2 expands to 1 + 4z + 4z^2") {
  RationalPoly p = RationalPoly::binomial_power(2, 2);
  CHECK(p == RationalPoly({BigRat(1), BigRat(4), BigRat(4)}));
}

TEST_CASE("polynomial product matches hand convolution") {
  RationalPoly a({BigRat(1), BigRat(2)});           // 1 + 2z
  RationalPoly b({BigRat(3), BigRat(0), BigRat(1)});  // 3 + z^2
  CHECK(a * b == RationalPoly({BigRat(3), BigRat(6), BigRat(1), BigRat(2)}));
}

TEST_CASE("product of evaluations equals evaluation of product") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    RationalPoly a = random_poly(rng), b = random_poly(rng);
    BigRat x = make_rat(num(rng), den(rng));
    CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
    CHECK(eval(a + b, x) == eval(a, x) + eval(b, x));
    CHECK(eval(a - b, x) == eval(a, x) - eval(b, x));
  }
}

TEST_CASE("zero polynomial degree sentinel") {
  RationalPoly zero;
  CHECK(zero.degree() == RationalPoly::kZeroDegree);
  CHECK(zero.is_zero());
  RationalPoly trimmed({BigRat(0), BigRat(0)});
  CHECK(trimmed.is_zero());
  CHECK((zero * RationalPoly::constant(5)).is_zero());
}

TEST_CASE("compose_binomial clears the denominator") {
  // p(z) = z with deg 1: (1+z) * (-z/(1+z)) = -z
  RationalPoly z({BigRat(0), BigRat(1)});
  CHECK(z.compose_binomial(1) == RationalPoly({BigRat(0), BigRat(-1)}));

  // p(z) = 1 + z^2 with deg 2: (1+z)^2 + z^2 = 1 + 2z + 2z^2
  RationalPoly p({BigRat(1), BigRat(0), BigRat(1)});
  CHECK(p.compose_binomial(2) ==
        RationalPoly({BigRat(1), BigRat(2), BigRat(2)}));

  CHECK_THROWS_AS((void)p.compose_binomial(1), Error);
}

TEST_CASE("compose_binomial at matched degree is an involution") {
  // q(z) = (1+z)^d p(-z/(1+z)) applied twice returns p when deg(p) = d.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    RationalPoly p = random_poly(rng);
    if (p.is_zero()) continue;
    unsigned d = static_cast<unsigned>(p.degree());
    RationalPoly once = p.compose_binomial(d);
    CHECK(once.compose_binomial(d) == p);
  }
}

TEST_CASE("rationals stay reduced with positive denominator") {
  BigRat r = make_rat(6, 4);
  CHECK(r.get_num() == 3);
  CHECK(r.get_den() == 2);
  BigRat s = make_rat(5, -10);
  CHECK(s.get_num() == -1);
  CHECK(s.get_den() == 2);
  CHECK_THROWS_AS((void)make_rat(1, 0), Error);
}

}  // TEST_SUITE
