#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "pcv/gamma.hpp"

using namespace pcv;

namespace {

// Independent oracle: direct unit product with plain integer arithmetic.
std::uint64_t gamma_oracle(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
  unsigned __int128 prod = 1;
  for (std::uint64_t j = 1; j < n; ++j)
    if (j % p != 0) prod = prod * j % q;
  std::uint64_t v = static_cast<std::uint64_t>(prod);
  return (n % 2 == 1) ? (q - v) % q : v;
}

Rational random_p_integral(std::mt19937_64& rng, unsigned long p) {
  std::uniform_int_distribution<long> num(-3000, 3000);
  std::uniform_int_distribution<unsigned long> den(1, 3000);
  for (;;) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (!mpz_divisible_ui_p(r.get_den().get_mpz_t(), p)) return r;
  }
}

}  // namespace

TEST_CASE("gamma_int basics") {
  CHECK(gamma_int(Integer(0), 7, 2).residue(2) == 1);
  CHECK(gamma_int(Integer(4), 7, 1).residue(1) == 6);    // 1*2*3 = 6
  CHECK(gamma_int(Integer(5), 5, 3).residue(3) == 101);  // -24 mod 125
  CHECK(gamma_int(Integer(1), 11, 2).residue(2) == 120);  // -1
}

TEST_CASE("gamma_at") {
  GammaContext c5(5, 1, 1);
  CHECK(gamma_at(Rational(1, 4), c5, 1).residue(1) == 1);

  GammaContext c7(7, 3, 3);
  CHECK(gamma_at(Rational(1), c7, 3).residue(3) == 342);  // -1 mod 343

  // oracle: unit product of length <1/3>_343
  Integer a = least_residue(Rational(1, 3), 7, 3);
  CHECK(gamma_at(Rational(1, 3), c7, 3).residue(3) ==
        gamma_oracle(a.get_ui(), 7, 343));

  CHECK_THROWS_AS(gamma_at(Rational(1, 7), c7, 1), std::domain_error);
}

TEST_CASE("continuity: x == y (mod p^k) forces Gamma_p(x) == Gamma_p(y)") {
  std::mt19937_64 rng(4242);
  const unsigned long p = 7;
  GammaContext ctx(p, 2, 2);
  for (int i = 0; i < 50; ++i) {
    Rational x = random_p_integral(rng, p);
    Rational y = x + Rational(int_pow(p, 2)) * random_p_integral(rng, p);
    CHECK(congruent_mod(gamma_at(x, ctx, 2), gamma_at(y, ctx, 2), 2));
  }
}

TEST_CASE("functional equation of the unit-product definition") {
  std::mt19937_64 rng(11);
  const unsigned long p = 11;
  const int k = 3;
  std::uniform_int_distribution<unsigned long> pick(0, 1330);  // < p^3
  PrimeModulus m(p, k);
  for (int i = 0; i < 300; ++i) {
    unsigned long n = pick(rng);
    PadicNum lhs = gamma_int(Integer(n + 1), p, k);
    PadicNum g = gamma_int(Integer(n), p, k);
    PadicNum rhs = (n % p == 0)
                       ? -g
                       : -(embed_rational(Rational(n), m) * g);
    CHECK(congruent_mod(lhs, rhs, k));
  }
}

TEST_CASE("reflection formula") {
  CHECK(reflection_check(Rational(4), 7, 1));
  CHECK(reflection_check(Rational(1), 7, 2));
  CHECK(reflection_check(Rational(0), 11, 2));
  CHECK(reflection_check(Rational(1, 3), 13, 3));

  std::mt19937_64 rng(5);
  for (unsigned long p : {5ul, 7ul, 13ul}) {
    for (int i = 0; i < 100; ++i)
      CHECK(reflection_check(random_p_integral(rng, p), p, 2));
  }
}

TEST_CASE("gamma_d1 matches the direct difference quotient at x=0") {
  GammaContext ctx(5, 2, 4);
  DerivativeEstimate d = gamma_d1(Rational(0), ctx, 2);
  CHECK(d.step_exponent == 2);
  CHECK(d.valid_exponent == 2);
  // (Gamma_5(25) - 1)/25 mod 25, with Gamma_5(25) mod 5^4
  std::uint64_t g = gamma_oracle(25, 5, 625);
  Integer diff = (Integer(g) - 1) / 25;
  CHECK(d.value.residue(2) == diff % 25);
}

TEST_CASE("derivative stability across step exponents") {
  GammaContext c7(7, 2, 5);
  DerivativeEstimate a = gamma_d1(Rational(1, 3), c7, 2, 2);
  DerivativeEstimate b = gamma_d1(Rational(1, 3), c7, 2, 3);
  CHECK(congruent_mod(a.value, b.value, 2));

  GammaContext c72(7, 1, 5);
  DerivativeEstimate c = gamma_d2(Rational(0), c72, 1, 1);
  DerivativeEstimate d = gamma_d2(Rational(0), c72, 1, 2);
  CHECK(congruent_mod(c.value, d.value, 1));

  GammaContext c13(13, 1, 3);
  DerivativeEstimate e = gamma_d2(Rational(1, 3), c13, 1);
  CHECK(e.value.abs_precision() >= 1);
  CHECK(e.valid_exponent == 1);
}

TEST_CASE("insufficient working precision is an error") {
  GammaContext ctx(7, 2, 3);
  CHECK_THROWS_AS(gamma_d1(Rational(1, 3), ctx, 2), std::domain_error);
}

TEST_CASE("g1 and g2 shift identities at x=1") {
  const unsigned long p = 7;
  GammaContext ctx(p, 2, 4);
  CHECK(congruent_mod(g1(Rational(1), ctx, 2), g1(Rational(0), ctx, 2), 2));
  GammaContext ctx2(p, 1, 3);
  CHECK(congruent_mod(g2(Rational(1), ctx2, 1), g2(Rational(0), ctx2, 1), 1));
}

TEST_CASE("lemma22") {
  Lemma22Result a = lemma22_check(Rational(1), 7);
  CHECK(a.con1);
  CHECK(a.con2);
  Lemma22Result b = lemma22_check(Rational(1, 3), 7);
  CHECK(b.con1);
  CHECK(b.con2);
  Lemma22Result c = lemma22_check(Rational(2, 5), 11);
  CHECK(c.con1);
  CHECK(c.con2);
}

TEST_CASE("lemma23") {
  for (unsigned long p : {5ul, 7ul, 11ul}) CHECK(lemma23_check(p));

  // perturbation: a == a + 1 is impossible mod p
  GammaContext ctx(5, 1, 3);
  PadicNum a = g1(Rational(0), ctx, 1);
  PadicNum b = g2(Rational(0), ctx, 1);
  PadicNum one = PadicNum::from_integer(Integer(1), 5, 1);
  CHECK_FALSE(congruent_mod(a * a, b + one, 1));
}

TEST_CASE("gamma ratio p^3 expansion") {
  CHECK(gamma_ratio_expansion_check(3, 7));
  CHECK(gamma_ratio_expansion_check(4, 13));
  CHECK(gamma_ratio_expansion_check(3, 13));
}
