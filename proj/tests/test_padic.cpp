#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcv/padic.hpp"

using namespace pcv;

namespace {

Rational random_p_integral(std::mt19937_64& rng, unsigned long p) {
  std::uniform_int_distribution<long> num(-2000, 2000);
  std::uniform_int_distribution<unsigned long> den(1, 2000);
  for (;;) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (!mpz_divisible_ui_p(r.get_den().get_mpz_t(), p)) return r;
  }
}

}  // namespace

TEST_CASE("embed_rational") {
  PrimeModulus m53(5, 3);
  PadicNum z = embed_rational(Rational(0), m53);
  CHECK(z.is_zero());
  CHECK(z.abs_precision() == 3);

  PrimeModulus m52(5, 2);
  PadicNum fifth = embed_rational(Rational(1, 5), m52);
  CHECK(fifth.valuation() == -1);
  CHECK(fifth.unit() == 1);

  PrimeModulus m72(7, 2);
  PadicNum r = embed_rational(Rational(28, 9), m72);
  CHECK(r.valuation() == 1);
  CHECK(r.unit() == least_residue(Rational(4, 9), 7, 2));
  CHECK(r.unit() == 44);  // 9 * 44 == 4 (mod 49)
}

TEST_CASE("padic add") {
  PrimeModulus m52(5, 2);
  PadicNum a = embed_rational(Rational(2), m52);
  PadicNum b = embed_rational(Rational(5), m52);
  PadicNum s = a + b;
  CHECK(s.valuation() == 0);
  CHECK(s.residue(2) == 7);

  PadicNum one = embed_rational(Rational(1), m52);
  PadicNum c = embed_rational(Rational(24), m52);
  PadicNum zero = one + c;
  CHECK(zero.is_zero());
  CHECK(zero.abs_precision() == 2);

  PadicNum z = PadicNum::zero(5, 1);
  PadicNum t = a + z;
  CHECK(t.abs_precision() == 1);
  CHECK(t.residue(1) == 2);
}

TEST_CASE("padic mul and inverse") {
  PrimeModulus m52(5, 2);
  PadicNum a = embed_rational(Rational(7), m52);
  PadicNum b = embed_rational(Rational(15), m52);
  PadicNum prod = a * b;
  CHECK(prod.valuation() == 1);
  CHECK(prod.unit() == 21);

  PadicNum two = embed_rational(Rational(2), m52);
  CHECK(two.inverse().unit() == 13);  // 2 * 13 == 1 (mod 25)

  PadicNum five = embed_rational(Rational(5), m52);
  PadicNum inv5 = five.inverse();
  CHECK(inv5.valuation() == -1);
  CHECK(inv5.unit() == 1);

  CHECK_THROWS_AS(PadicNum::zero(5, 2).inverse(), std::domain_error);
}

TEST_CASE("congruent_mod") {
  PrimeModulus m52(5, 2);
  PadicNum a = embed_rational(Rational(3, 7), m52);
  CHECK(congruent_mod(a, a, 2));

  PadicNum one = embed_rational(Rational(1), m52);
  PadicNum onep = embed_rational(Rational(6), m52);  // 1 + p
  CHECK(congruent_mod(one, onep, 1));
  CHECK_FALSE(congruent_mod(one, onep, 2));

  CHECK_THROWS_AS(congruent_mod(one, onep, 3), std::domain_error);
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(99);
  const unsigned long p = 7;
  PrimeModulus m(p, 4);
  for (int i = 0; i < 300; ++i) {
    Rational a = random_p_integral(rng, p);
    Rational b = random_p_integral(rng, p);
    CHECK(congruent_mod(embed_rational(a + b, m),
                        embed_rational(a, m) + embed_rational(b, m), 4));
    CHECK(congruent_mod(embed_rational(a * b, m),
                        embed_rational(a, m) * embed_rational(b, m), 4));
  }
}

TEST_CASE("inverse is two-sided at surviving precision") {
  std::mt19937_64 rng(7);
  const unsigned long p = 11;
  PrimeModulus m(p, 3);
  PadicNum one = embed_rational(Rational(1), m);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_p_integral(rng, p);
    if (a == 0) continue;
    PadicNum x = embed_rational(a, m);
    PadicNum prod = x * x.inverse();
    CHECK(congruent_mod(prod, one, prod.abs_precision()));
  }
}

TEST_CASE("valuation additive under multiplication") {
  std::mt19937_64 rng(21);
  const unsigned long p = 5;
  PrimeModulus m(p, 5);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<unsigned long> den(1, 5000);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    if (a == 0 || b == 0) continue;
    a.canonicalize();
    b.canonicalize();
    PadicNum x = embed_rational(a, m);
    PadicNum y = embed_rational(b, m);
    PadicNum prod = x * y;
    if (!prod.is_zero())
      CHECK(prod.valuation() == x.valuation() + y.valuation());
  }
}
