#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcv/rational.hpp"

using namespace pcv;

TEST_CASE("rational_valuation") {
  CHECK(rational_valuation(Rational(1, 4), 5) == 0);
  CHECK(rational_valuation(Rational(10, 3), 5) == 1);
  CHECK(rational_valuation(Rational(28, 9), 7) == 1);  // (4/3)(7/3) = (1+1/3)_2
  CHECK(rational_valuation(Rational(1, 25), 5) == -2);
  CHECK_THROWS_AS(rational_valuation(Rational(0), 5), std::domain_error);
}

TEST_CASE("least_residue") {
  CHECK(least_residue(Rational(1, 3), 7, 1) == 5);
  CHECK(least_residue(Rational(-1, 3), 7, 1) == 2);
  CHECK(least_residue(Rational(1, 4), 5, 3) == 94);
  CHECK_THROWS_AS(least_residue(Rational(1, 5), 5, 1), std::domain_error);
}

TEST_CASE("least_residue compatible across exponents") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<unsigned long> den(1, 500);
  const unsigned long p = 7;
  const int e = 4;
  Integer q = int_pow(p, e);
  for (int i = 0; i < 200; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), p)) continue;
    Integer big = least_residue(r, p, e);
    for (int k = 1; k < e; ++k) {
      CHECK(least_residue(r, p, k) == big % int_pow(p, k));
    }
  }
}

TEST_CASE("primality and sieve") {
  CHECK(sieve_primes(20) ==
        std::vector<unsigned long>({2, 3, 5, 7, 11, 13, 17, 19}));
  CHECK(sieve_primes(2) == std::vector<unsigned long>({2}));
  CHECK(sieve_primes(1).empty());
  CHECK(is_prime(151));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(143));  // 11 * 13
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(Integer(9), Integer(49)) == 11);
  CHECK_THROWS_AS(mod_inverse(Integer(7), Integer(49)), std::domain_error);
}
