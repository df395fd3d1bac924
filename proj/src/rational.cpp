#include "pcv/rational.hpp"

#include <stdexcept>

namespace pcv {

Integer int_pow(unsigned long base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (unsigned long d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<unsigned long> sieve_primes(unsigned long limit) {
  std::vector<unsigned long> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

long rational_valuation(const Rational& r, unsigned long p) {
  if (r == 0) throw std::domain_error("valuation of zero undefined");
  Integer pz(static_cast<unsigned long>(p));
  Integer tmp;
  if (mpz_divisible_p(r.get_num().get_mpz_t(), pz.get_mpz_t())) {
    return static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), r.get_num().get_mpz_t(), pz.get_mpz_t()));
  }
  if (mpz_divisible_p(r.get_den().get_mpz_t(), pz.get_mpz_t())) {
    return -static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), r.get_den().get_mpz_t(), pz.get_mpz_t()));
  }
  return 0;
}

Integer least_residue(const Rational& r, unsigned long p, int k) {
  if (k < 1) throw std::invalid_argument("exponent must be >= 1");
  Integer q = int_pow(p, static_cast<unsigned>(k));
  if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), p))
    throw std::domain_error("not p-integral");
  Integer t = r.get_num() % q;
  if (t < 0) t += q;
  if (r.get_den() != 1) t = t * mod_inverse(r.get_den(), q) % q;
  return t;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("not invertible at this precision");
  return inv;
}

}  // namespace pcv
