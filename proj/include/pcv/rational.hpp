#ifndef PCV_RATIONAL_HPP
#define PCV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace pcv {

using Integer = mpz_class;
using Rational = mpq_class;

// base^exp as an arbitrary-precision integer.
Integer int_pow(unsigned long base, unsigned exp);

// Deterministic primality test (trial division; sweep bounds are small).
bool is_prime(unsigned long n);

// All primes <= limit, ascending.
std::vector<unsigned long> sieve_primes(unsigned long limit);

// v such that r = p^v * (a/b) with p dividing neither a nor b.
// Throws std::domain_error for r = 0 (valuation of zero undefined).
long rational_valuation(const Rational& r, unsigned long p);

// Least nonnegative residue <r>_{p^k}: the unique t in [0, p^k) with
// den * t == num (mod p^k). Throws std::domain_error if p divides the
// denominator of r (not p-integral).
Integer least_residue(const Rational& r, unsigned long p, int k);

// Modular inverse via the extended Euclidean method.
// Throws std::domain_error if gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

}  // namespace pcv

#endif
