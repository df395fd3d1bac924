#ifndef PCV_SERIES_HPP
#define PCV_SERIES_HPP

#include <pcv/padic.hpp>

#include <utility>
#include <vector>

namespace pcv {

// One truncated hypergeometric series: upper/lower parameter lists,
// argument z, truncation bound m.
struct HyperSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational z;
  long truncation = 0;
};

// One verified congruence: both sides as capped-precision p-adic values.
struct CongruencePair {
  PadicNum lhs;
  PadicNum rhs;
  int modulus_exponent;
  bool pass;
};

// Rising factorial x(x+1)...(x+k-1), exact; (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned long k);

// sum_{j=1}^{k} 1/(j + shift)^order, exact; k = 0 gives 0.
// Throws std::domain_error on a pole inside the summation range.
Rational harmonic_sum(unsigned long k, int order, const Rational& shift);

// Exact sum_{k=0}^{m} z^k/k! * prod(upper)_k / prod(lower)_k.
Rational truncated_series(const HyperSpec& spec);

// nFn-1[(n-1)/n, ..., (n-1)/n; 1, ..., 1; 1]_{p-1} == -Gamma_p(1/n)^n (mod p^3).
// `perturb` adds p^2 to the right side (negative-control hook).
CongruencePair theorem1_check(int n, unsigned long p, bool perturb = false);

// sum_{k=0}^{p-1} (p k!/(1+1/n)_k)^n == -Gamma_p(1/n)^n (mod p^3).
CongruencePair theorem2_check(int n, unsigned long p);

// sum_k (1-1/n)_k^n/(1)_k^n sum_{j<=k} 1/(j-1/n)^2
//   == Gamma_p(1/n)^n (G2(1/n) - G1(1/n)^2)  (mod p).
CongruencePair prop21_check(int n, unsigned long p);

struct Lemma24Result {
  bool harcon1;  // weights H_k vs H_{k+m}, plus sign
  bool harcon2;  // weights H_k^2 vs H_{k+m}^2, plus sign
  bool con3;     // weights H^{(2)}_k vs H^{(2)}_{k+m}, minus sign
};

Lemma24Result lemma24_check(int n, unsigned long p);

// sum_k (1+m)_k^n/(1)_k^n sum_{j<=k} 1/j^2 == 0 (mod p).
bool vanishing_sum_check(int n, unsigned long p);

// First flag: sum_k (1-p)_k (1+m)_k^n/(1)_k^{n+1} sum_{j<=k} 1/(j+m)^2
//   == -(p-1)!/(1)_m^n * H^{(2)}_m (mod p).
// Second flag: same weights against the differenced harmonic factor
//   sum_{j<=k} 1/(j+m)^2 - H^{(2)}_k, same right side.
std::pair<bool, bool> weighted_km_sum_check(int n, unsigned long p);

// Exact value of sum_k (1-p)_k (1+m)_k^n/(1)_k^{n+1}; equals (p-1)!/(1)_m^n.
Rational psi_origin_sum(int n, unsigned long p);

}  // namespace pcv

#endif
