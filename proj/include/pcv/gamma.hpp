#ifndef PCV_GAMMA_HPP
#define PCV_GAMMA_HPP

#include <pcv/padic.hpp>

namespace pcv {

// Prime plus precision bookkeeping for Gamma_p work. Every evaluation runs
// modulo p^{working_exponent} over a product of length < p^{working_exponent}.
struct GammaContext {
  unsigned long p;
  int target_exponent;
  int working_exponent;

  GammaContext(unsigned long prime, int target, int working);
};

// A finite-difference derivative of Gamma_p, correct modulo
// p^{valid_exponent}, computed with step p^{step_exponent}.
struct DerivativeEstimate {
  PadicNum value;
  int valid_exponent;
  int step_exponent;
};

// Gamma_p(N) = (-1)^N * prod_{1<=j<N, p !| j} j, reduced mod p^k.
PadicNum gamma_int(const Integer& N, unsigned long p, int k);

// Gamma_p at a p-integral rational, via continuity: Gamma_p(<x>_{p^k}) mod p^k.
PadicNum gamma_at(const Rational& x, const GammaContext& ctx, int k);

// Gamma_p(x) Gamma_p(1-x) == (-1)^{<-x>_p - 1} (mod p^k).
bool reflection_check(const Rational& x, unsigned long p, int k);

// Forward difference (Gamma_p(x+p^h) - Gamma_p(x)) / p^h with h = max(k, 2)
// by default; truncation error has valuation >= h, so the estimate is valid
// modulo p^{min(k, h)}. Gamma values are computed modulo p^{h+k}.
DerivativeEstimate gamma_d1(const Rational& x, const GammaContext& ctx, int k,
                            int step_exponent = 0);

// Second central difference (Gamma_p(x+p^h) - 2 Gamma_p(x) + Gamma_p(x-p^h))
// / p^{2h}, h = k by default (any h >= ceil(k/2) is admissible); valid mod p^k.
DerivativeEstimate gamma_d2(const Rational& x, const GammaContext& ctx, int k,
                            int step_exponent = 0);

// G1 = Gamma_p'/Gamma_p and G2 = Gamma_p''/Gamma_p, valid mod p^k.
PadicNum g1(const Rational& x, const GammaContext& ctx, int k);
PadicNum g2(const Rational& x, const GammaContext& ctx, int k);

struct Lemma22Result {
  bool con1;  // G1(x) == G1(0) + sum_{1<=j<<x>_{p^2}, p !| j} 1/j   (mod p^2)
  bool con2;  // G2(x) == G2(0) + 2 G1(0) H + 2 sum_{i<j} 1/(ij)     (mod p)
};

Lemma22Result lemma22_check(const Rational& x, unsigned long p);

// G1(0)^2 == G2(0) (mod p^k).
bool lemma23_check(unsigned long p, int k = 1);

// (p-1)! / ((1-p)_m (m!)^{n-1}) ==
//   -Gamma_p(1/n)^n (1 + ((n-1)/2n) p^2 (G2(1/n) - G1(1/n)^2))  (mod p^3),
// where m = (p-1)/n.
bool gamma_ratio_expansion_check(int n, unsigned long p);

}  // namespace pcv

#endif
