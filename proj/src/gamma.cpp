#include "pcv/gamma.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pcv/series.hpp"

namespace pcv {

namespace {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

uint64_t pow_u64_checked(unsigned long p, unsigned e) {
  Integer q = int_pow(p, e);
  if (!q.fits_ulong_p())
    throw std::overflow_error("working modulus exceeds the 64-bit product path");
  return q.get_ui();
}

// Gamma_p at each given integer point, all modulo q, in one product sweep.
std::vector<uint64_t> gamma_values(const std::vector<uint64_t>& points,
                                   uint64_t p, uint64_t q) {
  std::vector<size_t> order(points.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return points[a] < points[b]; });
  std::vector<uint64_t> out(points.size());
  uint64_t prod = 1 % q;
  uint64_t j = 1;
  for (size_t idx : order) {
    uint64_t n = points[idx];
    for (; j < n; ++j)
      if (j % p != 0) prod = mul_mod(prod, j % q, q);
    uint64_t v = prod;
    if (n & 1) v = (q - v) % q;  // sign (-1)^n
    out[idx] = v;
  }
  return out;
}

uint64_t to_u64(const Integer& n) {
  if (sgn(n) < 0 || !n.fits_ulong_p())
    throw std::overflow_error("gamma argument out of the 64-bit range");
  return n.get_ui();
}

// Signed difference of two residues mod q, normalized to [0, q).
Integer sub_mod(uint64_t a, uint64_t b, const Integer& q) {
  Integer d = Integer(a) - Integer(b);
  d %= q;
  if (d < 0) d += q;
  return d;
}

}  // namespace

GammaContext::GammaContext(unsigned long prime, int target, int working)
    : p(prime), target_exponent(target), working_exponent(working) {
  if (!is_prime(prime) || prime < 5)
    throw std::invalid_argument("gamma context needs a prime >= 5");
  if (target < 1 || working < target)
    throw std::invalid_argument("working exponent must be >= target exponent >= 1");
}

PadicNum gamma_int(const Integer& N, unsigned long p, int k) {
  if (sgn(N) < 0) throw std::invalid_argument("gamma_int needs N >= 0");
  uint64_t q = pow_u64_checked(p, static_cast<unsigned>(k));
  uint64_t v = gamma_values({to_u64(N)}, p, q)[0];
  return PadicNum::from_integer(Integer(v), p, k);
}

PadicNum gamma_at(const Rational& x, const GammaContext& ctx, int k) {
  if (k < 1 || k > ctx.working_exponent)
    throw std::invalid_argument("exponent outside the working range");
  Integer a = least_residue(x, ctx.p, k);
  return gamma_int(a, ctx.p, k);
}

bool reflection_check(const Rational& x, unsigned long p, int k) {
  GammaContext ctx(p, k, k);
  PadicNum lhs = gamma_at(x, ctx, k) * gamma_at(1 - x, ctx, k);
  Integer r = least_residue(-x, p, 1);
  // (-1)^{<-x>_p - 1}
  long sign = (r % 2 == 0) ? -1 : 1;
  PadicNum rhs = PadicNum::from_integer(Integer(sign), p, k);
  return congruent_mod(lhs, rhs, k);
}

DerivativeEstimate gamma_d1(const Rational& x, const GammaContext& ctx, int k,
                            int step_exponent) {
  int h = step_exponent > 0 ? step_exponent : std::max(k, 2);
  int w = h + k;
  if (ctx.working_exponent < w)
    throw std::domain_error("insufficient working precision");
  uint64_t q = pow_u64_checked(ctx.p, static_cast<unsigned>(w));
  uint64_t ph = pow_u64_checked(ctx.p, static_cast<unsigned>(h));
  uint64_t a = to_u64(least_residue(x, ctx.p, w));
  auto g = gamma_values({a, a + ph}, ctx.p, q);
  Integer diff = sub_mod(g[1], g[0], Integer(q));
  Integer phz = int_pow(ctx.p, static_cast<unsigned>(h));
  if (!mpz_divisible_p(diff.get_mpz_t(), phz.get_mpz_t()))
    throw std::logic_error("Gamma_p forward difference not divisible by step");
  return DerivativeEstimate{PadicNum::from_integer(diff / phz, ctx.p, k),
                            std::min(k, h), h};
}

DerivativeEstimate gamma_d2(const Rational& x, const GammaContext& ctx, int k,
                            int step_exponent) {
  int h = step_exponent > 0 ? step_exponent : k;
  if (2 * h < k)
    throw std::invalid_argument("second-difference step too small for target");
  int w = 2 * h + k;
  if (ctx.working_exponent < w)
    throw std::domain_error("insufficient working precision");
  uint64_t q = pow_u64_checked(ctx.p, static_cast<unsigned>(w));
  uint64_t ph = pow_u64_checked(ctx.p, static_cast<unsigned>(h));
  uint64_t a = to_u64(least_residue(x, ctx.p, w));
  uint64_t am = (a >= ph) ? a - ph : a + q - ph;  // <x - p^h>_{p^w}
  auto g = gamma_values({am, a, a + ph}, ctx.p, q);
  Integer qz(q);
  Integer num = (Integer(g[2]) + Integer(g[0]) - 2 * Integer(g[1])) % qz;
  if (num < 0) num += qz;
  Integer p2h = int_pow(ctx.p, static_cast<unsigned>(2 * h));
  if (!mpz_divisible_p(num.get_mpz_t(), p2h.get_mpz_t()))
    throw std::logic_error("Gamma_p central difference not divisible by step^2");
  return DerivativeEstimate{PadicNum::from_integer(num / p2h, ctx.p, k), k, h};
}

PadicNum g1(const Rational& x, const GammaContext& ctx, int k) {
  DerivativeEstimate d = gamma_d1(x, ctx, k);
  return d.value * gamma_at(x, ctx, k).inverse();
}

PadicNum g2(const Rational& x, const GammaContext& ctx, int k) {
  DerivativeEstimate d = gamma_d2(x, ctx, k);
  return d.value * gamma_at(x, ctx, k).inverse();
}

Lemma22Result lemma22_check(const Rational& x, unsigned long p) {
  Lemma22Result res{};

  // con1, mod p^2: first derivatives need products mod p^4.
  {
    GammaContext ctx(p, 2, 4);
    PadicNum lhs = g1(x, ctx, 2);
    Integer q2 = int_pow(p, 2);
    uint64_t bound = least_residue(x, p, 2).get_ui();
    Integer s = 0;
    for (uint64_t j = 1; j < bound; ++j) {
      if (j % p == 0) continue;
      s += mod_inverse(Integer(j), q2);
    }
    PadicNum rhs = g1(Rational(0), ctx, 2) + PadicNum::from_integer(s, p, 2);
    res.con1 = congruent_mod(lhs, rhs, 2);
  }

  // con2, mod p: second derivatives need products mod p^3.
  {
    GammaContext ctx(p, 1, 3);
    PadicNum lhs = g2(x, ctx, 1);
    unsigned long bound = least_residue(x, p, 1).get_ui();
    Rational harm = harmonic_sum(bound > 0 ? bound - 1 : 0, 1, Rational(0));
    Rational harm2 = harmonic_sum(bound > 0 ? bound - 1 : 0, 2, Rational(0));
    Rational pairwise = (harm * harm - harm2) / 2;
    PrimeModulus m1(p, 1);
    PadicNum rhs = g2(Rational(0), ctx, 1) +
                   PadicNum::from_integer(Integer(2), p, 1) *
                       g1(Rational(0), ctx, 1) * embed_rational(harm, m1) +
                   PadicNum::from_integer(Integer(2), p, 1) *
                       embed_rational(pairwise, m1);
    res.con2 = congruent_mod(lhs, rhs, 1);
  }

  return res;
}

bool lemma23_check(unsigned long p, int k) {
  int working = std::max(std::max(k, 2) + k, 3 * k);
  GammaContext ctx(p, k, working);
  PadicNum a = g1(Rational(0), ctx, k);
  PadicNum b = g2(Rational(0), ctx, k);
  return congruent_mod(a * a, b, k);
}

bool gamma_ratio_expansion_check(int n, unsigned long p) {
  if (n < 3 || !is_prime(p) || p % static_cast<unsigned long>(n) != 1)
    throw std::invalid_argument("hypothesis not satisfied");
  unsigned long m = (p - 1) / static_cast<unsigned long>(n);

  // (p-1)! / ((1-p)_m * (m!)^{n-1})
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), p - 1);
  Integer mfact;
  mpz_fac_ui(mfact.get_mpz_t(), m);
  Integer mfact_pow;
  mpz_pow_ui(mfact_pow.get_mpz_t(), mfact.get_mpz_t(),
             static_cast<unsigned>(n - 1));
  Rational lhs_q =
      Rational(fact) /
      (pochhammer(Rational(1) - Rational(static_cast<unsigned long>(p)), m) *
       Rational(mfact_pow));

  PrimeModulus m3(p, 3);
  PadicNum lhs = embed_rational(lhs_q, m3);

  Rational invn(1, n);
  GammaContext ctx3(p, 3, 3);
  PadicNum gam = gamma_at(invn, ctx3, 3);
  GammaContext ctxd(p, 1, 3);
  PadicNum d = g2(invn, ctxd, 1) - g1(invn, ctxd, 1).pow(2);
  PrimeModulus m1(p, 1);
  PadicNum coeff = embed_rational(Rational(n - 1, 2 * n), m1) * d;
  PadicNum p2 = embed_rational(Rational(int_pow(p, 2)), m1);
  PadicNum one = embed_rational(Rational(1), m3);
  PadicNum rhs = -(gam.pow(static_cast<unsigned long>(n)) * (one + p2 * coeff));
  return congruent_mod(lhs, rhs, 3);
}

}  // namespace pcv
