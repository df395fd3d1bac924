#include "pcv/series.hpp"

#include <stdexcept>

#include "pcv/gamma.hpp"

namespace pcv {

namespace {

void require_case(int n, unsigned long p) {
  if (n < 3 || !is_prime(p) || p <= 3 ||
      p % static_cast<unsigned long>(n) != 1)
    throw std::invalid_argument("hypothesis not satisfied");
}

PadicNum minus_gamma_power(int n, unsigned long p) {
  GammaContext ctx(p, 3, 3);
  return -gamma_at(Rational(1, n), ctx, 3).pow(static_cast<unsigned long>(n));
}

}  // namespace

Rational pochhammer(const Rational& x, unsigned long k) {
  Rational r = 1;
  Rational f = x;
  for (unsigned long j = 0; j < k; ++j, f += 1) r *= f;
  return r;
}

Rational harmonic_sum(unsigned long k, int order, const Rational& shift) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("harmonic order must be 1 or 2");
  Rational sum = 0;
  Rational d = shift;
  for (unsigned long j = 1; j <= k; ++j) {
    d += 1;
    if (d == 0) throw std::domain_error("pole inside summation range");
    sum += (order == 1) ? Rational(1 / d) : Rational(1 / (d * d));
  }
  return sum;
}

Rational truncated_series(const HyperSpec& spec) {
  if (spec.truncation < 0)
    throw std::invalid_argument("truncation must be >= 0");
  Rational sum = 0;
  Rational term = 1;
  for (long k = 0; k <= spec.truncation; ++k) {
    sum += term;
    if (k == spec.truncation) break;
    Rational num = spec.z;
    for (const auto& u : spec.upper) num *= u + k;
    Rational den(k + 1);
    for (const auto& l : spec.lower) {
      Rational f = l + k;
      if (f == 0) throw std::domain_error("pole inside summation range");
      den *= f;
    }
    term *= num / den;
  }
  return sum;
}

CongruencePair theorem1_check(int n, unsigned long p, bool perturb) {
  require_case(n, p);
  HyperSpec spec;
  spec.upper.assign(static_cast<size_t>(n), Rational(n - 1, n));
  spec.lower.assign(static_cast<size_t>(n - 1), Rational(1));
  spec.z = 1;
  spec.truncation = static_cast<long>(p) - 1;
  PrimeModulus m3(p, 3);
  PadicNum lhs = embed_rational(truncated_series(spec), m3);
  PadicNum rhs = minus_gamma_power(n, p);
  if (perturb) rhs = rhs + embed_rational(Rational(int_pow(p, 2)), PrimeModulus(p, 1));
  return CongruencePair{lhs, rhs, 3, congruent_mod(lhs, rhs, 3)};
}

CongruencePair theorem2_check(int n, unsigned long p) {
  require_case(n, p);
  unsigned long m = (p - 1) / static_cast<unsigned long>(n);
  // base_k = p * k! / (1+1/n)_k, updated term by term
  Rational base(static_cast<unsigned long>(p));
  Rational sum = 0;
  long poch_val = 0;  // p-adic valuation of (1+1/n)_k
  for (unsigned long k = 0; k < p; ++k) {
    Rational t = base;
    Rational tn = 1;
    for (int i = 0; i < n; ++i) tn *= t;
    sum += tn;
    // (1+1/n)_k picks up exactly one factor of p, at the step k = m.
    if (poch_val != ((k < m) ? 0 : 1))
      throw std::logic_error("unexpected valuation of (1+1/n)_k");
    Rational f = Rational(1) + Rational(1, n) + Rational(k);
    poch_val += rational_valuation(f, p);
    base *= Rational(k + 1) / f;
  }
  PrimeModulus m3(p, 3);
  PadicNum lhs = embed_rational(sum, m3);
  PadicNum rhs = minus_gamma_power(n, p);
  return CongruencePair{lhs, rhs, 3, congruent_mod(lhs, rhs, 3)};
}

CongruencePair prop21_check(int n, unsigned long p) {
  require_case(n, p);
  Rational invn(1, n);
  Rational outer = 1;  // (1-1/n)_k^n / (k!)^n
  Rational inner = 0;  // sum_{j<=k} 1/(j - 1/n)^2
  Rational sum = 0;
  for (unsigned long k = 0; k < p; ++k) {
    sum += outer * inner;
    Rational f = (Rational(1) - invn + Rational(k)) / Rational(k + 1);
    Rational fn = 1;
    for (int i = 0; i < n; ++i) fn *= f;
    outer *= fn;
    Rational d = Rational(k + 1) - invn;
    inner += 1 / (d * d);
  }
  PrimeModulus m1(p, 1);
  PadicNum lhs = embed_rational(sum, m1);
  GammaContext ctx(p, 1, 3);
  PadicNum rhs = gamma_at(invn, ctx, 1).pow(static_cast<unsigned long>(n)) *
                 (g2(invn, ctx, 1) - g1(invn, ctx, 1).pow(2));
  return CongruencePair{lhs, rhs, 1, congruent_mod(lhs, rhs, 1)};
}

Lemma24Result lemma24_check(int n, unsigned long p) {
  require_case(n, p);
  unsigned long m = (p - 1) / static_cast<unsigned long>(n);
  Rational w = 1;  // (1+m)_k^n/(1)_k^n = C(m+k, m)^n
  Rational h_k = 0, h2_k = 0;
  Rational h_km = harmonic_sum(m, 1, Rational(0));
  Rational h2_km = harmonic_sum(m, 2, Rational(0));
  Rational l1 = 0, r1 = 0, l2 = 0, r2 = 0, l3 = 0, r3 = 0;
  for (unsigned long k = 0; k < p; ++k) {
    l1 += w * h_k;
    r1 += w * h_km;
    l2 += w * h_k * h_k;
    r2 += w * h_km * h_km;
    l3 += w * h2_k;
    r3 += w * h2_km;
    // C(m+k, m) == 0 (mod p) once m+k reaches p; w = C(m+k, m)^n
    if (k + m >= p && rational_valuation(w, p) < n)
      throw std::logic_error("binomial weight expected to vanish mod p");
    Rational f = Rational(1 + m + k) / Rational(k + 1);
    Rational fn = 1;
    for (int i = 0; i < n; ++i) fn *= f;
    w *= fn;
    h_k += Rational(1, Integer(k + 1));
    h2_k += Rational(1) / Rational(Integer(k + 1) * Integer(k + 1));
    Integer km(k + 1 + m);
    h_km += Rational(1) / Rational(km);
    h2_km += Rational(1) / Rational(km * km);
  }
  PrimeModulus m1(p, 1);
  Lemma24Result res{};
  res.harcon1 = congruent_mod(embed_rational(l1, m1), embed_rational(r1, m1), 1);
  res.harcon2 = congruent_mod(embed_rational(l2, m1), embed_rational(r2, m1), 1);
  res.con3 = congruent_mod(embed_rational(l3, m1), embed_rational(-r3, m1), 1);
  return res;
}

bool vanishing_sum_check(int n, unsigned long p) {
  require_case(n, p);
  unsigned long m = (p - 1) / static_cast<unsigned long>(n);
  Rational w = 1;
  Rational h2_k = 0;
  Rational sum = 0;
  for (unsigned long k = 0; k < p; ++k) {
    sum += w * h2_k;
    Rational f = Rational(1 + m + k) / Rational(k + 1);
    Rational fn = 1;
    for (int i = 0; i < n; ++i) fn *= f;
    w *= fn;
    h2_k += Rational(1) / Rational(Integer(k + 1) * Integer(k + 1));
  }
  if (sum == 0) return true;
  return rational_valuation(sum, p) >= 1;
}

Rational psi_origin_sum(int n, unsigned long p) {
  require_case(n, p);
  unsigned long m = (p - 1) / static_cast<unsigned long>(n);
  Rational w = 1;  // (1-p)_k (1+m)_k^n / (1)_k^{n+1}
  Rational sum = 0;
  for (unsigned long k = 0; k < p; ++k) {
    sum += w;
    Rational f = Rational(1 + m + k) / Rational(k + 1);
    Rational fn = 1;
    for (int i = 0; i < n; ++i) fn *= f;
    w *= fn * (Rational(1 + k) - Rational(static_cast<unsigned long>(p))) /
         Rational(k + 1);
  }
  return sum;
}

std::pair<bool, bool> weighted_km_sum_check(int n, unsigned long p) {
  require_case(n, p);
  unsigned long m = (p - 1) / static_cast<unsigned long>(n);
  Rational w = 1;         // (1-p)_k (1+m)_k^n / (1)_k^{n+1}
  Rational h2_shift = 0;  // sum_{j<=k} 1/(j+m)^2
  Rational h2_k = 0;
  Rational s_main = 0, s_diff = 0;
  for (unsigned long k = 0; k < p; ++k) {
    s_main += w * h2_shift;
    s_diff += w * (h2_shift - h2_k);
    Rational f = Rational(1 + m + k) / Rational(k + 1);
    Rational fn = 1;
    for (int i = 0; i < n; ++i) fn *= f;
    w *= fn * (Rational(1 + k) - Rational(static_cast<unsigned long>(p))) /
         Rational(k + 1);
    Integer km(k + 1 + m);
    h2_shift += Rational(1) / Rational(km * km);
    h2_k += Rational(1) / Rational(Integer(k + 1) * Integer(k + 1));
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), p - 1);
  Integer mfact;
  mpz_fac_ui(mfact.get_mpz_t(), m);
  Integer mfact_pow;
  mpz_pow_ui(mfact_pow.get_mpz_t(), mfact.get_mpz_t(), static_cast<unsigned>(n));
  Rational rhs = -Rational(fact) / Rational(mfact_pow) *
                 harmonic_sum(m, 2, Rational(0));
  PrimeModulus m1(p, 1);
  PadicNum rhs_p = embed_rational(rhs, m1);
  bool first = congruent_mod(embed_rational(s_main, m1), rhs_p, 1);
  bool second = congruent_mod(embed_rational(s_diff, m1), rhs_p, 1);
  return {first, second};
}

}  // namespace pcv
