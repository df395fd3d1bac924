#include "pcv/identities.hpp"

#include <numeric>
#include <stdexcept>

#include "pcv/series.hpp"

namespace pcv {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyQ(std::move(c));
}

PolyQ poly_pochhammer(const Rational& shift, unsigned long k) {
  PolyQ f({Rational(1)});
  for (unsigned long j = 0; j < k; ++j)
    f = f * PolyQ({Rational(1) + shift + Rational(j), Rational(1)});
  return f;
}

PolyQ poly_derivative(const PolyQ& f) {
  if (f.degree() < 1) return PolyQ();
  std::vector<Rational> c(static_cast<size_t>(f.degree()));
  for (size_t i = 1; i < f.coeffs().size(); ++i)
    c[i - 1] = f.coeffs()[i] * Rational(static_cast<unsigned long>(i));
  return PolyQ(std::move(c));
}

Rational poly_eval(const PolyQ& f, const Rational& x0) {
  Rational r = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    r = r * x0 + *it;
  return r;
}

namespace {

void require_no_pole(const Rational& shift, const Rational& x0,
                     unsigned long k) {
  for (unsigned long j = 1; j <= k; ++j)
    if (Rational(j) + shift + x0 == 0)
      throw std::domain_error("pole at evaluation point");
}

}  // namespace

bool derivative_identity_check(DerivIdentity which, const Rational& alpha,
                               const Rational& beta, const Rational& x0,
                               unsigned long k) {
  bool uses_alpha = which != DerivIdentity::bkd1 && which != DerivIdentity::bkd2;
  bool uses_beta = which != DerivIdentity::akd1 && which != DerivIdentity::akd2;
  if (uses_alpha) require_no_pole(alpha, x0, k);
  if (uses_beta) require_no_pole(beta, x0, k);

  PolyQ P = poly_pochhammer(alpha, k);
  PolyQ Q = poly_pochhammer(beta, k);
  Rational Pv = poly_eval(P, x0), Qv = poly_eval(Q, x0);
  PolyQ P1p = poly_derivative(P), Q1p = poly_derivative(Q);
  Rational P1 = poly_eval(P1p, x0), Q1 = poly_eval(Q1p, x0);
  Rational P2 = poly_eval(poly_derivative(P1p), x0);
  Rational Q2 = poly_eval(poly_derivative(Q1p), x0);

  Rational Sa = uses_alpha ? harmonic_sum(k, 1, alpha + x0) : Rational(0);
  Rational Ta = uses_alpha ? harmonic_sum(k, 2, alpha + x0) : Rational(0);
  Rational Sb = uses_beta ? harmonic_sum(k, 1, beta + x0) : Rational(0);
  Rational Tb = uses_beta ? harmonic_sum(k, 2, beta + x0) : Rational(0);

  switch (which) {
    case DerivIdentity::akd1:
      return P1 / Pv == Sa;
    case DerivIdentity::akd2:
      return P2 / Pv == Sa * Sa - Ta;
    case DerivIdentity::bkd1:
      // Q * d/dx (1/Q) = -Q'/Q
      return -Q1 / Qv == -Sb;
    case DerivIdentity::bkd2:
      // Q * d2/dx2 (1/Q) = (2Q'^2 - Q Q'') / Q^2
      return (2 * Q1 * Q1 - Qv * Q2) / (Qv * Qv) == Sb * Sb + Tb;
    case DerivIdentity::abkd1:
      // (Q/P) * d/dx (P/Q) = P'/P - Q'/Q
      return P1 / Pv - Q1 / Qv == Sa - Sb;
    case DerivIdentity::abkd2: {
      // (Q/P) * d2/dx2 (P/Q)
      Rational r2 = (P2 * Qv - Pv * Q2) / (Qv * Qv) -
                    2 * Q1 * (P1 * Qv - Pv * Q1) / (Qv * Qv * Qv);
      Rational lhs = r2 * Qv / Pv;
      Rational d = Sa - Sb;
      return lhs == d * d + Tb - Ta;
    }
  }
  throw std::invalid_argument("unknown identity");
}

bool km_identity_check(const KMInstance& inst) {
  if (inst.b.size() != inst.m.size() || inst.b.empty())
    throw std::invalid_argument("b and m must be nonempty, equal length");
  unsigned long total = std::accumulate(inst.m.begin(), inst.m.end(), 0ul);
  for (const auto& bi : inst.b) {
    // a nonpositive-integer b_i inside the terminating range poles (b_i)_k
    if (bi.get_den() == 1 && bi <= 0 && bi + Rational(total) > 0)
      throw std::domain_error("pole inside summation range");
  }
  Rational term = 1, series = 0;
  for (unsigned long k = 0; k <= total; ++k) {
    series += term;
    if (k == total) break;
    Rational num = Rational(k) - Rational(total);
    Rational den(k + 1);
    for (size_t i = 0; i < inst.b.size(); ++i) {
      num *= inst.b[i] + Rational(inst.m[i]) + Rational(k);
      den *= inst.b[i] + Rational(k);
    }
    term *= num / den;
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), total);
  Rational closed(fact);
  if (total % 2 == 1) closed = -closed;
  for (size_t i = 0; i < inst.b.size(); ++i)
    closed /= pochhammer(inst.b[i], inst.m[i]);
  return series == closed;
}

namespace {

void require_psi_case(int n, unsigned long p) {
  if (n < 3 || !is_prime(p) || p <= 3 ||
      p % static_cast<unsigned long>(n) != 1)
    throw std::invalid_argument("hypothesis not satisfied");
}

}  // namespace

bool psi_closed_form_check(int n, unsigned long p, const Rational& x,
                           const Rational& y) {
  require_psi_case(n, p);
  unsigned long m = (p - 1) / static_cast<unsigned long>(n);
  Rational px = pochhammer(Rational(1) + x, m);
  Rational py = pochhammer(Rational(1) + y, m);
  if (px == 0 || py == 0) throw std::domain_error("pole at evaluation point");

  HyperSpec spec;
  spec.upper = {Rational(1) - Rational(static_cast<unsigned long>(p)),
                Rational(1 + m) + x, Rational(1 + m) + y};
  spec.lower = {Rational(1) + x, Rational(1) + y};
  for (int i = 0; i < n - 2; ++i) {
    spec.upper.push_back(Rational(1 + m));
    spec.lower.push_back(Rational(1));
  }
  spec.z = 1;
  spec.truncation = static_cast<long>(p) - 1;

  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), p - 1);
  Integer mfact;
  mpz_fac_ui(mfact.get_mpz_t(), m);
  Integer mfact_pow;
  mpz_pow_ui(mfact_pow.get_mpz_t(), mfact.get_mpz_t(),
             static_cast<unsigned>(n - 2));
  Rational closed = Rational(fact) / (px * py * Rational(mfact_pow));
  return truncated_series(spec) == closed;
}

bool phi_terminating_check(int n, unsigned long p) {
  require_psi_case(n, p);
  unsigned long m = (p - 1) / static_cast<unsigned long>(n);
  HyperSpec spec;
  spec.upper.push_back(Rational(1 + m) - Rational(static_cast<unsigned long>(p)));
  for (int i = 0; i < n - 1; ++i) {
    spec.upper.push_back(Rational(1 + m));
    spec.lower.push_back(Rational(1));
  }
  spec.z = 1;
  spec.truncation = static_cast<long>(p) - 1;

  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), p - 1);
  Integer mfact;
  mpz_fac_ui(mfact.get_mpz_t(), m);
  Integer mfact_pow;
  mpz_pow_ui(mfact_pow.get_mpz_t(), mfact.get_mpz_t(),
             static_cast<unsigned>(n - 1));
  Rational closed =
      Rational(fact) /
      (pochhammer(Rational(1) - Rational(static_cast<unsigned long>(p)), m) *
       Rational(mfact_pow));
  return truncated_series(spec) == closed;
}

std::pair<bool, bool> wolstenholme_check(unsigned long p) {
  if (!is_prime(p) || p <= 3)
    throw std::invalid_argument("hypothesis not satisfied");
  Rational h = harmonic_sum(p - 1, 1, Rational(0));
  Rational h2 = harmonic_sum(p - 1, 2, Rational(0));
  bool first = (h == 0) || rational_valuation(h, p) >= 2;
  bool second = (h2 == 0) || rational_valuation(h2, p) >= 1;
  return {first, second};
}

}  // namespace pcv
