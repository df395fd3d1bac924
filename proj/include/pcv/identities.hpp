#ifndef PCV_IDENTITIES_HPP
#define PCV_IDENTITIES_HPP

#include <pcv/rational.hpp>

#include <utility>
#include <vector>

namespace pcv {

// Dense polynomial over Q, coefficients ascending by degree, trailing
// zeros trimmed; the zero polynomial is the empty list.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(size_t i) const;

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);

 private:
  std::vector<Rational> coeffs_;
};

// prod_{j=0}^{k-1} (1 + shift + x + j) as a polynomial in x.
PolyQ poly_pochhammer(const Rational& shift, unsigned long k);

PolyQ poly_derivative(const PolyQ& f);

Rational poly_eval(const PolyQ& f, const Rational& x0);

enum class DerivIdentity { akd1, akd2, bkd1, bkd2, abkd1, abkd2 };

// The six logarithmic-derivative identities for rising factorials,
// checked exactly at x0 via formal polynomial calculus against harmonic
// sums. Throws std::domain_error on a pole at the evaluation point.
bool derivative_identity_check(DerivIdentity which, const Rational& alpha,
                               const Rational& beta, const Rational& x0,
                               unsigned long k);

// Terminating series with upper parameters exceeding lower ones by
// nonnegative integers, against its closed form.
struct KMInstance {
  std::vector<Rational> b;
  std::vector<unsigned long> m;
};

// n+1Fn[-(sum m); b_i + m_i; b_i; 1] == (-1)^{sum m} (sum m)! / prod (b_i)_{m_i},
// exact equality of rationals.
bool km_identity_check(const KMInstance& inst);

// Psi(x,y) = n+1Fn[1-p, 1+m+x, 1+m+y, 1+m...; 1+x, 1+y, 1...; 1]
//          == (p-1)! / ((1+x)_m (1+y)_m (1)_m^{n-2}), exact at the point.
bool psi_closed_form_check(int n, unsigned long p, const Rational& x,
                           const Rational& y);

// Phi(p,0) = nFn-1[1+m-p, 1+m, ..., 1+m; 1, ..., 1; 1]_{p-1}
//          == (p-1)! / ((1-p)_m (m!)^{n-1}), exact.
bool phi_terminating_check(int n, unsigned long p);

// H_{p-1} == 0 (mod p^2) and H^{(2)}_{p-1} == 0 (mod p), as valuation
// tests on the exact harmonic numbers.
std::pair<bool, bool> wolstenholme_check(unsigned long p);

}  // namespace pcv

#endif
