#ifndef PCV_PADIC_HPP
#define PCV_PADIC_HPP

#include <pcv/rational.hpp>

namespace pcv {

// Prime together with a precision exponent; all embeddings under this
// modulus are known modulo p^e.
struct PrimeModulus {
  unsigned long p;
  int e;

  PrimeModulus(unsigned long prime, int exponent);
};

/**
 * A p-adic number under absolute-precision capping.
 *
 * Non-zero values are p^valuation * unit with gcd(unit, p) = 1, known
 * modulo p^abs_precision (so the unit is stored modulo
 * p^{abs_precision - valuation}). A value that is indistinguishable from
 * zero at the tracked precision carries only the zero flag and the
 * precision. Comparisons beyond the tracked precision are hard errors,
 * never silent truncations.
 */
class PadicNum {
 public:
  static PadicNum zero(unsigned long p, int abs_precision);

  // Normalizing constructor: strips p-factors out of `unit` into the
  // valuation and reduces; collapses to zero when everything cancels.
  static PadicNum from_parts(unsigned long p, long valuation, Integer unit,
                             int abs_precision);

  // Integer t whose value is known modulo p^k.
  static PadicNum from_integer(const Integer& t, unsigned long p, int k);

  bool is_zero() const { return zero_; }
  unsigned long prime() const { return p_; }
  long valuation() const;
  int abs_precision() const { return prec_; }
  const Integer& unit() const;

  // Canonical least residue of the value modulo p^k (k <= abs_precision,
  // valuation >= 0 required).
  Integer residue(int k) const;

  PadicNum truncated(int abs_precision) const;
  PadicNum inverse() const;
  PadicNum pow(unsigned long e) const;

  friend PadicNum operator+(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator-(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator*(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator-(const PadicNum& a);

 private:
  PadicNum() = default;

  unsigned long p_ = 0;
  long val_ = 0;
  Integer unit_;
  int prec_ = 0;
  bool zero_ = true;
};

PadicNum embed_rational(const Rational& r, const PrimeModulus& m);

// a == b (mod p^k). Throws std::domain_error when either side's tracked
// precision is below k.
bool congruent_mod(const PadicNum& a, const PadicNum& b, int k);

}  // namespace pcv

#endif
