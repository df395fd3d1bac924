#include "pcv/padic.hpp"

#include <cstdlib>
#include <stdexcept>

namespace pcv {

PrimeModulus::PrimeModulus(unsigned long prime, int exponent)
    : p(prime), e(exponent) {
  if (!is_prime(prime) || prime < 5)
    throw std::invalid_argument("modulus prime must be a prime >= 5");
  if (exponent < 1) throw std::invalid_argument("precision exponent must be >= 1");
}

PadicNum PadicNum::zero(unsigned long p, int abs_precision) {
  PadicNum z;
  z.p_ = p;
  z.prec_ = abs_precision;
  z.zero_ = true;
  return z;
}

PadicNum PadicNum::from_parts(unsigned long p, long valuation, Integer unit,
                              int abs_precision) {
  if (valuation >= abs_precision) return zero(p, abs_precision);
  Integer mod = int_pow(p, static_cast<unsigned>(abs_precision - valuation));
  unit %= mod;
  if (unit < 0) unit += mod;
  if (unit == 0) return zero(p, abs_precision);
  Integer pz(p);
  if (mpz_divisible_p(unit.get_mpz_t(), pz.get_mpz_t())) {
    Integer stripped;
    long v = static_cast<long>(
        mpz_remove(stripped.get_mpz_t(), unit.get_mpz_t(), pz.get_mpz_t()));
    valuation += v;
    if (valuation >= abs_precision) return zero(p, abs_precision);
    unit = stripped % int_pow(p, static_cast<unsigned>(abs_precision - valuation));
  }
  PadicNum r;
  r.p_ = p;
  r.val_ = valuation;
  r.unit_ = unit;
  r.prec_ = abs_precision;
  r.zero_ = false;
  return r;
}

PadicNum PadicNum::from_integer(const Integer& t, unsigned long p, int k) {
  return from_parts(p, 0, t, k);
}

long PadicNum::valuation() const {
  if (zero_) throw std::domain_error("valuation of zero undefined");
  return val_;
}

const Integer& PadicNum::unit() const {
  if (zero_) throw std::domain_error("zero has no unit part");
  return unit_;
}

Integer PadicNum::residue(int k) const {
  if (prec_ < k) throw std::domain_error("precision too low for requested modulus");
  if (zero_) return Integer(0);
  if (val_ < 0) throw std::domain_error("negative valuation has no residue");
  Integer q = int_pow(p_, static_cast<unsigned>(k));
  return unit_ * int_pow(p_, static_cast<unsigned>(val_)) % q;
}

PadicNum PadicNum::truncated(int abs_precision) const {
  if (abs_precision > prec_)
    throw std::domain_error("cannot raise precision by truncation");
  if (zero_) return zero(p_, abs_precision);
  return from_parts(p_, val_, unit_, abs_precision);
}

PadicNum PadicNum::inverse() const {
  if (zero_) throw std::domain_error("not invertible at this precision");
  int rel = prec_ - static_cast<int>(val_);
  Integer inv = mod_inverse(unit_, int_pow(p_, static_cast<unsigned>(rel)));
  return from_parts(p_, -val_, inv, static_cast<int>(-val_) + rel);
}

PadicNum PadicNum::pow(unsigned long e) const {
  if (e == 0) {
    int rel = zero_ ? prec_ : prec_ - static_cast<int>(val_);
    return from_parts(p_, 0, Integer(1), rel);
  }
  PadicNum acc = *this;
  for (unsigned long i = 1; i < e; ++i) acc = acc * *this;
  return acc;
}

namespace {
void require_same_prime(const PadicNum& a, const PadicNum& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("operands have different primes");
}
}  // namespace

PadicNum operator+(const PadicNum& a, const PadicNum& b) {
  require_same_prime(a, b);
  unsigned long p = a.prime();
  int prec = std::min(a.abs_precision(), b.abs_precision());
  if (a.is_zero() && b.is_zero()) return PadicNum::zero(p, prec);
  if (a.is_zero()) return b.truncated(prec);
  if (b.is_zero()) return a.truncated(prec);
  long vmin = std::min(a.valuation(), b.valuation());
  if (vmin >= prec) return PadicNum::zero(p, prec);
  Integer s =
      a.unit() * int_pow(p, static_cast<unsigned>(a.valuation() - vmin)) +
      b.unit() * int_pow(p, static_cast<unsigned>(b.valuation() - vmin));
  return PadicNum::from_parts(p, vmin, s, prec);
}

PadicNum operator-(const PadicNum& a) {
  if (a.is_zero()) return a;
  return PadicNum::from_parts(a.prime(), a.valuation(), -a.unit(),
                              a.abs_precision());
}

PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }

PadicNum operator*(const PadicNum& a, const PadicNum& b) {
  require_same_prime(a, b);
  unsigned long p = a.prime();
  if (a.is_zero() || b.is_zero()) {
    // 0 mod p^r times p^v*unit is 0 mod p^{r+v}.
    const PadicNum& z = a.is_zero() ? a : b;
    const PadicNum& o = a.is_zero() ? b : a;
    long shift = o.is_zero() ? o.abs_precision() : o.valuation();
    return PadicNum::zero(p, z.abs_precision() + static_cast<int>(shift));
  }
  long val = a.valuation() + b.valuation();
  int rel = std::min(a.abs_precision() - static_cast<int>(a.valuation()),
                     b.abs_precision() - static_cast<int>(b.valuation()));
  return PadicNum::from_parts(p, val, a.unit() * b.unit(),
                              static_cast<int>(val) + rel);
}

PadicNum embed_rational(const Rational& r, const PrimeModulus& m) {
  if (r == 0) return PadicNum::zero(m.p, m.e);
  long v = rational_valuation(r, m.p);
  Rational unit_part = r;
  if (v != 0) {
    Rational pv(int_pow(m.p, static_cast<unsigned>(std::labs(v))));
    if (v > 0)
      unit_part /= pv;
    else
      unit_part *= pv;
  }
  Integer u = least_residue(unit_part, m.p, m.e);
  return PadicNum::from_parts(m.p, v, u, m.e + static_cast<int>(v));
}

bool congruent_mod(const PadicNum& a, const PadicNum& b, int k) {
  if (a.abs_precision() < k || b.abs_precision() < k)
    throw std::domain_error("precision too low for requested modulus");
  PadicNum d = a - b;
  if (d.is_zero()) return true;
  return d.valuation() >= k;
}

}  // namespace pcv
