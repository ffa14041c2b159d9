#pragma once

// Finite-precision p-adic numbers at odd primes, explicit splittings
// B (x) Q_p = M_2(Q_p) and the elementary divisors that realize the local
// absolute values |gamma|_p.

#include <array>
#include <utility>

#include "sunit/quaternion.hpp"

namespace sunit {

inline constexpr long kDefaultPadicPrecision = 32;
inline constexpr long kMaxPadicPrecision = 4096;

// p^valuation * unit, where unit is known modulo p^relative_precision. A value
// with relative precision 0 is indistinguishable from zero: it is O(p^N) with
// N = valuation. Every operation propagates the precision it can certify.
class PAdicScalar {
 public:
  // x known to `precision` significant digits (O(p^precision) for x = 0).
  static PAdicScalar from_integer(unsigned long p, const Integer& x, long precision);
  static PAdicScalar from_rational(unsigned long p, const Rational& x, long precision);
  static PAdicScalar zero(unsigned long p, long absolute_precision);

  unsigned long prime() const { return p_; }
  long valuation() const { return valuation_; }
  long relative_precision() const { return relative_; }
  long absolute_precision() const { return valuation_ + relative_; }
  const Integer& unit() const { return unit_; }
  bool is_zero() const { return relative_ == 0; }

  // Value modulo p^n. Needs a p-integral value and n <= absolute precision;
  // throws PrecisionError otherwise.
  Integer residue(long n) const;

  // Multiplication by p^t (exact, no precision change).
  PAdicScalar shifted(long t) const;
  // Throws PrecisionError when the value is indistinguishable from zero.
  PAdicScalar inverse() const;

  PAdicScalar operator-() const;
  friend PAdicScalar operator+(const PAdicScalar& x, const PAdicScalar& y);
  friend PAdicScalar operator-(const PAdicScalar& x, const PAdicScalar& y);
  friend PAdicScalar operator*(const PAdicScalar& x, const PAdicScalar& y);
  friend PAdicScalar operator/(const PAdicScalar& x, const PAdicScalar& y);

 private:
  PAdicScalar(unsigned long p, long valuation, long relative, Integer unit)
      : p_(p), valuation_(valuation), relative_(relative), unit_(std::move(unit)) {}
  static PAdicScalar normalized(unsigned long p, long valuation, long relative, Integer residue);

  unsigned long p_ = 3;
  long valuation_ = 0;
  long relative_ = 0;
  Integer unit_;
};

class PAdicMatrix2 {
 public:
  PAdicMatrix2(PAdicScalar m00, PAdicScalar m01, PAdicScalar m10, PAdicScalar m11);
  // Row-major integer entries, each known to `precision` digits.
  static PAdicMatrix2 from_integers(unsigned long p, const std::array<Integer, 4>& m,
                                    long precision);
  static PAdicMatrix2 identity(unsigned long p, long precision);

  const PAdicScalar& operator()(int i, int j) const { return m_[2 * i + j]; }
  const std::array<PAdicScalar, 4>& entries() const { return m_; }
  unsigned long prime() const { return m_[0].prime(); }
  // Common absolute-precision floor of the entries.
  long precision() const;

  PAdicScalar determinant() const;
  // Minimum entry valuation; throws PrecisionError if zero entries with too
  // little precision leave it undetermined.
  long min_valuation() const;
  // Every entry is zero modulo p^n.
  bool is_zero_mod(long n) const;

  PAdicMatrix2 scaled(const PAdicScalar& s) const;
  PAdicMatrix2 operator-() const;
  friend PAdicMatrix2 operator+(const PAdicMatrix2& a, const PAdicMatrix2& b);
  friend PAdicMatrix2 operator-(const PAdicMatrix2& a, const PAdicMatrix2& b);
  friend PAdicMatrix2 operator*(const PAdicMatrix2& a, const PAdicMatrix2& b);

 private:
  std::array<PAdicScalar, 4> m_;
};

// (x, y) with x^2 + y^2 = -1 (mod p): the smallest unit x, then the smallest y.
// Requires an odd prime.
std::pair<unsigned long, unsigned long> solve_sum_of_squares(unsigned long p);

// rho(I) = [[0,1],[-1,0]], rho(J) = [[a,b],[b,-a]] with a^2 + b^2 = -1 to
// precision p^k.
struct SplittingData {
  unsigned long p;
  long precision;
  PAdicScalar a;
  PAdicScalar b;
  PAdicMatrix2 rho_i;
  PAdicMatrix2 rho_j;
};

// Newton-lifts the deterministic mod-p solution on the unit coordinate.
// Throws PrecisionError when k exceeds kMaxPadicPrecision, InvalidPrimeError.
SplittingData hensel_lift_splitting(unsigned long p, long k = kDefaultPadicPrecision);

// rho(I)^2 = rho(J)^2 = -1 and rho(I) rho(J) = -rho(J) rho(I) to precision p^k.
bool splitting_relations_hold(const SplittingData& split);

PAdicMatrix2 apply_splitting(const RatQuaternion& q, const SplittingData& split);

struct ElementaryDivisors {
  long e1 = 0;
  long e2 = 0;
  friend bool operator==(const ElementaryDivisors&, const ElementaryDivisors&) = default;
};

// Smith exponents: e1 = min entry valuation, e2 = val(det) - e1. Throws
// PrecisionError when the determinant vanishes to working precision.
ElementaryDivisors elementary_divisors(const PAdicMatrix2& m);
// Exact integer matrix (row-major). Throws SingularMatrixError for det = 0.
ElementaryDivisors elementary_divisors(const std::array<Integer, 4>& m, unsigned long p);

// |q|_p = p^-e1 with e1 the minimum entry valuation of rho_p(q).
Rational local_abs(const RatQuaternion& q, const SplittingData& split);
Rational local_abs(const RatQuaternion& q, unsigned long p, long k = kDefaultPadicPrecision);

}  // namespace sunit
