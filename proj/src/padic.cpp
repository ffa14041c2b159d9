#include "sunit/padic.hpp"

#include <algorithm>
#include <string>

#include "sunit/errors.hpp"

namespace sunit {

namespace {

Integer power_of(unsigned long p, long n) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(std::max(n, 0L)));
  return out;
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Splits off the p-part: returns v and replaces x by x / p^v.
long remove_p(Integer& x, unsigned long p) {
  Integer prime(p);
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

void require_same_prime(const PAdicScalar& x, const PAdicScalar& y) {
  if (x.prime() != y.prime()) throw InputError("p-adic operands over different primes");
}

void check_precision_request(long k) {
  if (k < 1) throw InputError("p-adic precision must be positive");
  if (k > kMaxPadicPrecision) {
    throw PrecisionError("p-adic precision " + std::to_string(k) + " exceeds the maximum " +
                         std::to_string(kMaxPadicPrecision));
  }
}

void require_odd_prime(unsigned long p) {
  if (p == 2 || !is_prime(p)) throw InvalidPrimeError("expected an odd prime, got " + std::to_string(p));
}

}  // namespace

// ---- PAdicScalar ---------------------------------------------------------------

PAdicScalar PAdicScalar::normalized(unsigned long p, long valuation, long relative,
                                    Integer residue) {
  if (relative <= 0) return zero(p, valuation + std::max(relative, 0L));
  residue = mod(residue, power_of(p, relative));
  if (residue == 0) return zero(p, valuation + relative);
  const long t = remove_p(residue, p);
  return PAdicScalar(p, valuation + t, relative - t, std::move(residue));
}

PAdicScalar PAdicScalar::zero(unsigned long p, long absolute_precision) {
  return PAdicScalar(p, absolute_precision, 0, Integer(0));
}

PAdicScalar PAdicScalar::from_integer(unsigned long p, const Integer& x, long precision) {
  return from_rational(p, Rational(x), precision);
}

PAdicScalar PAdicScalar::from_rational(unsigned long p, const Rational& x, long precision) {
  if (x == 0) return zero(p, precision);
  Integer num = x.get_num();
  Integer den = x.get_den();
  const long v = remove_p(num, p) - remove_p(den, p);
  const Integer modulus = power_of(p, precision);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  return PAdicScalar(p, v, precision, mod(num * inv, modulus));
}

Integer PAdicScalar::residue(long n) const {
  if (n > absolute_precision()) {
    throw PrecisionError("residue mod p^" + std::to_string(n) + " requested but only " +
                         std::to_string(absolute_precision()) + " digits are known");
  }
  if (n <= 0 || is_zero()) return 0;
  if (valuation_ < 0) throw PrecisionError("residue of a non-integral p-adic number");
  return mod(unit_ * power_of(p_, valuation_), power_of(p_, n));
}

PAdicScalar PAdicScalar::shifted(long t) const {
  return PAdicScalar(p_, valuation_ + t, relative_, unit_);
}

PAdicScalar PAdicScalar::inverse() const {
  if (is_zero()) throw PrecisionError("inverting a p-adic number that vanishes to working precision");
  const Integer modulus = power_of(p_, relative_);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
  return PAdicScalar(p_, -valuation_, relative_, inv);
}

PAdicScalar PAdicScalar::operator-() const {
  if (is_zero()) return *this;
  return PAdicScalar(p_, valuation_, relative_, mod(-unit_, power_of(p_, relative_)));
}

PAdicScalar operator+(const PAdicScalar& x, const PAdicScalar& y) {
  require_same_prime(x, y);
  const unsigned long p = x.p_;
  const long abs_prec = std::min(x.absolute_precision(), y.absolute_precision());
  const long v = std::min(x.valuation_, y.valuation_);
  if (abs_prec <= v) return PAdicScalar::zero(p, abs_prec);
  Integer sum = 0;
  if (!x.is_zero()) sum += x.unit_ * power_of(p, x.valuation_ - v);
  if (!y.is_zero()) sum += y.unit_ * power_of(p, y.valuation_ - v);
  return PAdicScalar::normalized(p, v, abs_prec - v, sum);
}

PAdicScalar operator-(const PAdicScalar& x, const PAdicScalar& y) { return x + (-y); }

PAdicScalar operator*(const PAdicScalar& x, const PAdicScalar& y) {
  require_same_prime(x, y);
  if (x.is_zero() || y.is_zero()) {
    // For zero operands the valuation field already holds the absolute precision.
    return PAdicScalar::zero(x.p_, std::min(x.absolute_precision() + y.valuation_,
                                            y.absolute_precision() + x.valuation_));
  }
  const long rel = std::min(x.relative_, y.relative_);
  return PAdicScalar(x.p_, x.valuation_ + y.valuation_, rel,
                     mod(x.unit_ * y.unit_, power_of(x.p_, rel)));
}

PAdicScalar operator/(const PAdicScalar& x, const PAdicScalar& y) { return x * y.inverse(); }

// ---- PAdicMatrix2 ----------------------------------------------------------------

PAdicMatrix2::PAdicMatrix2(PAdicScalar m00, PAdicScalar m01, PAdicScalar m10, PAdicScalar m11)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {
  for (const auto& e : m_) require_same_prime(m_[0], e);
}

PAdicMatrix2 PAdicMatrix2::from_integers(unsigned long p, const std::array<Integer, 4>& m,
                                         long precision) {
  return {PAdicScalar::from_integer(p, m[0], precision), PAdicScalar::from_integer(p, m[1], precision),
          PAdicScalar::from_integer(p, m[2], precision), PAdicScalar::from_integer(p, m[3], precision)};
}

PAdicMatrix2 PAdicMatrix2::identity(unsigned long p, long precision) {
  return from_integers(p, {1, 0, 0, 1}, precision);
}

long PAdicMatrix2::precision() const {
  long out = m_[0].absolute_precision();
  for (const auto& e : m_) out = std::min(out, e.absolute_precision());
  return out;
}

PAdicScalar PAdicMatrix2::determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

long PAdicMatrix2::min_valuation() const {
  bool found = false;
  long best = 0;
  for (const auto& e : m_) {
    if (e.is_zero()) continue;
    if (!found || e.valuation() < best) best = e.valuation();
    found = true;
  }
  if (!found) throw PrecisionError("matrix vanishes to working precision");
  for (const auto& e : m_) {
    if (e.is_zero() && e.absolute_precision() < best) {
      throw PrecisionError("minimum entry valuation undetermined at working precision");
    }
  }
  return best;
}

bool PAdicMatrix2::is_zero_mod(long n) const {
  return std::all_of(m_.begin(), m_.end(), [n](const PAdicScalar& e) {
    return e.is_zero() ? e.absolute_precision() >= n : e.valuation() >= n;
  });
}

PAdicMatrix2 PAdicMatrix2::scaled(const PAdicScalar& s) const {
  return {m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s};
}

PAdicMatrix2 PAdicMatrix2::operator-() const { return {-m_[0], -m_[1], -m_[2], -m_[3]}; }

PAdicMatrix2 operator+(const PAdicMatrix2& a, const PAdicMatrix2& b) {
  return {a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2], a.m_[3] + b.m_[3]};
}

PAdicMatrix2 operator-(const PAdicMatrix2& a, const PAdicMatrix2& b) { return a + (-b); }

PAdicMatrix2 operator*(const PAdicMatrix2& a, const PAdicMatrix2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

// ---- splittings ------------------------------------------------------------------

std::pair<unsigned long, unsigned long> solve_sum_of_squares(unsigned long p) {
  require_odd_prime(p);
  // x runs over units so that the Newton step on x is always available.
  for (unsigned long x = 1; x < p; ++x) {
    for (unsigned long y = 0; y < p; ++y) {
      if ((x * x + y * y + 1) % p == 0) return {x, y};
    }
  }
  throw VerificationError("no solution of x^2 + y^2 = -1 mod " + std::to_string(p));
}

SplittingData hensel_lift_splitting(unsigned long p, long k) {
  require_odd_prime(p);
  check_precision_request(k);
  auto [x0, y0] = solve_sum_of_squares(p);
  const Integer modulus = power_of(p, k);
  const Integer b = y0;
  Integer a = x0;
  // f(a) = a^2 + b^2 + 1; each step a <- a - f(a)/(2a) doubles the precision.
  for (long known = 1; known < k; known *= 2) {
    Integer f = a * a + b * b + 1;
    Integer two_a = 2 * a;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), two_a.get_mpz_t(), modulus.get_mpz_t());
    a = mod(a - f * inv, modulus);
  }
  if (mod(a * a + b * b + 1, modulus) != 0) {
    throw VerificationError("Hensel lift failed to reach precision p^" + std::to_string(k));
  }
  PAdicScalar pa = PAdicScalar::from_integer(p, a, k);
  PAdicScalar pb = PAdicScalar::from_integer(p, b, k);
  PAdicMatrix2 rho_i = PAdicMatrix2::from_integers(p, {0, 1, -1, 0}, k);
  PAdicMatrix2 rho_j(pa, pb, pb, -pa);
  return SplittingData{p, k, std::move(pa), std::move(pb), std::move(rho_i), std::move(rho_j)};
}

bool splitting_relations_hold(const SplittingData& split) {
  const PAdicMatrix2 id = PAdicMatrix2::identity(split.p, split.precision);
  const PAdicMatrix2& i = split.rho_i;
  const PAdicMatrix2& j = split.rho_j;
  const long k = split.precision;
  return (i * i + id).is_zero_mod(k) && (j * j + id).is_zero_mod(k) &&
         (i * j + j * i).is_zero_mod(k);
}

PAdicMatrix2 apply_splitting(const RatQuaternion& q, const SplittingData& split) {
  const unsigned long p = split.p;
  const long k = split.precision;
  auto coord = [&](std::size_t i) { return PAdicScalar::from_rational(p, q[i], k); };
  const PAdicMatrix2 ij = split.rho_i * split.rho_j;
  return PAdicMatrix2::identity(p, k).scaled(coord(0)) + split.rho_i.scaled(coord(1)) +
         split.rho_j.scaled(coord(2)) + ij.scaled(coord(3));
}

ElementaryDivisors elementary_divisors(const PAdicMatrix2& m) {
  const PAdicScalar det = m.determinant();
  if (det.is_zero()) {
    throw PrecisionError("determinant vanishes to working precision (val(det) >= " +
                         std::to_string(det.absolute_precision()) + ")");
  }
  const long e1 = m.min_valuation();
  return {e1, det.valuation() - e1};
}

ElementaryDivisors elementary_divisors(const std::array<Integer, 4>& m, unsigned long p) {
  const Integer det = m[0] * m[3] - m[1] * m[2];
  if (det == 0) throw SingularMatrixError("elementary divisors of a singular matrix");
  Integer g = 0;
  for (const auto& e : m) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  Integer det_copy = det;
  const long e1 = remove_p(g, p);
  return {e1, remove_p(det_copy, p) - e1};
}

Rational local_abs(const RatQuaternion& q, const SplittingData& split) {
  if (q.is_zero()) throw ZeroElementError("local absolute value of zero");
  const long e1 = apply_splitting(q, split).min_valuation();
  Rational out(power_of(split.p, std::abs(e1)));
  if (e1 > 0) out = 1 / out;
  out.canonicalize();
  return out;
}

Rational local_abs(const RatQuaternion& q, unsigned long p, long k) {
  return local_abs(q, hensel_lift_splitting(p, k));
}

}  // namespace sunit
