#include "sunit/real.hpp"

#include <cmath>
#include <string>

#include "sunit/errors.hpp"

namespace sunit {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

Precision wider(const Real& a, const Real& b) {
  return a.precision().digits10 >= b.precision().digits10 ? a.precision() : b.precision();
}

}  // namespace

// Eight guard bits beyond the requested decimal digits.
mpfr_prec_t Precision::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(digits10 * kLog2Of10)) + 8;
}

Real::Real(Precision prec) : prec_(prec) {
  mpfr_init2(value_, prec_.bits());
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec) : prec_(prec) {
  mpfr_init2(value_, prec_.bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) : prec_(other.prec_) {
  mpfr_init2(value_, prec_.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(value_, prec_.bits());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(value_, prec_.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    std::swap(prec_, other.prec_);
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_rational(const mpq_class& value, Precision prec) {
  Real r(prec);
  mpfr_set_q(r.value_, value.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::from_integer(const mpz_class& value, Precision prec) {
  Real r(prec);
  mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::from_string(std::string_view text, Precision prec) {
  std::string s(text);
  Real r(prec);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ParseError("not a decimal number: '" + s + "'");
  }
  if (!r.is_finite()) throw ParseError("not a finite number: '" + s + "'");
  return r;
}

Real Real::pi(Precision prec) {
  Real r(prec);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(unsigned digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

mpz_class Real::floor() const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
  return out;
}

bool Real::is_finite() const { return mpfr_number_p(value_) != 0; }

Real Real::operator-() const {
  Real r(prec_);
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.prec_);
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.prec_);
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real pow(const Real& base, const Real& exponent) {
  Real r(wider(base, exponent));
  mpfr_pow(r.value_, base.value_, exponent.value_, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const mpq_class& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    return pow(base, exponent.get_num().get_si());
  }
  return pow(base, Real::from_rational(exponent, base.prec_));
}

Real pow(const Real& base, long exponent) {
  Real r(base.prec_);
  mpfr_pow_si(r.value_, base.value_, exponent, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.prec_);
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.prec_);
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.prec_);
  mpfr_exp(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.prec_);
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }
Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }

}  // namespace sunit
