#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace sunit {

// Working precision for real-valued constants, in significant decimal digits.
struct Precision {
  unsigned digits10 = 64;

  mpfr_prec_t bits() const;
  friend bool operator==(Precision, Precision) = default;
};

// Arbitrary-precision real number. Every value carries its own precision;
// binary operations round to the larger of the two operand precisions.
class Real {
 public:
  explicit Real(Precision prec = {});
  Real(long value, Precision prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_rational(const mpq_class& value, Precision prec);
  static Real from_integer(const mpz_class& value, Precision prec);
  // Accepts plain decimal or scientific notation. Throws ParseError.
  static Real from_string(std::string_view text, Precision prec);
  static Real pi(Precision prec);

  Precision precision() const { return prec_; }
  mpfr_srcptr get() const { return value_; }

  // Decimal rendering with the given number of significant digits. Moderate
  // magnitudes are printed without an exponent.
  std::string to_string(unsigned digits) const;
  std::string to_string() const { return to_string(prec_.digits10); }
  double to_double() const;
  mpz_class floor() const;
  bool is_finite() const;

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b);
  friend std::partial_ordering operator<=>(const Real& a, long b);

  friend Real pow(const Real& base, const Real& exponent);
  friend Real pow(const Real& base, const mpq_class& exponent);
  friend Real pow(const Real& base, long exponent);
  friend Real sqrt(const Real& x);
  friend Real log(const Real& x);
  friend Real exp(const Real& x);
  friend Real abs(const Real& x);

 private:
  Precision prec_;
  mpfr_t value_;
};

Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace sunit
