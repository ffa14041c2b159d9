#pragma once

// Exact arithmetic in Hamilton's quaternion algebra over Q (I^2 = J^2 = -1,
// IJ = -JI, K := IJ) and in its Hurwitz order Z<I, J, (1+I+J+K)/2>.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sunit {

using Integer = mpz_class;
using Rational = mpq_class;

class RatQuaternion {
 public:
  RatQuaternion() = default;
  RatQuaternion(Rational w, Rational x, Rational y, Rational z);

  static RatQuaternion scalar(const Rational& r) { return {r, 0, 0, 0}; }
  static RatQuaternion unit_i() { return {0, 1, 0, 0}; }
  static RatQuaternion unit_j() { return {0, 0, 1, 0}; }
  static RatQuaternion unit_k() { return {0, 0, 0, 1}; }

  // Coordinates in the basis {1, I, J, K}.
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 4>& coords() const { return c_; }

  bool is_zero() const;
  bool is_scalar() const;
  RatQuaternion conjugate() const;
  Rational reduced_norm() const;
  Rational reduced_trace() const;

  RatQuaternion operator-() const;
  friend RatQuaternion operator+(const RatQuaternion& a, const RatQuaternion& b);
  friend RatQuaternion operator-(const RatQuaternion& a, const RatQuaternion& b);
  friend RatQuaternion operator*(const RatQuaternion& a, const RatQuaternion& b);
  friend RatQuaternion operator*(const RatQuaternion& a, const Rational& r);
  friend RatQuaternion operator/(const RatQuaternion& a, const Rational& r);
  friend bool operator==(const RatQuaternion& a, const RatQuaternion& b);
  // Lexicographic on coordinates; only meant for ordered containers.
  friend bool operator<(const RatQuaternion& a, const RatQuaternion& b);

 private:
  std::array<Rational, 4> c_{};
};

RatQuaternion multiply(const RatQuaternion& a, const RatQuaternion& b);
Rational reduced_norm(const RatQuaternion& q);

// conjugate(q) / N(q). Throws ZeroElementError for q = 0.
RatQuaternion invert(const RatQuaternion& q);

// q^e for any integer e (negative powers go through invert).
RatQuaternion power(const RatQuaternion& q, long e);

// True iff all coordinates are integers or all are halves of odd integers.
bool is_hurwitz(const RatQuaternion& q);

// The largest e such that p^-e q is integral at p. Defined for odd primes
// only; 2 is ramified and handled through the norm. Throws ZeroElementError,
// InvalidPrimeError.
long content_valuation(const RatQuaternion& q, unsigned long p);

// Height as an exact rational: the archimedean factor max(1, N(q)), the
// ramified 2-adic factor max(1, |N(q)|_2) and max(1, p^-e_p(q)) for odd p.
// Throws ZeroElementError.
Rational height(const RatQuaternion& q);

// Element of the Hurwitz order stored by doubled coordinates: the element is
// (A + B*I + C*J + D*K) / 2 with A = B = C = D (mod 2).
class HurwitzElement {
 public:
  HurwitzElement() = default;
  // Throws InputError when the parities disagree.
  HurwitzElement(Integer a, Integer b, Integer c, Integer d);

  // Throws InputError when q is not in the Hurwitz order.
  static HurwitzElement from_quaternion(const RatQuaternion& q);

  const Integer& doubled(std::size_t i) const { return d_[i]; }
  const std::array<Integer, 4>& doubled_coords() const { return d_; }

  RatQuaternion to_quaternion() const;
  Integer reduced_norm() const;
  bool is_zero() const;
  HurwitzElement conjugate() const;

  HurwitzElement operator-() const;
  friend HurwitzElement operator*(const HurwitzElement& a, const HurwitzElement& b);
  friend bool operator==(const HurwitzElement& a, const HurwitzElement& b) = default;
  // Canonical order: lexicographic on (A, B, C, D).
  friend bool operator<(const HurwitzElement& a, const HurwitzElement& b);

 private:
  std::array<Integer, 4> d_{};
};

// [D : qD], computed as |det| of the integer matrix of x -> q x on a Z-basis of
// the Hurwitz order. Equals N(q)^2. Throws ZeroElementError.
Integer order_index(const HurwitzElement& q);

bool is_prime(unsigned long n);

// S = {inf} union a finite set of odd primes.
class SPlaceSet {
 public:
  SPlaceSet() = default;
  // Sorts and de-duplicates; throws InvalidPrimeError on 2 or a non-prime.
  explicit SPlaceSet(std::vector<unsigned long> primes);

  const std::vector<unsigned long>& primes() const { return primes_; }
  bool contains(unsigned long p) const;
  bool finite_part_empty() const { return primes_.empty(); }
  // Largest finite prime, or 1 when S = {inf}.
  unsigned long max_norm() const;
  std::string to_string() const;

 private:
  std::vector<unsigned long> primes_;
};

// q is invertible in the S-integral Hurwitz order: S-primes clear all
// denominators into the Hurwitz order and N(q) is supported on S (never on 2).
bool is_s_unit(const RatQuaternion& q, const SPlaceSet& s);

// Text form "w + x*I + y*J + z*K"; coefficients are integers or p/q.
// The canonical printer always writes the four terms in order, e.g.
// "-1/2 + 1/2*I - 1/2*J - 3/2*K".
std::string to_string(const RatQuaternion& q);
std::string to_string(const HurwitzElement& q);

// Whitespace-insensitive; terms may appear in any order, repeated units add
// up, a bare unit means coefficient 1, "IJ" is accepted for K and the '*' is
// optional. Throws ParseError.
RatQuaternion parse_quaternion(std::string_view text);

std::ostream& operator<<(std::ostream& os, const RatQuaternion& q);
std::ostream& operator<<(std::ostream& os, const HurwitzElement& q);

}  // namespace sunit
