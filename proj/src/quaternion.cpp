#include "sunit/quaternion.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

#include "sunit/errors.hpp"

namespace sunit {

namespace {

// Hamilton product on coordinate arrays; shared by the rational and the
// doubled-integer representations.
template <class T>
std::array<T, 4> hamilton(const std::array<T, 4>& p, const std::array<T, 4>& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

long valuation(const Integer& n, unsigned long p) {
  if (n == 0) return 0;
  Integer rest;
  Integer prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

// n with every factor of the listed primes removed.
Integer strip_primes(Integer n, const std::vector<unsigned long>& primes) {
  for (unsigned long p : primes) {
    Integer prime(p);
    mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
  }
  return n;
}

Integer denominator_lcm(const RatQuaternion& q) {
  Integer l = 1;
  for (const auto& c : q.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

void require_odd_prime(unsigned long p) {
  if (p == 2 || !is_prime(p)) {
    throw InvalidPrimeError("expected an odd prime, got " + std::to_string(p));
  }
}

std::string rational_text(const Rational& r) {
  return r.get_str();
}

}  // namespace

// ---- RatQuaternion ---------------------------------------------------------

RatQuaternion::RatQuaternion(Rational w, Rational x, Rational y, Rational z)
    : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {
  for (auto& c : c_) c.canonicalize();
}

bool RatQuaternion::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c == 0; });
}

bool RatQuaternion::is_scalar() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

RatQuaternion RatQuaternion::conjugate() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

Rational RatQuaternion::reduced_norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Rational RatQuaternion::reduced_trace() const { return 2 * c_[0]; }

RatQuaternion RatQuaternion::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

RatQuaternion operator+(const RatQuaternion& a, const RatQuaternion& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

RatQuaternion operator-(const RatQuaternion& a, const RatQuaternion& b) { return a + (-b); }

RatQuaternion operator*(const RatQuaternion& a, const RatQuaternion& b) {
  auto p = hamilton(a.c_, b.c_);
  return {p[0], p[1], p[2], p[3]};
}

RatQuaternion operator*(const RatQuaternion& a, const Rational& r) {
  return {a.c_[0] * r, a.c_[1] * r, a.c_[2] * r, a.c_[3] * r};
}

RatQuaternion operator/(const RatQuaternion& a, const Rational& r) {
  if (r == 0) throw ZeroElementError("division of a quaternion by zero");
  return {a.c_[0] / r, a.c_[1] / r, a.c_[2] / r, a.c_[3] / r};
}

bool operator==(const RatQuaternion& a, const RatQuaternion& b) { return a.c_ == b.c_; }

bool operator<(const RatQuaternion& a, const RatQuaternion& b) {
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

RatQuaternion multiply(const RatQuaternion& a, const RatQuaternion& b) { return a * b; }

Rational reduced_norm(const RatQuaternion& q) { return q.reduced_norm(); }

RatQuaternion invert(const RatQuaternion& q) {
  if (q.is_zero()) throw ZeroElementError("cannot invert the zero quaternion");
  return q.conjugate() / q.reduced_norm();
}

RatQuaternion power(const RatQuaternion& q, long e) {
  RatQuaternion base = e < 0 ? invert(q) : q;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  RatQuaternion result = RatQuaternion::scalar(1);
  while (n != 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

bool is_hurwitz(const RatQuaternion& q) {
  bool all_integral = true;
  bool all_half_odd = true;
  for (const auto& c : q.coords()) {
    const Integer& den = c.get_den();
    if (den != 1) all_integral = false;
    if (den != 2) all_half_odd = false;  // reduced form: den 2 means odd numerator
  }
  return all_integral || all_half_odd;
}

long content_valuation(const RatQuaternion& q, unsigned long p) {
  require_odd_prime(p);
  if (q.is_zero()) throw ZeroElementError("content valuation of zero is undefined");
  bool first = true;
  long best = 0;
  for (const auto& c : q.coords()) {
    if (c == 0) continue;
    long v = valuation(c.get_num(), p) - valuation(c.get_den(), p);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Rational height(const RatQuaternion& q) {
  if (q.is_zero()) throw ZeroElementError("height of zero is undefined");
  Rational n = q.reduced_norm();
  Rational h = n > 1 ? n : Rational(1);

  long v2 = valuation(n.get_num(), 2) - valuation(n.get_den(), 2);
  if (v2 < 0) {
    Integer two_power;
    mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(-v2));
    h *= two_power;
  }

  // prod_{p odd} p^max(0, -e_p) is the odd part of the lcm of the coordinate
  // denominators: a negative e_p is minus the largest power of p among them.
  Integer odd_part = denominator_lcm(q);
  Integer two(2);
  mpz_remove(odd_part.get_mpz_t(), odd_part.get_mpz_t(), two.get_mpz_t());
  h *= odd_part;
  h.canonicalize();
  return h;
}

// ---- HurwitzElement --------------------------------------------------------

HurwitzElement::HurwitzElement(Integer a, Integer b, Integer c, Integer d)
    : d_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const bool parity = mpz_odd_p(d_[0].get_mpz_t()) != 0;
  for (const auto& x : d_) {
    if ((mpz_odd_p(x.get_mpz_t()) != 0) != parity) {
      throw InputError("doubled Hurwitz coordinates must share one parity");
    }
  }
}

HurwitzElement HurwitzElement::from_quaternion(const RatQuaternion& q) {
  if (!is_hurwitz(q)) throw InputError(to_string(q) + " is not in the Hurwitz order");
  std::array<Integer, 4> d;
  for (std::size_t i = 0; i < 4; ++i) {
    Rational twice = q[i] * 2;
    d[i] = twice.get_num();
  }
  return {d[0], d[1], d[2], d[3]};
}

RatQuaternion HurwitzElement::to_quaternion() const {
  return {Rational(d_[0], 2), Rational(d_[1], 2), Rational(d_[2], 2), Rational(d_[3], 2)};
}

Integer HurwitzElement::reduced_norm() const {
  Integer s = d_[0] * d_[0] + d_[1] * d_[1] + d_[2] * d_[2] + d_[3] * d_[3];
  return s / 4;
}

bool HurwitzElement::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](const Integer& x) { return x == 0; });
}

HurwitzElement HurwitzElement::conjugate() const { return {d_[0], -d_[1], -d_[2], -d_[3]}; }

HurwitzElement HurwitzElement::operator-() const { return {-d_[0], -d_[1], -d_[2], -d_[3]}; }

HurwitzElement operator*(const HurwitzElement& a, const HurwitzElement& b) {
  // (A/2)(B/2) = AB/4, so the doubled coordinates of the product are AB/2.
  auto p = hamilton(a.d_, b.d_);
  for (auto& x : p) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 2);
  return {p[0], p[1], p[2], p[3]};
}

bool operator<(const HurwitzElement& a, const HurwitzElement& b) {
  return std::lexicographical_compare(a.d_.begin(), a.d_.end(), b.d_.begin(), b.d_.end());
}

namespace {

// Fraction-free (Bareiss) determinant of a small square integer matrix.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Integer order_index(const HurwitzElement& q) {
  if (q.is_zero()) throw ZeroElementError("order index of zero is undefined");
  // Z-basis {w, I, J, K} with w = (1+I+J+K)/2, in doubled coordinates.
  const std::array<HurwitzElement, 4> basis = {
      HurwitzElement(1, 1, 1, 1), HurwitzElement(0, 2, 0, 0), HurwitzElement(0, 0, 2, 0),
      HurwitzElement(0, 0, 0, 2)};
  std::vector<std::vector<Integer>> m(4, std::vector<Integer>(4));
  for (std::size_t col = 0; col < 4; ++col) {
    HurwitzElement image = q * basis[col];
    // (A,B,C,D) = t*(1,1,1,1) + 2*(0,u,v,w): t = A, the rest halves.
    const Integer& t = image.doubled(0);
    m[0][col] = t;
    for (std::size_t i = 1; i < 4; ++i) m[i][col] = (image.doubled(i) - t) / 2;
  }
  Integer det = bareiss_determinant(std::move(m));
  return abs(det);
}

// ---- S-places ----------------------------------------------------------------

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  Integer z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

SPlaceSet::SPlaceSet(std::vector<unsigned long> primes) : primes_(std::move(primes)) {
  for (unsigned long p : primes_) require_odd_prime(p);
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool SPlaceSet::contains(unsigned long p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

unsigned long SPlaceSet::max_norm() const { return primes_.empty() ? 1 : primes_.back(); }

std::string SPlaceSet::to_string() const {
  std::string out = "{inf";
  for (unsigned long p : primes_) out += "," + std::to_string(p);
  return out + "}";
}

bool is_s_unit(const RatQuaternion& q, const SPlaceSet& s) {
  if (q.is_zero()) return false;
  Rational n = q.reduced_norm();
  if (strip_primes(n.get_num(), s.primes()) != 1) return false;
  if (strip_primes(n.get_den(), s.primes()) != 1) return false;
  // Clear the S-part of the denominators, then ask for Hurwitz membership.
  Integer den = denominator_lcm(q);
  Integer s_part = den / strip_primes(den, s.primes());
  return is_hurwitz(q * Rational(s_part));
}

// ---- text format -------------------------------------------------------------

std::string to_string(const RatQuaternion& q) {
  static constexpr const char* kUnits[4] = {"", "*I", "*J", "*K"};
  std::string out = rational_text(q[0]);
  for (std::size_t i = 1; i < 4; ++i) {
    const Rational& c = q[i];
    out += c < 0 ? " - " : " + ";
    out += rational_text(abs(c));
    out += kUnits[i];
  }
  return out;
}

std::string to_string(const HurwitzElement& q) { return to_string(q.to_quaternion()); }

namespace {

class QuaternionParser {
 public:
  explicit QuaternionParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  RatQuaternion parse() {
    if (s_.empty()) fail("empty input");
    std::array<Rational, 4> acc{};
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(sign, acc);
    }
    return {acc[0], acc[1], acc[2], acc[3]};
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse quaternion '" + s_ + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(s_.substr(start, pos_ - start));
  }

  // Returns 0 for the real unit, 1..3 for I, J, K, or -1 when absent.
  int parse_unit() {
    if (peek() == 'K') {
      ++pos_;
      return 3;
    }
    if (peek() == 'I') {
      ++pos_;
      if (peek() == 'J') {
        ++pos_;
        return 3;
      }
      return 1;
    }
    if (peek() == 'J') {
      ++pos_;
      return 2;
    }
    return -1;
  }

  void parse_term(int sign, std::array<Rational, 4>& acc) {
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_integer();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        den = parse_integer();
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      has_coeff = true;
      if (peek() == '*') ++pos_;
    }
    int unit = parse_unit();
    if (unit < 0) {
      if (!has_coeff || (pos_ > 0 && s_[pos_ - 1] == '*')) fail("expected I, J, K or IJ");
      unit = 0;
    }
    acc[static_cast<std::size_t>(unit)] += sign * coeff;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatQuaternion parse_quaternion(std::string_view text) { return QuaternionParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const RatQuaternion& q) { return os << to_string(q); }

std::ostream& operator<<(std::ostream& os, const HurwitzElement& q) { return os << to_string(q); }

}  // namespace sunit
