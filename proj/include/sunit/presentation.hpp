#pragma once

// Words in two generators a, b, their exact evaluation in the quaternion
// algebra, and the check that a list of relators evaluates to central
// elements.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sunit/quaternion.hpp"

namespace sunit {

enum class Generator { kA, kB };

struct Letter {
  Generator gen;
  long exponent;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word: adjacent letters use distinct generators and no
// exponent is zero.
class Word {
 public:
  Word() = default;
  // Reduces the input freely.
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  // Sum of |exponent|.
  long length() const;
  Word inverse() const;
  Word power(long n) const;
  std::string to_string() const;  // e.g. "b^-1 a^3 b"

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Accepts "a", "b", exponents "^n", "^-n", "^{n}", "^{-n}" and parenthesized
// groups raised to a power, with optional whitespace. Throws ParseError.
Word parse_word(std::string_view text);

struct Assignment {
  RatQuaternion a;
  RatQuaternion b;
};

// a = -1 + I - J - 3K and b = -9 - 7I - J + 7K.
Assignment standard_assignment();

// Exact product of the letters. Throws ZeroElementError if a generator that
// occurs in w is assigned 0.
RatQuaternion evaluate(const Word& w, const Assignment& assignment);

// The I, J and K coordinates vanish.
bool is_central(const RatQuaternion& q);

struct RelatorSpec {
  std::string name;
  std::string text;
};

// The eight relators r1 ... r8 in the notation accepted by parse_word.
const std::vector<RelatorSpec>& standard_relators();

struct RelatorResult {
  std::string name;
  std::string text;
  Word word;
  RatQuaternion value;
  bool central = false;
};

struct RelatorReport {
  std::vector<RelatorResult> results;
  bool passed = false;
};

// Evaluates every relator under the assignment and records its value.
RelatorReport evaluate_relators(const std::vector<RelatorSpec>& relators,
                                const Assignment& assignment);
// The standard relators under the standard assignment. Throws
// VerificationError if any value is zero or not central.
RelatorReport verify_relators();

struct RescaleWitness {
  Rational scalar;
  HurwitzElement element;  // q / scalar
  Integer norm;
};

// Searches positive scalars 2^i prod_{l in S} l^j with exponents in [-4, 4],
// by increasing total |exponent|, for one that turns q into a Hurwitz element
// whose norm is supported on S. Throws ZeroElementError for q = 0.
std::optional<RescaleWitness> rescale_to_s_unit(const RatQuaternion& q, const SPlaceSet& s);

}  // namespace sunit
