#include "sunit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

#include "sunit/errors.hpp"

namespace sunit {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& letter) {
  if (letter.exponent == 0) return;
  if (!out.empty() && out.back().gen == letter.gen) {
    out.back().exponent += letter.exponent;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back(letter);
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word sequence() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return w;
      w = w * factor();
    }
  }

  Word factor() {
    Word base;
    const char ch = text_[pos_];
    if (ch == 'a' || ch == 'b') {
      ++pos_;
      base = Word({{ch == 'a' ? Generator::kA : Generator::kB, 1}});
    } else if (ch == '(') {
      ++pos_;
      base = sequence();
      skip_space();
      if (pos_ == text_.size()) fail("missing ')'");
      ++pos_;
    } else {
      fail("unexpected '" + std::string(1, ch) + "'");
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return base.power(exponent());
    }
    return base;
  }

  long exponent() {
    skip_space();
    const bool braced = pos_ < text_.size() && text_[pos_] == '{';
    if (braced) ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("missing exponent");
    const long value = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (braced) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != '}') fail("missing '}'");
      ++pos_;
    }
    return negative ? -value : value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Squares out the S part of an integer; true when nothing else is left.
bool supported_on(Integer n, const SPlaceSet& s) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (unsigned long p : s.primes()) {
    Integer prime(p);
    mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
  }
  return n == 1;
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  for (const auto& l : letters) push_reduced(letters_, l);
}

long Word::length() const {
  return std::accumulate(letters_.begin(), letters_.end(), 0L,
                         [](long acc, const Letter& l) { return acc + std::labs(l.exponent); });
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return Word(std::move(out));
}

Word Word::power(long n) const {
  const Word unit = n < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < std::labs(n); ++i) out = out * unit;
  return out;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen == Generator::kA ? 'a' : 'b';
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

Word operator*(const Word& x, const Word& y) {
  Word out = x;
  for (const auto& l : y.letters_) push_reduced(out.letters_, l);
  return out;
}

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Assignment standard_assignment() {
  return {RatQuaternion(-1, 1, -1, -3), RatQuaternion(-9, -7, -1, 7)};
}

RatQuaternion evaluate(const Word& w, const Assignment& assignment) {
  RatQuaternion out = RatQuaternion::scalar(1);
  for (const auto& l : w.letters()) {
    const RatQuaternion& g = l.gen == Generator::kA ? assignment.a : assignment.b;
    if (g.is_zero()) {
      throw ZeroElementError(std::string("generator ") + (l.gen == Generator::kA ? "a" : "b") +
                             " is assigned 0");
    }
    out = out * power(g, l.exponent);
  }
  return out;
}

bool is_central(const RatQuaternion& q) { return q[1] == 0 && q[2] == 0 && q[3] == 0; }

const std::vector<RelatorSpec>& standard_relators() {
  static const std::vector<RelatorSpec> relators{
      {"r1", "(b^{-1}a^{-1}ba^{-1})^3"},
      {"r2", "(b^{-1}a^{-2}ba^{-1}b^{-1}a^{-1})^2"},
      {"r3", "(a^{-1}b^{-1}a^{-1}b^{-1}a^{-1}ba^{-1})^2"},
      {"r4",
       "b^{-1}abab^{-1}a^{-1}b^2ab^{-1}aba^2b^{-1}abab^{-1}a^2ba^2b^{-1}a^{-1}ba^{-2}b^{-1}a^{-2}"},
      {"r5", "(ba^2b^{-1}aba^{-1}b)^2"},
      {"r6", "b^{-1}a^3ba^2b^{-1}ab^{-1}a^{-2}ba^{-1}b^{-1}a"},
      {"r7", "b^{-2}a^{-1}ba^{-1}b^{-1}aba^2b^{-2}a^{-2}ba^{-1}"},
      {"r8", "ab^{-1}a^2ba^{-1}b^{-1}a^{-2}ba^{-2}b^{-1}aba"},
  };
  return relators;
}

RelatorReport evaluate_relators(const std::vector<RelatorSpec>& relators,
                                const Assignment& assignment) {
  RelatorReport report;
  for (const auto& r : relators) {
    RelatorResult result{r.name, r.text, parse_word(r.text), {}, false};
    result.value = evaluate(result.word, assignment);
    result.central = !result.value.is_zero() && is_central(result.value);
    report.results.push_back(std::move(result));
  }
  report.passed = std::all_of(report.results.begin(), report.results.end(),
                              [](const RelatorResult& r) { return r.central; });
  return report;
}

RelatorReport verify_relators() {
  RelatorReport report = evaluate_relators(standard_relators(), standard_assignment());
  for (const auto& r : report.results) {
    if (!r.central) {
      throw VerificationError("relator " + r.name + " evaluates to the non-central element " +
                              to_string(r.value));
    }
  }
  return report;
}

std::optional<RescaleWitness> rescale_to_s_unit(const RatQuaternion& q, const SPlaceSet& s) {
  if (q.is_zero()) throw ZeroElementError("rescaling zero");
  constexpr int kWindow = 4;
  std::vector<unsigned long> primes{2};
  primes.insert(primes.end(), s.primes().begin(), s.primes().end());

  std::vector<std::vector<int>> exponents;
  std::vector<int> e(primes.size(), -kWindow);
  for (;;) {
    exponents.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == kWindow) e[i++] = -kWindow;
    if (i == e.size()) break;
    ++e[i];
  }
  auto weight = [](const std::vector<int>& v) {
    int w = 0;
    for (int x : v) w += std::abs(x);
    return w;
  };
  std::stable_sort(exponents.begin(), exponents.end(), [&](const auto& x, const auto& y) {
    const int wx = weight(x), wy = weight(y);
    return wx != wy ? wx < wy : x < y;
  });

  for (const auto& exps : exponents) {
    Rational scalar = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), primes[i], static_cast<unsigned long>(std::abs(exps[i])));
      scalar *= exps[i] >= 0 ? Rational(pw) : Rational(1) / Rational(pw);
    }
    scalar.canonicalize();
    const RatQuaternion candidate = q / scalar;
    if (!is_hurwitz(candidate)) continue;
    const Rational norm = candidate.reduced_norm();
    if (!supported_on(norm.get_num(), s)) continue;
    return RescaleWitness{scalar, HurwitzElement::from_quaternion(candidate), norm.get_num()};
  }
  return std::nullopt;
}

}  // namespace sunit
