#include "sunit/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

#include "sunit/enumerate.hpp"
#include "sunit/errors.hpp"

namespace sunit {

namespace {

Integer power_of(unsigned long p, long n) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(n));
  return out;
}

long valuation(Integer x, unsigned long p) {
  Integer prime(p);
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

// Lower bound for the valuation; exact when the entry is nonzero.
long valuation_floor(const PAdicScalar& x) {
  return x.is_zero() ? x.absolute_precision() : x.valuation();
}

std::array<Integer, 4> mul(const std::array<Integer, 4>& x, const std::array<Integer, 4>& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

}  // namespace

void TreeVertex::validate() const {
  if (p == 2 || !is_prime(p)) throw InvalidPrimeError("tree vertex at a non-odd-prime");
  if (a < 0 || b < 0) throw InputError("tree vertex exponents must be non-negative");
  if (c < 0 || c >= power_of(p, a)) throw InputError("tree vertex needs 0 <= c < p^a");
  if (a >= 1 && b >= 1 && c % p == 0) throw InputError("tree vertex basis is not primitive");
}

std::array<Integer, 4> TreeVertex::matrix() const {
  return {power_of(p, a), c, 0, power_of(p, b)};
}

std::string TreeVertex::to_string() const {
  std::ostringstream os;
  os << a << ',' << b << ',' << c;
  return os.str();
}

bool operator<(const TreeVertex& x, const TreeVertex& y) {
  return std::forward_as_tuple(x.p, x.a + x.b, x.a, x.b, x.c) <
         std::forward_as_tuple(y.p, y.a + y.b, y.a, y.b, y.c);
}

ProductVertex ProductVertex::base(const SPlaceSet& s) {
  ProductVertex out;
  for (unsigned long p : s.primes()) out.components.push_back(TreeVertex::base(p));
  return out;
}

std::string ProductVertex::to_string() const {
  std::string out;
  for (const auto& v : components) {
    if (!out.empty()) out += ';';
    out += std::to_string(v.p) + ':' + v.to_string();
  }
  return out;
}

bool operator<(const ProductVertex& x, const ProductVertex& y) {
  return x.components < y.components;
}

CanonicalForm canonicalize_with_slack(const PAdicMatrix2& m) {
  const unsigned long p = m.prime();
  const long e = m.min_valuation();
  std::array<PAdicScalar, 4> x = m.entries();
  for (auto& entry : x) entry = entry.shifted(-e);

  // Column operations only: pivot on the bottom entry of smaller valuation.
  const PAdicScalar& b0 = x[2];
  const PAdicScalar& b1 = x[3];
  if (b0.is_zero() && b1.is_zero()) {
    throw PrecisionError("bottom row vanishes to working precision");
  }
  int pivot;
  if (b0.is_zero()) {
    pivot = 1;
  } else if (b1.is_zero()) {
    pivot = 0;
  } else {
    pivot = b1.valuation() < b0.valuation() ? 1 : 0;
  }
  const int other = 1 - pivot;
  const PAdicScalar& pivot_bottom = x[2 + pivot];
  if (valuation_floor(x[2 + other]) < pivot_bottom.valuation()) {
    throw PrecisionError("pivot undetermined at working precision");
  }
  const PAdicScalar ratio = x[2 + other] / pivot_bottom;
  const PAdicScalar t = x[other] - ratio * x[pivot];
  if (t.is_zero()) throw PrecisionError("lattice is degenerate to working precision");

  const long a = t.valuation();
  const long b = pivot_bottom.valuation();
  const PAdicScalar y = x[pivot] * pivot_bottom.shifted(-b).inverse();
  if (y.absolute_precision() < a) {
    throw PrecisionError("normal form entry c is not determined modulo p^" + std::to_string(a));
  }
  TreeVertex v{p, a, b, y.residue(a)};
  return {std::move(v), y.absolute_precision(), y.absolute_precision() - a};
}

TreeVertex canonicalize(const PAdicMatrix2& m) { return canonicalize_with_slack(m).vertex; }

TreeVertex canonicalize(const std::array<Integer, 4>& m, unsigned long p) {
  const Integer det = m[0] * m[3] - m[1] * m[2];
  if (det == 0) throw SingularMatrixError("canonicalize of a singular lattice basis");
  const long k = valuation(det, p) + 8;
  return canonicalize(PAdicMatrix2::from_integers(p, m, k));
}

std::vector<TreeVertex> neighbors(const TreeVertex& v) {
  const auto basis = v.matrix();
  const Integer p(v.p);
  std::vector<TreeVertex> out;
  out.reserve(v.p + 1);
  for (unsigned long j = 0; j < v.p; ++j) {
    out.push_back(canonicalize(mul(basis, {p, Integer(j), 0, 1}), v.p));
  }
  out.push_back(canonicalize(mul(basis, {1, 0, 0, p}), v.p));
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalForm act_with_slack(const RatQuaternion& gamma, const TreeVertex& v,
                             const SplittingData& split) {
  if (gamma.is_zero()) throw ZeroElementError("acting on the tree by zero");
  if (v.p != split.p) throw InputError("splitting and vertex are at different primes");
  const PAdicMatrix2 basis = PAdicMatrix2::from_integers(v.p, v.matrix(), split.precision);
  return canonicalize_with_slack(apply_splitting(gamma, split) * basis);
}

TreeVertex act(const RatQuaternion& gamma, const TreeVertex& v, const SplittingData& split) {
  return act_with_slack(gamma, v, split).vertex;
}

long distance(const TreeVertex& v1, const TreeVertex& v2) {
  if (v1.p != v2.p) throw InputError("distance between vertices of different trees");
  const auto m1 = v1.matrix();
  const std::array<Integer, 4> adj{m1[3], -m1[1], -m1[2], m1[0]};
  const auto ed = elementary_divisors(mul(adj, v2.matrix()), v1.p);
  return ed.e2 - ed.e1;
}

std::vector<TreeVertex> ball(unsigned long p, long radius) {
  if (radius < 0) throw InputError("ball radius must be non-negative");
  std::vector<TreeVertex> out;
  for (long a = 0; a <= radius; ++a) {
    const Integer bound = power_of(p, a);
    for (long b = 0; a + b <= radius; ++b) {
      for (Integer c = 0; c < bound; ++c) {
        if (a >= 1 && b >= 1 && c % p == 0) continue;
        out.push_back({p, a, b, c});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer ball_size(unsigned long p, long radius) {
  if (radius < 0) throw InputError("ball radius must be non-negative");
  return 1 + Integer(p + 1) * (power_of(p, radius) - 1) / Integer(p - 1);
}

NeighborCoverageReport verify_neighbor_coverage(unsigned long p, long precision) {
  const SplittingData split = hensel_lift_splitting(p, precision);
  const TreeVertex base = TreeVertex::base(p);
  NeighborCoverageReport report;
  report.p = p;
  report.expected = neighbors(base);
  const auto elements = enumerate_by_norm(p).elements;
  report.elements = elements.size();
  for (const auto& q : elements) ++report.hits[act(q.to_quaternion(), base, split)];

  report.passed = report.hits.size() == report.expected.size() &&
                  std::all_of(report.expected.begin(), report.expected.end(),
                              [&](const TreeVertex& v) { return report.hits.count(v) > 0; });
  if (!report.passed) {
    throw VerificationError("norm-" + std::to_string(p) + " elements reach " +
                            std::to_string(report.hits.size()) + " vertices, expected the " +
                            std::to_string(report.expected.size()) + " neighbors of the base");
  }
  return report;
}

TransitivityReport verify_product_transitivity(const SPlaceSet& s, long radius) {
  if (radius < 0) throw InputError("radius must be non-negative");
  TransitivityReport report;
  report.primes = s.primes();
  report.radius = radius;
  report.padic_precision = 2 * radius + 8;

  std::vector<SplittingData> splits;
  report.expected = 1;
  for (unsigned long p : report.primes) {
    splits.push_back(hensel_lift_splitting(p, report.padic_precision));
    report.ball_sizes.push_back(ball(p, radius).size());
    report.expected *= report.ball_sizes.back();
  }

  long min_slack = report.padic_precision;
  long min_certified = report.padic_precision;
  auto image_of_base = [&](const RatQuaternion& w) {
    ProductVertex out;
    for (const auto& split : splits) {
      auto form = act_with_slack(w, TreeVertex::base(split.p), split);
      min_slack = std::min(min_slack, form.slack);
      min_certified = std::min(min_certified, form.certified_digits);
      out.components.push_back(std::move(form.vertex));
    }
    return out;
  };
  auto inside = [radius](const ProductVertex& v) {
    return std::all_of(v.components.begin(), v.components.end(),
                       [radius](const TreeVertex& t) { return t.distance_to_base() <= radius; });
  };

  // Generators with the same image of the base are interchangeable moves:
  // w g (base) = w (g base). Keep the first of each class.
  const ProductVertex origin = ProductVertex::base(s);
  const auto gens = generating_set(s);
  report.generators = gens.size();
  std::map<ProductVertex, RatQuaternion> moves;
  for (const auto& g : gens) {
    if (radius == 0) break;  // the ball is the base alone
    const RatQuaternion q = g.to_quaternion();
    ProductVertex image = image_of_base(q);
    if (image != origin) moves.emplace(std::move(image), q);
  }
  report.distinct_moves = moves.size();

  std::deque<ProductVertex> frontier{origin};
  report.witnesses.emplace(origin, RatQuaternion::scalar(1));
  while (!frontier.empty()) {
    const ProductVertex v = std::move(frontier.front());
    frontier.pop_front();
    const RatQuaternion w = report.witnesses.at(v);
    for (const auto& [image, g] : moves) {
      const RatQuaternion next = w * g;
      ProductVertex reached = image_of_base(next);
      if (!inside(reached) || report.witnesses.count(reached)) continue;
      report.witnesses.emplace(reached, next);
      frontier.push_back(std::move(reached));
    }
  }
  report.reached = report.witnesses.size();
  report.min_slack = min_slack;
  report.max_precision_loss = report.padic_precision - min_certified;
  report.witnesses_are_s_units =
      std::all_of(report.witnesses.begin(), report.witnesses.end(),
                  [&](const auto& kv) { return is_s_unit(kv.second, s); });

  if (report.max_precision_loss > 2 * radius) {
    throw PrecisionError("tree search lost " + std::to_string(report.max_precision_loss) +
                         " p-adic digits, more than the 2R budget");
  }
  report.passed = report.reached == report.expected && report.witnesses_are_s_units;
  if (!report.passed) {
    throw VerificationError("reached " + std::to_string(report.reached) + " of " +
                            std::to_string(report.expected) + " product vertices at radius " +
                            std::to_string(radius) +
                            (report.witnesses_are_s_units ? "" : "; a witness is not an S-unit"));
  }
  return report;
}

}  // namespace sunit
