#pragma once

// The Bruhat-Tits tree of GL_2(Q_p) for odd p, the action of quaternions on it
// through an explicit splitting, and the transitivity checks on products of
// trees.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sunit/padic.hpp"
#include "sunit/quaternion.hpp"

namespace sunit {

// Homothety class of the lattice spanned by the columns (p^a, 0) and
// (c, p^b), with 0 <= c < p^a. Primitive: a = 0, b = 0 or p does not divide c.
struct TreeVertex {
  unsigned long p = 3;
  long a = 0;
  long b = 0;
  Integer c = 0;

  static TreeVertex base(unsigned long p) { return {p, 0, 0, 0}; }
  // Throws InputError when the triple is not a valid normal form.
  void validate() const;
  long distance_to_base() const { return a + b; }
  // Row-major basis matrix [[p^a, c], [0, p^b]].
  std::array<Integer, 4> matrix() const;
  std::string to_string() const;  // "a,b,c"

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend bool operator<(const TreeVertex& x, const TreeVertex& y);
};

struct ProductVertex {
  std::vector<TreeVertex> components;  // sorted by prime

  static ProductVertex base(const SPlaceSet& s);
  std::string to_string() const;  // "3:a,b,c;5:a,b,c"

  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
  friend bool operator<(const ProductVertex& x, const ProductVertex& y);
};

struct CanonicalForm {
  TreeVertex vertex;
  long certified_digits = 0;  // absolute precision to which c was known
  long slack = 0;             // certified digits beyond the p^a that c needs
};

// Normal form of the class of the lattice spanned by the columns of m. Throws
// PrecisionError when the working precision cannot certify the result.
CanonicalForm canonicalize_with_slack(const PAdicMatrix2& m);
TreeVertex canonicalize(const PAdicMatrix2& m);
// Exact version for integer bases. Throws SingularMatrixError for det = 0.
TreeVertex canonicalize(const std::array<Integer, 4>& m, unsigned long p);

// The p + 1 index-p sublattices of v, canonically sorted.
std::vector<TreeVertex> neighbors(const TreeVertex& v);

// Class of rho_p(gamma) L_v. Throws ZeroElementError and PrecisionError.
CanonicalForm act_with_slack(const RatQuaternion& gamma, const TreeVertex& v,
                             const SplittingData& split);
TreeVertex act(const RatQuaternion& gamma, const TreeVertex& v, const SplittingData& split);

// e2 - e1 for adj(M1) M2. Throws InputError for vertices at different primes.
long distance(const TreeVertex& v1, const TreeVertex& v2);

// Every vertex within distance R of the base, canonically sorted.
std::vector<TreeVertex> ball(unsigned long p, long radius);
// 1 + (p + 1)(p^R - 1)/(p - 1).
Integer ball_size(unsigned long p, long radius);

struct NeighborCoverageReport {
  unsigned long p = 0;
  std::size_t elements = 0;  // Hurwitz elements of norm p
  std::vector<TreeVertex> expected;
  // Neighbor of the base -> number of norm-p elements sending the base there.
  std::map<TreeVertex, std::size_t> hits;
  bool passed = false;
};

// Acts on the base vertex by every Hurwitz element of norm p and checks that
// the images are exactly the neighbors of the base. Throws VerificationError
// if they are not.
NeighborCoverageReport verify_neighbor_coverage(unsigned long p,
                                                long precision = kDefaultPadicPrecision);

struct TransitivityReport {
  std::vector<unsigned long> primes;
  long radius = 0;
  long padic_precision = 0;
  std::vector<std::size_t> ball_sizes;  // per prime
  std::size_t expected = 0;             // product of the ball sizes
  std::size_t reached = 0;
  std::size_t generators = 0;
  std::size_t distinct_moves = 0;  // generators with distinct images of the base
  long min_slack = 0;
  long max_precision_loss = 0;  // at most 2R, leaving the 8-digit margin intact
  bool witnesses_are_s_units = false;
  std::map<ProductVertex, RatQuaternion> witnesses;
  bool passed = false;
};

// Breadth-first search from the base product vertex with the generating set
// of the S-unit group. A vertex reached by witness w is extended to w g for
// every move g; only vertices inside the radius-R product ball are kept.
// Throws VerificationError if some vertex of the ball is missed and
// PrecisionError if a canonicalization lost more than 2R digits.
TransitivityReport verify_product_transitivity(const SPlaceSet& s, long radius);

}  // namespace sunit
