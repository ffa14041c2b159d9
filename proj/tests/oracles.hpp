#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library beyond the vertex type and the
// neighbor map of the tree.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sunit/quaternion.hpp"
#include "sunit/tree.hpp"

namespace oracle {

using Quad = std::array<long, 4>;

// Every quadruple in the full box |X| <= 2*ceil(sqrt(m)) with equal parities
// and X1^2 + ... + X4^2 = 4m, in lexicographic order.
inline std::vector<Quad> norm_class_box_scan(long m) {
  const long r = 2 * static_cast<long>(std::ceil(std::sqrt(static_cast<double>(m))));
  std::vector<Quad> out;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b)
      for (long c = -r; c <= r; ++c)
        for (long d = -r; d <= r; ++d) {
          if (a * a + b * b + c * c + d * d != 4 * m) continue;
          const long pa = ((a % 2) + 2) % 2;
          if (((b % 2) + 2) % 2 != pa || ((c % 2) + 2) % 2 != pa || ((d % 2) + 2) % 2 != pa) continue;
          out.push_back({a, b, c, d});
        }
  return out;
}

inline long sigma_odd(long m) {
  long s = 0;
  for (long k = 1; k <= m; k += 2)
    if (m % k == 0) s += k;
  return s;
}

inline long vp(mpz_class x, unsigned long p) {
  if (x == 0) return 1L << 30;
  if (x < 0) x = -x;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Smith form of a 2x2 integer matrix by explicit Euclidean row and column
// operations; returns the p-adic valuations of the two invariant factors.
inline std::pair<long, long> smith_valuations(std::array<mpz_class, 4> m, unsigned long p) {
  auto& a = m[0];
  auto& b = m[1];
  auto& c = m[2];
  auto& d = m[3];
  for (int guard = 0; guard < 10000; ++guard) {
    // Column Euclid on the first row.
    while (b != 0) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a -= q * b;
      c -= q * d;
      std::swap(a, b);
      std::swap(c, d);
    }
    // Row Euclid on the first column.
    while (c != 0) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      a -= q * c;
      b -= q * d;
      std::swap(a, c);
      std::swap(b, d);
    }
    if (b == 0 && c == 0) {
      if (a != 0 && d % a != 0) {
        b = d;  // add column 2 into column 1's row, then repeat
        continue;
      }
      return {vp(a, p), vp(d, p)};
    }
  }
  return {-1, -1};
}

// Tree distance from the relative position of two vertices, through the
// Smith oracle.
inline long tree_distance(const sunit::TreeVertex& x, const sunit::TreeVertex& y) {
  const auto m1 = x.matrix();
  const auto m2 = y.matrix();
  const std::array<mpz_class, 4> adj{m1[3], -m1[1], -m1[2], m1[0]};
  const std::array<mpz_class, 4> rel{adj[0] * m2[0] + adj[1] * m2[2], adj[0] * m2[1] + adj[1] * m2[3],
                                     adj[2] * m2[0] + adj[3] * m2[2], adj[2] * m2[1] + adj[3] * m2[3]};
  const auto [e1, e2] = smith_valuations(rel, x.p);
  return std::abs(e2 - e1);
}

// Breadth-first ball around the base built from the neighbor map alone.
inline std::map<sunit::TreeVertex, long> bfs_ball(unsigned long p, long radius) {
  std::map<sunit::TreeVertex, long> depth{{sunit::TreeVertex::base(p), 0}};
  std::queue<sunit::TreeVertex> frontier;
  frontier.push(sunit::TreeVertex::base(p));
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    if (depth[v] == radius) continue;
    for (const auto& w : sunit::neighbors(v)) {
      if (depth.emplace(w, depth[v] + 1).second) frontier.push(w);
    }
  }
  return depth;
}

inline sunit::Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  sunit::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline sunit::RatQuaternion random_quaternion(std::mt19937_64& rng, long max_num = 30,
                                              long max_den = 12) {
  for (;;) {
    sunit::RatQuaternion q(random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den),
                           random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den));
    if (!q.is_zero()) return q;
  }
}

// Random element of the Hurwitz order: doubled coordinates of one parity.
inline sunit::HurwitzElement random_hurwitz(std::mt19937_64& rng, long bound = 12) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::uniform_int_distribution<int> parity(0, 1);
  for (;;) {
    const long par = parity(rng);
    std::array<mpz_class, 4> x;
    for (auto& v : x) v = 2 * coord(rng) + par;
    sunit::HurwitzElement h(x[0], x[1], x[2], x[3]);
    if (!h.is_zero()) return h;
  }
}

// Valuation of a nonzero rational at p.
inline long vp(const sunit::Rational& r, unsigned long p) {
  return vp(mpz_class(r.get_num()), p) - vp(mpz_class(r.get_den()), p);
}

// Content valuation from the definition: the largest e with p^-e q integral
// at p, scanning coordinates directly.
inline long content_by_coordinates(const sunit::RatQuaternion& q, unsigned long p) {
  long e = 1L << 30;
  for (const auto& x : q.coords())
    if (x != 0) e = std::min(e, vp(x, p));
  return e;
}

// x * prod_p |x|_p over the primes dividing x, by trial division. Perfect
// squares are reduced to their roots first (tracking the multiplicity) so that
// squared inputs cost no more than the inputs themselves; once p^2 exceeds
// what is left, the remainder is prime.
inline sunit::Rational product_formula(const sunit::Rational& x) {
  sunit::Rational prod = x < 0 ? sunit::Rational(-x) : x;
  for (bool numerator : {true, false}) {
    mpz_class rest = numerator ? mpz_class(abs(x.get_num())) : mpz_class(x.get_den());
    unsigned long mult = 1;
    auto reduce_squares = [&] {
      while (rest != 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
        rest = sqrt(rest);
        mult *= 2;
      }
    };
    auto strip = [&](const mpz_class& p) {
      while (rest % p == 0) {
        rest /= p;
        for (unsigned long i = 0; i < mult; ++i) {
          // |p|_p = 1/p for a numerator factor, p for a denominator factor.
          prod *= numerator ? sunit::Rational(1) / sunit::Rational(p) : sunit::Rational(p);
        }
      }
      reduce_squares();
    };
    reduce_squares();
    for (mpz_class p = 2; rest != 1; ++p) {
      if (p * p > rest) {
        const mpz_class q = rest;
        strip(q);
        break;
      }
      strip(p);
    }
  }
  prod.canonicalize();
  return prod;
}

}  // namespace oracle
