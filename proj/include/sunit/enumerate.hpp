#pragma once

// Hurwitz elements of prescribed reduced norm, the unit group, generating sets
// for S-unit groups and the integral slice of bounded-height sets.

#include <map>
#include <vector>

#include "sunit/quaternion.hpp"
#include "sunit/real.hpp"

namespace sunit {

struct NormClassEnumeration {
  unsigned long norm = 0;
  std::vector<HurwitzElement> elements;  // canonical (lexicographic) order
};

// All Hurwitz elements with N = m, i.e. A^2 + B^2 + C^2 + D^2 = 4m with
// A = B = C = D (mod 2). Requires m >= 1; throws InputError otherwise.
NormClassEnumeration enumerate_by_norm(unsigned long m);

// Sum of the odd divisors of m; the norm-m class has 24 times this many
// elements.
unsigned long sum_of_odd_divisors(unsigned long m);

// Smallest k >= 1 with q^k = 1, or 0 if none exists up to max_order.
int multiplicative_order(const HurwitzElement& q, int max_order = 24);

struct UnitGroupReport {
  std::vector<HurwitzElement> units;
  std::map<int, int> order_counts;  // order -> number of elements
  int elements_of_order_two = 0;
};

// Checks closure of the 24 norm-1 elements under products and inverses and
// records the orders. Throws VerificationError if the group axioms fail.
UnitGroupReport unit_group_check();

// Union of the norm classes {1} and {l} for l in S, canonically sorted.
std::vector<HurwitzElement> generating_set(const SPlaceSet& s);

// Hurwitz elements with 1 <= N <= floor(x). For integral elements the height
// is the norm, so this is the integral part of {H <= x}. Requires x >= 1.
std::vector<HurwitzElement> bounded_height_integral(const Rational& x);
std::vector<HurwitzElement> bounded_height_integral(const Real& x);

}  // namespace sunit
