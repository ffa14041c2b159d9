#pragma once

// Explicit constants for generating S-unit groups of a central division
// algebra B of degree d over a number field k of degree n: the Minkowski
// radius c, the norm bound m_X, the constants T1..T6, the closed forms f1/f2
// and the resulting height bounds for a generating set.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunit/quaternion.hpp"
#include "sunit/real.hpp"

namespace sunit {

// Archimedean place types. The completion B_v is M_d(R), M_d(C) or M_{d/2}(H).
enum class PlaceKind { kRealSplit, kComplex, kRamifiedQuaternion };

const char* to_string(PlaceKind kind);

struct AlgebraShape {
  int n = 1;   // [k:Q]
  int d = 1;   // degree of B, dim_k B = d^2
  int s = 0;   // real places where B ramifies
  int r1 = 1;  // real places of k
  int r2 = 0;  // complex places of k
  Real covolume{Precision{}};  // Vol(B_R / D) under the Tamagawa measure

  // n = r1 + 2 r2, 0 <= s <= r1, d even when s > 0, covolume > 0.
  // Throws InvalidShapeError.
  void validate() const;

  // Hamilton's quaternions over Q with the Hurwitz order (covolume 2).
  static AlgebraShape hurwitz(Precision prec = {});
};

// Upper bounds for the minimal constants delta1 (submultiplicativity) and
// delta2 (adjugate growth) of an archimedean completion M_m(A_v).
struct DeltaBounds {
  Integer delta1;
  Integer delta2;
};

// Constants T1..T6 for the product-of-balls convex body and the standard
// topological generators. T6 is evaluated from its definition (a maximum over
// subsets of archimedean places, which factorizes place by place); T6_upper is
// the coarse closed-form bound m'_{S_f} max{1, (cd)^{nd}}.
struct TConstants {
  Real m_prime;  // m'_{S_f}
  Real T1, T2, T3, T3prime, T4, T5, T6;
  Real T6_upper;
};

struct BoundReport {
  Precision precision;
  Real z, c, m_X, m_X_uniform, e;
  TConstants T;
  Real mu1_bound;
  std::optional<Real> f1, f2;
  Real place_threshold;                       // m_X^{1/d}
  std::optional<Real> place_threshold_closed_form;  // f1 covolume^e
  Real height_bound_general;                  // mu1 T6 T3 T3' T4
  std::optional<Real> height_bound_closed_form;     // f2 m'_{S_f} covolume^e
  Real discriminant;                          // covolume^2
  bool c_lt_one = false;

  // Conservative test whether a finite place of the given norm must belong to
  // S: compares against the threshold rounded outward.
  bool requires_place(const Integer& norm) const;
};

// Residue-field sizes #k(w) of the finite places in S.
struct FinitePlaces {
  std::vector<Integer> norms;

  static FinitePlaces from(const SPlaceSet& s);
  Integer max_norm() const;  // 1 when empty
};

Real volume_constant_z(const AlgebraShape& shape);
Real minkowski_c(const AlgebraShape& shape);

// Per place type actually present, raised to n / [k_v:R]; the maximum wins.
Real m_x_tight(const AlgebraShape& shape, const Real& c);

// The single closed formula max{cd, (dc/2)^{1/2}}^{nd^2}, branching on 2cd >= 1,
// which takes every place type into account whether or not it occurs.
Real m_x_uniform(const AlgebraShape& shape, const Real& c);

// m = m(v), the matrix size of B_v over A_v.
DeltaBounds delta_bounds(PlaceKind kind, int m);

Real mu1_bound(const AlgebraShape& shape);

// e = 2n / (d(2n - s)), exact.
Rational exponent_e(const AlgebraShape& shape);

TConstants t_constants(const AlgebraShape& shape, const Real& c, const Real& m_x,
                       const FinitePlaces& places);

Real general_height_bound(const AlgebraShape& shape, const TConstants& t);

// Closed forms valid for c >= 1; throws UnsupportedBranchError otherwise.
std::pair<Real, Real> f1_f2(const AlgebraShape& shape);

enum class OnSmallC { kThrow, kOmitClosedForms };

// Assembles the full report. With kThrow, c < 1 propagates the f1/f2 error.
BoundReport thresholds_and_final(const AlgebraShape& shape, const FinitePlaces& places,
                                 OnSmallC on_small_c = OnSmallC::kThrow);

// JSON surface used by the CLI: reals become decimal strings.
nlohmann::json to_json(const BoundReport& report);
// {"n":..,"d":..,"s":..,"r1":..,"r2":..,"covolume":"..."} or "discriminant".
AlgebraShape shape_from_json(const nlohmann::json& doc, Precision prec);

}  // namespace sunit
