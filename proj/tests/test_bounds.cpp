#include <gtest/gtest.h>

#include "sunit/bounds.hpp"
#include "sunit/errors.hpp"

using namespace sunit;

namespace {

const Precision kPrec{64};

Real num(long x) { return Real(x, kPrec); }
Real pi() { return Real::pi(kPrec); }

// |x - y| <= 1e-40 * max(1, |y|).
::testing::AssertionResult Near(const Real& x, const Real& y) {
  const Real tol = pow(num(10), -40L) * max(num(1), abs(y));
  if (abs(x - y) <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << x.to_string(30) << " vs " << y.to_string(30);
}

AlgebraShape shape(int n, int d, int s, int r1, int r2, const Real& covolume) {
  AlgebraShape sh;
  sh.n = n;
  sh.d = d;
  sh.s = s;
  sh.r1 = r1;
  sh.r2 = r2;
  sh.covolume = covolume;
  sh.validate();
  return sh;
}

FinitePlaces places(std::initializer_list<long> norms) {
  FinitePlaces fp;
  for (long n : norms) fp.norms.emplace_back(n);
  return fp;
}

}  // namespace

TEST(Bounds, ShapeValidation) {
  EXPECT_THROW(shape(2, 1, 0, 1, 0, num(1)), InvalidShapeError);
  EXPECT_THROW(shape(1, 1, 2, 1, 0, num(1)), InvalidShapeError);
  EXPECT_THROW(shape(1, 3, 1, 1, 0, num(1)), InvalidShapeError);
  EXPECT_THROW(shape(1, 2, 0, 1, 0, num(0)), InvalidShapeError);
  EXPECT_NO_THROW(shape(3, 2, 1, 1, 1, num(5)));
}

TEST(Bounds, VolumeConstant) {
  EXPECT_TRUE(Near(volume_constant_z(AlgebraShape::hurwitz(kPrec)), pi() * pi() * 2));
  EXPECT_TRUE(Near(volume_constant_z(shape(1, 1, 0, 1, 0, num(1))), num(2)));
  EXPECT_TRUE(Near(volume_constant_z(shape(2, 1, 0, 0, 1, num(1))), pi() * 2));
}

TEST(Bounds, MinkowskiRadius) {
  EXPECT_TRUE(Near(minkowski_c(AlgebraShape::hurwitz(kPrec)), num(4) / pi()));
  EXPECT_TRUE(Near(minkowski_c(shape(1, 1, 0, 1, 0, num(1))), num(1)));
}

TEST(Bounds, MinkowskiRadiusIsHomogeneous) {
  // Scaling the covolume by t^{d^2(n - s/2)} scales c by t.
  const Real t = Real::from_string("1.7", kPrec);
  for (const auto& base : {AlgebraShape::hurwitz(kPrec), shape(3, 2, 1, 1, 1, num(7)),
                           shape(2, 3, 0, 2, 0, num(11))}) {
    AlgebraShape scaled = base;
    const Rational exponent(base.d * base.d * (2 * base.n - base.s), 2);
    scaled.covolume = base.covolume * pow(t, exponent);
    EXPECT_TRUE(Near(minkowski_c(scaled), minkowski_c(base) * t));
  }
}

TEST(Bounds, NormBoundTightAndUniform) {
  const auto h = AlgebraShape::hurwitz(kPrec);
  const Real c = minkowski_c(h);
  EXPECT_TRUE(Near(m_x_tight(h, c), num(16) / (pi() * pi())));
  EXPECT_TRUE(Near(m_x_uniform(h, c), pow(num(8) / pi(), 4L)));
  const auto q = shape(1, 1, 0, 1, 0, num(1));
  EXPECT_TRUE(Near(m_x_tight(q, num(1)), num(1)));
  EXPECT_TRUE(Near(m_x_uniform(q, num(1)), num(1)));
  EXPECT_TRUE(Near(m_x_tight(shape(2, 1, 0, 0, 1, num(1)), num(1)), num(1)));
}

TEST(Bounds, UniformNormBoundDominatesWhenAllPlaceTypesOccur) {
  for (int d : {2, 4})
    for (const char* cs : {"0.3", "0.9", "1", "2.5", "7"}) {
      const auto sh = shape(4, d, 1, 2, 1, num(3));
      const Real c = Real::from_string(cs, kPrec);
      EXPECT_GE(m_x_uniform(sh, c), m_x_tight(sh, c)) << "d=" << d << " c=" << cs;
    }
}

TEST(Bounds, DeltaBounds) {
  auto check = [](PlaceKind kind, int m, long d1, long d2) {
    const auto db = delta_bounds(kind, m);
    EXPECT_EQ(db.delta1, d1) << to_string(kind) << " m=" << m;
    EXPECT_EQ(db.delta2, d2) << to_string(kind) << " m=" << m;
  };
  check(PlaceKind::kRealSplit, 2, 2, 1);
  check(PlaceKind::kRamifiedQuaternion, 1, 1, 1);
  check(PlaceKind::kComplex, 3, 9, 4);
  check(PlaceKind::kRealSplit, 4, 4, 6);
  check(PlaceKind::kRamifiedQuaternion, 3, 3, 64);
}

TEST(Bounds, Mu1) {
  EXPECT_TRUE(Near(mu1_bound(AlgebraShape::hurwitz(kPrec)), num(1)));
  EXPECT_TRUE(Near(mu1_bound(shape(1, 1, 0, 1, 0, num(1))), num(1)));
  EXPECT_TRUE(Near(mu1_bound(shape(2, 2, 0, 2, 0, num(1))), num(4)));
}

TEST(Bounds, HurwitzConstants) {
  const auto h = AlgebraShape::hurwitz(kPrec);
  const auto r = thresholds_and_final(h, FinitePlaces{});
  const Real four_over_pi = num(4) / pi();
  EXPECT_TRUE(Near(r.T.T1, four_over_pi));
  EXPECT_TRUE(Near(r.T.T5, four_over_pi));
  EXPECT_TRUE(Near(r.T.T6, four_over_pi));
  for (const Real* t : {&r.T.T2, &r.T.T3, &r.T.T3prime, &r.T.T4}) EXPECT_TRUE(Near(*t, num(1)));
  EXPECT_TRUE(Near(r.height_bound_general, four_over_pi));
  EXPECT_TRUE(Near(r.place_threshold, four_over_pi));
  EXPECT_FALSE(r.requires_place(2));
  EXPECT_TRUE(Near(r.e, num(1)));
  ASSERT_TRUE(r.f1 && r.f2);
  EXPECT_TRUE(Near(*r.f1, num(32) / (pi() * pi())));
  EXPECT_TRUE(Near(*r.f2, num(32) / (pi() * pi())));
  EXPECT_TRUE(Near(r.discriminant, num(4)));
  EXPECT_FALSE(r.c_lt_one);
}

TEST(Bounds, HurwitzWithFinitePlaces) {
  const auto r = thresholds_and_final(AlgebraShape::hurwitz(kPrec), places({3, 5}));
  EXPECT_TRUE(Near(r.T.T2, num(5)));
  EXPECT_TRUE(Near(r.T.T6, num(20) / pi()));
  EXPECT_TRUE(Near(r.height_bound_general, num(20) / pi()));
  EXPECT_TRUE(Near(r.T.T6_upper, num(5) * pow(num(8) / pi(), 2L)));
}

TEST(Bounds, AllTEqualOneForSmallShapes) {
  const auto r = thresholds_and_final(shape(1, 1, 0, 1, 0, num(1)), FinitePlaces{});
  for (const Real* t : {&r.T.T1, &r.T.T2, &r.T.T3, &r.T.T3prime, &r.T.T4, &r.T.T5, &r.T.T6}) {
    EXPECT_TRUE(Near(*t, num(1)));
  }
  ASSERT_TRUE(r.f1 && r.f2);
  EXPECT_TRUE(Near(*r.f1, num(1)));
  EXPECT_TRUE(Near(*r.f2, num(1)));
}

TEST(Bounds, ExponentE) {
  EXPECT_EQ(exponent_e(AlgebraShape::hurwitz(kPrec)), 1);
  EXPECT_EQ(exponent_e(shape(3, 1, 0, 3, 0, num(1))), 1);
  EXPECT_EQ(exponent_e(shape(2, 2, 0, 2, 0, num(1))), Rational(1, 2));
  for (int n = 1; n <= 8; ++n)
    for (int r2 = 0; 2 * r2 <= n; ++r2) {
      const int r1 = n - 2 * r2;
      for (int d = 1; d <= 6; ++d)
        for (int s = 0; s <= r1; ++s) {
          if (s > 0 && d % 2 != 0) continue;
          ASSERT_LE(exponent_e(shape(n, d, s, r1, r2, num(1))), 1);
        }
    }
}

TEST(Bounds, ClosedFormsForCommutativeShapes) {
  // d = 1: f1 = f2 = (2/pi)^{r2}.
  const auto sh = shape(4, 1, 0, 2, 1, num(9));
  const auto [f1, f2] = f1_f2(sh);
  EXPECT_TRUE(Near(f1, num(2) / pi()));
  EXPECT_TRUE(Near(f2, num(2) / pi()));
}

TEST(Bounds, SmallCIsAnExplicitError) {
  const auto sh = shape(2, 2, 0, 2, 0, Real::from_string("0.001", kPrec));
  ASSERT_LT(minkowski_c(sh), num(1));
  EXPECT_THROW(f1_f2(sh), UnsupportedBranchError);
  EXPECT_THROW(thresholds_and_final(sh, FinitePlaces{}), UnsupportedBranchError);
  const auto r = thresholds_and_final(sh, FinitePlaces{}, OnSmallC::kOmitClosedForms);
  EXPECT_TRUE(r.c_lt_one);
  EXPECT_FALSE(r.f1.has_value());
  EXPECT_FALSE(r.height_bound_closed_form.has_value());
}

TEST(Bounds, ClosedFormBoundIsMonotone) {
  const auto base = shape(3, 2, 1, 1, 1, num(50));
  Real previous = num(0);
  for (long cov : {50, 60, 100, 1000}) {
    AlgebraShape sh = base;
    sh.covolume = num(cov);
    const auto r = thresholds_and_final(sh, places({7}));
    ASSERT_TRUE(r.height_bound_closed_form.has_value());
    EXPECT_GE(*r.height_bound_closed_form, previous);
    previous = *r.height_bound_closed_form;
  }
  previous = num(0);
  for (long ms : {3, 5, 11, 101}) {
    const auto r = thresholds_and_final(base, places({ms}));
    EXPECT_GE(*r.height_bound_closed_form, previous);
    previous = *r.height_bound_closed_form;
  }
}

TEST(Bounds, JsonRoundTripOfShape) {
  const nlohmann::json doc = {{"n", 1}, {"d", 2}, {"s", 1}, {"r1", 1}, {"r2", 0}, {"covolume", "2"}};
  const auto sh = shape_from_json(doc, kPrec);
  EXPECT_TRUE(Near(minkowski_c(sh), num(4) / pi()));
  const nlohmann::json by_disc = {{"n", 1}, {"d", 2}, {"s", 1}, {"r1", 1}, {"discriminant", 4}};
  EXPECT_TRUE(Near(shape_from_json(by_disc, kPrec).covolume, num(2)));
  EXPECT_THROW(shape_from_json(nlohmann::json{{"n", 1}}, kPrec), InvalidShapeError);
  const auto j = to_json(thresholds_and_final(sh, FinitePlaces{}));
  EXPECT_EQ(j.at("precision_digits"), 64);
  EXPECT_TRUE(j.at("c").is_string());
  EXPECT_EQ(j.at("c").get<std::string>().substr(0, 12), "1.2732395447");
}
