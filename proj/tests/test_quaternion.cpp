#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sunit/enumerate.hpp"
#include "sunit/errors.hpp"
#include "sunit/quaternion.hpp"

using namespace sunit;

namespace {

RatQuaternion Q(const char* text) { return parse_quaternion(text); }

Rational R(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Quaternion, BasisRelations) {
  const auto i = RatQuaternion::unit_i(), j = RatQuaternion::unit_j(), k = RatQuaternion::unit_k();
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, RatQuaternion::scalar(-1));
  EXPECT_EQ(j * j, RatQuaternion::scalar(-1));
  EXPECT_EQ(k * k, RatQuaternion::scalar(-1));
  EXPECT_EQ(multiply(Q("1+I"), Q("1-I")), RatQuaternion::scalar(2));
}

TEST(Quaternion, ReducedNormExamples) {
  EXPECT_EQ(reduced_norm(Q("1")), 1);
  EXPECT_EQ(reduced_norm(Q("-1 + I - J - 3*K")), 12);
  EXPECT_EQ(reduced_norm(Q("-9 - 7*I - J + 7*K")), 180);
  EXPECT_EQ(Q("1+I+J").reduced_trace(), 2);
}

TEST(Quaternion, InvertExamples) {
  EXPECT_EQ(invert(Q("1")), Q("1"));
  EXPECT_EQ(invert(Q("I")), Q("-I"));
  EXPECT_EQ(invert(Q("1+I")), Q("1/2 - 1/2*I"));
  EXPECT_THROW(invert(RatQuaternion{}), ZeroElementError);
}

TEST(Quaternion, PowerIncludingNegative) {
  const auto q = Q("1/2 + 1/2*I + 1/2*J + 1/2*K");
  EXPECT_EQ(power(q, 6), Q("1"));
  EXPECT_EQ(power(q, -1) * q, Q("1"));
  EXPECT_EQ(power(Q("-1"), 2), Q("1"));
  EXPECT_EQ(power(Q("2"), 0), Q("1"));
}

TEST(Quaternion, HurwitzMembership) {
  EXPECT_TRUE(is_hurwitz(Q("1/2 + 1/2*I + 1/2*J + 1/2*K")));
  EXPECT_TRUE(is_hurwitz(Q("-1/2 + 1/2*I - 1/2*J - 3/2*K")));
  EXPECT_FALSE(is_hurwitz(Q("1/3*I")));
  EXPECT_FALSE(is_hurwitz(Q("1/2 + 1/2*I")));
  EXPECT_TRUE(is_hurwitz(Q("3 - 4*K")));
}

TEST(Quaternion, ContentValuationExamples) {
  EXPECT_EQ(content_valuation(Q("1+I"), 3), 0);
  EXPECT_EQ(content_valuation(Q("1/3*I + 1/3*J"), 3), -1);
  EXPECT_EQ(content_valuation(Q("3+3*I"), 3), 1);
  EXPECT_THROW(content_valuation(RatQuaternion{}, 3), ZeroElementError);
  EXPECT_THROW(content_valuation(Q("1"), 2), InvalidPrimeError);
  EXPECT_THROW(content_valuation(Q("1"), 9), InvalidPrimeError);
}

TEST(Quaternion, HeightExamples) {
  EXPECT_EQ(height(Q("1")), 1);
  EXPECT_EQ(height(Q("I+J")), 2);
  EXPECT_EQ(height(Q("1/3*I + 1/3*J")), 3);
  // 2-adic factor: N = 1/4 gives |1/4|_2 = 4.
  EXPECT_EQ(height(Q("1/2")), 4);
  EXPECT_THROW(height(RatQuaternion{}), ZeroElementError);
}

TEST(Quaternion, HeightOfIntegralElementsIsTheNorm) {
  for (unsigned long m = 1; m <= 50; ++m) {
    for (const auto& q : enumerate_by_norm(m).elements) {
      ASSERT_EQ(height(q.to_quaternion()), Rational(m)) << to_string(q);
    }
  }
}

TEST(Quaternion, SUnitExamples) {
  EXPECT_TRUE(is_s_unit(Q("I"), SPlaceSet{}));
  EXPECT_TRUE(is_s_unit(Q("I"), SPlaceSet({3, 5})));
  EXPECT_TRUE(is_s_unit(Q("-1/2 + 1/2*I - 1/2*J - 3/2*K"), SPlaceSet({3, 5})));
  EXPECT_FALSE(is_s_unit(Q("1+I"), SPlaceSet({3})));
  EXPECT_FALSE(is_s_unit(Q("1+I+J"), SPlaceSet({5})));
  EXPECT_TRUE(is_s_unit(Q("1/3 + 1/3*I + 1/3*J"), SPlaceSet({3})));
  EXPECT_FALSE(is_s_unit(RatQuaternion{}, SPlaceSet({3})));
  // N = 1/4 has 2-adic valuation -2.
  EXPECT_FALSE(is_s_unit(Q("1/2"), SPlaceSet({3})));
}

TEST(Quaternion, OrderIndexExamples) {
  EXPECT_EQ(order_index(HurwitzElement::from_quaternion(Q("1"))), 1);
  EXPECT_EQ(order_index(HurwitzElement::from_quaternion(Q("1+I"))), 4);
  EXPECT_EQ(order_index(HurwitzElement::from_quaternion(Q("1+I+J"))), 9);
  EXPECT_THROW(order_index(HurwitzElement{}), ZeroElementError);
}

TEST(Quaternion, OrderIndexIsNormSquared) {
  for (unsigned long m = 1; m <= 25; ++m) {
    for (const auto& q : enumerate_by_norm(m).elements) {
      ASSERT_EQ(order_index(q), Integer(m * m)) << to_string(q);
    }
  }
}

TEST(Quaternion, SPlaceSetValidation) {
  const SPlaceSet s({5, 3, 5});
  EXPECT_EQ(s.primes(), (std::vector<unsigned long>{3, 5}));
  EXPECT_EQ(s.to_string(), "{inf,3,5}");
  EXPECT_EQ(s.max_norm(), 5u);
  EXPECT_EQ(SPlaceSet{}.max_norm(), 1u);
  EXPECT_THROW(SPlaceSet({2}), InvalidPrimeError);
  EXPECT_THROW(SPlaceSet({9}), InvalidPrimeError);
  EXPECT_THROW(SPlaceSet({4}), InvalidPrimeError);
}

TEST(Quaternion, ParserAndPrinter) {
  EXPECT_EQ(to_string(Q("-1/2 + 1/2*I - 1/2*J - 3/2*K")), "-1/2 + 1/2*I - 1/2*J - 3/2*K");
  EXPECT_EQ(Q("K - 3 + IJ"), RatQuaternion(-3, 0, 0, 2));
  EXPECT_EQ(Q(" 2 I  +  J "), RatQuaternion(0, 2, 1, 0));
  EXPECT_EQ(Q("I + I"), RatQuaternion(0, 2, 0, 0));
  EXPECT_EQ(Q("-I"), RatQuaternion(0, -1, 0, 0));
  EXPECT_EQ(to_string(RatQuaternion{}), "0 + 0*I + 0*J + 0*K");
  EXPECT_THROW(Q(""), ParseError);
  EXPECT_THROW(Q("1 + Q"), ParseError);
  EXPECT_THROW(Q("1/0"), ParseError);
  EXPECT_THROW(Q("1 +"), ParseError);
}

TEST(Quaternion, RandomRoundTripAndArithmeticLaws) {
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 1000; ++t) {
    const auto q = oracle::random_quaternion(rng);
    const auto r = oracle::random_quaternion(rng);
    ASSERT_EQ(parse_quaternion(to_string(q)), q);
    ASSERT_EQ(reduced_norm(q * r), reduced_norm(q) * reduced_norm(r));
    ASSERT_EQ(q * invert(q), RatQuaternion::scalar(1));
    ASSERT_EQ(invert(q) * q, RatQuaternion::scalar(1));
    ASSERT_EQ(q * q.conjugate(), RatQuaternion::scalar(reduced_norm(q)));
  }
}

TEST(Quaternion, ContentMatchesCoordinateDefinition) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const auto q = oracle::random_quaternion(rng, 200, 60);
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
      ASSERT_EQ(content_valuation(q, p), oracle::content_by_coordinates(q, p)) << to_string(q);
    }
  }
}

TEST(Quaternion, ContentIsSuperadditive) {
  std::mt19937_64 rng(11);
  int unit_norm_cases = 0;
  for (int t = 0; t < 500; ++t) {
    const auto q = oracle::random_quaternion(rng, 40, 9);
    const auto r = oracle::random_quaternion(rng, 40, 9);
    for (unsigned long p : {3ul, 5ul}) {
      const long lhs = content_valuation(q * r, p);
      const long rhs = content_valuation(q, p) + content_valuation(r, p);
      ASSERT_GE(lhs, rhs);
      if (oracle::vp(reduced_norm(q), p) == 2 * content_valuation(q, p) ||
          oracle::vp(reduced_norm(r), p) == 2 * content_valuation(r, p)) {
        // One factor is a unit times a power of p at p; then equality holds.
        ASSERT_EQ(lhs, rhs);
        ++unit_norm_cases;
      }
    }
  }
  EXPECT_GT(unit_norm_cases, 100);
}

TEST(Quaternion, ProductFormula) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const Rational n = reduced_norm(oracle::random_quaternion(rng));
    ASSERT_EQ(oracle::product_formula(n * n), 1);
  }
  EXPECT_EQ(oracle::product_formula(Rational(-12, 35)), 1);
}

TEST(Quaternion, HurwitzElementArithmetic) {
  const HurwitzElement w(1, 1, 1, 1);
  EXPECT_EQ(w.reduced_norm(), 1);
  EXPECT_EQ(w.to_quaternion(), Q("1/2 + 1/2*I + 1/2*J + 1/2*K"));
  EXPECT_THROW(HurwitzElement(1, 0, 1, 1), InputError);
  EXPECT_THROW(HurwitzElement::from_quaternion(Q("1/3")), InputError);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto a = oracle::random_hurwitz(rng);
    const auto b = oracle::random_hurwitz(rng);
    ASSERT_EQ((a * b).to_quaternion(), a.to_quaternion() * b.to_quaternion());
    ASSERT_EQ(a.conjugate().to_quaternion(), a.to_quaternion().conjugate());
  }
}
