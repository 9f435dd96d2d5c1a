#include "test_util.hpp"

#include <ctec/error.hpp>

#include <gtest/gtest.h>

using namespace ctec;

class OracleCurve : public ::testing::TestWithParam<std::string> {};

TEST_P(OracleCurve, GroupStructure) {
   const CurveDescriptor& d = bundled_database().get(GetParam());
   const oracle::Curve oc(d);
   EXPECT_TRUE(oracle::is_probable_prime(oc.p()));
   EXPECT_TRUE(oracle::is_probable_prime(oc.q()));
   const oracle::Point g = oc.generator();
   EXPECT_TRUE(oc.on_curve(g));
   EXPECT_TRUE(oc.mul(oc.q(), g).infinity);
   EXPECT_EQ(oc.mul(oc.q() + 1, g), g);
   EXPECT_EQ(oc.add(g, oc.neg(g)), oracle::Point::identity());
   EXPECT_EQ(oc.mul(3, g), oc.add(oc.dbl(g), g));
   EXPECT_THROW(oc.check(oracle::Point::affine(g.x, g.y + 1)), Error);
}

TEST_P(OracleCurve, SquareRoots) {
   const oracle::Curve oc(bundled_database().get(GetParam()));
   for(int v : {4, 9, 10, 12345}) {
      const auto r = oc.sqrt(v);
      if(r) {
         EXPECT_EQ(mpz_class(*r * *r % oc.p()), v);
      }
   }
   const oracle::Point g = oc.generator();
   const mpz_class rhs = (g.x * g.x * g.x + oc.a() * g.x + oc.b()) % oc.p();
   ASSERT_TRUE(oc.sqrt(rhs).has_value());
}

TEST_P(OracleCurve, EdwardsMapIsHomomorphism) {
   const oracle::Curve oc(bundled_database().get(GetParam()));
   if(!oc.has_edwards()) {
      GTEST_SKIP() << "no Edwards form";
   }
   const oracle::Point P = oc.mul(5, oc.generator());
   const oracle::Point Q = oc.mul(11, oc.generator());
   const oracle::EdPoint Pe = oc.to_edwards(P);
   EXPECT_TRUE(oc.on_edwards(Pe));
   EXPECT_EQ(oc.from_edwards(Pe), P);
   EXPECT_EQ(oc.from_edwards(oc.ed_add(Pe, oc.to_edwards(Q))), oc.add(P, Q));
   EXPECT_EQ(oc.to_edwards(oracle::Point::identity()), (oracle::EdPoint{0, 1}));
}

TEST_P(OracleCurve, SmallSubgroupPoint) {
   const CurveDescriptor& d = bundled_database().get(GetParam());
   const oracle::Curve oc(d);
   if(d.h == 1) {
      EXPECT_THROW(oracle::find_small_subgroup_point(d), Error);
      return;
   }
   const oracle::Point S = oracle::find_small_subgroup_point(d);
   EXPECT_FALSE(S.infinity);
   EXPECT_TRUE(oc.on_curve(S));
   EXPECT_TRUE(oc.mul(d.h, S).infinity);
}

INSTANTIATE_TEST_SUITE_P(AllCurves, OracleCurve, ::testing::ValuesIn(test::curve_names()), [](const auto& info) { return info.param; });

TEST(OracleCodec, BytesAndHex) {
   EXPECT_EQ(oracle::to_bytes(0x0102, 4), (Bytes{0, 0, 1, 2}));
   EXPECT_EQ(oracle::to_bytes(0), Bytes{});
   EXPECT_THROW(oracle::to_bytes(0x10000, 2), Error);
   EXPECT_EQ(oracle::from_hex("ff"), 255);
   EXPECT_EQ(oracle::to_mpz(Bytes{1, 0}), 256);
}
