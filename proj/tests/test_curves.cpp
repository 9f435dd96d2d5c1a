#include "test_util.hpp"

#include <ctec/error.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace ctec;

namespace {

CurveDescriptor copy_of(std::string_view name) {
   return bundled_database().get(name);
}

ErrorCode code_of(const std::function<void()>& f) {
   try {
      f();
   } catch(const Error& e) {
      return e.code();
   }
   ADD_FAILURE() << "no error raised";
   return ErrorCode::Unsupported;
}

}  // namespace

TEST(Curves, BundledDatabaseIsCompleteAndValid) {
   const CurveDatabase& db = bundled_database();
   EXPECT_GE(db.size(), 20u);
   for(const char* name : {"secp192r1", "secp256r1", "secp256k1", "secp384r1", "secp521r1", "brainpoolP192t1",
                           "brainpoolP256t1", "brainpoolP320t1", "brainpoolP384t1", "brainpoolP512t1", "SM2",
                           "id_GostR3410_2001_TestParamSet", "id_GostR3410_2001_CryptoPro_A_ParamSet",
                           "id_GostR3410_2001_CryptoPro_B_ParamSet", "id_GostR3410_2001_CryptoPro_C_ParamSet",
                           "id_tc26_gost_3410_2012_512_paramSetA", "id_tc26_gost_3410_2012_512_paramSetB",
                           "id_tc26_gost_3410_2012_256_paramSetA", "id_tc26_gost_3410_2012_512_paramSetC", "Wei25519",
                           "Wei448", "MDCurve201601"}) {
      EXPECT_NE(db.find(name), nullptr) << name;
   }
   for(const auto& d : db.curves()) {
      EXPECT_NO_THROW(validate_curve(d)) << d.name;
      EXPECT_TRUE(d.h == 1 || d.h == 4 || d.h == 8) << d.name;
   }
   EXPECT_EQ(code_of([&] { db.get("P-224"); }), ErrorCode::NotFound);
}

TEST(Curves, LoadsFromFileAndRoundTripsJson) {
   const CurveDatabase db = load_database(CTEC_CURVES_FILE);
   EXPECT_EQ(db.size(), bundled_database().size());
   const CurveDatabase again = parse_database(to_json(db.curves()));
   ASSERT_EQ(again.size(), db.size());
   for(std::size_t i = 0; i != db.size(); ++i) {
      EXPECT_EQ(again.curves()[i].q, db.curves()[i].q);
      EXPECT_EQ(again.curves()[i].gx, db.curves()[i].gx);
   }
}

TEST(Curves, FlippedGeneratorFailsOnCurveCheck) {
   CurveDescriptor d = copy_of("secp256r1");
   d.gy.back() ^= 1;
   try {
      validate_curve(d);
      FAIL();
   } catch(const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ValidationError);
      EXPECT_NE(std::string(e.what()).find("on-curve"), std::string::npos) << e.what();
      EXPECT_NE(std::string(e.what()).find("secp256r1"), std::string::npos) << e.what();
   }
}

TEST(Curves, DuplicateNamesRejected) {
   std::vector<CurveDescriptor> v{copy_of("secp256r1"), copy_of("secp256r1")};
   EXPECT_EQ(code_of([&] { CurveDatabase db(v); }), ErrorCode::ValidationError);
}

TEST(Curves, MalformedJsonIsParseError) {
   EXPECT_EQ(code_of([] { parse_curves_json("{"); }), ErrorCode::ParseError);
   EXPECT_EQ(code_of([] { parse_curves_json(R"([{"name": "x"}])"); }), ErrorCode::ParseError);
}

TEST(Curves, GostTwistedCurveParameters) {
   const CurveDescriptor& d = bundled_database().get("id_tc26_gost_3410_2012_256_paramSetA");
   EXPECT_EQ(d.h, 4u);
   EXPECT_EQ(d.coefficient_class, CoefficientClass::GeneralA);
   ASSERT_TRUE(d.twist);
   EXPECT_EQ(d.twist->h_t, 4u);
   // The generator order; the complementary value is the twist order.
   EXPECT_EQ(to_hex(d.q), "400000000000000000000000000000000fd8cddfc87b6635c115af556c360c67");
   EXPECT_EQ(to_hex(d.twist->q_t), "3ffffffffffffffffffffffffffffffff0273220378499ca3eea50aa93c9f265");
}

TEST(Curves, TwistRelation) {
   for(const char* name : {"id_tc26_gost_3410_2012_256_paramSetA", "id_tc26_gost_3410_2012_512_paramSetC"}) {
      CurveDescriptor d = copy_of(name);
      EXPECT_TRUE(validate_twist(d)) << name;
      const mpz_class qt = oracle::to_mpz(d.twist->q_t) + 2;
      d.twist->q_t = oracle::to_bytes(qt);
      EXPECT_FALSE(validate_twist(d)) << name;
      EXPECT_EQ(code_of([&] { validate_curve(d); }), ErrorCode::ValidationError);
   }
}

TEST(Curves, DerivedEdwardsConstantsReproduceWeierstrass) {
   for(const auto& d : bundled_database().curves()) {
      if(!d.edwards) {
         continue;
      }
      const EdwardsConstants st = derive_edwards(d);
      const mpz_class p = oracle::to_mpz(d.p);
      const mpz_class s = oracle::to_mpz(st.s), t = oracle::to_mpz(st.t);
      auto md = [&](mpz_class v) {
         v %= p;
         return v < 0 ? mpz_class(v + p) : v;
      };
      EXPECT_EQ(md(s * s - 3 * t * t), oracle::to_mpz(d.a)) << d.name;
      EXPECT_EQ(md(2 * t * t * t - t * s * s), oracle::to_mpz(d.b)) << d.name;
      const mpz_class e = oracle::to_mpz(d.edwards->e), dd = oracle::to_mpz(d.edwards->d);
      EXPECT_EQ(md(4 * s), md(e - dd)) << d.name;
      EXPECT_EQ(md(6 * t), md(e + dd)) << d.name;
   }
}

TEST(Curves, DeriveEdwardsErrors) {
   CurveDescriptor d = copy_of("id_tc26_gost_3410_2012_256_paramSetA");
   CurveDescriptor same = d;
   same.edwards->d = same.edwards->e;
   EXPECT_EQ(code_of([&] { derive_edwards(same); }), ErrorCode::InvalidArgument);

   CurveDescriptor bad = d;
   bad.b.back() ^= 2;
   EXPECT_EQ(code_of([&] { derive_edwards(bad); }), ErrorCode::InconsistentParameters);

   EXPECT_EQ(code_of([] { derive_edwards(copy_of("secp256r1")); }), ErrorCode::InvalidArgument);
}

TEST(Curves, MdCurveGeneratorImageIsOnEdwardsCurve) {
   const CurveDescriptor& d = bundled_database().get("MDCurve201601");
   const oracle::Curve c(d);
   const oracle::EdPoint img = c.to_edwards(c.generator());
   EXPECT_TRUE(c.on_edwards(img));
   EXPECT_EQ(img.u, oracle::to_mpz(d.edwards->ugen));
   EXPECT_EQ(img.v, oracle::to_mpz(d.edwards->vgen));
}

TEST(Curves, CryptoProCGeneratorHasZeroX) {
   const CurveDescriptor& d = bundled_database().get("id_GostR3410_2001_CryptoPro_C_ParamSet");
   EXPECT_EQ(oracle::to_mpz(d.gx), 0);
}

TEST(Curves, CoefficientClassesMatchCoefficients) {
   EXPECT_EQ(bundled_database().get("secp256r1").coefficient_class, CoefficientClass::AMinus3);
   EXPECT_EQ(bundled_database().get("secp256k1").coefficient_class, CoefficientClass::AZero);
   EXPECT_EQ(bundled_database().get("id_GostR3410_2001_TestParamSet").coefficient_class, CoefficientClass::GeneralA);
}
