#include "test_util.hpp"

#include <ctec/instrument.hpp>

#include <gtest/gtest.h>

using namespace ctec;

static_assert(instrument::field_level_enabled());

class FieldCounters : public ::testing::TestWithParam<std::string> {};

// Field-level operation counts of the secret-scalar paths must not depend on
// the scalar.
TEST_P(FieldCounters, ScalarIndependent) {
   const auto c = curve_by_name(GetParam());
   const oracle::Curve oc(c->descriptor());
   const ProjPointW P = w_lift(c->weierstrass(), test::from_oracle(*c, oc.mul(7, oc.generator())));
   std::mt19937_64 rng(9);
   std::vector<mpz_class> ks{1, 2, oc.q() - 1, oc.q() / 2};
   for(int i = 0; i != 6; ++i) {
      ks.push_back(test::random_scalar(rng, oc.q()));
   }
   std::optional<instrument::Counters> var, fixed;
   for(const auto& k : ks) {
      const Scalar s = test::scalar_of(*c, k);
      instrument::Scope a;
      (void)mul_varbase(*c, P, s);
      const auto dv = a.delta();
      instrument::Scope b;
      (void)mul_fixedbase(*c, s);
      const auto df = b.delta();
      if(!var) {
         var = dv;
         fixed = df;
      }
      EXPECT_EQ(dv, *var);
      EXPECT_EQ(df, *fixed);
   }
   EXPECT_GT(var->fp_mul, 0U);
   EXPECT_GT(var->fp_select, 0U);
}

INSTANTIATE_TEST_SUITE_P(SomeCurves,
                         FieldCounters,
                         ::testing::Values("secp256r1", "id_tc26_gost_3410_2012_256_paramSetA", "Wei448", "secp521r1"));
