#include "test_util.hpp"

#include <ctec/error.hpp>
#include <ctec/instrument.hpp>

#include <gtest/gtest.h>

using namespace ctec;
using test::mpz_of;
using test::scalar_of;
using test::to_oracle;

namespace {

class ScalarMul : public ::testing::TestWithParam<std::string> {
   protected:
      void SetUp() override {
         c = curve_by_name(GetParam());
         oc.emplace(c->descriptor());
      }

      std::vector<mpz_class> scalars(std::size_t n, std::uint64_t seed) const {
         std::mt19937_64 rng(seed);
         const mpz_class& q = oc->q();
         std::vector<mpz_class> out{1, 2, 3, 31, 32, 33, q - 1, q - 2, q - 32};
         for(std::size_t i = 0; i != n; ++i) {
            out.push_back(test::random_scalar(rng, q));
         }
         return out;
      }

      ProjPointW lift(const oracle::Point& P) const { return w_lift(c->weierstrass(), test::from_oracle(*c, P)); }

      std::shared_ptr<const Curve> c;
      std::optional<oracle::Curve> oc;
};

LimbArray limbs_of(const mpz_class& v) {
   LimbArray out{};
   limbs::from_bytes_be(out, oracle::to_bytes(v));
   return out;
}

}  // namespace

TEST(RegularNaf, ReconstructsAndDigitsAreOdd) {
   std::mt19937_64 rng(11);
   for(unsigned w : {2U, 4U, 5U, 6U}) {
      for(int i = 0; i != 200; ++i) {
         const mpz_class k = test::random_scalar(rng, mpz_class(1) << 260) - 1;
         const RegularNafDigits r = recode_regular_naf(limbs_of(k), 260, w);
         EXPECT_EQ(r.digits.size(), (260 + 1 + w - 1) / w);
         for(auto d : r.digits) {
            EXPECT_EQ(d & 1, 1);
            EXPECT_LT(std::abs(d), 1 << w);
         }
         EXPECT_EQ(reconstruct_regular_naf(r), limbs_of(k));
      }
   }
}

TEST(RegularNaf, EvenInputSetsParityFix) {
   EXPECT_EQ(recode_regular_naf(limbs::from_u64(10), 16, 5).parity_fix, 1U);
   EXPECT_EQ(recode_regular_naf(limbs::from_u64(11), 16, 5).parity_fix, 0U);
   EXPECT_EQ(reconstruct_regular_naf(recode_regular_naf(limbs::from_u64(0), 16, 5)), limbs::from_u64(0));
}

TEST(Comb, TeethRule) {
   // 32-byte coordinates, w = 5: one tooth is 16 * 64 = 1 KiB.
   EXPECT_EQ(comb_teeth(32, 5, 16384), 8U);
   EXPECT_EQ(comb_teeth(32, 5, 4096), 4U);
   EXPECT_EQ(comb_teeth(66, 5, 4096), 1U);
   EXPECT_EQ(comb_teeth(66, 5, 100), 1U);
   EXPECT_EQ(comb_teeth(64, 5, 16384), 8U);
}

TEST_P(ScalarMul, CombTableFitsBudget) {
   const CombTables& t = c->comb();
   EXPECT_LE(t.footprint(c->field().byte_length()), std::max<std::size_t>(c->options().l1_budget, t.entries() * 2 * c->field().byte_length()));
   EXPECT_EQ(t.w.size(), t.teeth * t.entries());
   EXPECT_EQ(to_oracle(*c, t.w[0]), oc->generator());
}

TEST_P(ScalarMul, VarbaseMatchesOracle) {
   const oracle::Point P = oc->mul(12345, oc->generator());
   for(const auto& k : scalars(8, 1)) {
      EXPECT_EQ(to_oracle(*c, mul_varbase(*c, lift(P), scalar_of(*c, k))), oc->mul(k, P)) << k.get_str(16);
   }
   EXPECT_EQ(to_oracle(*c, mul_varbase(*c, lift(P), c->scalars().zero())), oracle::Point::identity());
   EXPECT_EQ(to_oracle(*c, mul_varbase(*c, lift(oracle::Point::identity()), scalar_of(*c, 5))), oracle::Point::identity());
}

TEST_P(ScalarMul, FixedbaseMatchesOracle) {
   for(const auto& k : scalars(8, 2)) {
      EXPECT_EQ(to_oracle(*c, mul_fixedbase(*c, scalar_of(*c, k))), oc->mul(k, oc->generator())) << k.get_str(16);
   }
   EXPECT_EQ(to_oracle(*c, mul_fixedbase(*c, c->scalars().zero())), oracle::Point::identity());
}

TEST_P(ScalarMul, DoubleMatchesOracle) {
   const oracle::Point P = oc->mul(777, oc->generator());
   const auto ks = scalars(4, 3);
   for(const auto& k : ks) {
      for(const auto& l : ks) {
         const oracle::Point want = oc->add(oc->mul(k, oc->generator()), oc->mul(l, P));
         EXPECT_EQ(to_oracle(*c, mul_double(*c, scalar_of(*c, k), lift(P), scalar_of(*c, l))), want);
      }
   }
   // [777]g + [q-1]([777]g) is the identity.
   EXPECT_EQ(to_oracle(*c, mul_double(*c, scalar_of(*c, 777), lift(P), scalar_of(*c, oc->q() - 1))), oracle::Point::identity());
   EXPECT_EQ(to_oracle(*c, mul_double(*c, c->scalars().zero(), lift(P), scalar_of(*c, 2))), oc->dbl(P));
}

TEST_P(ScalarMul, RejectsOffCurveAndUnreduced) {
   ProjPointW bad = lift(oc->generator());
   bad.Y = c->field().add(bad.Y, bad.Z);
   EXPECT_THROW(mul_varbase(*c, bad, scalar_of(*c, 3)), Error);
   EXPECT_THROW(mul_double(*c, scalar_of(*c, 3), bad, scalar_of(*c, 3)), Error);
   Scalar q;
   q.limbs = c->scalars().modulus();
   try {
      mul_varbase(*c, lift(oc->generator()), q);
      FAIL();
   } catch(const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
   }
}

TEST_P(ScalarMul, CountersIndependentOfScalar) {
   const ProjPointW P = lift(oc->mul(99, oc->generator()));
   std::optional<instrument::Counters> var;
   std::optional<instrument::Counters> fixed;
   for(const auto& k : scalars(12, 4)) {
      const Scalar s = scalar_of(*c, k);
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
   EXPECT_GT(var->table_touch, 0U);
   EXPECT_GT(fixed->table_touch, 0U);
}

TEST_P(ScalarMul, MulDoubleIsCounted) {
   instrument::Scope s;
   (void)mul_double(*c, scalar_of(*c, 1), lift(oc->generator()), scalar_of(*c, 1));
   EXPECT_EQ(s.delta().mul_double_calls, 1U);
}

TEST_P(ScalarMul, CofactorVarbase) {
   std::mt19937_64 rng(5);
   const oracle::Point P = oc->mul(4242, oc->generator());
   for(int i = 0; i != 4; ++i) {
      const mpz_class k = test::random_scalar(rng, oc->q());
      EXPECT_EQ(to_oracle(*c, mul_cofactor_varbase(*c, lift(P), scalar_of(*c, k))), oc->mul(k * oc->h(), P));
   }
   EXPECT_EQ(mpz_class(oracle::to_mpz(limbs::to_bytes_be(clear_cofactor_scalar(*c, scalar_of(*c, oc->q() - 1)).limbs, 80))),
             (oc->q() - 1) * oc->h());
}

TEST_P(ScalarMul, ClearCofactorKillsSmallSubgroup) {
   if(c->cofactor() == 1) {
      GTEST_SKIP() << "cofactor 1";
   }
   const oracle::Point S = oracle::find_small_subgroup_point(c->descriptor());
   EXPECT_TRUE(w_is_identity(c->weierstrass(), clear_cofactor(*c, lift(S))));
   const oracle::Point mixed = oc->add(oc->generator(), S);
   EXPECT_EQ(to_oracle(*c, clear_cofactor(*c, lift(mixed))), oc->mul(oc->h(), oc->generator()));
   // [h k](S) is the identity for every k.
   EXPECT_TRUE(w_is_identity(c->weierstrass(), mul_cofactor_varbase(*c, lift(S), scalar_of(*c, 12345))));
}

INSTANTIATE_TEST_SUITE_P(AllCurves, ScalarMul, ::testing::ValuesIn(test::curve_names()), [](const auto& info) { return info.param; });
