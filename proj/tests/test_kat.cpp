#include "test_util.hpp"

#include <ctec/error.hpp>
#include <ctec/kat.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace ctec;

namespace {

const std::filesystem::path kData = CTEC_TEST_DATA_DIR;

std::vector<KatCase> suite_for(const std::string& name, std::uint64_t seed = 1) {
   SuiteOptions opts;
   opts.random_cases = 4;
   opts.extreme_bits = 3;
   return generate_suite(bundled_database().get(name), seed, opts);
}

std::size_t count(const std::vector<KatCase>& cases, Provenance p) {
   return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const KatCase& c) { return c.provenance == p; }));
}

}  // namespace

TEST(Cavp, ParsesCdhAndSkipsBinarySections) {
   const CavpParseResult r = parse_cavp_file(kData / "ecc_cdh_sample.rsp");
   ASSERT_EQ(r.cases.size(), 1U);
   EXPECT_EQ(r.skipped_vectors, 1U);
   EXPECT_EQ(r.skipped_sections, std::vector<std::string>{"B-163"});
   const KatCase& c = r.cases[0];
   EXPECT_EQ(c.curve, "secp256r1");
   EXPECT_EQ(c.kind, KatKind::Derive);
   EXPECT_EQ(c.provenance, Provenance::Cavp);
   EXPECT_EQ(c.expected->at("Z"), "46fc62106420ff012e54a434fbdd2d25ccc5852060561e68040dd7778997bd7b");
   EXPECT_TRUE(run_suite(r.cases, library_hooks()).all_passed());
}

TEST(Cavp, ParsesKeyPairAndPkv) {
   const CavpParseResult r = parse_cavp_file(kData / "ecc_keypair_sample.rsp");
   ASSERT_EQ(r.cases.size(), 3U);
   EXPECT_EQ(r.cases[0].kind, KatKind::Keygen);
   EXPECT_EQ(r.cases[1].kind, KatKind::PubkeyValidate);
   EXPECT_FALSE(r.cases[1].expects_failure());
   EXPECT_TRUE(r.cases[2].expects_failure());
   const SuiteResult res = run_suite(r.cases, library_hooks());
   EXPECT_TRUE(res.all_passed()) << emit_tap(r.cases, res);
}

TEST(Cavp, MalformedInputReportsLine) {
   try {
      parse_cavp("[P-256]\n\nCOUNT = 0\nthis line has no equals sign\n", "bad.rsp");
      FAIL();
   } catch(const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      EXPECT_NE(std::string(e.what()).find("bad.rsp:4"), std::string::npos);
   }
   EXPECT_THROW(parse_cavp("[P-256\n", "x"), Error);
   EXPECT_THROW(parse_cavp("[P-256]\nQx = 01\nQy = 02\nResult = maybe\n", "x"), Error);
   EXPECT_THROW(parse_cavp_file(kData / "does-not-exist.rsp"), Error);
}

TEST(Generator, DeterministicInSeed) {
   const auto a = suite_for("secp256r1", 5);
   EXPECT_EQ(a, suite_for("secp256r1", 5));
   EXPECT_NE(a, suite_for("secp256r1", 6));
   EXPECT_THROW(generate_suite(bundled_database().get("secp256r1"), 1, SuiteOptions{4, 0}), Error);
}

TEST(Generator, ProvenanceMix) {
   const auto plain = suite_for("secp256r1");
   EXPECT_GT(count(plain, Provenance::GeneratedPositive), 0U);
   EXPECT_GT(count(plain, Provenance::GeneratedNegative), 0U);
   EXPECT_EQ(count(plain, Provenance::ExtremeKey), (1U << 3) - 1 + (1U << 3));
   EXPECT_EQ(count(plain, Provenance::SmallSubgroup), 0U);

   const auto h4 = suite_for("id_tc26_gost_3410_2012_256_paramSetA");
   EXPECT_GT(count(h4, Provenance::SmallSubgroup), 0U);

   const auto cpc = suite_for("id_GostR3410_2001_CryptoPro_C_ParamSet");
   EXPECT_GT(count(cpc, Provenance::X0Regression), 0U);
}

TEST(Generator, IdsAreUnique) {
   auto cases = suite_for("Wei25519");
   std::vector<std::string> ids;
   for(const auto& c : cases) {
      ids.push_back(c.id);
   }
   std::sort(ids.begin(), ids.end());
   EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(Json, RoundTrip) {
   const auto cases = suite_for("id_tc26_gost_3410_2012_256_paramSetA");
   EXPECT_EQ(parse_json(emit_json(cases)), cases);
   EXPECT_THROW(parse_json("{}"), Error);
   EXPECT_THROW(parse_json("[{\"id\":\"x\"}]"), Error);
   EXPECT_THROW(parse_json("not json"), Error);
}

TEST(Runner, TapOutput) {
   auto cases = suite_for("secp192r1");
   cases.resize(3);
   SuiteResult r = run_suite(cases, library_hooks());
   ASSERT_TRUE(r.all_passed());
   r.results[1] = CaseResult{false, "boom"};
   const std::string tap = emit_tap(cases, r);
   EXPECT_EQ(tap.substr(0, 5), "1..3\n");
   EXPECT_NE(tap.find("ok 1 - " + cases[0].id + "\n"), std::string::npos);
   EXPECT_NE(tap.find("not ok 2 - " + cases[1].id + " # boom\n"), std::string::npos);
}

class KatCurve : public ::testing::TestWithParam<std::string> {};

TEST_P(KatCurve, LibraryPassesGeneratedSuite) {
   const auto cases = suite_for(GetParam());
   const SuiteResult r = run_suite(cases, library_hooks());
   EXPECT_TRUE(r.all_passed()) << emit_tap(cases, r);
   EXPECT_EQ(r.passed, cases.size());
}

INSTANTIATE_TEST_SUITE_P(AllCurves, KatCurve, ::testing::ValuesIn(test::curve_names()), [](const auto& info) { return info.param; });

TEST(Mutants, EachFailsSomething) {
   std::vector<KatCase> cases;
   for(const char* n : {"secp256r1", "id_tc26_gost_3410_2012_256_paramSetA", "MDCurve201601"}) {
      const auto s = suite_for(n);
      cases.insert(cases.end(), s.begin(), s.end());
   }
   for(Mutant m : {Mutant::ConstantScalarMult, Mutant::NoCofactorClearing, Mutant::PreFixVko}) {
      EXPECT_GT(run_suite(cases, mutant_hooks(m)).failed, 0U) << to_string(m);
   }
}

TEST(Mutants, PreFixVkoOnlyBreaksSmallSubgroupCases) {
   const auto cases = suite_for("id_tc26_gost_3410_2012_512_paramSetC");
   const SuiteResult r = run_suite(cases, mutant_hooks(Mutant::PreFixVko));
   ASSERT_GT(r.failed, 0U);
   for(std::size_t i = 0; i != cases.size(); ++i) {
      if(!r.results[i].pass) {
         EXPECT_EQ(cases[i].provenance, Provenance::SmallSubgroup) << cases[i].id;
      }
   }
}
