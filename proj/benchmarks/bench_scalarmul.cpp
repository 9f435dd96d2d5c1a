#include <ctec/hex.hpp>
#include <ctec/oracle.hpp>
#include <ctec/scalarmul.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace ctec;

namespace {

const char* const kCurves[] = {
   "secp256r1",
   "id_tc26_gost_3410_2012_256_paramSetA",
   "Wei25519",
   "secp384r1",
   "id_tc26_gost_3410_2012_512_paramSetC",
   "secp521r1",
};

struct Inputs {
      std::shared_ptr<const Curve> curve;
      std::vector<Scalar> scalars;
      ProjPointW point;
};

Inputs make_inputs(const char* name) {
   Inputs in{curve_by_name(name), {}, {}};
   const ScalarField& sf = in.curve->scalars();
   std::mt19937_64 rng(1);
   for(int i = 0; i != 32; ++i) {
      Bytes b(sf.byte_length() + 8);
      for(auto& x : b) {
         x = static_cast<std::uint8_t>(rng());
      }
      in.scalars.push_back(sf.reduce(b));
   }
   in.point = mul_fixedbase(*in.curve, in.scalars.back());
   return in;
}

void BM_Varbase(benchmark::State& state, const char* name) {
   const Inputs in = make_inputs(name);
   std::size_t i = 0;
   for(auto _ : state) {
      benchmark::DoNotOptimize(mul_varbase(*in.curve, in.point, in.scalars[i++ % in.scalars.size()]));
   }
}

void BM_Fixedbase(benchmark::State& state, const char* name) {
   const Inputs in = make_inputs(name);
   std::size_t i = 0;
   for(auto _ : state) {
      benchmark::DoNotOptimize(mul_fixedbase(*in.curve, in.scalars[i++ % in.scalars.size()]));
   }
}

void BM_Double(benchmark::State& state, const char* name) {
   const Inputs in = make_inputs(name);
   std::size_t i = 0;
   for(auto _ : state) {
      const std::size_t j = i++ % in.scalars.size();
      benchmark::DoNotOptimize(mul_double(*in.curve, in.scalars[j], in.point, in.scalars[(j + 1) % in.scalars.size()]));
   }
}

void BM_OracleMul(benchmark::State& state, const char* name) {
   const oracle::Curve oc(bundled_database().get(name));
   const mpz_class k = oc.q() - 12345;
   for(auto _ : state) {
      benchmark::DoNotOptimize(oc.mul(k, oc.generator()));
   }
}

const int kRegistered = [] {
   for(const char* c : kCurves) {
      benchmark::RegisterBenchmark((std::string("varbase/") + c).c_str(), BM_Varbase, c)->Unit(benchmark::kMicrosecond);
      benchmark::RegisterBenchmark((std::string("fixedbase/") + c).c_str(), BM_Fixedbase, c)->Unit(benchmark::kMicrosecond);
      benchmark::RegisterBenchmark((std::string("double/") + c).c_str(), BM_Double, c)->Unit(benchmark::kMicrosecond);
   }
   benchmark::RegisterBenchmark("oracle/secp256r1", BM_OracleMul, "secp256r1")->Unit(benchmark::kMicrosecond);
   return 0;
}();

}  // namespace
