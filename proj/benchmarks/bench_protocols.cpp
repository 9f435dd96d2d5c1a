#include <ctec/kat.hpp>
#include <ctec/protocols.hpp>

#include <benchmark/benchmark.h>

using namespace ctec;

namespace {

// Full operations including encoding, as the CLI bench measures them.
void BM_Keygen(benchmark::State& state, const char* name) {
   const auto c = curve_by_name(name);
   DeterministicRng rng(1);
   for(auto _ : state) {
      benchmark::DoNotOptimize(point_encode(*c, keygen(*c, rng).pk));
   }
}

void BM_Derive(benchmark::State& state, const char* name) {
   const auto c = curve_by_name(name);
   DeterministicRng rng(2);
   const KeyPair a = keygen(*c, rng);
   const Bytes peer = point_encode(*c, keygen(*c, rng).pk);
   for(auto _ : state) {
      benchmark::DoNotOptimize(ecdh_derive(*c, a.sk, peer));
   }
}

void BM_Sign(benchmark::State& state, const char* name) {
   const auto c = curve_by_name(name);
   DeterministicRng rng(3);
   const KeyPair a = keygen(*c, rng);
   const HashSpec h = default_hash(*c);
   const Bytes msg(32, 0x61);
   const bool gost = is_gost_curve(c->descriptor());
   for(auto _ : state) {
      const Signature s = gost ? gost_sign(*c, a.sk, h.digest(msg), NonceMode::random(rng))
                               : ecdsa_sign(*c, a.sk, msg, h, NonceMode::random(rng));
      benchmark::DoNotOptimize(encode_signature(*c, s));
   }
}

void BM_Verify(benchmark::State& state, const char* name) {
   const auto c = curve_by_name(name);
   DeterministicRng rng(4);
   const KeyPair a = keygen(*c, rng);
   const Bytes pk = point_encode(*c, a.pk);
   const HashSpec h = default_hash(*c);
   const Bytes msg(32, 0x61);
   const bool gost = is_gost_curve(c->descriptor());
   const Bytes digest = h.digest(msg);
   const Bytes sig = encode_signature(
      *c, gost ? gost_sign(*c, a.sk, digest, NonceMode::deterministic()) : ecdsa_sign(*c, a.sk, msg, h, NonceMode::deterministic()));
   for(auto _ : state) {
      benchmark::DoNotOptimize(gost ? gost_verify(*c, pk, digest, sig) : ecdsa_verify(*c, pk, msg, sig, h));
   }
}

const int kRegistered = [] {
   for(const char* c : {"secp256r1", "id_tc26_gost_3410_2012_256_paramSetA", "id_tc26_gost_3410_2012_512_paramSetC"}) {
      const std::string n(c);
      benchmark::RegisterBenchmark(("keygen/" + n).c_str(), BM_Keygen, c)->Unit(benchmark::kMicrosecond);
      benchmark::RegisterBenchmark(("derive/" + n).c_str(), BM_Derive, c)->Unit(benchmark::kMicrosecond);
      benchmark::RegisterBenchmark(("sign/" + n).c_str(), BM_Sign, c)->Unit(benchmark::kMicrosecond);
      benchmark::RegisterBenchmark(("verify/" + n).c_str(), BM_Verify, c)->Unit(benchmark::kMicrosecond);
   }
   return 0;
}();

}  // namespace
