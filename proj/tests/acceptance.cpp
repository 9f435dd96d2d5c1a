// Acceptance checks 1-9. One PASS/FAIL line each; exit status 1 if any fails.
#include "test_util.hpp"

#include <ctec/error.hpp>
#include <ctec/instrument.hpp>
#include <ctec/kat.hpp>
#include <ctec/protocols.hpp>
#include <ctec/timing.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

using namespace ctec;
using test::from_oracle;
using test::mpz_of;
using test::scalar_of;
using test::to_oracle;

namespace {

struct Rfc6979Vector {
      const char* curve;
      const char* hash;
      const char* msg;
      const char* x;
      const char* r;
      const char* s;
};

const Rfc6979Vector kRfc6979[] = {
#include "data/rfc6979_vectors.inc"
};

struct Outcome {
      bool pass = true;
      std::string detail;

      void fail(const std::string& why) {
         if(pass) {
            detail = why;
         }
         pass = false;
      }
};

int g_failures = 0;

void report(int n, const char* title, const std::function<Outcome()>& check) {
   const auto t0 = std::chrono::steady_clock::now();
   Outcome o;
   try {
      o = check();
   } catch(const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
   }
   const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
   std::printf("criterion %d: %s - %s (%s) [%.1fs]\n", n, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
   std::fflush(stdout);
   if(!o.pass) {
      ++g_failures;
   }
}

ProjPointW lift(const Curve& c, const oracle::Point& P) {
   return w_lift(c.weierstrass(), from_oracle(c, P));
}

Outcome oracle_equivalence() {
   Outcome o;
   std::size_t checks = 0;
   std::mt19937_64 rng(20240601);
   for(const auto& name : test::curve_names()) {
      const auto c = curve_by_name(name);
      const oracle::Curve oc(c->descriptor());
      const mpz_class& q = oc.q();
      const oracle::Point g = oc.generator();
      const oracle::Point P = oc.mul(test::random_scalar(rng, q), g);
      const ProjPointW Pw = lift(*c, P);
      auto expect = [&](const ProjPointW& got, const oracle::Point& want, const char* op, const mpz_class& k) {
         ++checks;
         if(to_oracle(*c, got) != want) {
            o.fail(name + " " + op + " k=" + k.get_str(16));
         }
      };
      for(int i = 0; i != 256; ++i) {
         const mpz_class k = test::random_scalar(rng, q);
         const mpz_class l = test::random_scalar(rng, q);
         const oracle::Point kg = oc.mul(k, g);
         expect(mul_varbase(*c, Pw, scalar_of(*c, k)), oc.mul(k, P), "mul_varbase", k);
         expect(mul_fixedbase(*c, scalar_of(*c, k)), kg, "mul_fixedbase", k);
         expect(mul_double(*c, scalar_of(*c, k), Pw, scalar_of(*c, l)), oc.add(kg, oc.mul(l, P)), "mul_double", k);
      }
      // Extremes: k in [1, 256) and q - k; the oracle walks by additions.
      oracle::Point kg = oracle::Point::identity();
      oracle::Point kP = oracle::Point::identity();
      for(int k = 1; k != 256; ++k) {
         kg = oc.add(kg, g);
         kP = oc.add(kP, P);
         const mpz_class lo = k;
         const mpz_class hi = q - k;
         expect(mul_varbase(*c, Pw, scalar_of(*c, lo)), kP, "mul_varbase", lo);
         expect(mul_varbase(*c, Pw, scalar_of(*c, hi)), oc.neg(kP), "mul_varbase", hi);
         expect(mul_fixedbase(*c, scalar_of(*c, lo)), kg, "mul_fixedbase", lo);
         expect(mul_fixedbase(*c, scalar_of(*c, hi)), oc.neg(kg), "mul_fixedbase", hi);
         expect(mul_double(*c, scalar_of(*c, lo), Pw, scalar_of(*c, hi)), oc.add(kg, oc.neg(kP)), "mul_double", lo);
         expect(mul_double(*c, scalar_of(*c, hi), Pw, scalar_of(*c, lo)), oc.add(oc.neg(kg), kP), "mul_double", hi);
      }
   }
   o.detail = std::to_string(checks) + " comparisons" + (o.pass ? "" : "; first mismatch " + o.detail);
   return o;
}

Outcome exceptional_matrix() {
   Outcome o;
   std::size_t w_checks = 0, te_checks = 0, te_curves = 0;
   for(const auto& name : test::curve_names()) {
      const auto c = curve_by_name(name);
      const oracle::Curve oc(c->descriptor());
      const WCurve& W = c->weierstrass();
      const oracle::Point g = oc.generator();
      const std::vector<oracle::Point> pts{oracle::Point::identity(), g, oc.neg(g), oc.dbl(g)};
      const TECurve* te = c->edwards();
      te_curves += te != nullptr;
      for(const auto& P : pts) {
         for(const auto& Q : pts) {
            const oracle::Point want = oc.add(P, Q);
            w_checks += 2;
            if(to_oracle(*c, w_add(W, lift(*c, P), lift(*c, Q))) != want ||
               to_oracle(*c, w_add_mixed(W, lift(*c, P), from_oracle(*c, Q))) != want) {
               o.fail(name + " weierstrass add");
            }
            if(te) {
               te_checks += 2;
               const ExtPointTE Pe = map_w_to_te(*te, lift(*c, P));
               const ExtPointTE Qe = map_w_to_te(*te, lift(*c, Q));
               if(to_oracle(*c, map_te_to_w(*te, te_add(*te, Pe, Qe))) != want ||
                  to_oracle(*c, map_te_to_w(*te, te_add_mixed(*te, Pe, te_normalize(*te, Qe)))) != want) {
                  o.fail(name + " edwards add");
               }
            }
         }
         ++w_checks;
         if(to_oracle(*c, w_dbl(W, lift(*c, P))) != oc.dbl(P)) {
            o.fail(name + " weierstrass dbl");
         }
         if(te) {
            ++te_checks;
            if(to_oracle(*c, map_te_to_w(*te, te_dbl(*te, map_w_to_te(*te, lift(*c, P))))) != oc.dbl(P)) {
               o.fail(name + " edwards dbl");
            }
         }
      }
   }
   const std::string counts = std::to_string(w_checks) + " Weierstrass and " + std::to_string(te_checks) +
                              " Edwards cases, Edwards form on " + std::to_string(te_curves) + " curves";
   o.detail = o.pass ? counts : o.detail + "; " + counts;
   return o;
}

Outcome x0_cycle() {
   Outcome o;
   const auto c = curve_by_name("id_GostR3410_2001_CryptoPro_C_ParamSet");
   const oracle::Curve oc(c->descriptor());
   const oracle::Point g = oc.generator();
   if(g.x != 0) {
      o.fail("generator x is not 0");
      return o;
   }
   const HashSpec h = default_hash(*c);
   const std::size_t fb = c->field().byte_length();
   const mpz_class& q = oc.q();

   // Keys whose public point has x = 0: d = 1 and d = q - 1.
   std::vector<KeyPair> keys;
   for(const mpz_class& d : std::vector<mpz_class>{1, q - 1}) {
      const KeyPair kp = keypair_from_secret(*c, oracle::to_bytes(d, c->scalars().byte_length()));
      if(to_oracle(*c, kp.pk) != oc.mul(d, g) || !validate_pubkey_full(*c, kp.pk)) {
         o.fail("keypair d=" + d.get_str(16));
      }
      keys.push_back(kp);
   }
   DeterministicRng rng(3);
   const KeyPair other = keygen(*c, rng);
   if(to_oracle(*c, other.pk) != oc.mul(mpz_of(*c, other.sk), g)) {
      o.fail("keygen");
   }
   keys.push_back(other);

   const Bytes digest = h.digest(test::bytes_of("x=0"));
   mpz_class e = oracle::to_mpz(digest) % q;
   if(e == 0) {
      e = 1;
   }
   for(const KeyPair& kp : keys) {
      const mpz_class d = mpz_of(*c, kp.sk);
      const Bytes pk = point_encode(*c, kp.pk);
      // Injected nonce, checked against the oracle formula.
      const mpz_class k = 0x5eed;
      const mpz_class r = oc.mul(k, g).x % q;
      const Signature sig = gost_sign(*c, kp.sk, digest, NonceMode::injected(scalar_of(*c, k)));
      if(mpz_of(*c, sig.r) != r || mpz_of(*c, sig.s) != (r * d + k * e) % q) {
         o.fail("sign d=" + d.get_str(16));
      }
      const Signature det = gost_sign(*c, kp.sk, digest, NonceMode::deterministic());
      if(!gost_verify(*c, pk, digest, encode_signature(*c, sig)) || !gost_verify(*c, pk, digest, encode_signature(*c, det))) {
         o.fail("verify d=" + d.get_str(16));
      }
      // Derive in both directions against every other key.
      for(const KeyPair& peer : keys) {
         const oracle::Point Z = oc.mul(d * oc.h(), to_oracle(*c, peer.pk));
         if(ecdh_derive(*c, kp.sk, point_encode(*c, peer.pk)) != oracle::to_bytes(Z.x, fb)) {
            o.fail("derive d=" + d.get_str(16));
         }
      }
   }
   // k = 1 puts R at the x = 0 generator, so r = 0 must be refused.
   try {
      gost_sign(*c, keys[2].sk, digest, NonceMode::injected(scalar_of(*c, 1)));
      o.fail("r = 0 accepted");
   } catch(const Error& err) {
      if(err.code() != ErrorCode::ZeroRS) {
         o.fail(std::string("r = 0 gave ") + err.what());
      }
   }
   if(o.pass) {
      o.detail = "keygen, sign, verify, derive with x=0 keys d=1, d=q-1 and a random key";
   }
   return o;
}

Outcome small_subgroup() {
   Outcome o;
   std::ostringstream msg;
   const KatHooks prefix = mutant_hooks(Mutant::PreFixVko);
   for(const char* name : {"id_tc26_gost_3410_2012_256_paramSetA", "id_tc26_gost_3410_2012_512_paramSetC", "MDCurve201601"}) {
      const auto c = curve_by_name(name);
      const oracle::Curve oc(c->descriptor());
      const oracle::Point S = oracle::find_small_subgroup_point(c->descriptor());
      mpz_class ord = 1;
      while(!oc.mul(ord, S).infinity) {
         ++ord;
      }
      const Bytes peer = point_encode(*c, from_oracle(*c, S));
      // Pick (d, ukm) so that the pre-fix product h*ukm*d mod q is not a
      // multiple of ord(S); it has to wrap around q for that.
      mpz_class d = oc.q() - 3, ukm = 5;
      while(((oc.h() * ukm * d) % oc.q()) % ord == 0) {
         ++ukm;
      }
      auto rejects = [&](const std::function<void()>& fn) {
         try {
            fn();
         } catch(const Error& e) {
            return e.code() == ErrorCode::SmallSubgroupResult;
         }
         return false;
      };
      const bool ecdh_ok = rejects([&] { ecdh_derive(*c, scalar_of(*c, d), peer); });
      const bool vko_ok = rejects([&] { vko_derive(*c, scalar_of(*c, d), peer, scalar_of(*c, ukm), default_hash(*c)); });
      KatCase kc;
      kc.id = "prefix";
      kc.curve = name;
      kc.kind = KatKind::Derive;
      const std::size_t qb = c->scalars().byte_length();
      const std::size_t fb = c->field().byte_length();
      kc.inputs = {{"d", to_hex(oracle::to_bytes(d, qb))},
                   {"ukm", to_hex(oracle::to_bytes(ukm, qb))},
                   {"peerX", to_hex(oracle::to_bytes(S.x, fb))},
                   {"peerY", to_hex(oracle::to_bytes(S.y, fb))}};
      bool prefix_succeeds = false;
      try {
         prefix_succeeds = prefix.derive(kc).has_value();
      } catch(const Error&) {
      }
      if(!ecdh_ok || !vko_ok) {
         o.fail(std::string(name) + ": small-order peer not rejected");
      }
      if(!prefix_succeeds) {
         o.fail(std::string(name) + ": pre-fix VKO rejected the peer");
      }
      msg << name << " ord(S)=" << ord.get_str() << "; ";
   }
   if(o.pass) {
      o.detail = msg.str() + "fixed code rejects, pre-fix VKO accepts";
   }
   return o;
}

Outcome twist_constants() {
   Outcome o;
   struct Published {
         const char* curve;
         const char* q;
         const char* qt;
   };
   const Published pub[] = {
      {"id_tc26_gost_3410_2012_256_paramSetA",
       "3FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF0273220378499CA3EEA50AA93C9F265",
       "400000000000000000000000000000000FD8CDDFC87B6635C115AF556C360C67"},
      {"id_tc26_gost_3410_2012_512_paramSetC",
       "400000000000000000000000000000000000000000"
       "00000000000000000000003673245B9AF954FFB3CC"
       "5600AEB8AFD33712561858965ED96B9DC310B80FDA"
       "F7",
       "3FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF"
       "FFFFFFFFFFFFFFFFFFFFFFC98CDBA46506AB004C33"
       "A9FF5147502CC8EDA9E7A769A12694623CEF47F023"
       "ED"},
   };
   for(const auto& v : pub) {
      const CurveDescriptor& d = bundled_database().get(v.curve);
      const mpz_class p = oracle::to_mpz(d.p);
      const mpz_class q = oracle::from_hex(v.q);
      const mpz_class qt = oracle::from_hex(v.qt);
      if(4 * q + 4 * qt != 2 * (p + 1)) {
         o.fail(std::string(v.curve) + ": 4q + 4q' != 2(p+1)");
      }
      if(!validate_twist(d)) {
         o.fail(std::string(v.curve) + ": stored twist data inconsistent");
      }
   }
   if(o.pass) {
      o.detail = "paramSetA-256 and paramSetC-512 published values";
   }
   return o;
}

Outcome rfc6979() {
   Outcome o;
   std::size_t n = 0;
   for(const auto& v : kRfc6979) {
      const auto c = curve_by_name(v.curve);
      const oracle::Curve oc(c->descriptor());
      const HashSpec h = HashSpec::by_name(v.hash);
      const KeyPair kp = keypair_from_secret(*c, from_hex(v.x));
      const Bytes msg = test::bytes_of(v.msg);
      const Signature sig = ecdsa_sign(*c, kp.sk, msg, h, NonceMode::deterministic());
      const std::string id = std::string(v.curve) + "/" + v.hash + "/" + v.msg;
      if(to_hex(c->scalars().encode(sig.r)) != v.r || to_hex(c->scalars().encode(sig.s)) != v.s) {
         o.fail(id + " signature differs");
      }
      // Oracle check of the frozen vector: x([e/s]g + [r/s]Q) = r.
      const mpz_class& q = oc.q();
      const mpz_class r = oracle::from_hex(v.r), s = oracle::from_hex(v.s);
      const mpz_class e = mpz_of(*c, c->scalars().mod_wide(h.digest(msg), HashMode::Ecdsa));
      mpz_class w;
      mpz_invert(w.get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
      const oracle::Point Q = oc.mul(oracle::from_hex(v.x), oc.generator());
      const oracle::Point R = oc.add(oc.mul(e * w % q, oc.generator()), oc.mul(r * w % q, Q));
      if(R.infinity || R.x % q != r) {
         o.fail(id + " vector fails oracle verification");
      }
      ++n;
   }
   if(o.pass) {
      o.detail = std::to_string(n) + " vectors on secp192r1, secp256r1, secp384r1, secp521r1";
   }
   return o;
}

Outcome counters() {
   Outcome o;
   std::mt19937_64 rng(77);
   std::size_t curves = 0;
   for(const auto& name : test::curve_names()) {
      const auto c = curve_by_name(name);
      const oracle::Curve oc(c->descriptor());
      const ProjPointW P = lift(*c, oc.mul(test::random_scalar(rng, oc.q()), oc.generator()));
      std::optional<instrument::Counters> var, fixed;
      for(int i = 0; i != 128; ++i) {
         mpz_class k = test::random_scalar(rng, oc.q());
         if(i < 4) {
            k = i < 2 ? mpz_class(i + 1) : oc.q() - (i - 1);
         }
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
         if(dv != *var || df != *fixed) {
            o.fail(name + " counters vary at k=" + k.get_str(16));
         }
      }
      if(var->table_touch == 0 || fixed->table_touch == 0) {
         o.fail(name + " no table reads recorded");
      }
      ++curves;
   }
   if(o.pass) {
      o.detail = "128 scalars on each of " + std::to_string(curves) + " curves";
   }
   return o;
}

Outcome performance() {
   Outcome o;
   constexpr std::size_t kReps = 1000;
   constexpr double kFixedMax = 0.7 * 1.1;
   constexpr double kDoubleMax = 1.5 * 1.1;
   std::ostringstream msg;
   bool any = false;
   for(const char* name : {"id_tc26_gost_3410_2012_256_paramSetA", "secp256r1"}) {
      const auto c = curve_by_name(name);
      const oracle::Curve oc(c->descriptor());
      std::mt19937_64 rng(5);
      std::vector<Scalar> ks;
      for(int i = 0; i != 64; ++i) {
         ks.push_back(scalar_of(*c, test::random_scalar(rng, oc.q())));
      }
      const ProjPointW P = lift(*c, oc.mul(test::random_scalar(rng, oc.q()), oc.generator()));
      std::size_t i = 0, j = 0, l = 0;
      volatile std::uint64_t sink = 0;
      const OpTiming var = time_op([&] { sink = sink + mul_varbase(*c, P, ks[i++ % ks.size()]).X.limbs[0]; }, kReps);
      const OpTiming fix = time_op([&] { sink = sink + mul_fixedbase(*c, ks[j++ % ks.size()]).X.limbs[0]; }, kReps);
      const OpTiming dbl = time_op(
         [&] {
            sink = sink + mul_double(*c, ks[l % ks.size()], P, ks[(l + 1) % ks.size()]).X.limbs[0];
            ++l;
         },
         kReps);
      const double rf = fix.nanos.median / var.nanos.median;
      const double rd = dbl.nanos.median / var.nanos.median;
      const bool ok = rf <= kFixedMax && rd <= kDoubleMax;
      any = any || ok;
      char buf[200];
      std::snprintf(buf, sizeof buf, "%s var=%.1fus fixed/var=%.3f double/var=%.3f%s; ", name, var.nanos.median / 1000, rf, rd,
                    ok ? "" : " (over)");
      msg << buf;
   }
   if(!any) {
      o.fail("");
   }
   o.detail = msg.str() + "limits 0.77 and 1.65, 1000 reps";
   return o;
}

Outcome kat_suite() {
   Outcome o;
   std::vector<KatCase> cases;
   std::uint64_t seed = 1;
   for(const auto& d : bundled_database().curves()) {
      const auto s = generate_suite(d, seed++);
      cases.insert(cases.end(), s.begin(), s.end());
   }
   const SuiteResult lib = run_suite(cases, library_hooks());
   std::ostringstream msg;
   msg << "library " << lib.passed << "/" << cases.size();
   if(!lib.all_passed()) {
      o.fail("");
   }
   for(Mutant m : {Mutant::ConstantScalarMult, Mutant::NoCofactorClearing, Mutant::PreFixVko}) {
      const SuiteResult r = run_suite(cases, mutant_hooks(m));
      msg << ", " << to_string(m) << " fails " << r.failed;
      if(r.failed == 0) {
         o.fail("");
      }
   }
   o.detail = msg.str();
   return o;
}

}  // namespace

int main() {
   report(1, "oracle equivalence", oracle_equivalence);
   report(2, "exceptional-pair matrix", exceptional_matrix);
   report(3, "x=0 cycle on CryptoPro C", x0_cycle);
   report(4, "small-subgroup rejection", small_subgroup);
   report(5, "twist constants", twist_constants);
   report(6, "deterministic ECDSA", rfc6979);
   report(7, "scalar-independent counters", counters);
   report(8, "performance ratios", performance);
   report(9, "KAT suite and mutants", kat_suite);
   std::printf("%d of 9 criteria failed\n", g_failures);
   return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
