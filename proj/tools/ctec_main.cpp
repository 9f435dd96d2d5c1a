// ctec: command-line front end to the library.

#include <ctec/error.hpp>
#include <ctec/hex.hpp>
#include <ctec/kat.hpp>
#include <ctec/protocols.hpp>
#include <ctec/timing.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

using namespace ctec;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
      std::string curve;
      std::vector<std::string> curves;
      std::optional<std::uint64_t> rng_seed;
      std::uint64_t seed = 0;
      std::string out;
      std::string format = "table";
      std::size_t reps = 1000;
      std::string hash;
      std::string key;
      std::string msg;
      std::string msg_text;
      std::string sig;
      std::string pub;
      std::string peer;
      std::string ukm;
      std::string nonce = "deterministic";
      std::string k;
      std::string op = "all";
      std::string suite;
      std::string mutant;
      std::size_t n = 16;
      std::vector<std::string> cavp;
};

// "-" reads the first whitespace-separated token of stdin; a "name=" prefix
// (as printed by keygen) is dropped.
Bytes hex_arg(const std::string& value) {
   std::string v = value;
   if(v == "-") {
      std::cin >> v;
   }
   if(const auto eq = v.find('='); eq != std::string::npos) {
      v = v.substr(eq + 1);
   }
   return from_hex(v);
}

std::shared_ptr<const Curve> curve_arg(const Options& o) {
   return curve_by_name(o.curve);
}

HashSpec hash_arg(const Options& o, const Curve& c) {
   return o.hash.empty() ? default_hash(c) : HashSpec::by_name(o.hash);
}

Scalar secret_arg(const Curve& c, const std::string& value, const char* what) {
   const Bytes b = hex_arg(value);
   if(!c.scalars().in_keyrange(b)) {
      throw_error(ErrorCode::OutOfRange, std::string(what) + " not in [1, q-1]");
   }
   return c.scalars().reduce(b);
}

Bytes message_arg(const Options& o) {
   if(!o.msg_text.empty()) {
      return Bytes(o.msg_text.begin(), o.msg_text.end());
   }
   return hex_arg(o.msg);
}

void write_output(const Options& o, const std::string& text) {
   if(o.out.empty() || o.out == "-") {
      std::cout << text;
      return;
   }
   std::ofstream f(o.out, std::ios::binary);
   if(!f || !(f << text)) {
      throw_error(ErrorCode::NotFound, "cannot write " + o.out);
   }
}

std::string read_input(const std::string& path) {
   if(path == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      return ss.str();
   }
   std::ifstream f(path, std::ios::binary);
   if(!f) {
      throw_error(ErrorCode::NotFound, "cannot open " + path);
   }
   std::stringstream ss;
   ss << f.rdbuf();
   return ss.str();
}

std::unique_ptr<RngSource> make_rng(const Options& o) {
   if(o.rng_seed) {
      return std::make_unique<DeterministicRng>(*o.rng_seed);
   }
   return std::make_unique<SystemRng>();
}

int cmd_list_curves(const Options& o) {
   if(o.format == "json") {
      json arr = json::array();
      for(const auto& d : bundled_database().curves()) {
         const auto c = curve_by_name(d.name);
         arr.push_back({{"name", d.name},
                        {"bits", c->field().bit_length()},
                        {"h", d.h},
                        {"model", to_string(c->model())}});
      }
      std::cout << arr.dump(1) << "\n";
      return kExitOk;
   }
   for(const auto& d : bundled_database().curves()) {
      const auto c = curve_by_name(d.name);
      std::cout << std::left << std::setw(42) << d.name << std::right << std::setw(4) << c->field().bit_length() << "  h=" << d.h
                << "  " << to_string(c->model()) << "\n";
   }
   return kExitOk;
}

int cmd_keygen(const Options& o) {
   const auto c = curve_arg(o);
   auto rng = make_rng(o);
   const KeyPair kp = keygen(*c, *rng);
   const std::string sk = to_hex(c->scalars().encode(kp.sk));
   const std::string pk = to_hex(point_encode(*c, kp.pk));
   if(o.format == "json") {
      write_output(o, json{{"curve", c->name()}, {"sk", sk}, {"pk", pk}}.dump() + "\n");
   } else {
      write_output(o, "sk=" + sk + "\npk=" + pk + "\n");
   }
   return kExitOk;
}

int cmd_sign(const Options& o) {
   const auto c = curve_arg(o);
   const Scalar sk = secret_arg(*c, o.key, "key");
   const Bytes msg = message_arg(o);
   std::unique_ptr<RngSource> rng;
   NonceMode mode = NonceMode::deterministic();
   if(!o.k.empty()) {
      mode = NonceMode::injected(secret_arg(*c, o.k, "nonce"));
   } else if(o.nonce == "random") {
      rng = make_rng(o);
      mode = NonceMode::random(*rng);
   }
   const Signature sig = is_gost_curve(c->descriptor()) ? gost_sign(*c, sk, msg, mode) : ecdsa_sign(*c, sk, msg, hash_arg(o, *c), mode);
   write_output(o, to_hex(encode_signature(*c, sig)) + "\n");
   return kExitOk;
}

int cmd_verify(const Options& o) {
   const auto c = curve_arg(o);
   const Bytes pk = hex_arg(o.pub);
   const Bytes msg = message_arg(o);
   const Bytes sig = hex_arg(o.sig);
   const bool ok = is_gost_curve(c->descriptor()) ? gost_verify(*c, pk, msg, sig) : ecdsa_verify(*c, pk, msg, sig, hash_arg(o, *c));
   std::cout << (ok ? "valid" : "invalid") << "\n";
   return ok ? kExitOk : kExitFail;
}

int cmd_derive(const Options& o) {
   const auto c = curve_arg(o);
   const Scalar sk = secret_arg(*c, o.key, "key");
   write_output(o, to_hex(ecdh_derive(*c, sk, hex_arg(o.peer))) + "\n");
   return kExitOk;
}

int cmd_vko(const Options& o) {
   const auto c = curve_arg(o);
   const Scalar sk = secret_arg(*c, o.key, "key");
   const Scalar ukm = secret_arg(*c, o.ukm, "ukm");
   write_output(o, to_hex(vko_derive(*c, sk, hex_arg(o.peer), ukm, hash_arg(o, *c))) + "\n");
   return kExitOk;
}

int cmd_kat_gen(const Options& o) {
   std::vector<std::string> names = o.curves;
   if(names.empty() || (names.size() == 1 && names[0] == "all")) {
      names.clear();
      for(const auto& d : bundled_database().curves()) {
         names.push_back(d.name);
      }
   }
   SuiteOptions opts;
   opts.random_cases = o.n;
   std::vector<KatCase> cases;
   for(const auto& name : names) {
      const auto s = generate_suite(bundled_database().get(name), o.seed, opts);
      cases.insert(cases.end(), s.begin(), s.end());
   }
   for(const auto& path : o.cavp) {
      const CavpParseResult r = parse_cavp_file(path);
      if(r.skipped_vectors != 0) {
         std::cerr << path << ": skipped " << r.skipped_vectors << " vectors in unsupported sections\n";
      }
      cases.insert(cases.end(), r.cases.begin(), r.cases.end());
   }
   write_output(o, emit_json(cases));
   std::cerr << cases.size() << " cases\n";
   return kExitOk;
}

int cmd_kat_run(const Options& o) {
   const std::vector<KatCase> cases = parse_json(read_input(o.suite));
   KatHooks hooks = library_hooks();
   if(!o.mutant.empty()) {
      bool found = false;
      for(Mutant m : {Mutant::ConstantScalarMult, Mutant::NoCofactorClearing, Mutant::PreFixVko}) {
         if(to_string(m) == o.mutant) {
            hooks = mutant_hooks(m);
            found = true;
         }
      }
      if(!found) {
         throw CLI::ValidationError("--mutant", "unknown mutant " + o.mutant);
      }
   }
   const SuiteResult res = run_suite(cases, hooks);
   if(o.format == "json") {
      json results = json::array();
      for(std::size_t i = 0; i != cases.size(); ++i) {
         results.push_back({{"id", cases[i].id}, {"pass", res.results[i].pass}, {"detail", res.results[i].detail}});
      }
      write_output(o, json{{"passed", res.passed}, {"failed", res.failed}, {"results", results}}.dump(1) + "\n");
   } else {
      write_output(o, emit_tap(cases, res));
   }
   std::cerr << res.passed << " passed, " << res.failed << " failed\n";
   return res.all_passed() ? kExitOk : kExitFail;
}

// Each op includes its serialization, as a caller would see it.
std::function<void()> bench_op(const Curve& c, const std::string& op, RngSource& rng) {
   const KeyPair a = keygen(c, rng);
   const KeyPair b = keygen(c, rng);
   const Bytes peer = point_encode(c, b.pk);
   const Bytes msg{'b', 'e', 'n', 'c', 'h'};
   const HashSpec hash = default_hash(c);
   const bool gost = is_gost_curve(c.descriptor());
   const Bytes digest = hash.digest(msg);
   auto sign = [&c, a, msg, digest, hash, gost]() {
      const Signature s = gost ? gost_sign(c, a.sk, digest, NonceMode::deterministic())
                               : ecdsa_sign(c, a.sk, msg, hash, NonceMode::deterministic());
      return encode_signature(c, s);
   };
   if(op == "keygen") {
      return [&c, &rng]() { point_encode(c, keygen(c, rng).pk); };
   }
   if(op == "derive") {
      return [&c, a, peer]() { ecdh_derive(c, a.sk, peer); };
   }
   if(op == "sign") {
      return [sign]() { sign(); };
   }
   const Bytes sig = sign();
   const Bytes pk = point_encode(c, a.pk);
   return [&c, pk, msg, digest, sig, hash, gost]() {
      const bool ok = gost ? gost_verify(c, pk, digest, sig) : ecdsa_verify(c, pk, msg, sig, hash);
      if(!ok) {
         throw_error(ErrorCode::InvalidArgument, "benchmark signature did not verify");
      }
   };
}

int cmd_bench(const Options& o) {
   const auto c = curve_arg(o);
   std::vector<std::string> ops{"keygen", "derive", "sign", "verify"};
   if(o.op != "all") {
      ops = {o.op};
   }
   DeterministicRng rng(o.rng_seed.value_or(1));
   json report = json::array();
   for(const auto& op : ops) {
      const OpTiming t = time_op(bench_op(*c, op, rng), o.reps);
      report.push_back({{"curve", c->name()},
                        {"op", op},
                        {"reps", t.reps},
                        {"median_ns", t.nanos.median},
                        {"iqr_ns", t.nanos.iqr()},
                        {"median_cycles", has_cycle_counter() ? json(t.cycles.median) : json(nullptr)},
                        {"iqr_cycles", has_cycle_counter() ? json(t.cycles.iqr()) : json(nullptr)}});
   }
   if(o.format == "json") {
      write_output(o, report.dump(1) + "\n");
      return kExitOk;
   }
   std::ostringstream out;
   out << std::left << std::setw(10) << "op" << std::right << std::setw(14) << "median_us" << std::setw(12) << "iqr_us"
       << std::setw(16) << "median_cycles" << "\n";
   for(const auto& r : report) {
      out << std::left << std::setw(10) << r["op"].get<std::string>() << std::right << std::fixed << std::setprecision(1)
          << std::setw(14) << r["median_ns"].get<double>() / 1000 << std::setw(12) << r["iqr_ns"].get<double>() / 1000
          << std::setw(16) << std::setprecision(0) << (r["median_cycles"].is_null() ? 0.0 : r["median_cycles"].get<double>())
          << "\n";
   }
   write_output(o, out.str());
   return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
   CLI::App app{"Constant-time elliptic-curve toolkit"};
   app.require_subcommand(1);
   Options o;

   auto add_curve = [&o](CLI::App* s) { s->add_option("--curve", o.curve, "Curve name (see list-curves)")->required(); };
   auto add_hash = [&o](CLI::App* s) {
      s->add_option("--hash", o.hash, "sha224, sha256, sha384 or sha512 (default by group size)");
   };
   auto add_out = [&o](CLI::App* s) { s->add_option("--out", o.out, "Output file (default stdout)"); };
   auto add_rng_seed = [&o](CLI::App* s) {
      s->add_option("--rng-seed", o.rng_seed, "Seed a deterministic test RNG instead of the system RNG");
   };
   auto add_msg = [&o](CLI::App* s) {
      auto* hex = s->add_option("--msg", o.msg, "Message as hex; GOST curves take the digest here");
      auto* text = s->add_option("--msg-text", o.msg_text, "Message as literal text");
      hex->excludes(text);
      s->callback([hex, text]() {
         if(hex->count() == 0 && text->count() == 0) {
            throw CLI::RequiredError("--msg or --msg-text");
         }
      });
   };

   auto* list = app.add_subcommand("list-curves", "List bundled curves: name, bits, cofactor, internal model");
   list->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));

   auto* kg = app.add_subcommand("keygen", "Generate a key pair");
   add_curve(kg);
   add_rng_seed(kg);
   add_out(kg);
   kg->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));

   auto* sign = app.add_subcommand("sign", "Sign (ECDSA, or GOST on GOST curves); prints r||s");
   add_curve(sign);
   sign->add_option("--key", o.key, "Secret key hex, or - for stdin")->required();
   add_msg(sign);
   add_hash(sign);
   add_out(sign);
   add_rng_seed(sign);
   sign->add_option("--nonce", o.nonce, "deterministic or random")->check(CLI::IsMember({"deterministic", "random"}));
   sign->add_option("--k", o.k, "Injected nonce (hex)");

   auto* verify = app.add_subcommand("verify", "Verify r||s; exit 0 if valid, 1 if not");
   add_curve(verify);
   verify->add_option("--pub", o.pub, "Public key 04||X||Y hex, or - for stdin")->required();
   add_msg(verify);
   verify->add_option("--sig", o.sig, "Signature r||s hex")->required();
   add_hash(verify);

   auto* derive = app.add_subcommand("derive", "Cofactor ECDH; prints the shared x-coordinate");
   add_curve(derive);
   derive->add_option("--key", o.key, "Secret key hex, or - for stdin")->required();
   derive->add_option("--peer", o.peer, "Peer public key 04||X||Y hex")->required();
   add_out(derive);

   auto* vko = app.add_subcommand("vko", "GOST VKO agreement; prints kdf(X||Y)");
   add_curve(vko);
   vko->add_option("--key", o.key, "Secret key hex, or - for stdin")->required();
   vko->add_option("--peer", o.peer, "Peer public key 04||X||Y hex")->required();
   vko->add_option("--ukm", o.ukm, "User keying material (hex, nonzero)")->required();
   add_hash(vko);
   add_out(vko);

   auto* kgen = app.add_subcommand("kat-gen", "Generate a known-answer suite as JSON");
   kgen->add_option("--curve", o.curves, "Curve name (repeatable; default all)");
   kgen->add_option("--seed", o.seed, "Generation seed");
   kgen->add_option("-n,--count", o.n, "Random cases per curve and kind")->check(CLI::PositiveNumber);
   kgen->add_option("--cavp", o.cavp, "Also include vectors from CAVP .rsp files")->check(CLI::ExistingFile);
   add_out(kgen);

   auto* krun = app.add_subcommand("kat-run", "Run a suite against the library; TAP on stdout");
   krun->add_option("suite", o.suite, "Suite JSON file, or - for stdin")->required();
   krun->add_option("--format", o.format, "tap (default) or json")->check(CLI::IsMember({"tap", "json", "table"}));
   krun->add_option("--mutant", o.mutant, "Run against a deliberately broken variant")
      ->check(CLI::IsMember({"constant-scalar-mult", "no-cofactor-clearing", "pre-fix-vko"}));
   add_out(krun);

   auto* bench = app.add_subcommand("bench", "Time keygen, derive, sign and verify");
   add_curve(bench);
   bench->add_option("--op", o.op)->check(CLI::IsMember({"all", "keygen", "derive", "sign", "verify"}));
   bench->add_option("--reps", o.reps, "Timed repetitions")->check(CLI::PositiveNumber);
   bench->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));
   add_rng_seed(bench);
   add_out(bench);

   try {
      app.parse(argc, argv);
   } catch(const CLI::CallForHelp& e) {
      return app.exit(e);
   } catch(const CLI::CallForAllHelp& e) {
      return app.exit(e);
   } catch(const CLI::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n\n" << app.help();
      return kExitUsage;
   }

   try {
      if(*list) {
         return cmd_list_curves(o);
      }
      if(*kg) {
         return cmd_keygen(o);
      }
      if(*sign) {
         return cmd_sign(o);
      }
      if(*verify) {
         return cmd_verify(o);
      }
      if(*derive) {
         return cmd_derive(o);
      }
      if(*vko) {
         return cmd_vko(o);
      }
      if(*kgen) {
         return cmd_kat_gen(o);
      }
      if(*krun) {
         return cmd_kat_run(o);
      }
      if(*bench) {
         return cmd_bench(o);
      }
   } catch(const CLI::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
   } catch(const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitFail;
   }
   return kExitUsage;
}
