#pragma once

#include <ctec/curves.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ctec {

enum class KatKind { Keygen, Derive, Sign, Verify, PubkeyValidate };

enum class Provenance { Cavp, GeneratedPositive, GeneratedNegative, ExtremeKey, SmallSubgroup, X0Regression };

std::string_view to_string(KatKind k);
std::string_view to_string(Provenance p);

/// Throws Error(ParseError).
KatKind parse_kat_kind(std::string_view s);
Provenance parse_provenance(std::string_view s);

/// Lowercase hex values keyed by field name (d, Qx, Qy, peerX, peerY, ukm,
/// msg, k, r, s, Z, K).
using KatValues = std::map<std::string, std::string>;

/// One known-answer test. `expected` empty (nullopt) means the operation
/// must fail.
///
/// derive: inputs d, peerX, peerY, plus ukm for VKO; expects Z (ECDH x) or
///         K (VKO key).
/// sign:   inputs d, msg, optional k (absent = RFC 6979); expects r, s. On
///         GOST curves msg is the digest itself.
/// verify, pubkey_validate: expect an empty map for acceptance.
struct KatCase {
      std::string id;
      std::string curve;
      KatKind kind = KatKind::Keygen;
      std::string hash;  // empty: the curve default
      KatValues inputs;
      std::optional<KatValues> expected;
      Provenance provenance = Provenance::GeneratedPositive;

      bool expects_failure() const { return !expected.has_value(); }

      bool operator==(const KatCase&) const = default;
};

/// Curves signed with GOST R 34.10 (and eligible for VKO) rather than ECDSA.
bool is_gost_curve(const CurveDescriptor& desc);

struct CavpParseResult {
      std::vector<KatCase> cases;
      std::size_t skipped_vectors = 0;
      std::vector<std::string> skipped_sections;
};

/// CAVP .rsp files: ECC CDH (derive), PKV (pubkey_validate), KeyPair
/// (keygen) and SigVer (verify). Binary-field and unknown sections are
/// skipped and counted. Throws Error(ParseError) with the line number.
CavpParseResult parse_cavp(std::string_view text, std::string_view source = "cavp");

CavpParseResult parse_cavp_file(const std::filesystem::path& path);

struct SuiteOptions {
      std::size_t random_cases = 16;  // N per (curve, kind)
      unsigned extreme_bits = 8;      // b: keys in [1, 2^b) and [q - 2^b, q)
};

/// Oracle-driven suite for one curve. Pure function of (desc, seed, opts).
std::vector<KatCase> generate_suite(const CurveDescriptor& desc, std::uint64_t seed, const SuiteOptions& opts = {});

std::string emit_json(const std::vector<KatCase>& cases);

/// Throws Error(ParseError).
std::vector<KatCase> parse_json(std::string_view text);

struct CaseResult {
      bool pass = false;
      std::string detail;
};

struct SuiteResult {
      std::vector<CaseResult> results;
      std::size_t passed = 0;
      std::size_t failed = 0;

      bool all_passed() const { return failed == 0; }
};

/// The operations under test. A hook returns the outputs, or nullopt (or
/// throws) to signal rejection.
struct KatHooks {
      using Fn = std::function<std::optional<KatValues>(const KatCase&)>;
      Fn keygen;
      Fn derive;
      Fn sign;
      Fn verify;
      Fn pubkey_validate;
};

/// Hooks backed by the protocols module and the bundled curves.
KatHooks library_hooks();

enum class Mutant {
   ConstantScalarMult,   // every scalar multiplication returns g
   NoCofactorClearing,   // derive and VKO use [k]peer
   PreFixVko,            // VKO with [(h*ukm*sk) mod q]peer
};

std::string_view to_string(Mutant m);

/// library_hooks() with one deliberate defect.
KatHooks mutant_hooks(Mutant m);

SuiteResult run_suite(const std::vector<KatCase>& cases, const KatHooks& hooks);

/// TAP version 12.
std::string emit_tap(const std::vector<KatCase>& cases, const SuiteResult& results);

}  // namespace ctec
