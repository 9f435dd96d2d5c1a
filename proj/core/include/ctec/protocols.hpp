#pragma once

#include <ctec/curve.hpp>
#include <ctec/hash.hpp>
#include <ctec/rng.hpp>

namespace ctec {

/// Bound on rejection-sampling and nonce-resampling loops.
inline constexpr int kMaxAttempts = 64;

struct KeyPair {
      Scalar sk;
      AffinePoint pk;  // Weierstrass affine, whatever the internal model
};

struct Signature {
      Scalar r;
      Scalar s;
};

/// Where the per-signature nonce comes from.
struct NonceMode {
      enum class Kind {
         Random,
         Deterministic,  // RFC 6979 HMAC-DRBG
         Injected,       // caller-chosen k, for known-answer tests
      };

      Kind kind = Kind::Deterministic;
      RngSource* rng = nullptr;
      Scalar k;

      static NonceMode random(RngSource& rng) { return NonceMode{Kind::Random, &rng, {}}; }

      static NonceMode deterministic() { return NonceMode{Kind::Deterministic, nullptr, {}}; }

      static NonceMode injected(const Scalar& k) { return NonceMode{Kind::Injected, nullptr, k}; }
};

/// Uniform scalar in [1, q-1] by masked rejection sampling.
/// Throws Error(RngFailure) after kMaxAttempts rejections.
Scalar random_scalar(const Curve& curve, RngSource& rng);

KeyPair keygen(const Curve& curve, RngSource& rng);

/// Throws Error(OutOfRange) unless 1 <= sk <= q-1.
KeyPair keypair_from_secret(const Curve& curve, std::span<const std::uint8_t> sk);

/// 0x04 || X || Y, or the single octet 0x00 for the identity.
Bytes point_encode(const Curve& curve, const AffinePoint& P);

/// Range and curve-equation checked. Throws Error(BadLength) or
/// Error(InvalidPoint).
AffinePoint point_decode(const Curve& curve, std::span<const std::uint8_t> bytes);

/// On the curve, not the identity, and [q]P = identity.
bool validate_pubkey_full(const Curve& curve, const AffinePoint& P);

bool validate_pubkey_full(const Curve& curve, std::span<const std::uint8_t> encoded);

/// x-coordinate of [h*sk]peer, fixed width. Throws Error(InvalidPoint) for
/// a bad peer and Error(SmallSubgroupResult) if the product is the identity.
Bytes ecdh_derive(const Curve& curve, const Scalar& sk, std::span<const std::uint8_t> peer);

Signature ecdsa_sign(const Curve& curve,
                     const Scalar& sk,
                     std::span<const std::uint8_t> msg,
                     const HashSpec& hash,
                     const NonceMode& nonce);

/// Never throws; malformed input gives false.
bool ecdsa_verify(const Curve& curve,
                  const AffinePoint& pk,
                  std::span<const std::uint8_t> msg,
                  std::span<const std::uint8_t> r,
                  std::span<const std::uint8_t> s,
                  const HashSpec& hash);

bool ecdsa_verify(const Curve& curve,
                  std::span<const std::uint8_t> pk,
                  std::span<const std::uint8_t> msg,
                  std::span<const std::uint8_t> sig,
                  const HashSpec& hash);

/// GOST R 34.10 over a caller-supplied digest (interpreted big-endian).
/// Deterministic mode runs RFC 6979 with the curve's default hash.
Signature gost_sign(const Curve& curve, const Scalar& sk, std::span<const std::uint8_t> digest, const NonceMode& nonce);

bool gost_verify(const Curve& curve,
                 const AffinePoint& pk,
                 std::span<const std::uint8_t> digest,
                 std::span<const std::uint8_t> r,
                 std::span<const std::uint8_t> s);

bool gost_verify(const Curve& curve,
                 std::span<const std::uint8_t> pk,
                 std::span<const std::uint8_t> digest,
                 std::span<const std::uint8_t> sig);

/// kdf(X || Y) of K = [h * (ukm*sk mod q)]peer; the cofactor multiplies
/// after the reduction. Throws Error(InvalidArgument) for ukm = 0,
/// Error(InvalidPoint), and Error(SmallSubgroupResult).
Bytes vko_derive(const Curve& curve,
                 const Scalar& sk,
                 std::span<const std::uint8_t> peer,
                 const Scalar& ukm,
                 const HashSpec& kdf);

/// r || s, each byte_length(q) octets.
Bytes encode_signature(const Curve& curve, const Signature& sig);

/// Throws Error(BadLength) or Error(OutOfRange).
Signature decode_signature(const Curve& curve, std::span<const std::uint8_t> bytes);

/// RFC 6979 section 3.2 nonce generator; next() yields successive
/// candidates (the retry path of step h.3).
class Rfc6979Nonce {
   public:
      Rfc6979Nonce(const ScalarField& sf, const HashSpec& hash, const Scalar& x, std::span<const std::uint8_t> h1);

      Scalar next();

   private:
      const ScalarField& m_sf;
      HashSpec m_hash;
      Bytes m_k;
      Bytes m_v;
      bool m_first = true;
};

/// Default hash for a curve: SHA-256 if bitlen(q) <= 256, else SHA-512.
HashSpec default_hash(const Curve& curve);

}  // namespace ctec
