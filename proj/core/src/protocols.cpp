#include <ctec/protocols.hpp>

#include <ctec/error.hpp>
#include <ctec/scalarmul.hpp>

#include <functional>
#include <optional>

namespace ctec {

namespace {

// Leftmost qbits bits of an octet string as an integer (bits2int of
// RFC 6979), without reduction.
LimbArray leftmost_bits(std::span<const std::uint8_t> in, std::size_t qbits) {
   const std::size_t qbytes = (qbits + 7) / 8;
   LimbArray v{};
   const std::span<const std::uint8_t> head = in.size() > qbytes ? in.first(qbytes) : in;
   limbs::from_bytes_be(v, head);
   if(in.size() >= qbytes) {
      limbs::shift_right_small(v, 8 * qbytes - qbits);
   }
   return v;
}

bool below_q(const ScalarField& sf, const LimbArray& v) {
   return !limbs::is_zero(v) && limbs::compare(v, sf.modulus(), kMaxLimbs) < 0;
}

// x-coordinate of an affine point, reduced mod q.
Scalar x_mod_q(const Curve& curve, const AffinePoint& R) {
   return curve.scalars().reduce(curve.field().encode(R.x));
}

bool affine_on_curve_strict(const Curve& curve, const AffinePoint& P) {
   const Field& F = curve.field();
   if(F.is_zero(P.x) && F.is_zero(P.y)) {
      return false;
   }
   return w_on_curve(curve.weierstrass(), P);
}

Bytes x_y_be(const Curve& curve, const AffinePoint& P) {
   Bytes out = curve.field().encode(P.x);
   const Bytes y = curve.field().encode(P.y);
   out.insert(out.end(), y.begin(), y.end());
   return out;
}

// [h*k]peer in affine form; identity raises SmallSubgroupResult.
AffinePoint cofactor_product(const Curve& curve, std::span<const std::uint8_t> peer, const Scalar& k) {
   const AffinePoint Q = point_decode(curve, peer);
   const WCurve& W = curve.weierstrass();
   const ProjPointW R = mul_cofactor_varbase(curve, w_lift(W, Q), k);
   if(w_is_identity(W, R) != 0) {
      throw_error(ErrorCode::SmallSubgroupResult, "shared point is the identity");
   }
   return w_normalize(W, R);
}

void require_secret(const Curve& curve, const Scalar& sk) {
   if(curve.scalars().is_zero(sk) || limbs::compare(sk.limbs, curve.scalars().modulus(), kMaxLimbs) >= 0) {
      throw_error(ErrorCode::OutOfRange, "secret scalar not in [1, q-1]");
   }
}

// Nonce candidates for one signature; generator state persists across
// resampling.
class NonceSource {
   public:
      NonceSource(const Curve& curve, const NonceMode& mode, const HashSpec& hash, const Scalar& sk,
                  std::span<const std::uint8_t> h1) :
            m_curve(curve), m_mode(mode) {
         if(mode.kind == NonceMode::Kind::Deterministic) {
            m_drbg.emplace(curve.scalars(), hash, sk, h1);
         } else if(mode.kind == NonceMode::Kind::Random && mode.rng == nullptr) {
            throw_error(ErrorCode::InvalidArgument, "random nonce mode without an RNG");
         }
      }

      Scalar next() {
         switch(m_mode.kind) {
            case NonceMode::Kind::Random:
               return random_scalar(m_curve, *m_mode.rng);
            case NonceMode::Kind::Deterministic:
               return m_drbg->next();
            case NonceMode::Kind::Injected:
               break;
         }
         require_secret(m_curve, m_mode.k);
         return m_mode.k;
      }

      bool injected() const { return m_mode.kind == NonceMode::Kind::Injected; }

   private:
      const Curve& m_curve;
      const NonceMode& m_mode;
      std::optional<Rfc6979Nonce> m_drbg;
};

Signature sign_loop(const Curve& curve,
                    NonceSource& nonces,
                    const std::function<Scalar(const Scalar& k, const Scalar& r)>& make_s) {
   const ScalarField& sf = curve.scalars();
   for(int attempt = 0; attempt != kMaxAttempts; ++attempt) {
      const Scalar k = nonces.next();
      const AffinePoint R = w_normalize(curve.weierstrass(), mul_fixedbase(curve, k));
      const Scalar r = x_mod_q(curve, R);
      Scalar s{};
      if(!sf.is_zero(r)) {
         s = make_s(k, r);
      }
      if(!sf.is_zero(r) && !sf.is_zero(s)) {
         return Signature{r, s};
      }
      if(nonces.injected()) {
         throw_error(ErrorCode::ZeroRS, sf.is_zero(r) ? "r = 0 for the injected nonce" : "s = 0 for the injected nonce");
      }
   }
   throw_error(ErrorCode::RngFailure, "no usable nonce within the attempt bound");
}

bool decode_rs(const Curve& curve, std::span<const std::uint8_t> r, std::span<const std::uint8_t> s, Scalar& ro, Scalar& so) {
   const ScalarField& sf = curve.scalars();
   if(!sf.in_keyrange(r) || !sf.in_keyrange(s)) {
      return false;
   }
   ro = sf.reduce(r);
   so = sf.reduce(s);
   return true;
}

// x([u1]g + [u2]pk) mod q == r, false on any failure.
bool check_combination(const Curve& curve, const AffinePoint& pk, const Scalar& u1, const Scalar& u2, const Scalar& r) {
   const WCurve& W = curve.weierstrass();
   if(!affine_on_curve_strict(curve, pk)) {
      return false;
   }
   const ProjPointW R = mul_double(curve, u1, w_lift(W, pk), u2);
   if(w_is_identity(W, R) != 0) {
      return false;
   }
   return x_mod_q(curve, w_normalize(W, R)) == r;
}

bool split_sig(const Curve& curve, std::span<const std::uint8_t> sig, std::span<const std::uint8_t>& r, std::span<const std::uint8_t>& s) {
   const std::size_t n = curve.scalars().byte_length();
   if(sig.size() != 2 * n) {
      return false;
   }
   r = sig.first(n);
   s = sig.subspan(n);
   return true;
}

}  // namespace

HashSpec default_hash(const Curve& curve) {
   return HashSpec::default_for(curve.scalars().bit_length());
}

Scalar random_scalar(const Curve& curve, RngSource& rng) {
   const ScalarField& sf = curve.scalars();
   const std::size_t nbytes = sf.byte_length();
   const unsigned excess = static_cast<unsigned>(8 * nbytes - sf.bit_length());
   const std::uint8_t top_mask = static_cast<std::uint8_t>(0xFF >> excess);
   for(int attempt = 0; attempt != kMaxAttempts; ++attempt) {
      Bytes buf = rng.bytes(nbytes);
      buf[0] &= top_mask;
      LimbArray v{};
      limbs::from_bytes_be(v, buf);
      if(below_q(sf, v)) {
         return Scalar{v};
      }
   }
   throw_error(ErrorCode::RngFailure, "rejection sampling exceeded the attempt bound");
}

KeyPair keygen(const Curve& curve, RngSource& rng) {
   const Scalar sk = random_scalar(curve, rng);
   return KeyPair{sk, w_normalize(curve.weierstrass(), mul_fixedbase(curve, sk))};
}

KeyPair keypair_from_secret(const Curve& curve, std::span<const std::uint8_t> sk) {
   const ScalarField& sf = curve.scalars();
   if(!sf.in_keyrange(sk)) {
      throw_error(ErrorCode::OutOfRange, "secret key not in [1, q-1]");
   }
   const Scalar k = sf.reduce(sk);
   return KeyPair{k, w_normalize(curve.weierstrass(), mul_fixedbase(curve, k))};
}

Bytes point_encode(const Curve& curve, const AffinePoint& P) {
   const Field& F = curve.field();
   if(F.is_zero(P.x) && F.is_zero(P.y)) {
      return Bytes{0x00};
   }
   Bytes out{0x04};
   const Bytes xy = x_y_be(curve, P);
   out.insert(out.end(), xy.begin(), xy.end());
   return out;
}

AffinePoint point_decode(const Curve& curve, std::span<const std::uint8_t> bytes) {
   const Field& F = curve.field();
   const std::size_t fb = F.byte_length();
   if(bytes.size() == 1 && bytes[0] == 0x00) {
      return AffinePoint{F.zero(), F.zero()};
   }
   if(bytes.size() != 1 + 2 * fb) {
      throw_error(ErrorCode::BadLength, "encoded point has the wrong length");
   }
   if(bytes[0] != 0x04) {
      throw_error(ErrorCode::InvalidPoint, "unsupported point format");
   }
   AffinePoint P;
   try {
      P.x = F.decode(bytes.subspan(1, fb));
      P.y = F.decode(bytes.subspan(1 + fb, fb));
   } catch(const Error&) {
      throw_error(ErrorCode::InvalidPoint, "coordinate not below p");
   }
   if(!affine_on_curve_strict(curve, P)) {
      throw_error(ErrorCode::InvalidPoint, "point not on the curve");
   }
   return P;
}

bool validate_pubkey_full(const Curve& curve, const AffinePoint& P) {
   if(!affine_on_curve_strict(curve, P)) {
      return false;
   }
   const WCurve& W = curve.weierstrass();
   WideScalar q{curve.scalars().modulus(), curve.scalars().bit_length()};
   try {
      return w_is_identity(W, mul_varbase_wide(curve, w_lift(W, P), q)) != 0;
   } catch(const Error&) {
      // Exceptional points of the Edwards map have even order.
      return false;
   }
}

bool validate_pubkey_full(const Curve& curve, std::span<const std::uint8_t> encoded) {
   try {
      return validate_pubkey_full(curve, point_decode(curve, encoded));
   } catch(const Error&) {
      return false;
   }
}

Bytes ecdh_derive(const Curve& curve, const Scalar& sk, std::span<const std::uint8_t> peer) {
   require_secret(curve, sk);
   return curve.field().encode(cofactor_product(curve, peer, sk).x);
}

Bytes vko_derive(const Curve& curve,
                 const Scalar& sk,
                 std::span<const std::uint8_t> peer,
                 const Scalar& ukm,
                 const HashSpec& kdf) {
   require_secret(curve, sk);
   const ScalarField& sf = curve.scalars();
   if(sf.is_zero(ukm) || limbs::compare(ukm.limbs, sf.modulus(), kMaxLimbs) >= 0) {
      throw_error(ErrorCode::InvalidArgument, "ukm must be in [1, q-1]");
   }
   const Scalar w = sf.mul(ukm, sk);
   return kdf.digest(x_y_be(curve, cofactor_product(curve, peer, w)));
}

Signature ecdsa_sign(const Curve& curve,
                     const Scalar& sk,
                     std::span<const std::uint8_t> msg,
                     const HashSpec& hash,
                     const NonceMode& nonce) {
   require_secret(curve, sk);
   const ScalarField& sf = curve.scalars();
   const Bytes h1 = hash.digest(msg);
   const Scalar e = sf.mod_wide(h1, HashMode::Ecdsa);
   NonceSource nonces(curve, nonce, hash, sk, h1);
   return sign_loop(curve, nonces, [&](const Scalar& k, const Scalar& r) {
      return sf.mul(sf.inv(k), sf.add(e, sf.mul(sk, r)));
   });
}

bool ecdsa_verify(const Curve& curve,
                  const AffinePoint& pk,
                  std::span<const std::uint8_t> msg,
                  std::span<const std::uint8_t> r,
                  std::span<const std::uint8_t> s,
                  const HashSpec& hash) {
   try {
      const ScalarField& sf = curve.scalars();
      Scalar rs, ss;
      if(!decode_rs(curve, r, s, rs, ss)) {
         return false;
      }
      const Scalar e = sf.mod_wide(hash.digest(msg), HashMode::Ecdsa);
      const Scalar w = sf.inv(ss);
      return check_combination(curve, pk, sf.mul(e, w), sf.mul(rs, w), rs);
   } catch(const Error&) {
      return false;
   }
}

bool ecdsa_verify(const Curve& curve,
                  std::span<const std::uint8_t> pk,
                  std::span<const std::uint8_t> msg,
                  std::span<const std::uint8_t> sig,
                  const HashSpec& hash) {
   std::span<const std::uint8_t> r, s;
   if(!split_sig(curve, sig, r, s)) {
      return false;
   }
   try {
      return ecdsa_verify(curve, point_decode(curve, pk), msg, r, s, hash);
   } catch(const Error&) {
      return false;
   }
}

Signature gost_sign(const Curve& curve, const Scalar& sk, std::span<const std::uint8_t> digest, const NonceMode& nonce) {
   require_secret(curve, sk);
   const ScalarField& sf = curve.scalars();
   const Scalar e = sf.mod_wide(digest, HashMode::Gost);
   NonceSource nonces(curve, nonce, default_hash(curve), sk, digest);
   return sign_loop(curve, nonces, [&](const Scalar& k, const Scalar& r) {
      return sf.add(sf.mul(r, sk), sf.mul(k, e));
   });
}

bool gost_verify(const Curve& curve,
                 const AffinePoint& pk,
                 std::span<const std::uint8_t> digest,
                 std::span<const std::uint8_t> r,
                 std::span<const std::uint8_t> s) {
   try {
      const ScalarField& sf = curve.scalars();
      Scalar rs, ss;
      if(!decode_rs(curve, r, s, rs, ss)) {
         return false;
      }
      const Scalar v = sf.inv(sf.mod_wide(digest, HashMode::Gost));
      return check_combination(curve, pk, sf.mul(ss, v), sf.neg(sf.mul(rs, v)), rs);
   } catch(const Error&) {
      return false;
   }
}

bool gost_verify(const Curve& curve,
                 std::span<const std::uint8_t> pk,
                 std::span<const std::uint8_t> digest,
                 std::span<const std::uint8_t> sig) {
   std::span<const std::uint8_t> r, s;
   if(!split_sig(curve, sig, r, s)) {
      return false;
   }
   try {
      return gost_verify(curve, point_decode(curve, pk), digest, r, s);
   } catch(const Error&) {
      return false;
   }
}

Bytes encode_signature(const Curve& curve, const Signature& sig) {
   Bytes out = curve.scalars().encode(sig.r);
   const Bytes s = curve.scalars().encode(sig.s);
   out.insert(out.end(), s.begin(), s.end());
   return out;
}

Signature decode_signature(const Curve& curve, std::span<const std::uint8_t> bytes) {
   const std::size_t n = curve.scalars().byte_length();
   if(bytes.size() != 2 * n) {
      throw_error(ErrorCode::BadLength, "signature must be r || s");
   }
   return Signature{curve.scalars().decode(bytes.first(n)), curve.scalars().decode(bytes.subspan(n))};
}

Rfc6979Nonce::Rfc6979Nonce(const ScalarField& sf, const HashSpec& hash, const Scalar& x, std::span<const std::uint8_t> h1) :
      m_sf(sf), m_hash(hash), m_k(hash.output_length(), 0x00), m_v(hash.output_length(), 0x01) {
   const Bytes x_oct = sf.encode(x);
   const Bytes h_oct = sf.encode(sf.mod_wide(h1, HashMode::Ecdsa));
   for(std::uint8_t tag : {std::uint8_t{0x00}, std::uint8_t{0x01}}) {
      Bytes m = m_v;
      m.push_back(tag);
      m.insert(m.end(), x_oct.begin(), x_oct.end());
      m.insert(m.end(), h_oct.begin(), h_oct.end());
      m_k = hmac(m_hash, m_k, m);
      m_v = hmac(m_hash, m_k, m_v);
   }
}

Scalar Rfc6979Nonce::next() {
   const std::size_t qbits = m_sf.bit_length();
   for(;;) {
      if(!m_first) {
         Bytes m = m_v;
         m.push_back(0x00);
         m_k = hmac(m_hash, m_k, m);
         m_v = hmac(m_hash, m_k, m_v);
      }
      m_first = false;
      Bytes t;
      while(8 * t.size() < qbits) {
         m_v = hmac(m_hash, m_k, m_v);
         t.insert(t.end(), m_v.begin(), m_v.end());
      }
      const LimbArray k = leftmost_bits(t, qbits);
      if(below_q(m_sf, k)) {
         return Scalar{k};
      }
   }
}

}  // namespace ctec
