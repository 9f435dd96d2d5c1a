#include <ctec/scalar.hpp>

#include <ctec/hex.hpp>

namespace ctec {

namespace {

LimbArray order_from_bytes(std::span<const std::uint8_t> q_be) {
   LimbArray q{};
   if(!limbs::from_bytes_be(q, q_be)) {
      throw_error(ErrorCode::InvalidArgument, "group order too wide");
   }
   return q;
}

}  // namespace

ScalarField::ScalarField(std::span<const std::uint8_t> q_be) : m_dom(order_from_bytes(q_be)) {
   m_q_minus_2 = m_dom.modulus();
   limbs::sub(m_q_minus_2, limbs::from_u64(2), m_dom.limbs());
   m_radix = m_dom.to_mont(limbs::from_u64(256));
}

Scalar ScalarField::from_u64(std::uint64_t v) const {
   const Bytes be = limbs::to_bytes_be(limbs::from_u64(v), 8);
   return reduce(be);
}

Scalar ScalarField::mul(const Scalar& a, const Scalar& b) const {
   // mont(mont(a, b), R^2) = a*b*R^-1*R^2*R^-1 = a*b.
   Scalar r;
   m_dom.mul(r.limbs, a.limbs, b.limbs);
   m_dom.mul(r.limbs, r.limbs, m_dom.r2());
   return r;
}

Scalar ScalarField::inv(const Scalar& a) const {
   if(is_zero(a)) {
      throw_error(ErrorCode::ZeroInverse, "inverse of zero mod q");
   }
   const LimbArray am = m_dom.to_mont(a.limbs);
   return Scalar{m_dom.from_mont(m_dom.pow(am, m_q_minus_2))};
}

Scalar ScalarField::reduce(std::span<const std::uint8_t> bytes) const {
   // Horner over octets: acc = acc*256 + byte, all mod q. The octet is
   // below q because q > 2^8 for every supported curve.
   LimbArray acc{};
   for(std::uint8_t b : bytes) {
      m_dom.mul(acc, acc, m_radix);
      m_dom.add(acc, acc, limbs::from_u64(b));
   }
   return Scalar{acc};
}

Scalar ScalarField::mod_wide(std::span<const std::uint8_t> bytes, HashMode mode) const {
   if(mode == HashMode::Gost) {
      Scalar e = reduce(bytes);
      const limb_t z = m_dom.is_zero(e.limbs);
      m_dom.select(e.limbs, z, limbs::from_u64(1), e.limbs);
      return e;
   }

   const std::size_t qbits = bit_length();
   const std::size_t qbytes = byte_length();
   LimbArray v{};
   if(bytes.size() * 8 > qbits) {
      // Keep the leftmost qbits bits.
      limbs::from_bytes_be(v, bytes.first(qbytes));
      limbs::shift_right_small(v, qbytes * 8 - qbits);
   } else {
      limbs::from_bytes_be(v, bytes);
   }
   // v < 2^qbits < 2q, so one conditional subtraction suffices.
   LimbArray u = v;
   const limb_t borrow = limbs::sub(u, modulus(), limb_count());
   Scalar r;
   m_dom.select(r.limbs, borrow, v, u);
   return r;
}

bool ScalarField::in_keyrange(std::span<const std::uint8_t> bytes) const {
   const Bytes v = strip_leading_zeros(bytes);
   if(v.empty() || v.size() > byte_length()) {
      return false;
   }
   LimbArray x{};
   limbs::from_bytes_be(x, v);
   return limbs::compare(x, modulus(), kMaxLimbs) < 0;
}

Scalar ScalarField::decode(std::span<const std::uint8_t> bytes) const {
   if(bytes.size() != byte_length()) {
      throw_error(ErrorCode::BadLength,
                  "scalar must be " + std::to_string(byte_length()) + " bytes, got " +
                     std::to_string(bytes.size()));
   }
   Scalar s;
   limbs::from_bytes_be(s.limbs, bytes);
   if(limbs::compare(s.limbs, modulus(), kMaxLimbs) >= 0) {
      throw_error(ErrorCode::OutOfRange, "scalar not below q");
   }
   return s;
}

WideScalar ScalarField::cofactor_multiple(const Scalar& k, unsigned h) const {
   if(h == 0 || h > 8) {
      throw_error(ErrorCode::InvalidArgument, "cofactor must be in [1, 8]");
   }
   WideScalar w{k.limbs, bit_length() + 3};
   limbs::mul_word(w.limbs, h, kMaxLimbs);
   return w;
}

}  // namespace ctec
