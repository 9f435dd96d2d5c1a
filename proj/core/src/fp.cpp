#include <ctec/fp.hpp>

namespace ctec {

namespace detail {

namespace {

limb_t inverse_mod_word(limb_t a) {
   // Newton iteration; each step doubles the number of correct low bits.
   limb_t inv = 1;
   for(std::size_t i = 0; i != 7; ++i) {
      inv *= static_cast<limb_t>(2) - a * inv;
   }
   return inv;
}

// x = 2x mod m, variable time; only used on public constants.
void double_mod(LimbArray& x, const LimbArray& m, std::size_t n) {
   const limb_t carry = limbs::add(x, x, n);
   if(carry != 0 || limbs::compare(x, m, n) >= 0) {
      limbs::sub(x, m, n);
   }
}

}  // namespace

Montgomery::Montgomery(const LimbArray& modulus) : m_mod(modulus) {
   m_bits = limbs::bit_length(modulus, kMaxLimbs);
   if(m_bits < 3 || (modulus[0] & 1) == 0) {
      throw_error(ErrorCode::InvalidArgument, "Montgomery modulus must be odd and greater than 3");
   }
   m_n = (m_bits + kLimbBits - 1) / kLimbBits;
   m_neg_inv = static_cast<limb_t>(0) - inverse_mod_word(modulus[0]);

   LimbArray x{};
   x[0] = 1;
   for(std::size_t i = 0; i != m_n * kLimbBits; ++i) {
      double_mod(x, m_mod, m_n);
   }
   m_r1 = x;
   for(std::size_t i = 0; i != m_n * kLimbBits; ++i) {
      double_mod(x, m_mod, m_n);
   }
   m_r2 = x;
}

LimbArray Montgomery::pow(const LimbArray& base, const LimbArray& exp) const {
   const std::size_t ebits = limbs::bit_length(exp, kMaxLimbs);
   LimbArray acc = m_r1;
   for(std::size_t i = ebits; i-- > 0;) {
      mul(acc, acc, acc);
      if(limbs::bit(exp, i)) {
         mul(acc, acc, base);
      }
   }
   return acc;
}

}  // namespace detail

namespace {

LimbArray modulus_from_bytes(std::span<const std::uint8_t> p_be) {
   LimbArray p{};
   if(!limbs::from_bytes_be(p, p_be)) {
      throw_error(ErrorCode::InvalidArgument, "field modulus too wide");
   }
   return p;
}

}  // namespace

Field::Field(std::span<const std::uint8_t> p_be) : m_dom(modulus_from_bytes(p_be)) {
   m_p_minus_2 = m_dom.modulus();
   LimbArray two = limbs::from_u64(2);
   limbs::sub(m_p_minus_2, two, m_dom.limbs());
}

bool Field::constants_consistent() const {
   const std::size_t n = limb_count();
   const LimbArray& p = modulus();
   if(static_cast<limb_t>(p[0] * m_dom.neg_inv()) != static_cast<limb_t>(0) - 1) {
      return false;
   }
   // R mod p: one through the Montgomery domain must come back as 1.
   LimbArray one{};
   one[0] = 1;
   if(m_dom.from_mont(m_dom.r1()) != one) {
      return false;
   }
   // R^2 mod p: to_mont(1) must equal R mod p.
   if(m_dom.to_mont(one) != m_dom.r1()) {
      return false;
   }
   return limbs::compare(m_dom.r1(), p, n) < 0 && limbs::compare(m_dom.r2(), p, n) < 0;
}

FieldElement Field::from_u64(std::uint64_t v) const {
   LimbArray x = limbs::from_u64(v);
   const std::size_t n = limb_count();
   while(limbs::compare(x, modulus(), n) >= 0) {
      limbs::sub(x, modulus(), n);
   }
   return from_canonical(x);
}

FieldElement Field::from_canonical(const LimbArray& v) const {
   return FieldElement{m_dom.to_mont(v)};
}

FieldElement Field::inv_or_zero(const FieldElement& x) const {
   return FieldElement{m_dom.pow(x.limbs, m_p_minus_2)};
}

FieldElement Field::inv(const FieldElement& x) const {
   if(is_zero(x) != 0) {
      throw_error(ErrorCode::ZeroInverse, "inverse of zero in GF(p)");
   }
   return inv_or_zero(x);
}

FieldElement Field::decode(std::span<const std::uint8_t> bytes) const {
   if(bytes.size() != byte_length()) {
      throw_error(ErrorCode::BadLength,
                  "field element must be " + std::to_string(byte_length()) + " bytes, got " +
                     std::to_string(bytes.size()));
   }
   LimbArray v{};
   limbs::from_bytes_be(v, bytes);
   if(limbs::compare(v, modulus(), kMaxLimbs) >= 0) {
      throw_error(ErrorCode::OutOfRange, "field element not below p");
   }
   return from_canonical(v);
}

Bytes Field::encode(const FieldElement& x) const {
   return limbs::to_bytes_be(to_canonical(x), byte_length());
}

}  // namespace ctec
