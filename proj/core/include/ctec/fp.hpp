#pragma once

#include <ctec/error.hpp>
#include <ctec/instrument.hpp>
#include <ctec/limbs.hpp>

#include <span>

namespace ctec {

namespace detail {

/// Montgomery arithmetic modulo an odd m with a runtime limb count.
///
/// Every loop runs over exactly n limbs and every conditional step is a
/// masked select, so the instruction trace depends on n only.
class Montgomery {
   public:
      explicit Montgomery(const LimbArray& modulus);

      std::size_t limbs() const { return m_n; }

      std::size_t bits() const { return m_bits; }

      std::size_t bytes() const { return (m_bits + 7) / 8; }

      const LimbArray& modulus() const { return m_mod; }

      const LimbArray& r1() const { return m_r1; }

      const LimbArray& r2() const { return m_r2; }

      limb_t neg_inv() const { return m_neg_inv; }

      /// out = a * b * R^-1 mod m for a, b < m.
      void mul(LimbArray& out, const LimbArray& a, const LimbArray& b) const {
         const std::size_t n = m_n;
         limb_t t[kMaxLimbs + 2] = {};
         for(std::size_t i = 0; i != n; ++i) {
            limb_t carry = 0;
            const limb_t bi = b[i];
            for(std::size_t j = 0; j != n; ++j) {
               const dlimb_t s = static_cast<dlimb_t>(a[j]) * bi + t[j] + carry;
               t[j] = static_cast<limb_t>(s);
               carry = static_cast<limb_t>(s >> kLimbBits);
            }
            dlimb_t s = static_cast<dlimb_t>(t[n]) + carry;
            t[n] = static_cast<limb_t>(s);
            t[n + 1] = static_cast<limb_t>(s >> kLimbBits);

            const limb_t q = t[0] * m_neg_inv;
            s = static_cast<dlimb_t>(q) * m_mod[0] + t[0];
            carry = static_cast<limb_t>(s >> kLimbBits);
            for(std::size_t j = 1; j != n; ++j) {
               s = static_cast<dlimb_t>(q) * m_mod[j] + t[j] + carry;
               t[j - 1] = static_cast<limb_t>(s);
               carry = static_cast<limb_t>(s >> kLimbBits);
            }
            s = static_cast<dlimb_t>(t[n]) + carry;
            t[n - 1] = static_cast<limb_t>(s);
            t[n] = t[n + 1] + static_cast<limb_t>(s >> kLimbBits);
         }
         reduce_once(out, t, t[n]);
      }

      /// out = a + b mod m.
      void add(LimbArray& out, const LimbArray& a, const LimbArray& b) const {
         limb_t t[kMaxLimbs];
         limb_t carry = 0;
         for(std::size_t i = 0; i != m_n; ++i) {
            const dlimb_t s = static_cast<dlimb_t>(a[i]) + b[i] + carry;
            t[i] = static_cast<limb_t>(s);
            carry = static_cast<limb_t>(s >> kLimbBits);
         }
         reduce_once(out, t, carry);
      }

      /// out = a - b mod m.
      void sub(LimbArray& out, const LimbArray& a, const LimbArray& b) const {
         limb_t borrow = 0;
         for(std::size_t i = 0; i != m_n; ++i) {
            const dlimb_t d = static_cast<dlimb_t>(a[i]) - b[i] - borrow;
            out[i] = static_cast<limb_t>(d);
            borrow = static_cast<limb_t>(d >> kLimbBits) & 1;
         }
         const limb_t mask = ct::mask_from_bit(borrow);
         limb_t carry = 0;
         for(std::size_t i = 0; i != m_n; ++i) {
            const dlimb_t s = static_cast<dlimb_t>(out[i]) + (m_mod[i] & mask) + carry;
            out[i] = static_cast<limb_t>(s);
            carry = static_cast<limb_t>(s >> kLimbBits);
         }
      }

      /// out = (flag ? x : y); flag is 0 or 1.
      void select(LimbArray& out, limb_t flag, const LimbArray& x, const LimbArray& y) const {
         const limb_t mask = ct::mask_from_bit(flag);
         for(std::size_t i = 0; i != m_n; ++i) {
            out[i] = (x[i] & mask) | (y[i] & ~mask);
         }
      }

      /// 1 if a == 0 else 0.
      limb_t is_zero(const LimbArray& a) const {
         limb_t acc = 0;
         for(std::size_t i = 0; i != m_n; ++i) {
            acc |= a[i];
         }
         return ct::is_zero_bit(acc);
      }

      limb_t equal(const LimbArray& a, const LimbArray& b) const {
         limb_t acc = 0;
         for(std::size_t i = 0; i != m_n; ++i) {
            acc |= a[i] ^ b[i];
         }
         return ct::is_zero_bit(acc);
      }

      /// base^exp in the Montgomery domain. The exponent is public; base is
      /// not, and the schedule depends on exp only.
      LimbArray pow(const LimbArray& base, const LimbArray& exp) const;

      /// Montgomery form of a canonical value.
      LimbArray to_mont(const LimbArray& a) const {
         LimbArray out{};
         mul(out, a, m_r2);
         return out;
      }

      LimbArray from_mont(const LimbArray& a) const {
         LimbArray one{};
         one[0] = 1;
         LimbArray out{};
         mul(out, a, one);
         return out;
      }

   private:
      /// out = t - m if (hi || t >= m) else t, for t < 2m.
      void reduce_once(LimbArray& out, const limb_t* t, limb_t hi) const {
         limb_t u[kMaxLimbs];
         limb_t borrow = 0;
         for(std::size_t i = 0; i != m_n; ++i) {
            const dlimb_t d = static_cast<dlimb_t>(t[i]) - m_mod[i] - borrow;
            u[i] = static_cast<limb_t>(d);
            borrow = static_cast<limb_t>(d >> kLimbBits) & 1;
         }
         const limb_t take_u = hi | (borrow ^ 1);
         const limb_t mask = ct::mask_from_bit(take_u);
         for(std::size_t i = 0; i != m_n; ++i) {
            out[i] = (u[i] & mask) | (t[i] & ~mask);
         }
      }

      LimbArray m_mod{};
      LimbArray m_r1{};
      LimbArray m_r2{};
      limb_t m_neg_inv = 0;
      std::size_t m_n = 0;
      std::size_t m_bits = 0;
};

}  // namespace detail

/// Residue mod p, held in Montgomery form. Only meaningful together with
/// the Field it was produced by.
struct FieldElement {
      LimbArray limbs{};

      bool operator==(const FieldElement&) const = default;
};

/// GF(p) for an odd prime p of up to 576 bits (the FieldParams of the
/// design). Immutable after construction.
class Field {
   public:
      /// p as big-endian octets. Throws Error(InvalidArgument) if p is even,
      /// p <= 3, or wider than the limb capacity.
      explicit Field(std::span<const std::uint8_t> p_be);

      std::size_t limb_count() const { return m_dom.limbs(); }

      std::size_t bit_length() const { return m_dom.bits(); }

      std::size_t byte_length() const { return m_dom.bytes(); }

      const LimbArray& modulus() const { return m_dom.modulus(); }

      const detail::Montgomery& montgomery() const { return m_dom; }

      /// Recomputes R mod p, R^2 mod p and -p^-1 mod 2^w from scratch.
      bool constants_consistent() const;

      FieldElement zero() const { return FieldElement{}; }

      FieldElement one() const { return FieldElement{m_dom.r1()}; }

      FieldElement from_u64(std::uint64_t v) const;

      /// From a canonical little-endian limb value (< p).
      FieldElement from_canonical(const LimbArray& v) const;

      LimbArray to_canonical(const FieldElement& x) const { return m_dom.from_mont(x.limbs); }

      FieldElement add(const FieldElement& x, const FieldElement& y) const {
         CTEC_COUNT_FIELD(fp_add, limb_count());
         FieldElement r;
         m_dom.add(r.limbs, x.limbs, y.limbs);
         return r;
      }

      FieldElement sub(const FieldElement& x, const FieldElement& y) const {
         CTEC_COUNT_FIELD(fp_sub, limb_count());
         FieldElement r;
         m_dom.sub(r.limbs, x.limbs, y.limbs);
         return r;
      }

      FieldElement neg(const FieldElement& x) const { return sub(zero(), x); }

      FieldElement dbl(const FieldElement& x) const { return add(x, x); }

      FieldElement mul(const FieldElement& x, const FieldElement& y) const {
         CTEC_COUNT_FIELD(fp_mul, limb_count() * limb_count());
         FieldElement r;
         m_dom.mul(r.limbs, x.limbs, y.limbs);
         return r;
      }

      FieldElement sqr(const FieldElement& x) const {
         CTEC_COUNT_FIELD(fp_sqr, limb_count() * limb_count());
         FieldElement r;
         m_dom.mul(r.limbs, x.limbs, x.limbs);
         return r;
      }

      /// x^(p-2). Throws Error(ZeroInverse) for x = 0.
      FieldElement inv(const FieldElement& x) const;

      /// x^(p-2) without the zero check; maps 0 to 0.
      FieldElement inv_or_zero(const FieldElement& x) const;

      /// flag ? x : y, with flag in {0, 1}.
      FieldElement select(limb_t flag, const FieldElement& x, const FieldElement& y) const {
         CTEC_COUNT_FIELD(fp_select, limb_count());
         FieldElement r;
         m_dom.select(r.limbs, flag, x.limbs, y.limbs);
         return r;
      }

      /// 1 if x == 0, else 0.
      limb_t is_zero(const FieldElement& x) const { return m_dom.is_zero(x.limbs); }

      limb_t equal(const FieldElement& x, const FieldElement& y) const { return m_dom.equal(x.limbs, y.limbs); }

      /// Fixed-width big-endian octets of length byte_length().
      /// Throws Error(BadLength) or Error(OutOfRange) for values >= p.
      FieldElement decode(std::span<const std::uint8_t> bytes) const;

      Bytes encode(const FieldElement& x) const;

   private:
      detail::Montgomery m_dom;
      LimbArray m_p_minus_2{};
};

}  // namespace ctec
