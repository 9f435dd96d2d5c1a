#pragma once

#include <ctec/fp.hpp>

namespace ctec {

/// Integer mod q, held as a canonical (plain, not Montgomery) limb vector.
struct Scalar {
      LimbArray limbs{};

      bool operator==(const Scalar&) const = default;
};

/// An unreduced non-negative integer used as a scalar-multiplication input
/// wider than q, e.g. the cofactor-cleared h*k.
struct WideScalar {
      LimbArray limbs{};
      std::size_t bits = 0;  // digit schedule width, not necessarily bit_length(limbs)
};

/// How a digest becomes a scalar.
enum class HashMode {
   Ecdsa,  // leftmost bitlen(q) bits, then reduce
   Gost,   // reduce mod q, then map 0 to 1
};

class ScalarField {
   public:
      /// q as big-endian octets; q must be odd and > 3.
      explicit ScalarField(std::span<const std::uint8_t> q_be);

      std::size_t limb_count() const { return m_dom.limbs(); }

      std::size_t bit_length() const { return m_dom.bits(); }

      std::size_t byte_length() const { return m_dom.bytes(); }

      const LimbArray& modulus() const { return m_dom.modulus(); }

      Scalar zero() const { return Scalar{}; }

      Scalar one() const { return Scalar{limbs::from_u64(1)}; }

      Scalar from_u64(std::uint64_t v) const;

      Scalar add(const Scalar& a, const Scalar& b) const {
         Scalar r;
         m_dom.add(r.limbs, a.limbs, b.limbs);
         return r;
      }

      Scalar sub(const Scalar& a, const Scalar& b) const {
         Scalar r;
         m_dom.sub(r.limbs, a.limbs, b.limbs);
         return r;
      }

      Scalar neg(const Scalar& a) const { return sub(zero(), a); }

      Scalar mul(const Scalar& a, const Scalar& b) const;

      /// Fermat inversion, constant time. Throws Error(ZeroInverse) for 0.
      Scalar inv(const Scalar& a) const;

      bool is_zero(const Scalar& a) const { return m_dom.is_zero(a.limbs) != 0; }

      /// Hash-to-scalar. Accepts any input length.
      Scalar mod_wide(std::span<const std::uint8_t> bytes, HashMode mode) const;

      /// Reduce an arbitrary-width big-endian integer mod q.
      Scalar reduce(std::span<const std::uint8_t> bytes) const;

      /// True iff 1 <= value <= q-1 (leading zero octets allowed).
      bool in_keyrange(std::span<const std::uint8_t> bytes) const;

      /// Exactly byte_length() octets, value < q.
      /// Throws Error(BadLength) or Error(OutOfRange).
      Scalar decode(std::span<const std::uint8_t> bytes) const;

      Bytes encode(const Scalar& a) const { return limbs::to_bytes_be(a.limbs, byte_length()); }

      /// Integer h*k, not reduced, with a digit schedule of bitlen(q)+3 bits
      /// (h <= 8).
      WideScalar cofactor_multiple(const Scalar& k, unsigned h) const;

      /// k as a wide scalar with the standard bitlen(q) schedule.
      WideScalar widen(const Scalar& k) const { return WideScalar{k.limbs, bit_length()}; }

      const detail::Montgomery& montgomery() const { return m_dom; }

   private:
      detail::Montgomery m_dom;
      LimbArray m_q_minus_2{};
      LimbArray m_radix{};  // 256 * R mod q
};

}  // namespace ctec
