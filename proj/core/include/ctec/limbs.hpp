#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#ifndef CTEC_LIMB_BITS
   #define CTEC_LIMB_BITS 64
#endif

namespace ctec {

#if CTEC_LIMB_BITS == 64
using limb_t = std::uint64_t;
using dlimb_t = unsigned __int128;
#elif CTEC_LIMB_BITS == 32
using limb_t = std::uint32_t;
using dlimb_t = std::uint64_t;
#else
   #error "CTEC_LIMB_BITS must be 32 or 64"
#endif

inline constexpr std::size_t kLimbBits = sizeof(limb_t) * 8;
inline constexpr std::size_t kLimbBytes = sizeof(limb_t);

// Large enough for secp521r1 plus the cofactor-extended scalar (bitlen(q) + 3).
inline constexpr std::size_t kMaxBits = 576;
inline constexpr std::size_t kMaxLimbs = kMaxBits / kLimbBits;

using LimbArray = std::array<limb_t, kMaxLimbs>;
using Bytes = std::vector<std::uint8_t>;

namespace ct {

/// All-ones if flag is 1, zero if flag is 0.
inline limb_t mask_from_bit(limb_t flag) noexcept {
   limb_t mask = static_cast<limb_t>(0) - (flag & 1);
#if defined(__GNUC__) || defined(__clang__)
   asm("" : "+r"(mask));
#endif
   return mask;
}

/// 1 if x == 0 else 0, without branching.
inline limb_t is_zero_bit(limb_t x) noexcept {
   return static_cast<limb_t>(1) ^ ((x | (static_cast<limb_t>(0) - x)) >> (kLimbBits - 1));
}

}  // namespace ct

/// Limb-level helpers on little-endian limb vectors of a runtime length.
/// Used for constants and public integers; the constant-time modular
/// arithmetic lives in fp.hpp.
namespace limbs {

inline std::size_t bit_length(const LimbArray& x, std::size_t n) {
   for(std::size_t i = n; i-- > 0;) {
      if(x[i] != 0) {
         std::size_t bits = kLimbBits;
         limb_t top = x[i];
         while((top >> (bits - 1)) == 0) {
            --bits;
         }
         return i * kLimbBits + bits;
      }
   }
   return 0;
}

inline bool bit(const LimbArray& x, std::size_t i) {
   return ((x[i / kLimbBits] >> (i % kLimbBits)) & 1) != 0;
}

/// Compare a and b over n limbs: -1, 0, 1. Variable time.
inline int compare(const LimbArray& a, const LimbArray& b, std::size_t n) {
   for(std::size_t i = n; i-- > 0;) {
      if(a[i] != b[i]) {
         return a[i] < b[i] ? -1 : 1;
      }
   }
   return 0;
}

/// a += b over n limbs; returns the carry.
inline limb_t add(LimbArray& a, const LimbArray& b, std::size_t n) {
   limb_t carry = 0;
   for(std::size_t i = 0; i != n; ++i) {
      const dlimb_t s = static_cast<dlimb_t>(a[i]) + b[i] + carry;
      a[i] = static_cast<limb_t>(s);
      carry = static_cast<limb_t>(s >> kLimbBits);
   }
   return carry;
}

/// a -= b over n limbs; returns the borrow.
inline limb_t sub(LimbArray& a, const LimbArray& b, std::size_t n) {
   limb_t borrow = 0;
   for(std::size_t i = 0; i != n; ++i) {
      const dlimb_t d = static_cast<dlimb_t>(a[i]) - b[i] - borrow;
      a[i] = static_cast<limb_t>(d);
      borrow = static_cast<limb_t>(d >> kLimbBits) & 1;
   }
   return borrow;
}

inline limb_t add_word(LimbArray& a, limb_t w, std::size_t n) {
   limb_t carry = w;
   for(std::size_t i = 0; i != n; ++i) {
      const dlimb_t s = static_cast<dlimb_t>(a[i]) + carry;
      a[i] = static_cast<limb_t>(s);
      carry = static_cast<limb_t>(s >> kLimbBits);
   }
   return carry;
}

/// a *= w over n limbs; returns the high word.
inline limb_t mul_word(LimbArray& a, limb_t w, std::size_t n) {
   limb_t carry = 0;
   for(std::size_t i = 0; i != n; ++i) {
      const dlimb_t p = static_cast<dlimb_t>(a[i]) * w + carry;
      a[i] = static_cast<limb_t>(p);
      carry = static_cast<limb_t>(p >> kLimbBits);
   }
   return carry;
}

/// Logical right shift of the whole array by s < kLimbBits bits.
inline void shift_right_small(LimbArray& a, std::size_t s) {
   if(s == 0) {
      return;
   }
   for(std::size_t i = 0; i + 1 < kMaxLimbs; ++i) {
      a[i] = (a[i] >> s) | (a[i + 1] << (kLimbBits - s));
   }
   a[kMaxLimbs - 1] >>= s;
}

inline void shift_right(LimbArray& a, std::size_t s) {
   const std::size_t words = s / kLimbBits;
   if(words > 0) {
      for(std::size_t i = 0; i != kMaxLimbs; ++i) {
         a[i] = (i + words < kMaxLimbs) ? a[i + words] : 0;
      }
   }
   shift_right_small(a, s % kLimbBits);
}

inline bool is_zero(const LimbArray& a) {
   limb_t acc = 0;
   for(limb_t w : a) {
      acc |= w;
   }
   return acc == 0;
}

/// Big-endian octets to limbs. Returns false if the value does not fit.
inline bool from_bytes_be(LimbArray& out, std::span<const std::uint8_t> in) {
   out.fill(0);
   std::size_t start = 0;
   while(start < in.size() && in[start] == 0) {
      ++start;
   }
   if(in.size() - start > kMaxLimbs * kLimbBytes) {
      return false;
   }
   std::size_t shift = 0;
   for(std::size_t i = in.size(); i-- > start;) {
      out[shift / kLimbBits] |= static_cast<limb_t>(in[i]) << (shift % kLimbBits);
      shift += 8;
   }
   return true;
}

/// Limbs to fixed-width big-endian octets (the value must fit in len bytes).
inline Bytes to_bytes_be(const LimbArray& in, std::size_t len) {
   Bytes out(len, 0);
   for(std::size_t i = 0; i != len && i < kMaxLimbs * kLimbBytes; ++i) {
      out[len - 1 - i] = static_cast<std::uint8_t>(in[i / kLimbBytes] >> (8 * (i % kLimbBytes)));
   }
   return out;
}

inline LimbArray from_u64(std::uint64_t v) {
   LimbArray out{};
   out[0] = static_cast<limb_t>(v);
   if constexpr(kLimbBits == 32) {
      out[1] = static_cast<limb_t>(v >> 32);
   }
   return out;
}

}  // namespace limbs

}  // namespace ctec
