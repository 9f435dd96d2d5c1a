#pragma once

#include <ctec/limbs.hpp>

#include <string>
#include <string_view>

namespace ctec {

/// A named digest. Backed by libcrypto's SHA-2 implementations.
class HashSpec {
   public:
      static HashSpec sha224();
      static HashSpec sha256();
      static HashSpec sha384();
      static HashSpec sha512();

      /// "sha256", "SHA-256", ... Throws Error(NotFound).
      static HashSpec by_name(std::string_view name);

      /// SHA-256 for groups of up to 256 bits, SHA-512 above.
      static HashSpec default_for(std::size_t order_bits);

      const std::string& name() const { return m_name; }

      std::size_t output_length() const { return m_out; }

      std::size_t block_length() const { return m_block; }

      Bytes digest(std::span<const std::uint8_t> data) const;

      Bytes digest(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const;

   private:
      HashSpec(std::string name, std::size_t out, std::size_t block) :
            m_name(std::move(name)), m_out(out), m_block(block) {}

      std::string m_name;
      std::size_t m_out;
      std::size_t m_block;
};

/// HMAC (RFC 2104) over any HashSpec.
Bytes hmac(const HashSpec& hash, std::span<const std::uint8_t> key, std::span<const std::uint8_t> msg);

}  // namespace ctec
