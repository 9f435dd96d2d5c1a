#pragma once

#include <ctec/limbs.hpp>

#include <random>

namespace ctec {

/// Injectable uniform byte source. Implementations throw Error(RngFailure)
/// when they cannot deliver.
class RngSource {
   public:
      virtual ~RngSource() = default;

      virtual void fill(std::span<std::uint8_t> out) = 0;

      Bytes bytes(std::size_t n) {
         Bytes b(n);
         fill(b);
         return b;
      }
};

/// Operating-system entropy.
class SystemRng final : public RngSource {
   public:
      void fill(std::span<std::uint8_t> out) override;
};

/// Reproducible stream for tests and KAT generation: the little-endian
/// bytes of successive mt19937_64 outputs.
class DeterministicRng final : public RngSource {
   public:
      explicit DeterministicRng(std::uint64_t seed) : m_gen(seed) {}

      void fill(std::span<std::uint8_t> out) override;

   private:
      std::mt19937_64 m_gen;
      std::uint64_t m_buf = 0;
      unsigned m_avail = 0;
};

/// Replays fixed chunks; each fill() consumes the next chunk, truncated or
/// zero-extended on the left to the requested size. Throws RngFailure
/// once exhausted.
class ReplayRng final : public RngSource {
   public:
      explicit ReplayRng(std::vector<Bytes> chunks) : m_chunks(std::move(chunks)) {}

      void fill(std::span<std::uint8_t> out) override;

   private:
      std::vector<Bytes> m_chunks;
      std::size_t m_next = 0;
};

}  // namespace ctec
