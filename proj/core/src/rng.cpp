#include <ctec/rng.hpp>

#include <ctec/error.hpp>

#include <sys/random.h>

#include <algorithm>
#include <cerrno>

namespace ctec {

void SystemRng::fill(std::span<std::uint8_t> out) {
   std::size_t done = 0;
   while(done < out.size()) {
      const ssize_t got = ::getrandom(out.data() + done, out.size() - done, 0);
      if(got < 0) {
         if(errno == EINTR) {
            continue;
         }
         throw_error(ErrorCode::RngFailure, "getrandom failed");
      }
      done += static_cast<std::size_t>(got);
   }
}

void DeterministicRng::fill(std::span<std::uint8_t> out) {
   for(auto& b : out) {
      if(m_avail == 0) {
         m_buf = m_gen();
         m_avail = 8;
      }
      b = static_cast<std::uint8_t>(m_buf);
      m_buf >>= 8;
      --m_avail;
   }
}

void ReplayRng::fill(std::span<std::uint8_t> out) {
   if(m_next == m_chunks.size()) {
      throw_error(ErrorCode::RngFailure, "replay stream exhausted");
   }
   const Bytes& c = m_chunks[m_next++];
   std::fill(out.begin(), out.end(), 0);
   const std::size_t n = std::min(c.size(), out.size());
   std::copy(c.end() - static_cast<std::ptrdiff_t>(n), c.end(), out.end() - static_cast<std::ptrdiff_t>(n));
}

}  // namespace ctec
