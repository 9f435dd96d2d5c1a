#include <ctec/instrument.hpp>

namespace ctec::instrument {

Counters& counters() noexcept {
   thread_local Counters c;
   return c;
}

}  // namespace ctec::instrument
