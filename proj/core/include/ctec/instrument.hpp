#pragma once

#include <cstdint>

namespace ctec::instrument {

/// Operation counters used by the structural constant-time checks.
///
/// Point-level counters are always maintained (a handful of increments per
/// point operation). Field-level counters are only maintained when the library
/// is compiled with CTEC_INSTRUMENT, i.e. the `ctec_instrumented` target.
struct Counters {
      std::uint64_t point_add = 0;
      std::uint64_t point_add_mixed = 0;
      std::uint64_t point_dbl = 0;
      std::uint64_t table_touch = 0;
      std::uint64_t mul_double_calls = 0;

      std::uint64_t fp_mul = 0;
      std::uint64_t fp_sqr = 0;
      std::uint64_t fp_add = 0;
      std::uint64_t fp_sub = 0;
      std::uint64_t fp_select = 0;
      std::uint64_t limb_ops = 0;

      bool operator==(const Counters&) const = default;
};

Counters& counters() noexcept;

inline void reset() noexcept {
   counters() = Counters{};
}

/// Snapshot the counters on construction; delta() reports what happened since.
class Scope {
   public:
      Scope() : m_start(counters()) {}

      Counters delta() const {
         const Counters& now = counters();
         Counters d;
         d.point_add = now.point_add - m_start.point_add;
         d.point_add_mixed = now.point_add_mixed - m_start.point_add_mixed;
         d.point_dbl = now.point_dbl - m_start.point_dbl;
         d.table_touch = now.table_touch - m_start.table_touch;
         d.mul_double_calls = now.mul_double_calls - m_start.mul_double_calls;
         d.fp_mul = now.fp_mul - m_start.fp_mul;
         d.fp_sqr = now.fp_sqr - m_start.fp_sqr;
         d.fp_add = now.fp_add - m_start.fp_add;
         d.fp_sub = now.fp_sub - m_start.fp_sub;
         d.fp_select = now.fp_select - m_start.fp_select;
         d.limb_ops = now.limb_ops - m_start.limb_ops;
         return d;
      }

   private:
      Counters m_start;
};

constexpr bool field_level_enabled() {
#if defined(CTEC_INSTRUMENT)
   return true;
#else
   return false;
#endif
}

}  // namespace ctec::instrument

#define CTEC_COUNT_POINT(field) (++::ctec::instrument::counters().field)

#if defined(CTEC_INSTRUMENT)
   #define CTEC_COUNT_FIELD(field, limbs)                   \
      do {                                                  \
         ++::ctec::instrument::counters().field;            \
         ::ctec::instrument::counters().limb_ops += (limbs); \
      } while(0)
#else
   #define CTEC_COUNT_FIELD(field, limbs) \
      do {                                \
      } while(0)
#endif
