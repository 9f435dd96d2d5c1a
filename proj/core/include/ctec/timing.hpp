#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ctec {

/// Order statistics of a sample set.
struct TimingSummary {
      double median = 0;
      double q1 = 0;
      double q3 = 0;

      double iqr() const { return q3 - q1; }
};

/// Linear-interpolation quartiles. Empty input gives zeros.
TimingSummary summarize(std::vector<double> samples);

/// Timestamp counter where the platform exposes one, else 0.
std::uint64_t cycle_counter() noexcept;

bool has_cycle_counter() noexcept;

struct OpTiming {
      TimingSummary nanos;
      TimingSummary cycles;  // all zero without a cycle counter
      std::size_t reps = 0;
};

/// Run op `reps` times (after `warmup` untimed runs), timing each call.
OpTiming time_op(const std::function<void()>& op, std::size_t reps, std::size_t warmup = 8);

}  // namespace ctec
