#include <ctec/timing.hpp>

#include <algorithm>
#include <chrono>

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#endif

namespace ctec {

namespace {

double quantile(const std::vector<double>& sorted, double f) {
   const double pos = f * static_cast<double>(sorted.size() - 1);
   const auto lo = static_cast<std::size_t>(pos);
   const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
   return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

TimingSummary summarize(std::vector<double> samples) {
   if(samples.empty()) {
      return {};
   }
   std::sort(samples.begin(), samples.end());
   return TimingSummary{quantile(samples, 0.5), quantile(samples, 0.25), quantile(samples, 0.75)};
}

bool has_cycle_counter() noexcept {
#if defined(__x86_64__) || defined(__i386__)
   return true;
#else
   return false;
#endif
}

std::uint64_t cycle_counter() noexcept {
#if defined(__x86_64__) || defined(__i386__)
   return __rdtsc();
#else
   return 0;
#endif
}

OpTiming time_op(const std::function<void()>& op, std::size_t reps, std::size_t warmup) {
   for(std::size_t i = 0; i != warmup; ++i) {
      op();
   }
   std::vector<double> ns, cyc;
   ns.reserve(reps);
   cyc.reserve(reps);
   for(std::size_t i = 0; i != reps; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      const std::uint64_t c0 = cycle_counter();
      op();
      const std::uint64_t c1 = cycle_counter();
      const auto t1 = std::chrono::steady_clock::now();
      ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
      cyc.push_back(static_cast<double>(c1 - c0));
   }
   return OpTiming{summarize(std::move(ns)), summarize(std::move(cyc)), reps};
}

}  // namespace ctec
