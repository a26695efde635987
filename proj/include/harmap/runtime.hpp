#pragma once

#include <algorithm>
#include <atomic>

namespace harmap::runtime {

inline std::atomic<int>& thread_knob() {
  static std::atomic<int> n{1};
  return n;
}

// Worker count for the parallel loops. Results are identical for any value
// because every parallel reduction uses a fixed combination order.
inline int threads() { return thread_knob().load(std::memory_order_relaxed); }

inline void set_threads(int n) { thread_knob().store(std::max(1, n), std::memory_order_relaxed); }

}  // namespace harmap::runtime
