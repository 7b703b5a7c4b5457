#pragma once

#include <cstdint>

namespace semoras::perf {

/// Lightweight operation accounting used by the cost-scaling tests.
/// Counters are process-global and not thread-safe; tests reset them
/// around the section they measure.
struct Counters {
  std::int64_t dssum_calls = 0;
  std::int64_t tensor_mults = 0;  // multiply-adds in dense tensor contractions

  void reset() { *this = Counters{}; }
};

inline Counters& counters() {
  static Counters c;
  return c;
}

}  // namespace semoras::perf
