#include "config.hpp"

#include <atomic>

#include "errors.hpp"

namespace stirmode {

namespace {
std::atomic<long> g_max_row_n{kDefaultMaxRowN};
}

long max_row_n() { return g_max_row_n.load(std::memory_order_relaxed); }

void set_max_row_n(long n) {
  if (n < 1) throw UsageError("set_max_row_n: maximum must be >= 1");
  g_max_row_n.store(n, std::memory_order_relaxed);
}

}  // namespace stirmode
