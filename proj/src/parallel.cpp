#include "hwdirac/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace hwdirac {

int worker_threads() {
  int n = omp_get_max_threads();
  if (const char* cap = std::getenv("HWDIRAC_THREADS")) {
    try {
      int c = std::stoi(cap);
      if (c >= 1 && c < n) n = c;
    } catch (...) {
      // unparsable caps are ignored
    }
  }
  return n < 1 ? 1 : n;
}

namespace detail {

void parallel_for(std::size_t n, void (*body)(std::size_t, void*), void* ctx) {
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_threads())
  for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i), ctx);
}

}  // namespace detail
}  // namespace hwdirac
