#include "spherewright/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spherewright {

int thread_count() {
  static const int cached = [] {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("SPHEREWRIGHT_THREADS")) {
      try {
        const int cap = std::stoi(env);
        if (cap >= 1 && cap < n) n = cap;
      } catch (const std::exception&) {
        // unparsable cap: ignore
      }
    }
    return n < 1 ? 1 : n;
  }();
  return cached;
}

}  // namespace spherewright
