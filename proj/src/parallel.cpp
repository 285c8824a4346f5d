#include "catrange/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catrange {

int thread_cap() {
#ifdef _OPENMP
  int cap = omp_get_max_threads();
#else
  int cap = 1;
#endif
  if (const char* env = std::getenv("CATALOG_RANGE_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1 && v < cap) cap = v;
    } catch (...) {
      // ignore malformed values
    }
  }
  return cap;
}

}  // namespace catrange
