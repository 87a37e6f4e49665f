#include "midk/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace midk {

namespace {

#ifdef _OPENMP
Exec g_default = Exec::parallel;
#else
Exec g_default = Exec::serial;
#endif

}  // namespace

Exec default_execution() { return g_default; }

void set_default_execution(Exec e) { g_default = e; }

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace midk
