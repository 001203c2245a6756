#include <coxbp/exec.hpp>

#include <omp.h>

namespace coxbp {

void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

} // namespace coxbp
