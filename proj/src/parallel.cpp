#include "floer/parallel.hpp"

#include <cstdlib>
#include <omp.h>

namespace floer {

namespace {
int override_threads = 0;
}

int thread_count() {
    if (override_threads > 0) return override_threads;
    if (const char* s = std::getenv("FLOER_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
    return omp_get_num_procs();
}

void set_thread_count(int n) { override_threads = n > 0 ? n : 0; }

}  // namespace floer
