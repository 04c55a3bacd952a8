#ifndef FLOER_PARALLEL_HPP
#define FLOER_PARALLEL_HPP

namespace floer {

// Thread cap: FLOER_THREADS if set and positive, else all cores.
int thread_count();
void set_thread_count(int n);  // n <= 0 restores the default

}  // namespace floer

#endif
