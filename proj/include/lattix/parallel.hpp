#pragma once

#include <cstddef>
#include <functional>

namespace lattix {

// Process-wide worker count for parallel loops; 1 by default, set from the
// CLI --threads flag. Loops write to disjoint output slots, so results are
// identical for every thread count.
int thread_count();
void set_thread_count(int n);

// Runs fn(begin, end) over a disjoint chunking of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace lattix
