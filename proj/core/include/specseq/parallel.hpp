#pragma once

#include <cstddef>
#include <functional>

namespace specseq {

// Process-wide worker count; 1 (the default) means fully sequential.
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Runs fn(i) for i in [0, n). Tasks must be independent; exceptions propagate
// (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace specseq
