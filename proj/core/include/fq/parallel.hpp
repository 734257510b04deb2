#pragma once

#include <cstddef>
#include <functional>

namespace fq {

// Worker budget: FQ_THREADS when set (0 = auto), hardware concurrency
// otherwise.
int thread_budget();

// Runs fn(i) for i in [0, n), possibly concurrently; fn must tolerate any
// execution order. Exceptions propagate.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace fq
