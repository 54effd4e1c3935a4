// parallel.hpp - deterministic index-parallel loops.
//
// Workers write to disjoint indices and reductions happen sequentially
// afterwards, so results are identical for any thread count. PQC_THREADS
// caps the number of workers.
#pragma once

#include <cstddef>
#include <functional>

namespace pqc {

/// Worker cap: min(hardware concurrency, PQC_THREADS if set), at least 1.
int thread_budget();

/// Runs fn(i) for i in [0, count). fn must only touch state owned by index i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace pqc
