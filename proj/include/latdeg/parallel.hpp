#pragma once

#include <cstddef>
#include <functional>

namespace latdeg {

/// Worker count: LATDEG_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Runs body(chunk) for every chunk in [0, chunks) on up to worker_count() threads.
/// Chunks are claimed dynamically; callers store per-chunk results and merge them in
/// chunk order, so results never depend on scheduling.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body);

}  // namespace latdeg
