#pragma once
#include <cstddef>
#include <functional>

namespace halasz {

// Worker count for data-parallel scans. Results never depend on it: work is
// split into fixed chunks and merged in chunk order, threads only decide who
// computes which chunk.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(chunk) for chunk in [0, n_chunks) on up to thread_count() workers.
// fn must write only chunk-indexed state.
void parallel_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

} // namespace halasz
