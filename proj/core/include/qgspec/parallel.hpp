#pragma once

#include <cstddef>
#include <functional>

namespace qgspec {

/// Worker count: QG_THREADS when set to a positive integer, otherwise all cores.
unsigned thread_count();

/// Override for thread_count(); 0 restores the environment/hardware default.
void set_thread_count(unsigned n);

/// Runs body(chunk_index) for chunk_index in [0, chunks) on up to thread_count()
/// threads. Chunks are independent; callers merge results in index order.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body);

} // namespace qgspec
