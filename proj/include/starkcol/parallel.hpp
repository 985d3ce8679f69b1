#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace starkcol {

// Hot kernels come in two flavours: a plain serial loop kept as the
// reference implementation, and an OpenMP version. Results must be
// identical; tests compare them and tools/bench times them.
enum class Exec { serial, openmp };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Static partition of [0, n) into contiguous chunks, one per thread slot.
// Used by kernels that merge per-chunk results in index order so the
// parallel path stays deterministic.
struct ChunkRange {
    std::size_t begin;
    std::size_t end;
};

inline ChunkRange chunk_of(std::size_t n, int chunk, int nchunks) {
    std::size_t lo = n * static_cast<std::size_t>(chunk) / static_cast<std::size_t>(nchunks);
    std::size_t hi = n * static_cast<std::size_t>(chunk + 1) / static_cast<std::size_t>(nchunks);
    return {lo, hi};
}

} // namespace starkcol
