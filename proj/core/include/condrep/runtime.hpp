#pragma once

#include <cstdint>
#include <functional>

namespace condrep {

/// Keep the BLAS backend on one thread. The harness parallelizes across
/// whole runs; nested BLAS threading only thrashes the cores. Call once,
/// early in main, before the first linear-algebra call.
void pin_blas_single_thread();

/// splitmix64 step, used to derive independent stream seeds from a base
/// seed and a stream index.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

/// Run jobs 0..count-1 on `workers` threads (0 = hardware concurrency).
/// Results must be written into per-index slots by the callable; the
/// schedule is work-stealing by atomic counter, so outputs are
/// deterministic as long as jobs do not share state.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job,
                  unsigned workers = 0);

}  // namespace condrep
