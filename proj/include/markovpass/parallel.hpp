#pragma once

namespace markovpass {

/// Selects between the OpenMP kernel and the plain serial loop it was
/// derived from. Both must produce identical results; the serial path is
/// kept as the reference the parallel one is tested against.
enum class Execution { Serial, Parallel };

/// Threads OpenMP would use for a parallel region (1 when built without it).
int max_threads() noexcept;

}  // namespace markovpass
