#pragma once

namespace betawt {

// Execution policy for the data-parallel kernels. Parallel falls back to the
// serial path when the build has no OpenMP. Both policies produce bit
// identical results: every output element is written by exactly one owner and
// inner reductions run in a fixed order.
enum class Exec { Serial, Parallel };

}  // namespace betawt
