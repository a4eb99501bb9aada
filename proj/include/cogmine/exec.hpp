#pragma once

namespace cogmine {

// Kernels with data-parallel inner loops come in two flavors: a serial
// reference and an OpenMP version. Both must produce identical results.
enum class ExecMode { Serial, Parallel };

}  // namespace cogmine
