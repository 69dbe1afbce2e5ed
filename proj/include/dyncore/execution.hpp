#pragma once

namespace dyncore {

/// Selects between the OpenMP kernels and their serial reference path.
/// Both produce identical results; the serial path exists for testing and
/// benchmarking.
enum class Execution { serial, parallel };

}  // namespace dyncore
