#pragma once

namespace orbires {

/// Selects between the serial reference implementation of a kernel and its
/// OpenMP-parallel counterpart. Both produce identical results.
enum class Exec { kSerial, kParallel };

}  // namespace orbires
