#pragma once

namespace psolve {

/// Selects the serial reference loop or the OpenMP loop for the search
/// kernels. Both produce identical, deterministically ordered results.
enum class Execution { serial, parallel };

}  // namespace psolve
