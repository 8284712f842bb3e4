#pragma once

namespace zetafrob {

/// Selects between the OpenMP kernels and their serial reference versions.
enum class Exec { Serial, Parallel };

}  // namespace zetafrob
