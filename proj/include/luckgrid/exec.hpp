#pragma once

namespace luckgrid {

/// Kernel execution policy. Serial is the reference implementation and
/// the semantic definition; Parallel is the OpenMP path and must produce
/// bit-identical results (asserted by the test suite).
enum class Exec { Serial, Parallel };

} // namespace luckgrid
