#pragma once

namespace radspec {

/// Execution policy for batched solves. Rows are independent, so the two
/// policies produce bitwise-identical results; serial is kept as the
/// reference implementation for testing and benchmarking.
enum class Exec { serial, parallel };

} // namespace radspec
