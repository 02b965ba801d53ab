#pragma once

namespace starspec {

// Execution policy for the data-parallel kernels. Every kernel that accepts
// an Exec has a serial path that computes bit-identical results; tests compare
// the two and the bench tool times them.
enum class Exec { serial, parallel };

} // namespace starspec
