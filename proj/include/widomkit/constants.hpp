#pragma once

#include <cmath>

namespace widomkit {

/// zeta'(-1) = 1/12 - ln A (A the Glaisher-Kinkelin constant). The literal is
/// reproduced to 1e-13 by the Euler-Maclaurin check in the test suite and by
/// tools/oracles/glaisher_zeta_prime.py.
inline double zeta_prime_minus_one() { return -0.16542114370045092921; }

/// Additive constant in the large-gap expansion of the log sine-kernel
/// determinant: ln 2 / 12 + 3 zeta'(-1).
inline double c0_sine() { return std::log(2.0) / 12.0 + 3.0 * zeta_prime_minus_one(); }

/// Additive constant in the left-tail expansion of ln F2:
/// ln 2 / 24 + zeta'(-1).
inline double c0_airy() { return std::log(2.0) / 24.0 + zeta_prime_minus_one(); }

}  // namespace widomkit
