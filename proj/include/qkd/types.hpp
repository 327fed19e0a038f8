#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace qkd {

using cplx = std::complex<double>;

// Tolerances used across the library: invariant checks run at invariant_tol,
// identities that hold by construction are asserted at exact_tol.
inline constexpr double invariant_tol = 1e-9;
inline constexpr double exact_tol = 1e-12;

} // namespace qkd
