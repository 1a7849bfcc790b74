#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace qvote {

using Complex = std::complex<double>;

// Shared numeric thresholds. kSupport is the single source of truth for
// "has support on a subspace" across the whole library.
namespace tol {
inline constexpr double kState = 1e-9;    // state invariants (norm, trace, Hermiticity)
inline constexpr double kRepro = 1e-12;   // exact-reproduction comparisons
inline constexpr double kSupport = 1e-10; // Tr(P rho) > kSupport counts as support
} // namespace tol

// Canonical real formatting used by all text output so that identical
// inputs always produce identical bytes.
std::string format_real(double x);
std::string format_complex(const Complex& z);

} // namespace qvote
