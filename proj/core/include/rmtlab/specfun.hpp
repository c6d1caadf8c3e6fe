#pragma once

#include <complex>

namespace rmtlab {

inline constexpr double euler_gamma = 0.5772156649015328606;

/// Digamma psi(x) for x > 0.  Recurrence shift to x >= 10 followed by the
/// asymptotic series; relative accuracy better than 1e-13.
double digamma(double x);

/// Trigamma psi'(x) for x > 0, same scheme, accuracy better than 1e-12.
double trigamma(double x);

/// Principal-branch log Gamma(z).  Accurate for Re z > 0 (the strips used by
/// the finite-kernel quadrature, |Im z| up to a few hundred).  Throws
/// std::domain_error at the poles z = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> z);

/// Imaginary error function erfi(z) = -i erf(iz).  Real input gives a result
/// with zero imaginary part.  Throws std::overflow_error when e^{Re(z^2)}
/// is not representable.
std::complex<double> erfi(std::complex<double> z);

namespace detail {
// Re erfi(x+iy) factored as  value * e^{x^2 - y^2}  (no overflow for any
// argument).  Used by the erfi-sum kernels, where the Gaussian factor is
// combined with the term prefactor in log space.
struct ScaledReErfi {
    double value;     // Im( e^{2ixy} w(x + i|y|) ), |value| = O(1)
    double exponent;  // x^2 - y^2
};
ScaledReErfi re_erfi_scaled(double x, double y);
} // namespace detail

} // namespace rmtlab
