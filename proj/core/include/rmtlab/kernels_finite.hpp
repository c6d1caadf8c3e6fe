#pragma once

#include <stdexcept>

namespace rmtlab {

/// Quadrature controls for the finite-(m, n) product kernel.  Zero means
/// "choose automatically" from the integrand decay rate exp(-m pi |tau| / 2)
/// and the oscillation rate |ln y|.
struct FiniteKernelConfig {
    double tolerance = 1e-8;
    double quad_step = 0.0;   // trapezoid step h on the imaginary axis
    double quad_cutoff = 0.0; // integration cutoff T
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Contour integral G_j(y) along t = i tau, assembled from complex
/// log-gamma in log-magnitude/phase form; takes ln y so callers can stay in
/// log space.  m is the number of Ginibre factors (>= 1).
double G_j(double log_y, int j, int n, int m,
           const FiniteKernelConfig& cfg = {});

/// Exact finite-(m, n) kernel K_Y(x, y) of the squared singular values of
/// the m-factor product; x, y > 0.
double kernel_KY(double x, double y, int n, int m,
                 const FiniteKernelConfig& cfg = {});

/// Transport to Lyapunov variables: K_L(lx, ly) = 2m e^{2m lx} K_Y(e^{2m lx}, e^{2m ly}).
double kernel_KL(double lam_x, double lam_y, int n, int m,
                 const FiniteKernelConfig& cfg = {});

/// Transport to the unfolded variable p: K_u(px, py) with x = (px n)^m and
/// Jacobian m n (px n)^{m-1}.
double kernel_Ku(double px, double py, int n, int m,
                 const FiniteKernelConfig& cfg = {});

} // namespace rmtlab
