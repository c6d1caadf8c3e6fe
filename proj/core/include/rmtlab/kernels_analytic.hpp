#pragma once

#include <vector>

namespace rmtlab {

/// sin(pi(xi-zeta)) / (pi(xi-zeta)); diagonal = 1 via the limit.
double sine_kernel(double xi, double zeta);

/// Rescaled Dyson-walk kernel K_w(xi, zeta), the Fourier (k-) sum, with
/// certified truncation: the last retained term is below tol/10 and the tail
/// is geometrically bounded.  Requires w > 0.
double kernel_Kw(double xi, double zeta, double w, double tol = 1e-10);

/// Unrescaled kernel K_t(x, y) = (1/s) K_w(x/s, y/s).
double kernel_Kt(double x, double y, double s, double w, double tol = 1e-10);

/// Kernel value factored as value * e^{log_scale}.  The erfi-sum kernel
/// carries a gauge factor that is exponentially large off the diagonal; all
/// gauge-invariant combinations cancel the scales exactly.
struct ScaledKernelValue {
    double value = 0.0;
    double log_scale = 0.0;
    /// Plain value; throws std::overflow_error if not representable.
    double unscaled() const;
};

/// Erfi-sum kernel K^hat_w(xi, zeta) in scaled form.  Uses double precision
/// where the alternating nu-sum loses few digits and an MPFR-backed path
/// otherwise (the cancellation across terms grows like e^{pi^2 w^2/2}).
/// Supported up to w = 8; throws std::invalid_argument beyond.
ScaledKernelValue kernel_Khat_scaled(double xi, double zeta, double w,
                                     double tol = 1e-10);
double kernel_Khat(double xi, double zeta, double w, double tol = 1e-10);

/// Double-scaling kernel K_p(xi, zeta) at aspect ratio a and spectral
/// position p; depends on (a, p) only through w = sqrt(a p).
double kernel_Kp(double xi, double zeta, double a, double p,
                 double tol = 1e-10);

/// Diagonal density R^hat_w(xi) = K^hat_w(xi, xi); period 1 in xi.
double density_Rhat(double xi, double w, double tol = 1e-10);

enum class KernelFamily {
    JohanssonKt,
    RescaledKw,
    Sine,
    ErfiKhat,
    DoubleScalingKp,
};

/// Pure (x, y) -> value evaluator with a family tag and declared truncation
/// tolerance; the CLI and the correlation determinants dispatch through it.
struct KernelEvaluator {
    KernelFamily family = KernelFamily::Sine;
    double w = 1.0;
    double s = 1.0;
    double a = 1.0;
    double p = 0.5;
    double truncation_tolerance = 1e-10;

    double operator()(double x, double y) const;
};

/// k-point correlation det[K(x_i, x_j)]; k <= 12.
double correlation_Rk(const std::vector<double>& points,
                      const KernelEvaluator& kernel);

struct DualityReport {
    double w = 0.0;
    double max_diag_abs_diff = 0.0;      // |K_w - K^hat_w| on the diagonal
    double max_r2_abs_diff = 0.0;        // 2x2-determinant discrepancy
    double max_pointwise_abs_diff = 0.0; // raw off-diagonal discrepancy
    double gauge_exponent = 0.0;         // fitted c: K_w ~ e^{c(xi-zeta)} K^hat_w
    double gauge_residual = 0.0;         // rms residual of the fit
};

/// Numerical comparison of the Fourier-sum and erfi-sum kernels on a grid
/// [-extent, extent]^2 with the given step.  Gauge-invariant quantities
/// (diagonal, 2x2 determinants) are the meaningful discrepancies; pointwise
/// agreement and the fitted gauge exponent are informational.
DualityReport duality_report(double w, double extent = 3.0, double step = 0.05,
                             double tol = 1e-10);

} // namespace rmtlab
