#pragma once

#include "rmtlab/linalg.hpp"
#include "rmtlab/rng.hpp"
#include "rmtlab/sampling.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace rmtlab {

enum class LyapunovMethod { ScaledSvd, QrAccumulation };

struct ProductConfig {
    int n = 1;       // matrix size
    int m = 1;       // number of factors
    EntryLaw law = EntryLaw::GaussianComplex;
};

/// Finite-time Lyapunov exponents lambda_j = log sigma_j(G_m ... G_1) / m,
/// ascending.
struct LyapunovSpectrum {
    std::vector<double> exponents;
    int m = 0;
    LyapunovMethod method = LyapunovMethod::QrAccumulation;
};

/// Raised when the exact-SVD route is requested outside its double-precision
/// safe zone; the QR accumulation route has no such restriction.
struct ConditioningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using FactorGenerator = std::function<ComplexMatrix(int step)>;

/// Exact finite-m exponents from the running product with per-factor
/// Frobenius rescaling and a scalar log-scale accumulator.  Requires the
/// expected log-spread m (psi(n) - psi(1)) < 30, else ConditioningError.
LyapunovSpectrum product_spectrum_svd(const ProductConfig& cfg, RngStream& rng);

/// QR-accumulation exponents: an orthonormal frame is propagated through the
/// factors and log |diag R| accumulated.  Valid for any m.
LyapunovSpectrum product_spectrum_qr(const ProductConfig& cfg, RngStream& rng);

// Deterministic-factor variants (test hooks and custom ensembles).
LyapunovSpectrum product_spectrum_svd(int n, int m, const FactorGenerator& gen);
LyapunovSpectrum product_spectrum_qr(int n, int m, const FactorGenerator& gen);

/// m -> infinity limit position of the j-th exponent, psi(j)/2.
double deterministic_position(int j);

/// Gaussian-peak width sqrt(psi'(j) / (4 m)).
double peak_width(int j, int m);

/// Sum over j of Gaussian peaks at psi(j)/2 with width peak_width(j, m);
/// integrates to n.
double gaussian_peak_density(double lambda, int n, int m);

/// Width-to-spacing ratio (sigma_{j+1} + sigma_j) / (2 (lambda_{j+1} - lambda_j)).
double wsr_lyapunov_exact(int j, int m);

/// Large-j approximation sqrt(j / m).
double wsr_lyapunov_approx(int j, int m);

/// Unfolded values u_j = e^{2 lambda_j} / n, ascending (log-space internally).
std::vector<double> unfold_u(const LyapunovSpectrum& spec, int n);

double aspect_ratio(int n, int m);

} // namespace rmtlab
