#include "rmtlab/kernels_finite.hpp"
#include "rmtlab/specfun.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace rmtlab {

namespace {

constexpr double pi = 3.14159265358979323846;

// log(sinh(a)/a) for a >= 0 without overflow
double log_sinhc(double a) {
    if (a < 1e-4) return a * a / 6.0;
    if (a < 20.0) return std::log(std::sinh(a) / a);
    return a - std::log(2.0 * a) + std::log1p(-std::exp(-2.0 * a));
}

void validate(int j, int n, int m) {
    if (n < 1) throw std::invalid_argument("finite kernel: n must be >= 1");
    if (m < 1) throw std::invalid_argument("finite kernel: m must be >= 1");
    if (j < 1 || j > n)
        throw std::invalid_argument("finite kernel: need 1 <= j <= n");
}

// Re of the integrand at t = i tau:
//   sin(pi t)/(pi t) * y^t * (Gamma(j - t)/Gamma(j))^{m+1}
//                          * Gamma(n - j + 1 + t)/Gamma(n - j + 1)
// assembled as exp of a complex log; decays like e^{-m pi tau / 2} times
// polynomial factors.
double integrand(double tau, double log_y, int j, int n, int m) {
    if (tau == 0.0) return 1.0;
    const std::complex<double> it{0.0, tau};
    std::complex<double> lg = (m + 1.0) * (log_gamma(double(j) - it) -
                                           log_gamma({double(j), 0.0})) +
                              log_gamma(double(n - j + 1) + it) -
                              log_gamma({double(n - j + 1), 0.0});
    lg += std::complex<double>{log_sinhc(pi * tau), tau * log_y};
    if (lg.real() < -745.0) return 0.0;
    return std::exp(lg.real()) * std::cos(lg.imag());
}

} // namespace

double G_j(double log_y, int j, int n, int m, const FiniteKernelConfig& cfg) {
    validate(j, n, m);
    const double tol = cfg.tolerance;
    const double L = std::log(1.0 / tol);

    // cutoff from the exponential decay rate, then extended until the
    // integrand is actually negligible (polynomial prefactors can delay it)
    double T = cfg.quad_cutoff > 0.0
                   ? cfg.quad_cutoff
                   : std::max(6.0, 2.0 * (L + 12.0) / (m * pi));
    if (cfg.quad_cutoff <= 0.0) {
        const double t_cap = 2000.0;
        while (std::abs(integrand(T, log_y, j, n, m)) > tol * 1e-3) {
            T *= 1.5;
            if (T > t_cap)
                throw QuadratureError(
                    "G_j: integrand tail not below tolerance at cutoff " +
                    std::to_string(t_cap));
        }
    }

    double h = cfg.quad_step > 0.0
                   ? cfg.quad_step
                   : std::min(pi / (8.0 * (1.0 + std::abs(log_y))), T / 48.0);

    // trapezoid on [0, T] (the integrand is even in tau up to conjugation);
    // Richardson step-halving as the error estimate
    auto trapz = [&](double step) {
        const long npts = static_cast<long>(std::ceil(T / step));
        double s = 0.5 * (integrand(0.0, log_y, j, n, m) +
                          integrand(npts * step, log_y, j, n, m));
        for (long i = 1; i < npts; ++i)
            s += integrand(i * step, log_y, j, n, m);
        return s * step / pi;
    };

    double coarse = trapz(h);
    for (int halvings = 0; halvings < 12; ++halvings) {
        const double fine = trapz(h / 2.0);
        if (std::abs(fine - coarse) < tol) return fine;
        coarse = fine;
        h /= 2.0;
    }
    throw QuadratureError("G_j: trapezoid not converged under step halving "
                          "(j=" + std::to_string(j) + ", n=" +
                          std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

double kernel_KY(double x, double y, int n, int m,
                 const FiniteKernelConfig& cfg) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::invalid_argument("kernel_KY: x, y must be > 0");
    validate(1, n, m);
    const double lx = std::log(x), ly = std::log(y);
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double e = j * (lx - ly) - lx;
        if (e > 709.0)
            throw std::overflow_error("kernel_KY: (x/y)^j overflows; "
                                      "evaluate in a transported variable");
        sum += std::exp(e) * G_j(ly, j, n, m, cfg);
    }
    return sum;
}

double kernel_KL(double lam_x, double lam_y, int n, int m,
                 const FiniteKernelConfig& cfg) {
    validate(1, n, m);
    const double two_m = 2.0 * m;
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double e = two_m * j * (lam_x - lam_y);
        if (e > 709.0) throw std::overflow_error("kernel_KL: ratio overflows");
        sum += std::exp(e) * G_j(two_m * lam_y, j, n, m, cfg);
    }
    return two_m * sum;
}

double kernel_Ku(double px, double py, int n, int m,
                 const FiniteKernelConfig& cfg) {
    if (!(px > 0.0) || !(py > 0.0))
        throw std::invalid_argument("kernel_Ku: px, py must be > 0");
    validate(1, n, m);
    const double lr = m * (std::log(px) - std::log(py));
    const double ly = m * std::log(py * n);
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double e = j * lr;
        if (e > 709.0) throw std::overflow_error("kernel_Ku: ratio overflows");
        sum += std::exp(e) * G_j(ly, j, n, m, cfg);
    }
    return m / px * sum;
}

} // namespace rmtlab
