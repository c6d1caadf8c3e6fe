#include "rmtlab/multiplicative.hpp"
#include "rmtlab/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace rmtlab {

namespace {

void validate(int n, int m) {
    if (n < 1) throw std::invalid_argument("product spectrum: n must be >= 1");
    if (m < 1) throw std::invalid_argument("product spectrum: m must be >= 1");
}

} // namespace

LyapunovSpectrum product_spectrum_svd(int n, int m, const FactorGenerator& gen) {
    validate(n, m);
    ComplexMatrix p = ComplexMatrix::Identity(n, n);
    double log_scale = 0.0;
    for (int step = 0; step < m; ++step) {
        p = gen(step) * p;
        const double norm = p.norm();
        if (!(norm > 0.0))
            throw std::runtime_error("product_spectrum_svd: zero product");
        p /= norm;
        log_scale += std::log(norm);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(p);
    LyapunovSpectrum out;
    out.m = m;
    out.method = LyapunovMethod::ScaledSvd;
    out.exponents.resize(n);
    for (int j = 0; j < n; ++j) {
        const double sv = svd.singularValues()(j);
        if (!(sv > 0.0))
            throw ConditioningError(
                "product_spectrum_svd: singular value underflow; "
                "use the QR accumulation method");
        out.exponents[j] = (std::log(sv) + log_scale) / m;
    }
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

LyapunovSpectrum product_spectrum_qr(int n, int m, const FactorGenerator& gen) {
    validate(n, m);
    ComplexMatrix q = ComplexMatrix::Identity(n, n);
    std::vector<double> acc(n, 0.0);
    for (int step = 0; step < m; ++step) {
        const ComplexMatrix b = gen(step) * q;
        Eigen::HouseholderQR<ComplexMatrix> qr(b);
        const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        q = qr.householderQ();
        for (int j = 0; j < n; ++j) {
            const double d = std::abs(r(j, j));
            if (!(d > 0.0))
                throw std::runtime_error("product_spectrum_qr: rank-deficient factor");
            acc[j] += std::log(d);
        }
    }
    LyapunovSpectrum out;
    out.m = m;
    out.method = LyapunovMethod::QrAccumulation;
    out.exponents.resize(n);
    for (int j = 0; j < n; ++j) out.exponents[j] = acc[j] / m;
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

LyapunovSpectrum product_spectrum_svd(const ProductConfig& cfg, RngStream& rng) {
    validate(cfg.n, cfg.m);
    const double spread = cfg.m * (digamma(cfg.n) - digamma(1));
    if (spread >= 30.0)
        throw ConditioningError(
            "product_spectrum_svd: expected log-spread m(psi(n)-psi(1)) = " +
            std::to_string(spread) +
            " outside double-precision safe zone (< 30); "
            "use the QR accumulation method");
    return product_spectrum_svd(cfg.n, cfg.m, [&](int) {
        return sample_ginibre(cfg.n, cfg.law, rng);
    });
}

LyapunovSpectrum product_spectrum_qr(const ProductConfig& cfg, RngStream& rng) {
    return product_spectrum_qr(cfg.n, cfg.m, [&](int) {
        return sample_ginibre(cfg.n, cfg.law, rng);
    });
}

double deterministic_position(int j) {
    if (j < 1) throw std::invalid_argument("deterministic_position: j must be >= 1");
    return 0.5 * digamma(j);
}

double peak_width(int j, int m) {
    if (j < 1 || m < 1)
        throw std::invalid_argument("peak_width: j, m must be >= 1");
    return std::sqrt(trigamma(j) / (4.0 * m));
}

double gaussian_peak_density(double lambda, int n, int m) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("gaussian_peak_density: n, m must be >= 1");
    constexpr double inv_sqrt_2pi = 0.39894228040143267794;
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double s = peak_width(j, m);
        const double z = (lambda - deterministic_position(j)) / s;
        sum += inv_sqrt_2pi / s * std::exp(-0.5 * z * z);
    }
    return sum;
}

double wsr_lyapunov_exact(int j, int m) {
    const double spacing = deterministic_position(j + 1) - deterministic_position(j);
    return (peak_width(j + 1, m) + peak_width(j, m)) / (2.0 * spacing);
}

double wsr_lyapunov_approx(int j, int m) {
    if (j < 1 || m < 1)
        throw std::invalid_argument("wsr_lyapunov_approx: j, m must be >= 1");
    return std::sqrt(static_cast<double>(j) / m);
}

std::vector<double> unfold_u(const LyapunovSpectrum& spec, int n) {
    if (n < 1) throw std::invalid_argument("unfold_u: n must be >= 1");
    const double log_n = std::log(static_cast<double>(n));
    std::vector<double> u(spec.exponents.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double e = 2.0 * spec.exponents[j] - log_n;
        if (e > 709.0) throw std::overflow_error("unfold_u: u value overflows");
        u[j] = std::exp(e);
    }
    return u;
}

double aspect_ratio(int n, int m) {
    if (m < 1) throw std::invalid_argument("aspect_ratio: m must be >= 1");
    return static_cast<double>(n) / m;
}

} // namespace rmtlab
