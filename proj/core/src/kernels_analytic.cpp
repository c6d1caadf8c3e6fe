#include "rmtlab/kernels_analytic.hpp"
#include "rmtlab/faddeeva.hpp"
#include "rmtlab/specfun.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace rmtlab {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double sqrt2 = 1.41421356237309504880;
constexpr double log10_e = 0.43429448190325182765;

namespace mp = boost::multiprecision;
using hp50 = mp::number<mp::mpfr_float_backend<50>, mp::et_off>;
using hp90 = mp::number<mp::mpfr_float_backend<90>, mp::et_off>;
using hp160 = mp::number<mp::mpfr_float_backend<160>, mp::et_off>;

} // namespace

double sine_kernel(double xi, double zeta) {
    const double d = xi - zeta;
    if (std::abs(d) < 1e-8) {
        const double pd = pi * d;
        return 1.0 - pd * pd / 6.0;
    }
    return std::sin(pi * d) / (pi * d);
}

double kernel_Kw(double xi, double zeta, double w, double tol) {
    if (!(w > 0.0))
        throw std::invalid_argument("kernel_Kw: w must be > 0 (the w = 0 "
                                    "picket fence is not pointwise representable)");
    const double delta = zeta - xi;
    const double w2 = w * w;

    // k = 0 term in closed form: Re[e^{i pi delta} / (i delta)] = sin(pi delta)/delta
    double sum = pi * sine_kernel(xi, zeta);

    // k = 1: no Gaussian suppression either
    {
        const std::complex<double> num{std::cos(pi * (xi + zeta)),
                                       std::sin(pi * (xi + zeta))};
        const std::complex<double> den{2.0 * pi * w2, delta};
        sum += (num / den).real();
    }

    // pairs (k, 1-k), k >= 2, share the decay factor e^{-2 pi^2 w^2 k(k-1)}
    for (int k = 2; k < 100000; ++k) {
        const double decay = std::exp(-2.0 * pi * pi * w2 * k * (k - 1));
        const double bound = decay / (2.0 * pi * w2 * (k - 1));
        double add = 0.0;
        for (int kk : {k, 1 - k}) {
            const double phase = pi * ((2 * kk - 1) * xi + zeta);
            const std::complex<double> num{std::cos(phase), std::sin(phase)};
            const std::complex<double> den{2.0 * pi * w2 * kk, delta};
            add += (num / den).real();
        }
        sum += decay * add;
        if (bound < tol * pi / 10.0) break;
    }
    return sum / pi;
}

double kernel_Kt(double x, double y, double s, double w, double tol) {
    if (!(s > 0.0)) throw std::invalid_argument("kernel_Kt: s must be > 0");
    return kernel_Kw(x / s, y / s, w, tol * s) / s;
}

double ScaledKernelValue::unscaled() const {
    if (value == 0.0) return 0.0;
    const double lg = log_scale + std::log(std::abs(value));
    if (lg > 709.0)
        throw std::overflow_error("ScaledKernelValue: magnitude exceeds double range");
    return value * std::exp(log_scale);
}

namespace {

// nu-sum in double precision with the gauge scale e^{P0} factored out;
// valid when the alternating-sum cancellation (~ e^{pi^2 w^2 / 2}) leaves
// enough of the mantissa.
ScaledKernelValue khat_double(double xi, double zeta, double w, double tol) {
    const double u = xi - zeta;
    const double w2 = w * w;
    const double x = pi * w / sqrt2;
    const double p0 = (xi * xi - zeta * zeta) / (2.0 * w2);

    const long nu_lo0 = std::lround(std::min(zeta, zeta + u)) - 1;
    const long nu_hi0 = std::lround(std::max(zeta, zeta + u)) + 1;

    double sum = 0.0;
    const double thresh = tol * 2.0 * pi * w2 / 10.0;
    auto add_term = [&](long nu) {
        const double y = (zeta - nu) / (w * sqrt2);
        const auto sr = detail::re_erfi_scaled(x, y);
        const double a = nu * u / w2 + sr.exponent - p0;
        const double term = (a < -745.0) ? 0.0 : sr.value * std::exp(a);
        sum += term;
        return std::abs(term);
    };
    for (long nu = nu_lo0; nu <= nu_hi0; ++nu) add_term(nu);
    int small_run = 0;
    for (long nu = nu_hi0 + 1; small_run < 3; ++nu)
        small_run = (add_term(nu) < thresh) ? small_run + 1 : 0;
    small_run = 0;
    for (long nu = nu_lo0 - 1; small_run < 3; --nu)
        small_run = (add_term(nu) < thresh) ? small_run + 1 : 0;

    return {sum / (2.0 * pi * w2), p0};
}

// nu-sum carried out in multiprecision; the per-term magnitudes reach
// e^{x^2} above the result scale, so the working precision is set from
// x^2 = pi^2 w^2 / 2 plus the requested tolerance.
template <class HP>
ScaledKernelValue khat_hp(double xi, double zeta, double w, double tol,
                          int digits) {
    const HP u = HP(xi) - HP(zeta);
    const HP w2 = HP(w) * HP(w);
    const HP hpi = HP(4) * atan(HP(1));
    const HP x = hpi * HP(w) / sqrt(HP(2));
    const HP p0 = (HP(xi) * HP(xi) - HP(zeta) * HP(zeta)) / (2 * w2);

    const long nu_lo0 = std::lround(std::min(zeta, zeta + xi - zeta)) - 1;
    const long nu_hi0 = std::lround(std::max(zeta, xi)) + 1;

    HP sum = 0;
    // absolute threshold on the scaled sum
    const HP thresh = HP(tol) * 2 * hpi * w2 / 10;
    auto add_term = [&](long nu) {
        HP y = (HP(zeta) - HP(nu)) / (HP(w) * sqrt(HP(2)));
        if (y < 0) y = -y;
        const auto wz = detail::faddeeva<HP>(x, y, digits);
        const HP e = exp(x * x - y * y + nu * u / w2 - p0);
        const HP two_xy = 2 * x * y;
        const HP re_erfi_part = cos(two_xy) * wz.im + sin(two_xy) * wz.re;
        const HP term = e * re_erfi_part;
        sum += term;
        return static_cast<HP>(abs(term));
    };
    for (long nu = nu_lo0; nu <= nu_hi0; ++nu) add_term(nu);
    int small_run = 0;
    for (long nu = nu_hi0 + 1; small_run < 3; ++nu)
        small_run = (add_term(nu) < thresh) ? small_run + 1 : 0;
    small_run = 0;
    for (long nu = nu_lo0 - 1; small_run < 3; --nu)
        small_run = (add_term(nu) < thresh) ? small_run + 1 : 0;

    const HP value = sum / (2 * hpi * w2);
    return {static_cast<double>(value), static_cast<double>(p0)};
}

} // namespace

ScaledKernelValue kernel_Khat_scaled(double xi, double zeta, double w,
                                     double tol) {
    if (!(w > 0.0))
        throw std::invalid_argument("kernel_Khat: w must be > 0");
    if (w > 8.0)
        throw std::invalid_argument(
            "kernel_Khat: w > 8 outside the supported precision envelope "
            "(the kernel is within ~1e-3 of the sine kernel there)");
    const double x2 = pi * pi * w * w / 2.0;
    const double digits_needed = x2 * log10_e + std::log10(1.0 / tol) + 4.0;
    if (digits_needed <= 15.0) return khat_double(xi, zeta, w, tol);
    if (digits_needed <= 45.0) return khat_hp<hp50>(xi, zeta, w, tol, 50);
    if (digits_needed <= 85.0) return khat_hp<hp90>(xi, zeta, w, tol, 90);
    return khat_hp<hp160>(xi, zeta, w, tol, 160);
}

double kernel_Khat(double xi, double zeta, double w, double tol) {
    return kernel_Khat_scaled(xi, zeta, w, tol).unscaled();
}

double kernel_Kp(double xi, double zeta, double a, double p, double tol) {
    if (!(a > 0.0) || !(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("kernel_Kp: need a > 0 and 0 < p < 1");
    return kernel_Khat(xi, zeta, std::sqrt(a * p), tol);
}

double density_Rhat(double xi, double w, double tol) {
    return kernel_Khat(xi, xi, w, tol);
}

double KernelEvaluator::operator()(double x, double y) const {
    switch (family) {
    case KernelFamily::JohanssonKt:
        return kernel_Kt(x, y, s, w, truncation_tolerance);
    case KernelFamily::RescaledKw:
        return kernel_Kw(x, y, w, truncation_tolerance);
    case KernelFamily::Sine:
        return sine_kernel(x, y);
    case KernelFamily::ErfiKhat:
        return kernel_Khat(x, y, w, truncation_tolerance);
    case KernelFamily::DoubleScalingKp:
        return kernel_Kp(x, y, a, p, truncation_tolerance);
    }
    throw std::logic_error("unreachable");
}

double correlation_Rk(const std::vector<double>& points,
                      const KernelEvaluator& kernel) {
    const int k = static_cast<int>(points.size());
    if (k < 1 || k > 12)
        throw std::invalid_argument("correlation_Rk: need 1 <= k <= 12 points");
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = kernel(points[i], points[j]);
    return m.determinant();
}

DualityReport duality_report(double w, double extent, double step, double tol) {
    DualityReport rep;
    rep.w = w;

    const int n = static_cast<int>(std::lround(2.0 * extent / step)) + 1;
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = -extent + i * step;

    std::vector<double> diag_kw(n), diag_khat(n);
    for (int i = 0; i < n; ++i) {
        diag_kw[i] = kernel_Kw(grid[i], grid[i], w, tol);
        diag_khat[i] = density_Rhat(grid[i], w, tol);
        rep.max_diag_abs_diff =
            std::max(rep.max_diag_abs_diff, std::abs(diag_kw[i] - diag_khat[i]));
    }

    double fit_num = 0.0, fit_den = 0.0;
    std::vector<double> fit_y, fit_d;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double xi = grid[i], zeta = grid[j];
            const double kw_xz = kernel_Kw(xi, zeta, w, tol);
            const double kw_zx = kernel_Kw(zeta, xi, w, tol);
            const auto kh_xz = kernel_Khat_scaled(xi, zeta, w, tol);
            const auto kh_zx = kernel_Khat_scaled(zeta, xi, w, tol);

            // gauge scales cancel in the product: log_scale is antisymmetric
            const double r2_kw = diag_kw[i] * diag_kw[j] - kw_xz * kw_zx;
            const double r2_kh =
                diag_khat[i] * diag_khat[j] - kh_xz.value * kh_zx.value;
            rep.max_r2_abs_diff =
                std::max(rep.max_r2_abs_diff, std::abs(r2_kw - r2_kh));

            const double lg = kh_xz.log_scale +
                              std::log(std::max(std::abs(kh_xz.value), 1e-300));
            const double kh_plain =
                (lg > 709.0) ? std::numeric_limits<double>::infinity()
                             : kh_xz.value * std::exp(kh_xz.log_scale);
            rep.max_pointwise_abs_diff = std::max(rep.max_pointwise_abs_diff,
                                                  std::abs(kw_xz - kh_plain));

            // gauge fit on points where both kernels are comfortably nonzero
            if (std::abs(kw_xz) > 1e-6 && std::abs(kh_xz.value) > 1e-6 &&
                kw_xz * kh_xz.value > 0.0) {
                const double d = xi - zeta;
                const double y = std::log(std::abs(kw_xz)) -
                                 (std::log(std::abs(kh_xz.value)) + kh_xz.log_scale);
                fit_num += y * d;
                fit_den += d * d;
                fit_y.push_back(y);
                fit_d.push_back(d);
            }
        }
    }
    if (fit_den > 0.0) {
        rep.gauge_exponent = fit_num / fit_den;
        double ss = 0.0;
        for (std::size_t i = 0; i < fit_y.size(); ++i) {
            const double r = fit_y[i] - rep.gauge_exponent * fit_d[i];
            ss += r * r;
        }
        rep.gauge_residual = std::sqrt(ss / fit_y.size());
    }
    return rep;
}

} // namespace rmtlab
