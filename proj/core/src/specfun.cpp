#include "rmtlab/specfun.hpp"
#include "rmtlab/faddeeva.hpp"

#include <cmath>
#include <stdexcept>

namespace rmtlab {

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr double two_over_sqrt_pi = 1.1283791670955125739;
constexpr double half_log_two_pi = 0.91893853320467274178;
} // namespace

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / x, r2 = r * r;
    // psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
    double series = -r2 * (1.0 / 12.0 +
                    r2 * (-1.0 / 120.0 +
                    r2 * (1.0 / 252.0 +
                    r2 * (-1.0 / 240.0 +
                    r2 * (1.0 / 132.0 +
                    r2 * (-691.0 / 32760.0 +
                    r2 * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * r + series;
}

double trigamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("trigamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double r = 1.0 / x, r2 = r * r;
    // psi'(x) ~ 1/x + 1/(2x^2) + sum B_{2n}/x^{2n+1}
    double series = r * r2 * (1.0 / 6.0 +
                    r2 * (-1.0 / 30.0 +
                    r2 * (1.0 / 42.0 +
                    r2 * (-1.0 / 30.0 +
                    r2 * (5.0 / 66.0 +
                    r2 * (-691.0 / 2730.0 +
                    r2 * (7.0 / 6.0)))))));
    return acc + r + 0.5 * r2 + series;
}

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 &&
        z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma: pole at nonpositive integer");

    std::complex<double> acc = 0.0;
    while (std::abs(z) < 12.0) {
        acc -= std::log(z);
        z += 1.0;
    }
    const std::complex<double> r = 1.0 / z, r2 = r * r;
    // Stirling with Bernoulli tail, |z| >= 12
    std::complex<double> series =
        r * (1.0 / 12.0 +
        r2 * (-1.0 / 360.0 +
        r2 * (1.0 / 1260.0 +
        r2 * (-1.0 / 1680.0 +
        r2 * (1.0 / 1188.0 +
        r2 * (-691.0 / 360360.0 +
        r2 * (1.0 / 156.0 +
        r2 * (-3617.0 / 122400.0))))))));
    return acc + (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

namespace {

std::complex<double> erfi_taylor(std::complex<double> z) {
    // erfi(z) = 2/sqrt(pi) sum z^{2k+1} / (k! (2k+1)); entire, used |z| <= 3
    const std::complex<double> z2 = z * z;
    std::complex<double> term = z;
    std::complex<double> sum = z;
    for (int k = 1; k < 200; ++k) {
        term *= z2 / static_cast<double>(k);
        const std::complex<double> add = term / static_cast<double>(2 * k + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return two_over_sqrt_pi * sum;
}

} // namespace

std::complex<double> erfi(std::complex<double> z) {
    if (z.imag() < 0.0)
        return std::conj(erfi(std::conj(z)));
    // now Im z >= 0
    const double x = z.real(), y = z.imag();
    if (std::abs(z) <= 3.0) {
        std::complex<double> r = erfi_taylor(z);
        if (y == 0.0) r = {r.real(), 0.0};
        return r;
    }
    const double re_z2 = x * x - y * y;
    if (re_z2 > 709.0)
        throw std::overflow_error("erfi: e^{Re(z^2)} exceeds double range");
    const auto w = detail::faddeeva<double>(x, y, 17);
    if (y == 0.0) {
        // erfi(x) = e^{x^2} Im w(x), exactly real
        return {std::exp(x * x) * w.im, 0.0};
    }
    // erfi(z) = i (1 - e^{z^2} w(z))
    const double m = std::exp(re_z2);
    const std::complex<double> ez2{m * std::cos(2.0 * x * y),
                                   m * std::sin(2.0 * x * y)};
    const std::complex<double> p = ez2 * std::complex<double>{w.re, w.im};
    return {p.imag(), 1.0 - p.real()};
}

namespace detail {

ScaledReErfi re_erfi_scaled(double x, double y) {
    y = std::abs(y); // Re erfi is even in Im z
    if (x * x + y * y <= 9.0) {
        const std::complex<double> v = erfi_taylor({x, y});
        const double e = x * x - y * y;
        return {v.real() * std::exp(-e), e};
    }
    const auto w = faddeeva<double>(x, y, 17);
    // e^{z^2} = e^{x^2-y^2} e^{2ixy};  Re erfi = Im(e^{z^2} w(z))
    const double c = std::cos(2.0 * x * y), s = std::sin(2.0 * x * y);
    return {c * w.im + s * w.re, x * x - y * y};
}

} // namespace detail

} // namespace rmtlab
