#pragma once

#include <cmath>
#include <cstdlib>

namespace rmtlab::detail {

// Minimal complex type usable with both double and multiprecision reals.
template <class T>
struct Cplx {
    T re{}, im{};
    Cplx() = default;
    Cplx(T r, T i) : re(r), im(i) {}
    explicit Cplx(T r) : re(r), im(T(0)) {}
};

template <class T> Cplx<T> operator+(const Cplx<T>& a, const Cplx<T>& b) {
    return {a.re + b.re, a.im + b.im};
}
template <class T> Cplx<T> operator-(const Cplx<T>& a, const Cplx<T>& b) {
    return {a.re - b.re, a.im - b.im};
}
template <class T> Cplx<T> operator*(const Cplx<T>& a, const Cplx<T>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class T> Cplx<T> operator*(const T& s, const Cplx<T>& a) {
    return {s * a.re, s * a.im};
}
template <class T> Cplx<T> operator/(const Cplx<T>& a, const Cplx<T>& b) {
    using std::abs;
    // Smith's algorithm, stable for widely scaled components.
    if (abs(b.re) >= abs(b.im)) {
        T r = b.im / b.re;
        T d = b.re + b.im * r;
        return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    T r = b.re / b.im;
    T d = b.im + b.re * r;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

template <class T> Cplx<T> cexp(const Cplx<T>& z) {
    using std::exp; using std::cos; using std::sin;
    T m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// Faddeeva function w(z) = e^{-z^2} erfc(-iz) for Im z >= 0.
//
// Trapezoidal discretisation of (i/pi) Int e^{-t^2}/(z-t) dt with spacing h
// carries an error that is exactly a geometric series of pole residues plus
// an O(e^{-pi^2/h^2}) remainder.  Two staggered node grids are kept so the
// pole-correction denominator never vanishes near the evaluation point.
// `digits` is the target decimal accuracy (absolute, |w| <= 1 on Im z >= 0).
template <class T>
Cplx<T> faddeeva(T x, T y, int digits) {
    using std::exp; using std::sqrt; using std::log; using std::abs;
    using std::floor; using std::atan;

    if (x < T(0)) {
        // w(-conj z) = conj(w(z))
        Cplx<T> r = faddeeva(-x, y, digits);
        return {r.re, -r.im};
    }

    const T pi = T(4) * atan(T(1));
    const T L = T(digits + 2) * log(T(10));
    const T h = pi / sqrt(L);
    const T tmax = sqrt(L + T(6));
    const long nmax = static_cast<long>(std::lround(static_cast<double>(tmax / h))) + 1;

    // Pick the grid whose nodes are farther from x.
    T frac = x / h - floor(x / h);
    bool staggered = !(frac >= T(0.25) && frac <= T(0.75));
    // staggered grid nodes are at (n+1/2)h; integer grid at n*h
    T theta = staggered ? T(0.5) : T(0);

    Cplx<T> z{x, y};
    Cplx<T> sum{T(0), T(0)};
    for (long n = -nmax; n <= nmax; ++n) {
        T tn = (T(n) + theta) * h;
        if (abs(tn) > tmax) continue;
        T g = exp(-tn * tn);
        sum = sum + Cplx<T>{g, T(0)} / Cplx<T>{x - tn, y};
    }
    // S = (i h / pi) * sum
    Cplx<T> S{-h / pi * sum.im, h / pi * sum.re};

    if (y < pi / h) {
        // residue correction; exponent Re(-z^2 + 2 pi i z / h) <= 0 here
        Cplx<T> z2{x * x - y * y, T(2) * x * y};
        Cplx<T> ex = cexp(Cplx<T>{-z2.re - T(2) * pi * y / h,
                                  -z2.im + T(2) * pi * x / h}); // e^{-z^2} q
        Cplx<T> q = cexp(Cplx<T>{-T(2) * pi * y / h, T(2) * pi * x / h});
        Cplx<T> one{T(1), T(0)};
        if (!staggered) {
            S = S - T(2) * (ex / (one - q));
        } else {
            S = S + T(2) * (ex / (one + q));
        }
    }
    return S;
}

} // namespace rmtlab::detail
