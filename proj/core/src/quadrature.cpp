#include "rmtlab/quadrature.hpp"

#include <cmath>

namespace rmtlab {

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
    // seed with a few panels so narrow peaks are not missed
    const int panels = 16;
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double x0 = a + i * h, x1 = x0 + h;
        const double fa = f(x0), fb = f(x1), fm = f(0.5 * (x0 + x1));
        const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson_rec(f, x0, x1, fa, fm, fb, whole, tol / panels,
                             max_depth);
    }
    return total;
}

double gauss5(const std::function<double(double)>& f, double a, double b) {
    static const double xs[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                 0.5384693101056831, 0.9061798459386640};
    static const double ws[5] = {0.2369268850561891, 0.4786286704993665,
                                 0.5688888888888889, 0.4786286704993665,
                                 0.2369268850561891};
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += ws[i] * f(c + r * xs[i]);
    return s * r;
}

} // namespace rmtlab
