#include "rmtlab/additive.hpp"
#include "rmtlab/sampling.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace rmtlab {

void Trajectory::write_csv(std::ostream& os) const {
    os << "time,j,a_j\n";
    for (std::size_t i = 0; i < times.size(); ++i)
        for (int j = 0; j < spectra[i].size(); ++j)
            os << times[i] << ',' << (j + 1) << ',' << spectra[i].values[j]
               << '\n';
}

ComplexMatrix equidistant_initial(int k, double s) {
    if (k < 1) throw std::invalid_argument("equidistant_initial: k must be >= 1");
    if (!(s > 0.0)) throw std::invalid_argument("equidistant_initial: s must be > 0");
    const int n = 2 * k - 1;
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (int j = 1; j <= n; ++j) a(j - 1, j - 1) = (j - k) * s;
    return a;
}

ComplexMatrix additive_walk(const ComplexMatrix& a0, double sigma, int m,
                            RngStream& rng) {
    if (m < 0) throw std::invalid_argument("additive_walk: m must be >= 0");
    ComplexMatrix a = a0;
    const int n = static_cast<int>(a0.rows());
    for (int i = 0; i < m; ++i) a += sigma * sample_gue(n, rng);
    return a;
}

ComplexMatrix additive_shortcut(const ComplexMatrix& a0, double sigma_c,
                                double t, RngStream& rng) {
    if (t < 0.0) throw std::invalid_argument("additive_shortcut: t must be >= 0");
    if (t == 0.0) return a0;
    const int n = static_cast<int>(a0.rows());
    return a0 + sigma_c * std::sqrt(t) * sample_gue(n, rng);
}

namespace {

// One Euler-Maruyama step over `dt`, retried as two half-steps whenever the
// ordering would break.
void coulomb_step(std::vector<double>& a, double sigma_c, double dt,
                  RngStream& rng, int depth) {
    if (depth > 40)
        throw std::runtime_error(
            "coulomb_gas_walk: step size underflow near particle collision");
    const int n = static_cast<int>(a.size());
    std::vector<double> b(n);
    const double noise = sigma_c * std::sqrt(dt);
    for (int j = 0; j < n; ++j) {
        double drift = 0.0;
        for (int k = 0; k < n; ++k)
            if (k != j) drift += 1.0 / (a[j] - a[k]);
        b[j] = a[j] + dt * drift + noise * rng.next_normal();
    }
    for (int j = 1; j < n; ++j) {
        if (!(b[j - 1] < b[j])) {
            coulomb_step(a, sigma_c, dt / 2, rng, depth + 1);
            coulomb_step(a, sigma_c, dt / 2, rng, depth + 1);
            return;
        }
    }
    a = std::move(b);
}

} // namespace

Trajectory coulomb_gas_walk(const Spectrum& initial, double sigma_c,
                            double t_final, double dt, RngStream& rng,
                            int record_stride) {
    if (!(dt > 0.0)) throw std::invalid_argument("coulomb_gas_walk: dt must be > 0");
    if (record_stride < 1) record_stride = 1;
    if (!initial.strictly_increasing())
        throw std::invalid_argument(
            "coulomb_gas_walk: initial spectrum must be strictly increasing");

    Trajectory traj;
    std::vector<double> a = initial.values;
    traj.times.push_back(0.0);
    traj.spectra.push_back(initial);

    const long steps = static_cast<long>(std::llround(t_final / dt));
    for (long i = 1; i <= steps; ++i) {
        coulomb_step(a, sigma_c, dt, rng, 0);
        if (i % record_stride == 0 || i == steps) {
            traj.times.push_back(i * dt);
            traj.spectra.push_back(Spectrum{a});
        }
    }
    return traj;
}

double hypothetical_spacing(double s, double sigma_c, double t, int n) {
    return s * std::sqrt(1.0 + 12.0 * sigma_c * sigma_c * t / (s * s * n));
}

double wsr_additive(double sigma_c, double t, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("wsr_additive: s must be > 0");
    if (t < 0.0) throw std::invalid_argument("wsr_additive: t must be >= 0");
    return sigma_c * std::sqrt(t) / s;
}

} // namespace rmtlab
