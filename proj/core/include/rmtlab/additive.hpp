#pragma once

#include "rmtlab/linalg.hpp"
#include "rmtlab/rng.hpp"

#include <iosfwd>
#include <vector>

namespace rmtlab {

/// Recorded eigenvalue trajectory of a Coulomb-gas walk.
struct Trajectory {
    std::vector<double> times;
    std::vector<Spectrum> spectra;

    /// CSV columns: time, j, a_j
    void write_csv(std::ostream& os) const;
};

/// Diagonal matrix with eigenvalues (j - k) s, j = 1 .. 2k-1.
ComplexMatrix equidistant_initial(int k, double s);

/// A_0 + sigma * sum of m independent GUE increments.
ComplexMatrix additive_walk(const ComplexMatrix& a0, double sigma, int m,
                            RngStream& rng);

/// Free-sum shortcut A_0 + sigma_c sqrt(t) H, one GUE draw.
ComplexMatrix additive_shortcut(const ComplexMatrix& a0, double sigma_c,
                                double t, RngStream& rng);

/// Euler-Maruyama integration of the Coulomb-gas SDE
///   da_j = sum_{k != j} dt/(a_j - a_k) + sigma_c dW_j.
/// A step that would break the strict ordering is rejected and retried as
/// two half-steps (crossings are discretization artifacts; the exact paths
/// never intersect).  Throws std::runtime_error after 40 nested halvings.
/// One spectrum is recorded every `record_stride` outer steps.
Trajectory coulomb_gas_walk(const Spectrum& initial, double sigma_c,
                            double t_final, double dt, RngStream& rng,
                            int record_stride = 1);

/// S = s sqrt(1 + 12 sigma_c^2 t / (s^2 n)); upper bound on the central
/// spacing of the evolved equidistant configuration.
double hypothetical_spacing(double s, double sigma_c, double t, int n);

/// Width-to-spacing ratio w = sigma_c sqrt(t) / s.
double wsr_additive(double sigma_c, double t, double s);

} // namespace rmtlab
