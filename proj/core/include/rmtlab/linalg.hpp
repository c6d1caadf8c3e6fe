#pragma once

#include <Eigen/Dense>
#include <vector>

namespace rmtlab {

using ComplexMatrix = Eigen::MatrixXcd;

/// Ordered list of real eigenvalues (or Lyapunov exponents).
struct Spectrum {
    std::vector<double> values; // ascending

    int size() const { return static_cast<int>(values.size()); }
    bool strictly_increasing() const;
};

/// Relative Hermiticity defect, max |A - A^dagger| / max |A|.
double hermiticity_defect(const ComplexMatrix& a);

/// Ascending eigenvalues of a Hermitian matrix.  Throws std::invalid_argument
/// if the input is not Hermitian (defect above 1e-10), std::runtime_error on
/// solver failure.
Spectrum hermitian_eigenvalues(const ComplexMatrix& h);

} // namespace rmtlab
