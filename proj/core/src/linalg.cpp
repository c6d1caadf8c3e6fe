#include "rmtlab/linalg.hpp"

#include <stdexcept>

namespace rmtlab {

bool Spectrum::strictly_increasing() const {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i - 1] < values[i])) return false;
    return true;
}

double hermiticity_defect(const ComplexMatrix& a) {
    double scale = a.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() / scale;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
    if (hermiticity_defect(h) > 1e-10)
        throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
    Spectrum s;
    const auto& ev = solver.eigenvalues();
    s.values.assign(ev.data(), ev.data() + ev.size());
    return s;
}

} // namespace rmtlab
