#include "dimerlab/spectral.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace dimerlab {

ProbabilitySpectrum schmidt_spectrum(const ComplexGrid2D& psi, double norm_tol) {
    psi.validate();
    const double n = psi.norm_sq();
    if (std::abs(n - 1.0) > norm_tol)
        throw precondition_error("schmidt_spectrum: state not normalized");

    // Singular values of psi_ij * sqrt(dx1 dx2) are the Schmidt coefficients.
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(psi.samples);
    Eigen::VectorXd sv = svd.singularValues() * std::sqrt(psi.dx1 * psi.dx2);

    std::vector<double> eps(sv.size());
    double sum = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        eps[static_cast<std::size_t>(i)] = sv[i] * sv[i];
        sum += eps[static_cast<std::size_t>(i)];
    }
    for (double& e : eps) e /= sum;  // absorb the residual discretization error
    return ProbabilitySpectrum::from_values(std::move(eps));
}

double vn_entropy(const ProbabilitySpectrum& spec, EntropyBase base) {
    double s = 0.0;
    for (double e : spec.eigenvalues)
        if (e > 0.0) s -= e * std::log(e);
    if (base == EntropyBase::Two) s /= std::log(2.0);
    return s;
}

}  // namespace dimerlab
