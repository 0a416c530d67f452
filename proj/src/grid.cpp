#include "dimerlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dimerlab {

ComplexGrid1D::ComplexGrid1D(std::vector<cplx> s, double x0_, double dx_)
    : samples(std::move(s)), x0(x0_), dx(dx_) {
    validate();
}

double ComplexGrid1D::norm_sq() const {
    double acc = 0.0;
    for (const auto& c : samples) acc += std::norm(c);
    return acc * dx;
}

void ComplexGrid1D::normalize() {
    const double n = norm_sq();
    if (!(n > 0.0) || !std::isfinite(n))
        throw precondition_error("ComplexGrid1D: cannot normalize zero or non-finite state");
    const double scale = 1.0 / std::sqrt(n);
    for (auto& c : samples) c *= scale;
}

void ComplexGrid1D::validate() const {
    if (!(dx > 0.0)) throw precondition_error("ComplexGrid1D: dx must be positive");
    if (samples.size() < 16) throw precondition_error("ComplexGrid1D: need at least 16 samples");
    if (!std::isfinite(norm_sq())) throw precondition_error("ComplexGrid1D: non-finite norm");
}

double ComplexGrid2D::norm_sq() const {
    return samples.squaredNorm() * dx1 * dx2;
}

void ComplexGrid2D::normalize() {
    const double n = norm_sq();
    if (!(n > 0.0) || !std::isfinite(n))
        throw precondition_error("ComplexGrid2D: cannot normalize zero or non-finite state");
    samples *= 1.0 / std::sqrt(n);
}

void ComplexGrid2D::validate() const {
    if (!(dx1 > 0.0 && dx2 > 0.0)) throw precondition_error("ComplexGrid2D: spacings must be positive");
    if (samples.rows() < 2 || samples.cols() < 2)
        throw precondition_error("ComplexGrid2D: degenerate grid");
    if (!std::isfinite(norm_sq())) throw precondition_error("ComplexGrid2D: non-finite norm");
}

ProbabilitySpectrum ProbabilitySpectrum::from_values(std::vector<double> vals, double sum_tol) {
    for (double v : vals)
        if (v < -1e-12 || !std::isfinite(v))
            throw precondition_error("ProbabilitySpectrum: negative or non-finite eigenvalue");
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    const double sum = std::accumulate(vals.begin(), vals.end(), 0.0);
    if (std::abs(sum - 1.0) > sum_tol)
        throw precondition_error("ProbabilitySpectrum: eigenvalues do not sum to 1");
    for (double& v : vals) v = std::max(v, 0.0);
    return ProbabilitySpectrum{std::move(vals)};
}

ComplexGrid1D make_grid_1d(std::size_t n, double center, double half_width) {
    ComplexGrid1D g;
    g.dx = 2.0 * half_width / static_cast<double>(n);
    g.x0 = center - half_width;
    g.samples.assign(n, cplx{0.0, 0.0});
    return g;
}

ComplexGrid1D gaussian_packet(const ComplexGrid1D& grid_template, double x_center,
                              double sigma, double k0) {
    ComplexGrid1D g = grid_template;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.x(i);
        const double arg = (x - x_center) / (2.0 * sigma);
        g.samples[i] = std::exp(cplx{-arg * arg, k0 * x});
    }
    g.normalize();
    return g;
}

}  // namespace dimerlab
