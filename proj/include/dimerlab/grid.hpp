#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dimerlab/errors.hpp"

namespace dimerlab {

using cplx = std::complex<double>;

// One-dimensional sampled wavefunction. Units are dimensionless (hbar = 1);
// physical scalings live in the CLI layer.
struct ComplexGrid1D {
    std::vector<cplx> samples;
    double x0 = 0.0;  // coordinate of samples[0]
    double dx = 1.0;

    ComplexGrid1D() = default;
    ComplexGrid1D(std::vector<cplx> s, double x0_, double dx_);

    std::size_t size() const { return samples.size(); }
    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }

    double norm_sq() const;     // sum |psi_i|^2 dx
    void normalize();           // scale to norm_sq() == 1
    void validate() const;      // throws precondition_error on invariant breach
};

// Rectangular two-particle amplitude <x1,x2|psi>; row index runs over x1.
struct ComplexGrid2D {
    Eigen::MatrixXcd samples;
    double x1_0 = 0.0, x2_0 = 0.0;
    double dx1 = 1.0, dx2 = 1.0;

    double x1(Eigen::Index i) const { return x1_0 + static_cast<double>(i) * dx1; }
    double x2(Eigen::Index j) const { return x2_0 + static_cast<double>(j) * dx2; }

    double norm_sq() const;  // sum |psi_ij|^2 dx1 dx2
    void normalize();
    void validate() const;
};

// Eigenvalues of a reduced density matrix: non-negative, descending, sum 1.
struct ProbabilitySpectrum {
    std::vector<double> eigenvalues;

    // Sorts descending and verifies the invariants (sum within tol of 1).
    static ProbabilitySpectrum from_values(std::vector<double> vals, double sum_tol = 1e-9);
};

// Uniform x-grid covering [center - half_width, center + half_width) with n points.
ComplexGrid1D make_grid_1d(std::size_t n, double center, double half_width);

// Normalized Gaussian exp(-(x-x0)^2/(4 sigma^2) + i k0 x) on the given grid.
ComplexGrid1D gaussian_packet(const ComplexGrid1D& grid_template, double x_center,
                              double sigma, double k0 = 0.0);

}  // namespace dimerlab
