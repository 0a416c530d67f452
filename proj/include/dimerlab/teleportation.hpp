#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dimerlab/grid.hpp"

namespace dimerlab {

// Real Wigner quasidistribution on a uniform phase-space grid; value(i,j) at
// (x0 + i dx, p0 + j dp).
struct WignerGrid {
    Eigen::MatrixXd values;  // rows: x, cols: p
    double x0 = 0.0;
    double p0 = 0.0;
    double dx = 0.0;
    double dp = 0.0;

    double x(Eigen::Index i) const { return x0 + static_cast<double>(i) * dx; }
    double p(Eigen::Index j) const { return p0 + static_cast<double>(j) * dp; }
    double integral() const { return values.sum() * dx * dp; }
    std::vector<double> x_marginal() const;  // integral over p
    std::vector<double> p_marginal() const;  // integral over x
    void validate() const;                   // normalization within 1e-6
};

// Teleportation error budget; the channel smooths the Wigner function with a
// Gaussian of standard deviation sigma = exp(-2 s_E), s_E = 1/(2 dx_err dp_err)
// (hbar = 1, error-balanced phase-space scaling).
struct ErrorBudget {
    double dx_err;
    double dp_err;

    void validate() const;
    double squeezing() const { return 0.5 / (dx_err * dp_err); }
    double sigma() const;

    static ErrorBudget from_squeezing(double s_e);  // balanced dx_err = dp_err
};

// W(x,p) = (1/pi) int psi*(x+y) psi(x-y) e^{2ipy} dy via the per-row FFT of the
// shifted autocorrelation. The p grid has spacing pi/(n dx). Marginals are
// checked against |psi|^2 and its Fourier transform (accuracy error on
// aliasing).
WignerGrid wigner_of_pure_state(const ComplexGrid1D& psi);

// Output of the teleportation channel: W convolved with the isotropic Gaussian
// G_sigma (per-quadrature variance sigma^2/2). sigma below dx/10 is treated as
// the identity; sigma in the unresolvable gap raises an accuracy error.
WignerGrid teleport_smooth(const WignerGrid& w_in, const ErrorBudget& err);

// F = 2 pi int int W_a W_b dx dp, clamped to [0, 1 + 1e-6]; equals
// |<psi_a|psi_b>|^2 for pure inputs. Grids must coincide.
double fidelity(const WignerGrid& w_a, const WignerGrid& w_b);

struct FidelityCurve {
    std::vector<double> s_e;
    std::vector<double> sigma;
    std::vector<double> fidelity;
};

// Teleportation fidelity of psi against itself for each error squeezing in
// s_e_values; sub-grid sigma is treated as ideal so the curve saturates at 1.
FidelityCurve fidelity_curve(const ComplexGrid1D& psi, const std::vector<double>& s_e_values);

}  // namespace dimerlab
