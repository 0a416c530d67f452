#include "dimerlab/teleportation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dimerlab/errors.hpp"
#include "dimerlab/fft.hpp"

namespace dimerlab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::vector<double> WignerGrid::x_marginal() const {
    std::vector<double> out(static_cast<std::size_t>(values.rows()));
    for (Eigen::Index i = 0; i < values.rows(); ++i)
        out[static_cast<std::size_t>(i)] = values.row(i).sum() * dp;
    return out;
}

std::vector<double> WignerGrid::p_marginal() const {
    std::vector<double> out(static_cast<std::size_t>(values.cols()));
    for (Eigen::Index j = 0; j < values.cols(); ++j)
        out[static_cast<std::size_t>(j)] = values.col(j).sum() * dx;
    return out;
}

void WignerGrid::validate() const {
    if (!(dx > 0.0 && dp > 0.0)) throw precondition_error("WignerGrid: spacings must be positive");
    if (values.rows() < 2 || values.cols() < 2)
        throw precondition_error("WignerGrid: grid too small");
    if (std::abs(integral() - 1.0) > 1e-6)
        throw precondition_error("WignerGrid: not normalized");
}

void ErrorBudget::validate() const {
    if (!(dx_err > 0.0 && dp_err > 0.0))
        throw precondition_error("ErrorBudget: errors must be positive");
}

double ErrorBudget::sigma() const {
    validate();
    return std::exp(-2.0 * squeezing());
}

ErrorBudget ErrorBudget::from_squeezing(double s_e) {
    if (!(s_e > 0.0)) throw precondition_error("ErrorBudget: squeezing must be positive");
    const double w = std::sqrt(0.5 / s_e);
    return {w, w};
}

WignerGrid wigner_of_pure_state(const ComplexGrid1D& psi) {
    psi.validate();
    const std::size_t n = psi.samples.size();
    if (n % 2 != 0) throw precondition_error("wigner_of_pure_state: need an even grid");
    if (std::abs(psi.norm_sq() - 1.0) > 1e-6)
        throw precondition_error("wigner_of_pure_state: state not normalized");

    // momentum content beyond the Wigner Nyquist band pi/(2 dx) aliases
    {
        const auto spectrum = fft(psi.samples);
        const std::size_t band = std::max<std::size_t>(1, n / 50);
        double outer = 0.0, total = 0.0;
        for (std::size_t i = 0; i < n; ++i) total += std::norm(spectrum[i]);
        for (std::size_t i = 0; i < band; ++i) {
            outer += std::norm(spectrum[n / 2 - 1 - i]);
            outer += std::norm(spectrum[n / 2 + i]);
        }
        if (outer > 1e-6 * total)
            throw accuracy_error("wigner_of_pure_state: spectrum reaches the Nyquist band");
    }

    WignerGrid w;
    w.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    w.x0 = psi.x0;
    w.dx = psi.dx;
    w.dp = kPi / (static_cast<double>(n) * psi.dx);
    w.p0 = -0.5 * static_cast<double>(n) * w.dp;

    const double phase_n = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    const std::size_t half = n / 2;
    std::vector<cplx> corr(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long m = static_cast<long>(j) - static_cast<long>(half);
            const long ip = static_cast<long>(i) + m;
            const long im = static_cast<long>(i) - m;
            cplx c = 0.0;
            if (ip >= 0 && ip < static_cast<long>(n) && im >= 0 && im < static_cast<long>(n))
                c = psi.samples[static_cast<std::size_t>(ip)] *
                    std::conj(psi.samples[static_cast<std::size_t>(im)]);
            corr[j] = (j % 2 == 0 ? 1.0 : -1.0) * c;
        }
        const auto row = fft(corr);  // supplies sum_j corr_j e^{-2 pi i jk/n}
        for (std::size_t k = 0; k < n; ++k) {
            const double sgn = (k % 2 == 0 ? 1.0 : -1.0) * phase_n;
            w.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                psi.dx / kPi * sgn * row[k].real();
        }
    }

    // the x marginal is an exact discrete identity; failure means aliasing
    const auto marg = w.x_marginal();
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(marg[i] * psi.dx - std::norm(psi.samples[i]) * psi.dx) > 1e-6)
            throw accuracy_error("wigner_of_pure_state: position marginal corrupted (aliasing)");
    return w;
}

namespace {

std::vector<double> gauss_kernel(double sigma_q, double spacing) {
    const long m = static_cast<long>(std::ceil(6.0 * sigma_q / spacing));
    std::vector<double> k(static_cast<std::size_t>(2 * m + 1));
    double sum = 0.0;
    for (long j = -m; j <= m; ++j) {
        const double u = static_cast<double>(j) * spacing / sigma_q;
        sum += k[static_cast<std::size_t>(j + m)] = std::exp(-0.5 * u * u);
    }
    for (auto& v : k) v /= sum;
    return k;
}

// zero-padded separable convolution along both axes
Eigen::MatrixXd convolve_separable(const Eigen::MatrixXd& in, const std::vector<double>& kx,
                                   const std::vector<double>& kp) {
    const Eigen::Index rows = in.rows(), cols = in.cols();
    const long mx = (static_cast<long>(kx.size()) - 1) / 2;
    const long mp = (static_cast<long>(kp.size()) - 1) / 2;
    Eigen::MatrixXd tmp = Eigen::MatrixXd::Zero(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (long j = -mx; j <= mx; ++j) {
            const Eigen::Index src = i + j;
            if (src < 0 || src >= rows) continue;
            tmp.row(i) += kx[static_cast<std::size_t>(j + mx)] * in.row(src);
        }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows, cols);
    for (Eigen::Index i = 0; i < cols; ++i)
        for (long j = -mp; j <= mp; ++j) {
            const Eigen::Index src = i + j;
            if (src < 0 || src >= cols) continue;
            out.col(i) += kp[static_cast<std::size_t>(j + mp)] * tmp.col(src);
        }
    return out;
}

WignerGrid smooth_with_sigma(const WignerGrid& w_in, double sigma) {
    w_in.validate();
    const double coarse = std::max(w_in.dx, w_in.dp);
    const double fine = std::min(w_in.dx, w_in.dp);
    if (sigma < fine / 10.0) return w_in;  // sub-grid smoothing: identity
    if (sigma < 2.0 * coarse)
        throw accuracy_error(
            "teleport_smooth: sigma between dx/10 and 2 dx is unresolvable; refine the grid "
            "or change the error budget");

    const double sigma_q = sigma / std::sqrt(2.0);  // per-quadrature width
    WignerGrid out = w_in;
    out.values = convolve_separable(w_in.values, gauss_kernel(sigma_q, w_in.dx),
                                    gauss_kernel(sigma_q, w_in.dp));
    return out;
}

}  // namespace

WignerGrid teleport_smooth(const WignerGrid& w_in, const ErrorBudget& err) {
    return smooth_with_sigma(w_in, err.sigma());
}

double fidelity(const WignerGrid& w_a, const WignerGrid& w_b) {
    w_a.validate();
    w_b.validate();
    if (w_a.values.rows() != w_b.values.rows() || w_a.values.cols() != w_b.values.cols() ||
        std::abs(w_a.dx - w_b.dx) > 1e-9 * w_a.dx || std::abs(w_a.dp - w_b.dp) > 1e-9 * w_a.dp ||
        std::abs(w_a.x0 - w_b.x0) > 1e-9 * w_a.dx || std::abs(w_a.p0 - w_b.p0) > 1e-9 * w_a.dp)
        throw precondition_error("fidelity: phase-space grids do not coincide");
    const double f =
        2.0 * kPi * (w_a.values.array() * w_b.values.array()).sum() * w_a.dx * w_a.dp;
    return std::clamp(f, 0.0, 1.0 + 1e-6);
}

FidelityCurve fidelity_curve(const ComplexGrid1D& psi, const std::vector<double>& s_e_values) {
    const auto w_in = wigner_of_pure_state(psi);
    FidelityCurve out;
    for (const double s_e : s_e_values) {
        if (!(s_e >= 0.0)) throw precondition_error("fidelity_curve: s_E must be >= 0");
        const double sigma = std::exp(-2.0 * s_e);
        out.s_e.push_back(s_e);
        out.sigma.push_back(sigma);
        // anything the grid cannot resolve is already in the saturated regime
        const bool ideal = sigma < 2.0 * std::max(w_in.dx, w_in.dp);
        out.fidelity.push_back(
            fidelity(w_in, ideal ? w_in : smooth_with_sigma(w_in, sigma)));
    }
    return out;
}

}  // namespace dimerlab
