#include "dimerlab/cavity.hpp"

#include <cmath>
#include <limits>

#include "dimerlab/errors.hpp"

namespace dimerlab {

void DimerDensity4::validate() const {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw precondition_error("DimerDensity4: not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
        throw precondition_error("DimerDensity4: trace must be 1");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw precondition_error("DimerDensity4: negative eigenvalue");
}

DimerDensity4 DimerDensity4::pure(const Eigen::Vector4cd& ket) {
    const double n2 = ket.squaredNorm();
    if (!(n2 > 0.0)) throw precondition_error("DimerDensity4: null ket");
    DimerDensity4 d;
    d.rho = ket * ket.adjoint() / n2;
    return d;
}

DimerDensity4 DimerDensity4::bell_psi_plus() {
    return pure({0.0, 1.0, 1.0, 0.0});
}

DimerDensity4 DimerDensity4::phase_averaged_mixture() {
    DimerDensity4 d;
    d.rho.setZero();
    d.rho(1, 1) = 0.5;
    d.rho(2, 2) = 0.5;
    return d;
}

DimerDensity4 DimerDensity4::ground_pair() { return pure({0.0, 0.0, 0.0, 1.0}); }

DimerDensity4 DimerDensity4::excited_pair() { return pure({1.0, 0.0, 0.0, 0.0}); }

void CavityParams::validate() const {
    if (!(g_eff >= 0.0 && eta > 0.0 && nbar >= 0.0 && nu > 0.0))
        throw precondition_error("CavityParams: need g_eff >= 0, eta > 0, nbar >= 0, nu > 0");
}

InversionCoherence inversion_coherence(const DimerDensity4& state) {
    state.validate();
    const auto& r = state.rho;
    InversionCoherence out;
    out.w = 2.0 * (r(0, 0).real() - r(3, 3).real());
    out.c = 2.0 * r(1, 2).real();
    out.entangled = std::norm(r(1, 2)) > r(0, 0).real() * r(3, 3).real();
    return out;
}

double coherence_bound(double w) {
    if (!(std::abs(w) <= 2.0)) throw precondition_error("coherence_bound: |w| must be <= 2");
    return 1.0 - 0.5 * std::abs(w);
}

RatePair rate_coefficients(double w, double c, const CavityParams& p) {
    p.validate();
    if (std::abs(c) > coherence_bound(w) + 1e-12)
        throw precondition_error("rate_coefficients: |C| exceeds 1 - |w|/2");
    const double wc = p.convention == RateConvention::HalfInversion ? 0.5 * w : w;
    const double r_plus = 1.0 + c + wc;
    const double r_minus = 1.0 + c - wc;
    return {0.5 * p.g_eff * r_plus + p.eta * p.nbar,
            0.5 * p.g_eff * r_minus + p.eta * (p.nbar + 1.0)};
}

CavitySteadyState steady_state(double w, double c, const CavityParams& p) {
    const auto rates = rate_coefficients(w, c, p);
    if (!(rates.excitation < rates.deexcitation))
        throw divergence_error("steady_state: maser threshold exceeded (R_e >= R_d)");
    if (!(p.nbar > 0.0))
        throw precondition_error("steady_state: nbar must be positive to set the temperature");
    CavitySteadyState out;
    out.n_ss = rates.excitation / (rates.deexcitation - rates.excitation);
    // nu/T = ln((nbar+1)/nbar), nu/T_c = ln(R_d/R_e)
    out.tc_over_t = std::log((p.nbar + 1.0) / p.nbar) /
                    std::log(rates.deexcitation / rates.excitation);
    return out;
}

bool heating_condition(double w, double c, double nbar) {
    if (!(std::abs(w) <= 2.0 && nbar >= 0.0))
        throw precondition_error("heating_condition: need |w| <= 2 and nbar >= 0");
    return c > -1.0 - (nbar + 0.5) * w;
}

DimerDensity4 transit_decay_map(const DimerDensity4& rho0, double gamma, double t,
                                double nbar) {
    rho0.validate();
    if (!(gamma >= 0.0 && t >= 0.0 && nbar >= 0.0))
        throw precondition_error("transit_decay_map: gamma, t, nbar must be non-negative");
    const double pd = 1.0 - std::exp(-gamma * (2.0 * nbar + 1.0) * t);
    const double q = (nbar + 1.0) / (2.0 * nbar + 1.0);  // downward branch weight

    // generalized amplitude damping, single-atom basis (|e>, |g>)
    Eigen::Matrix2cd k0, k1, k2, k3;
    k0 << std::sqrt(q) * std::sqrt(1.0 - pd), 0.0, 0.0, std::sqrt(q);
    k1 << 0.0, 0.0, std::sqrt(q) * std::sqrt(pd), 0.0;
    k2 << std::sqrt(1.0 - q), 0.0, 0.0, std::sqrt(1.0 - q) * std::sqrt(1.0 - pd);
    k3 << 0.0, std::sqrt(1.0 - q) * std::sqrt(pd), 0.0, 0.0;
    const Eigen::Matrix2cd ops[4] = {k0, k1, k2, k3};

    DimerDensity4 out;
    out.rho.setZero();
    for (const auto& ka : ops)
        for (const auto& kb : ops) {
            Eigen::Matrix4cd k = Eigen::Matrix4cd::Zero();
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int ap = 0; ap < 2; ++ap)
                        for (int bp = 0; bp < 2; ++bp)
                            k(2 * a + b, 2 * ap + bp) = ka(a, ap) * kb(b, bp);
            out.rho += k * rho0.rho * k.adjoint();
        }
    return out;
}

TemperatureCurve temperature_curve(const DimerDensity4& rho0, const std::vector<double>& gt_grid,
                                   const CavityParams& p) {
    rho0.validate();
    p.validate();
    TemperatureCurve out;
    for (const double gt : gt_grid) {
        if (!(gt >= 0.0)) throw precondition_error("temperature_curve: gamma t must be >= 0");
        const auto decayed = transit_decay_map(rho0, 1.0, gt, p.nbar);
        const auto ic = inversion_coherence(decayed);
        out.gamma_t.push_back(gt);
        try {
            out.tc_over_t.push_back(steady_state(ic.w, ic.c, p).tc_over_t);
            out.below_threshold.push_back(1);
        } catch (const divergence_error&) {
            out.tc_over_t.push_back(std::numeric_limits<double>::quiet_NaN());
            out.below_threshold.push_back(0);
        }
    }
    return out;
}

}  // namespace dimerlab
