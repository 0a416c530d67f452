#include "dimerlab/superbeats.hpp"

#include <cmath>

#include "dimerlab/errors.hpp"

namespace dimerlab {

void AdiabaticModel::validate() const {
    if (!(delta > 0.0)) throw precondition_error("AdiabaticModel: delta must be positive");
    if (c3 == 0.0) throw precondition_error("AdiabaticModel: c3 must be nonzero");
    if (pi_ratio == 1.0)
        throw precondition_error("AdiabaticModel: pi_ratio = 1 has no Sigma/Pi anisotropy");
}

Eigen::Matrix2d adiabatic_matrix(double r, const AdiabaticModel& m) {
    m.validate();
    if (!(r > 0.0)) throw std::domain_error("adiabatic_matrix: R must be positive");
    Eigen::Matrix2d h;
    const double off = std::sqrt(2.0) / 3.0 * m.delta;
    h << m.v_sigma(r), off, off, m.v_pi(r) - m.delta / 3.0;
    return h;
}

EigenpairLimits eigenpair_limits(const AdiabaticModel& m) {
    m.validate();
    // |V| = |c3 (1 - ratio)| / R^3; pick R so |V|/delta hits the two limits
    const double scale = std::abs(m.c3 * (1.0 - m.pi_ratio));
    const auto r_for = [&](double v_over_delta) {
        return std::cbrt(scale / (v_over_delta * m.delta));
    };

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> small(adiabatic_matrix(r_for(1e3), m));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> large(adiabatic_matrix(r_for(1e-3), m));

    // ascending eigenvalues: column 0 is |->
    const Eigen::Vector2d basis_i{1.0, 0.0}, basis_ii{0.0, 1.0};
    const Eigen::Vector2d minus_small = small.eigenvectors().col(0);
    const double ov_i = std::abs(minus_small.dot(basis_i));
    const double ov_ii = std::abs(minus_small.dot(basis_ii));
    if (std::max(ov_i, ov_ii) < 0.999)
        throw validity_error("eigenpair_limits: small-R correlation limit not reached");

    const double inv_s3 = 1.0 / std::sqrt(3.0);
    const Eigen::Vector2d lim_minus{inv_s3, -std::sqrt(2.0) * inv_s3};
    const Eigen::Vector2d lim_plus{std::sqrt(2.0) * inv_s3, inv_s3};
    Eigen::Vector2d minus_large = large.eigenvectors().col(0);
    Eigen::Vector2d plus_large = large.eigenvectors().col(1);
    if (minus_large.dot(lim_minus) < 0.0) minus_large = -minus_large;
    if (plus_large.dot(lim_plus) < 0.0) plus_large = -plus_large;

    EigenpairLimits out;
    out.minus_asym = minus_large;
    out.plus_asym = plus_large;
    out.overlap_minus = minus_large.dot(lim_minus);
    out.overlap_plus = plus_large.dot(lim_plus);
    if (out.overlap_minus < 0.999 || out.overlap_plus < 0.999)
        throw validity_error("eigenpair_limits: large-R correlation limit not reached");
    out.small_r_minus_state = ov_i >= ov_ii ? 0 : 1;
    out.splitting_large_r = large.eigenvalues()(1) - large.eigenvalues()(0);
    return out;
}

void SuperbeatParams::validate() const {
    if (!(gamma > 0.0)) throw precondition_error("SuperbeatParams: gamma must be positive");
    if (!(eps > 0.0)) throw precondition_error("SuperbeatParams: eps must be positive");
    if (!(coherence_amplitude >= 0.0 && coherence_amplitude <= 1.0))
        throw precondition_error("SuperbeatParams: A must lie in [0, 1]");
    if (!(rho_pp >= 0.0 && rho_mm >= 0.0 && rho_pp + rho_mm <= 1.0 + 1e-12))
        throw precondition_error("SuperbeatParams: populations must be positive with sum <= 1");
    if (coherence_amplitude > 2.0 * std::sqrt(rho_pp * rho_mm) + 1e-12)
        throw precondition_error("SuperbeatParams: coherence exceeds the population bound");
    if (!g_plus || !g_minus || !g_cross)
        throw precondition_error("SuperbeatParams: G functions must be set");
}

EmissionCurve emission_rate_superbeats(const std::vector<double>& t_grid,
                                       const SuperbeatParams& p) {
    p.validate();
    if (t_grid.size() < 2) throw precondition_error("emission_rate_superbeats: grid too short");
    if (std::abs(t_grid.front() - p.t_delay) > 1e-9 * std::max(1.0, std::abs(p.t_delay)))
        throw precondition_error("emission_rate_superbeats: grid must start at t_delay");

    const std::size_t n = t_grid.size();
    EmissionCurve out;
    out.t = t_grid;
    out.xi.resize(n);
    out.rate.resize(n);
    out.population.resize(n);

    // cumulative Simpson integrals of (1+G+), (1+G-) from t_delay
    double ip = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t_grid[i];
        if (i > 0) {
            const double t0 = t_grid[i - 1];
            if (!(t > t0)) throw precondition_error("emission_rate_superbeats: grid not ascending");
            const double h = t - t0;
            const double tm = 0.5 * (t0 + t);
            ip += h / 6.0 * ((1.0 + p.g_plus(t0)) + 4.0 * (1.0 + p.g_plus(tm)) +
                             (1.0 + p.g_plus(t)));
            im += h / 6.0 * ((1.0 + p.g_minus(t0)) + 4.0 * (1.0 + p.g_minus(tm)) +
                             (1.0 + p.g_minus(t)));
        }
        const double damp_p = std::exp(-p.gamma * ip);
        const double damp_m = std::exp(-p.gamma * im);
        // verbatim cross damping exp[-gamma int (1 + G+ + G-)]
        const double damp_c = std::exp(-p.gamma * (ip + im - (t - p.t_delay)));
        const double beat = std::cos(p.eps * (t - p.t_delay) + p.phi);

        out.xi[i] = p.eps * (t - p.t_delay);
        out.population[i] = p.rho_pp * damp_p + p.rho_mm * damp_m;
        out.rate[i] = p.gamma * ((1.0 + p.g_plus(t)) * p.rho_pp * damp_p +
                                 (1.0 + p.g_minus(t)) * p.rho_mm * damp_m) +
                      p.gamma * p.coherence_amplitude * p.g_cross(t) * beat * damp_c;
    }
    return out;
}

double initial_rate(int w_parity, double coherence_amplitude, double phi) {
    if (w_parity != 1 && w_parity != -1)
        throw precondition_error("initial_rate: parity must be +-1");
    if (!(std::abs(coherence_amplitude) <= 1.0))
        throw precondition_error("initial_rate: |A| must be <= 1");
    return 1.0 + w_parity * coherence_amplitude * std::cos(phi);
}

}  // namespace dimerlab
