#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "dimerlab/fluorescence.hpp"

namespace dimerlab {

// Adiabatic 2x2 model of the dissociating alkali dimer in the {|I>, |II>}
// basis: resonant dipole-dipole diagonal V_Sigma = C3/R^3, V_Pi = ratio *
// V_Sigma, fine-structure coupling delta off-diagonal.
struct AdiabaticModel {
    double c3;     // dipole-dipole coefficient
    double delta;  // fine-structure splitting, > 0
    Parity parity = Parity::u;
    double pi_ratio = -0.5;  // V_Pi / V_Sigma

    void validate() const;
    double v_sigma(double r) const { return c3 / (r * r * r); }
    double v_pi(double r) const { return pi_ratio * v_sigma(r); }
};

// H_w(Omega = 0+): diagonal (V_Sigma, V_Pi - delta/3), off-diagonal sqrt(2) delta/3.
Eigen::Matrix2d adiabatic_matrix(double r, const AdiabaticModel& m);

struct EigenpairLimits {
    Eigen::Vector2d minus_asym;  // large-R |->, limit (1, -sqrt 2)/sqrt 3
    Eigen::Vector2d plus_asym;   // large-R |+>, limit (sqrt 2, 1)/sqrt 3
    double overlap_minus;        // with the printed limit vectors
    double overlap_plus;
    int small_r_minus_state;     // 0: |-> correlates to |I>, 1: to |II>
    double splitting_large_r;    // eigenvalue gap at large R, -> delta
};

// Diagonalizes at |V|/delta = 1e3 and delta/|V| = 1e3 and checks both
// correlation limits (overlap >= 0.999, else validity error).
EigenpairLimits eigenpair_limits(const AdiabaticModel& m);

// Inputs of the beat-modulated emission rate; the cooperative rate functions
// G+-, G_c are caller-supplied bounded curves of t (constants by default).
struct SuperbeatParams {
    double coherence_amplitude;  // A(t_D), in [0, 1]
    double phi;                  // coherence phase
    double t_delay;              // exit time of the coupling region
    double gamma;                // atomic decay rate
    double eps;                  // beat energy, ~ delta
    double rho_pp;               // |+> population at t_delay
    double rho_mm;               // |-> population at t_delay
    std::function<double(double)> g_plus = [](double) { return 0.0; };
    std::function<double(double)> g_minus = [](double) { return 0.0; };
    std::function<double(double)> g_cross = [](double) { return 1.0; };

    void validate() const;
};

// Emission rate on t_grid (ascending, first point t_delay): two damped
// population terms gamma (1+G+-) rho+-+- plus the coherence cross term
// oscillating at eps. Curve fields: t, xi = eps (t - t_delay), rate,
// population = rho_pp + rho_mm remaining.
EmissionCurve emission_rate_superbeats(const std::vector<double>& t_grid,
                                       const SuperbeatParams& p);

// Onset value dP/dt / gamma ~= 1 + w A cos(phi); w = +1 (u) or -1 (g).
double initial_rate(int w_parity, double coherence_amplitude, double phi);

}  // namespace dimerlab
