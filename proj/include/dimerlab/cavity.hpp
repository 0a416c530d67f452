#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace dimerlab {

// Two-fragment internal state in the basis {|ee>, |eg>, |ge>, |gg>}.
struct DimerDensity4 {
    Eigen::Matrix4cd rho;

    void validate() const;  // Hermitian, unit trace, positive

    static DimerDensity4 pure(const Eigen::Vector4cd& ket);
    static DimerDensity4 bell_psi_plus();         // (|ge> + |eg>)/sqrt 2
    static DimerDensity4 phase_averaged_mixture();  // (|ge><ge| + |eg><eg|)/2
    static DimerDensity4 ground_pair();           // |gg>
    static DimerDensity4 excited_pair();          // |ee>
};

// Which w-coefficient enters the pump prefactors: the r+- = 1 + C +- w/2 form
// (consistent with the detailed-balance heating boundary) or the printed
// master-equation form 1 + C +- w.
enum class RateConvention { HalfInversion, FullInversion };

struct CavityParams {
    double g_eff;  // effective dimer-cavity coupling rate
    double eta;    // cavity leakage rate
    double nbar;   // thermal photon number of the environment
    double nu = 1.0;  // mode frequency (temperature scale)
    RateConvention convention = RateConvention::HalfInversion;

    void validate() const;
};

struct InversionCoherence {
    double w;  // 2 (rho_ee - rho_gg), in [-2, 2]
    double c;  // 2 Re rho_{eg,ge}
    bool entangled;  // |rho_23|^2 > rho_11 rho_44
};

struct RatePair {
    double excitation;    // R_e
    double deexcitation;  // R_d
};

struct CavitySteadyState {
    double n_ss;       // steady mean photon number
    double tc_over_t;  // effective / environment temperature
};

InversionCoherence inversion_coherence(const DimerDensity4& state);

// Upper bound |C| <= 1 - |w|/2 implied by positivity.
double coherence_bound(double w);

// R_e = g_eff r+/2 + eta nbar, R_d = g_eff r-/2 + eta (nbar + 1).
RatePair rate_coefficients(double w, double c, const CavityParams& p);

// Detailed balance of the photon birth-death chain: n_ss = R_e/(R_d - R_e),
// exp(-nu/T_c) = R_e/R_d; environment temperature from nbar via Bose-Einstein.
CavitySteadyState steady_state(double w, double c, const CavityParams& p);

// Strict heating criterion C > -1 - (nbar + 1/2) w; agrees with T_c > T from
// steady_state under the HalfInversion convention.
bool heating_condition(double w, double c, double nbar);

// Independent thermal contact of both atoms with a bath at occupation nbar for
// time t: generalized amplitude damping with downward rate gamma (nbar + 1)
// and upward rate gamma nbar per atom. nbar = 0 is pure amplitude damping.
DimerDensity4 transit_decay_map(const DimerDensity4& rho0, double gamma, double t,
                                double nbar = 0.0);

struct TemperatureCurve {
    std::vector<double> gamma_t;
    std::vector<double> tc_over_t;            // NaN where the maser threshold is crossed
    std::vector<std::uint8_t> below_threshold;
};

// T_c/T after thermal transit decay (bath occupation p.nbar) by each gamma t
// in the grid, for the initial state rho0; relaxes to T_c = T as gamma t grows.
TemperatureCurve temperature_curve(const DimerDensity4& rho0, const std::vector<double>& gt_grid,
                                   const CavityParams& p);

}  // namespace dimerlab
