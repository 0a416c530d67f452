#pragma once

#include <utility>
#include <vector>

#include "dimerlab/gaussian_epr.hpp"
#include "dimerlab/grid.hpp"

namespace dimerlab {

// Raman-dissociation relative-motion wavepacket parameters (hbar = 1). The
// packet-centre energy is pinned to E = k v / 2 (stationary value of k^2/2mu
// with k = mu v).
struct RamanParams {
    double omega_eff;    // effective Rabi frequency of the Raman transition
    double v;            // dissociation relative velocity
    double k;            // relative wavenumber of the packet centre
    double delta_l0 = 0.0;  // s-wave phase shift
    double delta_l2 = 0.0;  // d-wave phase shift

    void validate() const;
    double energy() const { return 0.5 * k * v; }
};

// Double-parabolic trap of Eq.-style confinement: combined-mass mode M = 2m,
// reduced-mass mode mu = m/2, common frequency omega, wells receding at
// v_recede.
struct TrapParams {
    double omega;
    double x0;
    double combined_mass;  // M = 2m
    double reduced_mass;   // mu = m/2
    double v_recede = 0.0;

    static TrapParams for_single_mass(double m, double omega, double x0, double v_recede = 0.0);
    void validate() const;
};

// Outgoing two-fragment amplitude with causal edge at r = v t: the l in {0,2}
// partial-wave sum with Legendre angular factors, spherical prefactor 1/(2ikr),
// and envelope sin(Omega (t - r/v)/2). Zero for r > v t.
cplx raman_wavepacket(double r, double theta, double t, const RamanParams& p);

// Standard deviation of the radial-momentum distribution of the l = 0
// component, from the FFT of the reduced radial function u(r) = r psi(r).
// Requires a developed envelope, t * omega_eff >= 2 pi.
double momentum_spread(const RamanParams& p, double t, std::size_t grid_n = 8192);

// Breathing of the two collective Gaussian modes in their harmonic wells for
// time t; returns the state with the evolved widths. Widths revive exactly at
// t = n pi / omega.
TwoParticleGaussian harmonic_confinement_evolve(const TwoParticleGaussian& state,
                                                const TrapParams& trap, double t);

// Squeezing parameter of the confined state at time t, from the full breathing
// covariances of both modes (positions and momenta).
double trap_squeezing(const TwoParticleGaussian& state, const TrapParams& trap, double t);

// Well centres +-(x0 + v_recede t)/2; the co-moving frame sees a static trap.
std::pair<double, double> receding_well_frame(const TrapParams& trap, double t);

}  // namespace dimerlab
