#pragma once

#include "dimerlab/grid.hpp"
#include "dimerlab/spectral.hpp"

namespace dimerlab {

// Bipartite Gaussian psi(x1,x2) = N exp[-(x_cm/2 dx_cm)^2] exp[-(x_rel/2 dx_rel)^2]
// with x_cm = (x1+x2)/2, x_rel = x1-x2, both collective modes at minimum
// uncertainty at t = 0, free-evolved for time t. hbar = 1 throughout.
//
// Momentum conventions: the canonically conjugate pairs are (x_cm, p1+p2) and
// (x_rel, (p1-p2)/2), each with Dx Dp = 1/2 at t = 0. The dp_cm()/dp_rel()
// accessors use the mirrored collective convention p_cm = (p1+p2)/2,
// p_rel = p1-p2, under which the conditional-width limit rules
// Dx1c -> min(2 dx_cm, dx_rel) and Dp1c -> min(2 dp_cm, dp_rel) are exact.
struct TwoParticleGaussian {
    double dx_cm;   // std dev of x_cm at t = 0
    double dx_rel;  // std dev of x_rel at t = 0
    double mass;    // single-particle mass m (cm mode carries 2m, rel mode m/2)
    double t = 0.0;

    void validate() const;

    // collective momentum spreads, constant under free evolution
    double dp_total() const { return 0.5 / dx_cm; }  // spread of p1+p2
    double dq_rel() const { return 0.5 / dx_rel; }   // spread of (p1-p2)/2
    double dp_cm() const { return 0.5 * dp_total(); }
    double dp_rel() const { return 2.0 * dq_rel(); }

    // ballistically spread mode widths at the state's time
    double dx_cm_t() const;
    double dx_rel_t() const;

    // unconditional single-particle momentum spread (from the state covariance)
    double dp_single() const;
};

struct ConditionalWidths {
    double dx;  // std dev of P(x1 | x2 = a)
    double dp;  // std dev of P(p1 | p2 = a)
};

struct EprMeasures {
    double s;  // squeezing parameter
    double K;  // Schmidt number
    double S;  // Von Neumann entropy, in `base`
    EntropyBase base;
};

struct GaussianEntropy {
    double exact;           // from the numerical Schmidt spectrum
    double log_s_estimate;  // asymptotic log(s), same base
};

// Conditional widths of the Gaussian; independent of the conditioning point a.
ConditionalWidths conditional_variances(const TwoParticleGaussian& state, double a = 0.0);

// s = 1/(2 Dx1c Dp1c); s = 1 exactly iff dx_rel = 2 dx_cm (separable), s > 1 is
// the EPR regime.
double squeezing_parameter(const TwoParticleGaussian& state);

// Ballistic spreading of both collective modes for an additional time t.
TwoParticleGaussian free_evolve(const TwoParticleGaussian& state, double t);

// K = Dp1 / Dp1c; >= 1, equality iff separable.
double schmidt_number(const TwoParticleGaussian& state);

// Evolved two-particle amplitude on an n x n grid sized to hold the state to
// probability 1e-10; raises accuracy_error if n cannot resolve both scales.
ComplexGrid2D discretize(const TwoParticleGaussian& state, std::size_t n = 1024);

// Exact entropy from the numerical Schmidt spectrum plus the log(s) estimate.
GaussianEntropy entropy_gaussian(const TwoParticleGaussian& state,
                                 EntropyBase base = EntropyBase::E,
                                 std::size_t grid_n = 1024);

// Closed-form entropy of the geometric (thermal-ladder) Schmidt spectrum with
// ratio fitted from the Schmidt number: lambda = (K-1)/(K+1).
double gaussian_ladder_entropy(double K, EntropyBase base = EntropyBase::E);

EprMeasures epr_measures(const TwoParticleGaussian& state, EntropyBase base = EntropyBase::E);

}  // namespace dimerlab
