#include "dimerlab/dissociation.hpp"

#include <cmath>
#include <numbers>

#include "dimerlab/errors.hpp"
#include "dimerlab/fft.hpp"

namespace dimerlab {

namespace {

constexpr double kPi = std::numbers::pi;

double legendre_p(int l, double x) { return l == 0 ? 1.0 : 0.5 * (3.0 * x * x - 1.0); }

}  // namespace

void RamanParams::validate() const {
    if (!(omega_eff > 0.0 && v > 0.0 && k > 0.0))
        throw precondition_error("RamanParams: omega_eff, v, k must be positive");
}

TrapParams TrapParams::for_single_mass(double m, double omega, double x0, double v_recede) {
    return {omega, x0, 2.0 * m, 0.5 * m, v_recede};
}

void TrapParams::validate() const {
    if (!(omega > 0.0 && combined_mass > 0.0 && reduced_mass > 0.0))
        throw precondition_error("TrapParams: omega and masses must be positive");
    if (std::abs(combined_mass - 4.0 * reduced_mass) > 1e-12 * combined_mass)
        throw precondition_error("TrapParams: modes must satisfy M = 4 mu");
}

cplx raman_wavepacket(double r, double theta, double t, const RamanParams& p) {
    p.validate();
    if (!(r > 0.0)) throw precondition_error("raman_wavepacket: r must be positive");
    if (r >= p.v * t) return 0.0;  // causal edge

    const double retarded = t - r / p.v;
    const double envelope = std::sin(0.5 * p.omega_eff * retarded);
    const cplx spherical = 1.0 / (cplx{0.0, 2.0 * p.k} * r);

    cplx sum = 0.0;
    const double cos_th = std::cos(theta);
    const struct {
        int l;
        double delta;
    } waves[] = {{0, p.delta_l0}, {2, p.delta_l2}};
    for (const auto& w : waves) {
        const double ang = std::sqrt((2.0 * w.l + 1.0) / (4.0 * kPi)) * legendre_p(w.l, cos_th);
        const double phase = p.k * r - 0.5 * kPi * w.l + w.delta - p.energy() * t;
        sum += ang * std::exp(cplx{0.0, phase});
    }
    return sum * spherical * envelope;
}

double momentum_spread(const RamanParams& p, double t, std::size_t grid_n) {
    p.validate();
    if (!(t * p.omega_eff >= 2.0 * kPi))
        throw validity_error("momentum_spread: envelope undeveloped, need t*omega_eff >= 2 pi");
    if (grid_n < 256) throw precondition_error("momentum_spread: grid too small");

    // reduced radial function u(r) = r psi_0(r) on [0, 2 v t); zero-padded past
    // the edge so the FFT sees the full compact support
    const double length = 2.0 * p.v * t;
    const double dr = length / static_cast<double>(grid_n);
    const double p_edge = p.k + 0.5 * p.omega_eff / p.v;
    if (p_edge > 0.8 * kPi / dr)
        throw accuracy_error("momentum_spread: momentum content too close to the Nyquist band");

    std::vector<cplx> u(grid_n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < grid_n; ++i) {
        const double r = (static_cast<double>(i) + 0.5) * dr;
        if (r >= p.v * t) break;
        u[i] = std::exp(cplx{0.0, p.k * r}) * std::sin(0.5 * p.omega_eff * (t - r / p.v));
    }

    const auto phi = fft(u);
    const auto q = fft_wavenumbers(grid_n, dr);
    double w = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < grid_n; ++i) {
        const double prob = std::norm(phi[i]);
        w += prob;
        m1 += prob * q[i];
        m2 += prob * q[i] * q[i];
    }
    m1 /= w;
    m2 /= w;
    const double var = m2 - m1 * m1;
    if (!(var > 0.0)) throw accuracy_error("momentum_spread: degenerate spectrum");
    return std::sqrt(var);
}

namespace {

// breathing of one uncorrelated mode: x(t) = x cos wt + (p/mw) sin wt
struct ModeBreath {
    double vx, vp;
};

ModeBreath breathe(double vx, double vp, double mass, double omega, double t) {
    const double c2 = std::cos(omega * t) * std::cos(omega * t);
    const double s2 = 1.0 - c2;
    const double mw = mass * omega;
    return {vx * c2 + vp / (mw * mw) * s2, vp * c2 + mw * mw * vx * s2};
}

}  // namespace

TwoParticleGaussian harmonic_confinement_evolve(const TwoParticleGaussian& state,
                                                const TrapParams& trap, double t) {
    state.validate();
    trap.validate();
    if (state.t != 0.0)
        throw precondition_error("harmonic_confinement_evolve: state must be taken at t = 0");
    if (t < 0.0) throw precondition_error("harmonic_confinement_evolve: negative time");

    const auto cm = breathe(state.dx_cm * state.dx_cm, state.dp_total() * state.dp_total(),
                            trap.combined_mass, trap.omega, t);
    const auto rel = breathe(state.dx_rel * state.dx_rel, state.dq_rel() * state.dq_rel(),
                             trap.reduced_mass, trap.omega, t);
    return {std::sqrt(cm.vx), std::sqrt(rel.vx), 0.5 * trap.combined_mass, 0.0};
}

double trap_squeezing(const TwoParticleGaussian& state, const TrapParams& trap, double t) {
    state.validate();
    trap.validate();
    if (state.t != 0.0) throw precondition_error("trap_squeezing: state must be taken at t = 0");

    const auto cm = breathe(state.dx_cm * state.dx_cm, state.dp_total() * state.dp_total(),
                            trap.combined_mass, trap.omega, t);
    const auto rel = breathe(state.dx_rel * state.dx_rel, state.dq_rel() * state.dq_rel(),
                             trap.reduced_mass, trap.omega, t);
    const double vx_cond = cm.vx * rel.vx / (cm.vx + 0.25 * rel.vx);
    const double vp_cond = 4.0 * cm.vp * rel.vp / (cm.vp + 4.0 * rel.vp);
    return 0.5 / std::sqrt(vx_cond * vp_cond);
}

std::pair<double, double> receding_well_frame(const TrapParams& trap, double t) {
    trap.validate();
    if (t < 0.0) throw precondition_error("receding_well_frame: negative time");
    const double half = 0.5 * (trap.x0 + trap.v_recede * t);
    return {-half, half};
}

}  // namespace dimerlab
