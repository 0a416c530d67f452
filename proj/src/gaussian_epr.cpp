#include "dimerlab/gaussian_epr.hpp"

#include <cmath>

namespace dimerlab {

namespace {

// complex width parameter of a free-evolving Gaussian mode:
// phi(u,t) ~ exp(-u^2 / (4 sigma0 s_t)),  s_t = sigma0 (1 + i t/(2 m sigma0^2))
cplx mode_width_param(double sigma0, double mode_mass, double t) {
    return sigma0 * cplx{1.0, t / (2.0 * mode_mass * sigma0 * sigma0)};
}

}  // namespace

void TwoParticleGaussian::validate() const {
    if (!(dx_cm > 0.0 && dx_rel > 0.0 && mass > 0.0))
        throw precondition_error("TwoParticleGaussian: widths and mass must be positive");
    if (t < 0.0) throw precondition_error("TwoParticleGaussian: negative time");
}

double TwoParticleGaussian::dx_cm_t() const {
    const double spread = dp_total() * t / (2.0 * mass);
    return std::sqrt(dx_cm * dx_cm + spread * spread);
}

double TwoParticleGaussian::dx_rel_t() const {
    const double spread = dq_rel() * t / (0.5 * mass);
    return std::sqrt(dx_rel * dx_rel + spread * spread);
}

double TwoParticleGaussian::dp_single() const {
    // p1 = (p1+p2)/2 + (p1-p2)/2
    const double vp = dp_total() * dp_total() / 4.0 + dq_rel() * dq_rel();
    return std::sqrt(vp);
}

ConditionalWidths conditional_variances(const TwoParticleGaussian& state, double /*a*/) {
    state.validate();
    // Gaussian conditioning on the position block: Var(x1|x2) = Vc Vr/(Vc + Vr/4)
    const double vc = state.dx_cm_t() * state.dx_cm_t();
    const double vr = state.dx_rel_t() * state.dx_rel_t();
    const double vx = vc * vr / (vc + 0.25 * vr);
    // momentum block is free-evolution invariant
    const double vP = state.dp_total() * state.dp_total();
    const double vq = state.dq_rel() * state.dq_rel();
    const double vp = 4.0 * vP * vq / (vP + 4.0 * vq);
    return {std::sqrt(vx), std::sqrt(vp)};
}

double squeezing_parameter(const TwoParticleGaussian& state) {
    const auto cw = conditional_variances(state);
    return 0.5 / (cw.dx * cw.dp);
}

TwoParticleGaussian free_evolve(const TwoParticleGaussian& state, double t) {
    state.validate();
    if (t < 0.0) throw precondition_error("free_evolve: negative time");
    TwoParticleGaussian out = state;
    out.t += t;
    return out;
}

double schmidt_number(const TwoParticleGaussian& state) {
    return state.dp_single() / conditional_variances(state).dp;
}

ComplexGrid2D discretize(const TwoParticleGaussian& state, std::size_t n) {
    state.validate();
    const double a = state.dx_cm_t();
    const double b = state.dx_rel_t();
    // single-particle position spread sets the domain
    const double sig1 = std::sqrt(a * a + 0.25 * b * b);
    const double half = 7.2 * sig1;  // Gaussian tail beyond 6.5 sigma is < 1e-10
    const double dx = 2.0 * half / static_cast<double>(n);
    const double small_scale = std::min(2.0 * a, b);
    if (dx > small_scale / 3.0)
        throw accuracy_error("discretize: grid cannot resolve both Gaussian scales");

    const cplx wc = mode_width_param(state.dx_cm, 2.0 * state.mass, state.t);
    const cplx wr = mode_width_param(state.dx_rel, 0.5 * state.mass, state.t);
    const cplx qc = 0.25 / (state.dx_cm * wc);
    const cplx qr = 0.25 / (state.dx_rel * wr);

    ComplexGrid2D psi;
    psi.samples.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    psi.x1_0 = psi.x2_0 = -half;
    psi.dx1 = psi.dx2 = dx;
    for (Eigen::Index i = 0; i < psi.samples.rows(); ++i) {
        const double x1 = psi.x1(i);
        for (Eigen::Index j = 0; j < psi.samples.cols(); ++j) {
            const double x2 = psi.x2(j);
            const double xc = 0.5 * (x1 + x2);
            const double xr = x1 - x2;
            psi.samples(i, j) = std::exp(-xc * xc * qc - xr * xr * qr);
        }
    }
    psi.normalize();
    return psi;
}

GaussianEntropy entropy_gaussian(const TwoParticleGaussian& state, EntropyBase base,
                                 std::size_t grid_n) {
    const auto psi = discretize(state, grid_n);
    const auto spec = schmidt_spectrum(psi);
    const double s = squeezing_parameter(state);
    double log_s = std::log(s);
    if (base == EntropyBase::Two) log_s /= std::log(2.0);
    return {vn_entropy(spec, base), log_s};
}

double gaussian_ladder_entropy(double K, EntropyBase base) {
    if (K < 1.0) throw precondition_error("gaussian_ladder_entropy: K must be >= 1");
    const double lambda = (K - 1.0) / (K + 1.0);
    double s = 0.0;
    if (lambda > 0.0)
        s = -std::log(1.0 - lambda) - lambda / (1.0 - lambda) * std::log(lambda);
    if (base == EntropyBase::Two) s /= std::log(2.0);
    return s;
}

EprMeasures epr_measures(const TwoParticleGaussian& state, EntropyBase base) {
    return {squeezing_parameter(state), schmidt_number(state),
            entropy_gaussian(state, base).exact, base};
}

}  // namespace dimerlab
