#include "dimerlab/splitstep.hpp"

#include <cmath>

#include "dimerlab/fft.hpp"

namespace dimerlab {

namespace {

// Fraction of momentum-space probability in the outer 2% band next to Nyquist.
double nyquist_band_fraction(const std::vector<cplx>& psi_k) {
    const std::size_t n = psi_k.size();
    const std::size_t band = std::max<std::size_t>(2, n / 50);
    double outer = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += std::norm(psi_k[i]);
    // bins nearest the Nyquist edge sit around index n/2
    for (std::size_t i = n / 2 - band / 2; i < n / 2 + band - band / 2; ++i)
        outer += std::norm(psi_k[i]);
    return total > 0.0 ? outer / total : 0.0;
}

}  // namespace

ComplexGrid1D split_step_propagate(const ComplexGrid1D& psi,
                                   const std::vector<double>& potential,
                                   double mass, double dt, int steps) {
    psi.validate();
    if (potential.size() != psi.size())
        throw precondition_error("split_step_propagate: potential not sampled on psi's grid");
    if (!(mass > 0.0)) throw precondition_error("split_step_propagate: mass must be positive");

    const std::size_t n = psi.size();
    const auto k = fft_wavenumbers(n, psi.dx);
    const double norm_in = psi.norm_sq();

    std::vector<cplx> half_v(n), kin(n);
    for (std::size_t i = 0; i < n; ++i) {
        half_v[i] = std::exp(cplx{0.0, -0.5 * potential[i] * dt});
        kin[i] = std::exp(cplx{0.0, -0.5 * k[i] * k[i] * dt / mass});
    }

    ComplexGrid1D out = psi;
    for (int s = 0; s < steps; ++s) {
        for (std::size_t i = 0; i < n; ++i) out.samples[i] *= half_v[i];
        auto psi_k = fft(out.samples);
        for (std::size_t i = 0; i < n; ++i) psi_k[i] *= kin[i];
        out.samples = ifft(psi_k);
        for (std::size_t i = 0; i < n; ++i) out.samples[i] *= half_v[i];
    }

    const auto psi_k_final = fft(out.samples);
    if (nyquist_band_fraction(psi_k_final) > 1e-6)
        throw accuracy_error("split_step_propagate: momentum support reaches the Nyquist edge");
    if (std::abs(out.norm_sq() - norm_in) > 1e-8)
        throw accuracy_error("split_step_propagate: norm drift exceeds 1e-8");
    return out;
}

}  // namespace dimerlab
