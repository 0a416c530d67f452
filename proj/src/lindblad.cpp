#include "dimerlab/lindblad.hpp"

#include <cmath>
#include <numeric>

namespace dimerlab {

namespace {

void derivative(const std::vector<double>& p, double gain, double loss,
                std::vector<double>& dp) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double nd = static_cast<double>(i);
        double d = -gain * (nd + 1.0) * p[i] - loss * nd * p[i];
        if (i > 0) d += gain * nd * p[i - 1];
        if (i + 1 < n) d += loss * (nd + 1.0) * p[i + 1];
        dp[i] = d;
    }
    // the truncated top level neither gains from above nor leaks upward
    dp[n - 1] += gain * static_cast<double>(n) * p[n - 1];
}

}  // namespace

std::vector<double> birth_death_lindblad(const std::vector<double>& p, double gain,
                                         double loss, double t) {
    if (p.empty()) throw precondition_error("birth_death_lindblad: empty distribution");
    if (gain < 0.0 || loss < 0.0)
        throw precondition_error("birth_death_lindblad: negative rate");
    if (gain >= loss)
        throw divergence_error("birth_death_lindblad: gain >= loss, no steady state");
    const double sum0 = std::accumulate(p.begin(), p.end(), 0.0);
    if (std::abs(sum0 - 1.0) > 1e-9)
        throw precondition_error("birth_death_lindblad: input probabilities do not sum to 1");

    const std::size_t n = p.size();
    // classic RK4; the generator's stiffest scale is ~(gain+loss) N
    const double rate_scale = (gain + loss) * static_cast<double>(n);
    const int steps = std::max(1, static_cast<int>(std::ceil(t * rate_scale / 0.05)));
    const double dt = t / steps;

    std::vector<double> y = p, k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (int s = 0; s < steps; ++s) {
        derivative(y, gain, loss, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
        derivative(tmp, gain, loss, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
        derivative(tmp, gain, loss, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
        derivative(tmp, gain, loss, k4);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }

    const double sum1 = std::accumulate(y.begin(), y.end(), 0.0);
    if (std::abs(sum1 - 1.0) > 1e-9)
        throw accuracy_error("birth_death_lindblad: probability drift exceeds 1e-9");
    if (y[n - 1] > 1e-8)
        throw accuracy_error("birth_death_lindblad: truncation leakage at top Fock level");
    return y;
}

double mean_occupation(const std::vector<double>& p) {
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) m += static_cast<double>(i) * p[i];
    return m;
}

}  // namespace dimerlab
