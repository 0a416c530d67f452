#include "dimerlab/collision.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/SVD>

#include "dimerlab/spectral.hpp"

namespace dimerlab {

namespace {

using Mat2 = Eigen::Matrix2cd;

// Transfer matrix of one delta spike at x0 acting on (right-mover, left-mover)
// plane-wave coefficients; jump condition psi'(x0+) - psi'(x0-) = c psi(x0).
Mat2 delta_transfer(double k, double c, double x0) {
    const cplx u = c / cplx{0.0, 2.0 * k};
    Mat2 m;
    m(0, 0) = 1.0 + u;
    m(0, 1) = u * std::exp(cplx{0.0, -2.0 * k * x0});
    m(1, 0) = -u * std::exp(cplx{0.0, 2.0 * k * x0});
    m(1, 1) = 1.0 - u;
    return m;
}

double transmission_prob(double k, const DoubleDeltaPotential& pot) {
    return scattering_amplitudes(k, pot).transmission();
}

double entropy_bits(const std::vector<double>& p) {
    double s = 0.0;
    for (double v : p)
        if (v > 0.0) s -= v * std::log2(v);
    return s;
}

// Singular values of the two-particle momentum amplitude restricted to one
// branch: chi(p1+p2) * amp((p1-p2)/2) on local grids around (p1c, p2c).
Eigen::VectorXd branch_singular_values(double p1c, double p2c, double half, std::size_t n,
                                       double sigma_cm,
                                       const std::function<cplx(double)>& rel_amp) {
    const double dp = 2.0 * half / static_cast<double>(n);
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p1 = p1c - half + (static_cast<double>(i) + 0.5) * dp;
        for (std::size_t j = 0; j < n; ++j) {
            const double p2 = p2c - half + (static_cast<double>(j) + 0.5) * dp;
            const double ptot = p1 + p2;
            const double q = 0.5 * (p1 - p2);
            const double cm_arg = ptot / (2.0 * sigma_cm);
            m(i, j) = std::exp(-cm_arg * cm_arg) * rel_amp(q);
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues() * dp;
}

}  // namespace

void DoubleDeltaPotential::validate() const {
    if (!(a > 0.0)) throw precondition_error("DoubleDeltaPotential: a must be positive");
    if (!std::isfinite(strength))
        throw precondition_error("DoubleDeltaPotential: non-finite strength");
}

void ChannelSuperposition::validate() const {
    if (amplitudes.size() != momenta.size() || amplitudes.empty())
        throw precondition_error("ChannelSuperposition: size mismatch");
    double norm = 0.0;
    for (const auto& b : amplitudes) norm += std::norm(b);
    if (std::abs(norm - 1.0) > 1e-10)
        throw precondition_error("ChannelSuperposition: amplitudes not normalized");
    for (std::size_t i = 0; i < momenta.size(); ++i) {
        if (!(momenta[i] > 0.0))
            throw precondition_error("ChannelSuperposition: momenta must be positive");
        if (i > 0 && !(momenta[i] > momenta[i - 1]))
            throw precondition_error("ChannelSuperposition: momenta must be increasing");
    }
}

ScatteringAmplitudes scattering_amplitudes(double k, const DoubleDeltaPotential& pot) {
    pot.validate();
    if (!(k > 0.0)) throw std::domain_error("scattering_amplitudes: k must be positive");
    const Mat2 m = delta_transfer(k, pot.strength, pot.a) *
                   delta_transfer(k, pot.strength, -pot.a);
    // (1, r) on the left maps to (T, 0) on the right
    const cplx r = -m(1, 0) / m(1, 1);
    const cplx t = m(0, 0) + m(0, 1) * r;
    ScatteringAmplitudes out{t, r, k};
    if (std::abs(out.transmission() + out.reflection() - 1.0) > 1e-10)
        throw accuracy_error("scattering_amplitudes: unitarity loss");
    return out;
}

DeltaS1 delta_s1_discrete(const ChannelSuperposition& channels,
                          const Eigen::MatrixXcd& s_matrix) {
    channels.validate();
    const auto dim = s_matrix.rows();
    if (s_matrix.cols() != dim || dim < static_cast<Eigen::Index>(channels.amplitudes.size()))
        throw precondition_error("delta_s1_discrete: S must be square and hold all channels");
    if (!(s_matrix * s_matrix.adjoint()).isIdentity(1e-8))
        throw precondition_error("delta_s1_discrete: S is not unitary");

    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dim);
    for (std::size_t i = 0; i < channels.amplitudes.size(); ++i)
        b[static_cast<Eigen::Index>(i)] = channels.amplitudes[i];

    const Eigen::VectorXcd out = s_matrix * b;
    std::vector<double> p_final(static_cast<std::size_t>(dim)), p_init;
    for (Eigen::Index f = 0; f < dim; ++f)
        p_final[static_cast<std::size_t>(f)] = std::norm(out[f]);
    for (const auto& bi : channels.amplitudes) p_init.push_back(std::norm(bi));

    const double classical = -entropy_bits(p_init);  // sum |b|^2 log2 |b|^2
    return {entropy_bits(p_final) + classical, classical};
}

std::pair<double, double> second_order_eigenvalues(double k0, double dk,
                                                   const DoubleDeltaPotential& pot) {
    if (!(k0 > 0.0)) throw std::domain_error("second_order_eigenvalues: k0 must be positive");
    if (dk < 0.0) throw precondition_error("second_order_eigenvalues: negative dk");

    // Richardson-extrapolated central second difference with automatic step
    // refinement; stops when two successive extrapolations agree.
    const double t0 = transmission_prob(k0, pot);
    auto second_diff = [&](double h) {
        return (transmission_prob(k0 + h, pot) - 2.0 * t0 + transmission_prob(k0 - h, pot)) /
               (h * h);
    };
    double h = std::min(1e-2 * k0, 0.45 * k0);
    double prev = (4.0 * second_diff(h / 2.0) - second_diff(h)) / 3.0;
    double curv = prev;
    for (int it = 0; it < 8; ++it) {
        h *= 0.5;
        curv = (4.0 * second_diff(h / 2.0) - second_diff(h)) / 3.0;
        if (std::abs(curv - prev) < 1e-8 * std::max(1.0, std::abs(curv))) break;
        prev = curv;
    }

    const double eps_t = t0 + 0.25 * dk * dk * curv;
    const double eps_r = 1.0 - eps_t;
    if (eps_t < -1e-12 || eps_t > 1.0 + 1e-12)
        throw validity_error("second_order_eigenvalues: expansion left [0,1]");
    return {std::clamp(eps_t, 0.0, 1.0), std::clamp(eps_r, 0.0, 1.0)};
}

double delta_s1_second(double k0, double dk, const DoubleDeltaPotential& pot) {
    const auto [et, er] = second_order_eigenvalues(k0, dk, pot);
    return entropy_bits({et, er});
}

std::vector<ResonanceInfo> find_resonances(const DoubleDeltaPotential& pot, double k_min,
                                           double k_max) {
    pot.validate();
    if (!(k_min > 0.0 && k_max > k_min))
        throw precondition_error("find_resonances: bad window");

    const std::size_t n = 4096;
    const double dk = (k_max - k_min) / static_cast<double>(n);
    std::vector<double> t2(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        t2[i] = transmission_prob(k_min + dk * static_cast<double>(i), pot);

    std::vector<ResonanceInfo> out;
    for (std::size_t i = 1; i < n; ++i) {
        if (!(t2[i] > t2[i - 1] && t2[i] > t2[i + 1])) continue;
        // golden-section refinement of the maximum
        double lo = k_min + dk * static_cast<double>(i - 1);
        double hi = k_min + dk * static_cast<double>(i + 1);
        const double gr = 0.6180339887498949;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = transmission_prob(x1, pot), f2 = transmission_prob(x2, pot);
        while (hi - lo > 1e-12 * std::max(1.0, hi)) {
            if (f1 < f2) {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + gr * (hi - lo); f2 = transmission_prob(x2, pot);
            } else {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - gr * (hi - lo); f1 = transmission_prob(x1, pot);
            }
        }
        const double k_res = 0.5 * (lo + hi);
        if (transmission_prob(k_res, pot) < 1.0 - 1e-8) continue;  // shoulder, not a resonance

        // full width at half prominence: walk each flank to its local minimum,
        // then bisect the crossing of the level midway between peak and minimum
        auto walk_flank = [&](double dir) {
            double v_min = 1.0, k_min_pos = k_res;
            const double limit = k_res + dir * ((k_max - k_min) + k_max);
            for (double x = k_res + dir * dk;
                 x > 1e-12 && (dir < 0.0 ? x > limit : x < limit); x += dir * dk) {
                const double v = transmission_prob(x, pot);
                if (v < v_min) {
                    v_min = v;
                    k_min_pos = x;
                }
                // the flank ends where the curve turns back up by a clear margin
                if (v_min < 1.0 - 1e-6 && v > v_min + 0.25 * (1.0 - v_min)) break;
            }
            if (!(v_min < 1.0 - 1e-6))
                throw validity_error("find_resonances: flat flank, width undefined");
            const double level = 0.5 * (1.0 + v_min);
            double above = k_res, below = k_min_pos;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (above + below);
                if (transmission_prob(mid, pot) > level) above = mid; else below = mid;
                if (std::abs(below - above) < 1e-13 * std::max(1.0, std::abs(below))) break;
            }
            return 0.5 * (above + below);
        };
        const double kl = walk_flank(-1.0);
        const double kr = walk_flank(+1.0);
        out.push_back({k_res, kr - kl});
    }
    return out;
}

double wavepacket_entropy_point(double k0, double sigma, const DoubleDeltaPotential& pot,
                                std::size_t grid_n) {
    pot.validate();
    if (!(sigma > 0.0)) throw precondition_error("wavepacket_entropy_point: sigma must be positive");
    if (k0 < 6.0 * sigma)
        throw precondition_error(
            "wavepacket_entropy_point: k0 < 6 sigma, branch sectors overlap");

    const double sigma_cm = sigma;
    const double half = 6.0 * sigma;

    auto phi = [&](double q) {
        const double arg = (q - k0) / (2.0 * sigma);
        return std::exp(-arg * arg);
    };
    auto amp_t = [&](double q) -> cplx {
        if (q <= 0.0) return 0.0;
        return scattering_amplitudes(q, pot).T * phi(q);
    };
    auto amp_r = [&](double q) -> cplx {
        if (q >= 0.0) return 0.0;
        return scattering_amplitudes(-q, pot).R * phi(-q);
    };
    auto amp_in = [&](double q) -> cplx { return cplx{phi(q), 0.0}; };

    // transmitted and reflected branches occupy disjoint momentum sectors, so
    // the Schmidt spectrum is the union of the per-branch singular values
    const auto sv_t = branch_singular_values(k0, -k0, half, grid_n, sigma_cm, amp_t);
    const auto sv_r = branch_singular_values(-k0, k0, half, grid_n, sigma_cm, amp_r);
    const auto sv_in = branch_singular_values(k0, -k0, half, grid_n, sigma_cm, amp_in);

    std::vector<double> eps_out, eps_in;
    double norm_out = 0.0, norm_in = 0.0;
    for (Eigen::Index i = 0; i < sv_t.size(); ++i) {
        eps_out.push_back(sv_t[i] * sv_t[i]);
        eps_out.push_back(sv_r[i] * sv_r[i]);
        eps_in.push_back(sv_in[i] * sv_in[i]);
        norm_out += eps_out[2 * static_cast<std::size_t>(i)] +
                    eps_out[2 * static_cast<std::size_t>(i) + 1];
        norm_in += sv_in[i] * sv_in[i];
    }
    for (double& e : eps_out) e /= norm_out;
    for (double& e : eps_in) e /= norm_in;
    return entropy_bits(eps_out) - entropy_bits(eps_in);
}

EntropyScan wavepacket_entropy_scan(double k_min, double k_max, std::size_t n_points,
                                    double sigma, const DoubleDeltaPotential& pot,
                                    Execution exec, std::size_t grid_n) {
    if (!(k_max > k_min) || n_points < 2)
        throw precondition_error("wavepacket_entropy_scan: bad scan window");

    EntropyScan scan;
    scan.k.resize(n_points);
    scan.delta_s1.resize(n_points);
    const double dk = (k_max - k_min) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) scan.k[i] = k_min + dk * static_cast<double>(i);

    parallel_for(n_points, exec, [&](std::size_t i) {
        scan.delta_s1[i] = wavepacket_entropy_point(scan.k[i], sigma, pot, grid_n);
    });

    if (pot.strength != 0.0) {
        scan.resonances = find_resonances(pot, k_min, k_max);
        for (const auto& res : scan.resonances)
            scan.log2_sigma_over_gamma.push_back(std::log2(sigma / res.gamma));
    }
    return scan;
}

}  // namespace dimerlab
