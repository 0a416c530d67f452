#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dimerlab/cavity.hpp"
#include "dimerlab/dissociation.hpp"
#include "dimerlab/fluorescence.hpp"
#include "dimerlab/gaussian_epr.hpp"
#include "dimerlab/lindblad.hpp"
#include "dimerlab/special.hpp"
#include "dimerlab/spectral.hpp"
#include "dimerlab/splitstep.hpp"

using namespace dimerlab;

TEST_CASE("oracle: split-step propagation reproduces closed-form breathing") {
    // independent numerical propagator vs the analytic variance rotation
    const TwoParticleGaussian st{0.3, 0.6, 1.0, 0.0};
    const auto trap = TrapParams::for_single_mass(1.0, 1.1, 4.0);
    for (const double t : {0.4, 1.1}) {
        const auto ev = harmonic_confinement_evolve(st, trap, t);
        const auto grid = make_grid_1d(1024, 0.0, 14.0);
        const auto psi0 = gaussian_packet(grid, 0.0, st.dx_cm, 0.0);
        std::vector<double> pot(grid.size());
        for (std::size_t i = 0; i < pot.size(); ++i)
            pot[i] = 0.5 * trap.combined_mass * trap.omega * trap.omega * grid.x(i) * grid.x(i);
        const auto psi = split_step_propagate(psi0, pot, trap.combined_mass, t / 1500, 1500);
        double var = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i)
            var += psi.x(i) * psi.x(i) * std::norm(psi.samples[i]) * psi.dx;
        CHECK(ev.dx_cm == doctest::Approx(std::sqrt(var)).epsilon(1e-5));
    }
}

TEST_CASE("oracle: quadrature reproduces the special-function closed forms") {
    // Simpson integration of the defining integrands
    const auto simpson = [](auto f, double a, double b, std::size_t n) {
        const double h = (b - a) / static_cast<double>(n - 1);
        double acc = f(a) + f(b);
        for (std::size_t i = 1; i + 1 < n; ++i)
            acc += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
        return acc * h / 3.0;
    };
    for (const double x : {0.3, 2.0, 11.0}) {
        const double si = simpson(
            [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; }, 0.0, x, 8001);
        CHECK(sine_integral(x) == doctest::Approx(si).epsilon(1e-12));
    }
    for (const int dl : {0, 1})
        for (const double xi : {0.7, 4.0}) {
            const double f = simpson([dl](double u) { return instantaneous_rate(u, dl); },
                                     0.0, xi, 8001);
            CHECK(cooperative_integral(dl, xi) == doctest::Approx(f).epsilon(1e-9));
        }
}

TEST_CASE("oracle: kraus decay channel agrees with master-equation integration") {
    // RK4 integration of per-atom thermal dissipators: sigma- at gamma (nbar+1),
    // sigma+ at gamma nbar, on each atom independently
    const double gamma = 0.9, t_end = 1.3;
    Eigen::Matrix2cd sm;  // sigma- in the (|e>, |g>) basis
    sm << 0.0, 0.0, 1.0, 0.0;
    Eigen::Matrix4cd l1 = Eigen::Matrix4cd::Zero(), l2 = Eigen::Matrix4cd::Zero();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int ap = 0; ap < 2; ++ap)
                for (int bp = 0; bp < 2; ++bp) {
                    l1(2 * a + b, 2 * ap + bp) = sm(a, ap) * id(b, bp);
                    l2(2 * a + b, 2 * ap + bp) = id(a, ap) * sm(b, bp);
                }

    std::mt19937 rng(31);
    std::normal_distribution<double> gauss;
    Eigen::Vector4cd ket;
    for (int i = 0; i < 4; ++i) ket(i) = cplx{gauss(rng), gauss(rng)};
    const auto rho0 = DimerDensity4::pure(ket);

    for (const double nbar : {0.0, 0.5}) {
        const auto liouville = [&](const Eigen::Matrix4cd& r) {
            Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
            for (const auto& l : {l1, l2}) {
                const Eigen::Matrix4cd lu = l.adjoint();
                const Eigen::Matrix4cd ll = lu * l;
                const Eigen::Matrix4cd uu = l * lu;
                out += gamma * (nbar + 1.0) * (l * r * lu - 0.5 * (ll * r + r * ll));
                out += gamma * nbar * (lu * r * l - 0.5 * (uu * r + r * uu));
            }
            return out;
        };

        Eigen::Matrix4cd r = rho0.rho;
        const int steps = 4000;
        const double h = t_end / steps;
        for (int s = 0; s < steps; ++s) {
            const auto k1 = liouville(r);
            const auto k2 = liouville(r + 0.5 * h * k1);
            const auto k3 = liouville(r + 0.5 * h * k2);
            const auto k4 = liouville(r + h * k3);
            r += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }

        const auto kraus = transit_decay_map(rho0, gamma, t_end, nbar);
        CHECK((kraus.rho - r).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("oracle: kernel diagonalization recovers the analytic schmidt ladder") {
    const TwoParticleGaussian st{0.55, 0.2, 1.0, 0.0};
    const auto spec = schmidt_spectrum(discretize(st, 512));
    const double a = st.dx_cm, b = st.dx_rel;
    const double ratio = std::pow((2.0 * a - b) / (2.0 * a + b), 2);
    double expect = 1.0 - ratio;  // geometric ladder head
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(spec.eigenvalues[i] == doctest::Approx(expect).epsilon(1e-6));
        expect *= ratio;
    }
}

TEST_CASE("oracle: lindblad relaxation hits the analytic thermal state") {
    const double nbar = 0.7;
    std::vector<double> p(50, 0.0);
    p[4] = 0.5;
    p[9] = 0.5;
    const auto out = birth_death_lindblad(p, nbar / (nbar + 1.0), 1.0, 80.0);
    for (std::size_t n = 0; n + 1 < 8; ++n)
        CHECK(out[n + 1] / out[n] == doctest::Approx(nbar / (nbar + 1.0)).epsilon(1e-6));
    CHECK(mean_occupation(out) == doctest::Approx(nbar).epsilon(1e-6));
}
