#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dimerlab/errors.hpp"
#include "dimerlab/fft.hpp"
#include "dimerlab/grid.hpp"
#include "dimerlab/lindblad.hpp"
#include "dimerlab/special.hpp"
#include "dimerlab/spectral.hpp"
#include "dimerlab/splitstep.hpp"

using namespace dimerlab;

namespace {

constexpr double kPi = std::numbers::pi;

// adaptive-free Simpson quadrature of sin(u)/u, the independent oracle for Si
double si_quadrature(double x, std::size_t n = 20001) {
    const double h = x / static_cast<double>(n - 1);
    auto f = [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; };
    double acc = f(0.0) + f(x);
    for (std::size_t i = 1; i + 1 < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(h * i);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("sine integral against quadrature oracle") {
    for (const double x : {0.1, 0.5, 1.0, 1.9, 2.0, 2.1, 3.14159, 7.0, 15.0, 40.0})
        CHECK(sine_integral(x) == doctest::Approx(si_quadrature(x)).epsilon(1e-12));
}

TEST_CASE("sine integral known values and limits") {
    CHECK(sine_integral(0.0) == 0.0);
    // Gibbs constant Si(pi)
    CHECK(sine_integral(kPi) == doctest::Approx(1.851937051982466).epsilon(1e-13));
    CHECK(sine_integral(1e4) == doctest::Approx(kPi / 2).epsilon(1e-4));
    CHECK(sine_integral(-3.0) == doctest::Approx(-sine_integral(3.0)).epsilon(1e-15));
    CHECK_THROWS_AS((void)sine_integral(std::nan("")), std::domain_error);
}

TEST_CASE("grid construction and gaussian packets") {
    const auto grid = make_grid_1d(256, 1.0, 8.0);
    CHECK(grid.size() == 256);
    CHECK(grid.dx == doctest::Approx(16.0 / 256));
    CHECK(grid.x(0) == doctest::Approx(-7.0));

    const auto psi = gaussian_packet(grid, 1.0, 0.7, 2.0);
    CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    // second moment of |psi|^2 equals sigma^2
    double var = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double d = psi.x(i) - 1.0;
        var += d * d * std::norm(psi.samples[i]) * psi.dx;
    }
    CHECK(var == doctest::Approx(0.49).epsilon(1e-10));
}

TEST_CASE("grid validation") {
    ComplexGrid1D g;
    g.samples.assign(8, 1.0);
    g.dx = 0.1;
    CHECK_THROWS_AS(g.validate(), precondition_error);  // too few samples
    g.samples.assign(32, 1.0);
    g.dx = -1.0;
    CHECK_THROWS_AS(g.validate(), precondition_error);
}

TEST_CASE("fft wavenumbers differentiate a gaussian") {
    const auto grid = make_grid_1d(512, 0.0, 10.0);
    const auto psi = gaussian_packet(grid, 0.0, 1.0, 0.0);
    auto spec = fft(psi.samples);
    const auto k = fft_wavenumbers(psi.size(), psi.dx);
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= cplx{0.0, 1.0} * k[i];
    const auto deriv = ifft(spec);
    for (std::size_t i = 100; i < 412; ++i) {
        const double x = grid.x(i);
        // d/dx exp(-x^2/4 sigma^2) = -x/(2 sigma^2) psi
        const double expect = -x / 2.0 * psi.samples[i].real();
        CHECK(deriv[i].real() == doctest::Approx(expect).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("fft round trip") {
    std::mt19937 rng(7);
    std::normal_distribution<double> gauss;
    std::vector<cplx> v(128);
    for (auto& c : v) c = {gauss(rng), gauss(rng)};
    const auto back = ifft(fft(v));
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(std::abs(back[i] - v[i]) < 1e-12);
}

TEST_CASE("split step reproduces free gaussian spreading") {
    const auto grid = make_grid_1d(512, 0.0, 20.0);
    const auto psi0 = gaussian_packet(grid, 0.0, 1.0, 0.0);
    const std::vector<double> zero(grid.size(), 0.0);
    const double t = 1.5, mass = 1.0;
    const auto psi = split_step_propagate(psi0, zero, mass, t / 300, 300);
    CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-9));
    const double sig_t = std::sqrt(1.0 + t * t / 4.0);  // sigma0 = 1, hbar = 1
    double var = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
        var += psi.x(i) * psi.x(i) * std::norm(psi.samples[i]) * psi.dx;
    CHECK(std::sqrt(var) == doctest::Approx(sig_t).epsilon(1e-6));
}

TEST_CASE("split step harmonic coherent state returns after one period") {
    const auto grid = make_grid_1d(512, 0.0, 16.0);
    const double omega = 1.0, mass = 1.0;
    // ground-width packet displaced from the origin
    const double sig = std::sqrt(0.5 / (mass * omega));
    const auto psi0 = gaussian_packet(grid, 3.0, sig, 0.0);
    std::vector<double> pot(grid.size());
    for (std::size_t i = 0; i < pot.size(); ++i)
        pot[i] = 0.5 * mass * omega * omega * grid.x(i) * grid.x(i);
    const double period = 2.0 * kPi / omega;
    const auto psi = split_step_propagate(psi0, pot, mass, period / 4000, 4000);
    double overlap = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
        overlap += std::abs(std::conj(psi0.samples[i]) * psi.samples[i]) * psi.dx;
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("split step flags momentum aliasing") {
    const auto grid = make_grid_1d(64, 0.0, 4.0);
    // k0 close to the Nyquist wavenumber pi/dx
    const double k_bad = 0.95 * kPi / grid.dx;
    const auto psi0 = gaussian_packet(grid, 0.0, 0.5, k_bad);
    const std::vector<double> zero(grid.size(), 0.0);
    CHECK_THROWS_AS((void)split_step_propagate(psi0, zero, 1.0, 1e-3, 10), accuracy_error);
}

TEST_CASE("birth death chain relaxes to the bose-einstein distribution") {
    const double nbar = 0.4;
    const double loss = 1.0, gain = loss * nbar / (nbar + 1.0);
    std::vector<double> p(40, 0.0);
    p[6] = 1.0;
    const auto out = birth_death_lindblad(p, gain, loss, 60.0);
    CHECK(mean_occupation(out) == doctest::Approx(nbar).epsilon(1e-6));
    const double ratio = out[1] / out[0];
    CHECK(ratio == doctest::Approx(nbar / (nbar + 1.0)).epsilon(1e-6));
}

TEST_CASE("birth death chain rejects gain above loss") {
    std::vector<double> p(20, 0.0);
    p[0] = 1.0;
    CHECK_THROWS_AS((void)birth_death_lindblad(p, 1.1, 1.0, 1.0), divergence_error);
}

TEST_CASE("pure decay matches the exponential law") {
    std::vector<double> p(30, 0.0);
    p[5] = 1.0;
    const auto out = birth_death_lindblad(p, 0.0, 0.7, 1.3);
    CHECK(mean_occupation(out) == doctest::Approx(5.0 * std::exp(-0.7 * 1.3)).epsilon(1e-7));
}

TEST_CASE("schmidt spectrum of a product state is trivial") {
    const auto g = make_grid_1d(64, 0.0, 6.0);
    const auto a = gaussian_packet(g, 0.3, 0.8);
    const auto b = gaussian_packet(g, -0.5, 1.1);
    ComplexGrid2D psi;
    psi.samples.resize(64, 64);
    psi.x1_0 = psi.x2_0 = g.x0;
    psi.dx1 = psi.dx2 = g.dx;
    for (Eigen::Index i = 0; i < 64; ++i)
        for (Eigen::Index j = 0; j < 64; ++j)
            psi.samples(i, j) = a.samples[static_cast<std::size_t>(i)] *
                                b.samples[static_cast<std::size_t>(j)];
    psi.normalize();
    const auto spec = schmidt_spectrum(psi);
    CHECK(spec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(vn_entropy(spec, EntropyBase::Two) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("entropy of a flat spectrum is log n") {
    ProbabilitySpectrum spec = ProbabilitySpectrum::from_values({0.25, 0.25, 0.25, 0.25});
    CHECK(vn_entropy(spec, EntropyBase::Two) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(vn_entropy(spec, EntropyBase::E) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
}

TEST_CASE("probability spectrum rejects bad sums") {
    CHECK_THROWS_AS((void)ProbabilitySpectrum::from_values({0.5, 0.4}), precondition_error);
}
