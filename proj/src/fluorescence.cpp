#include "dimerlab/fluorescence.hpp"

#include <cmath>

#include "dimerlab/errors.hpp"
#include "dimerlab/special.hpp"

namespace dimerlab {

void DickeLabel::validate() const {
    const bool ok = (s == 0 && s_z == 0) || (s == 1 && s_z >= -1 && s_z <= 1);
    if (!ok) throw precondition_error("DickeLabel: allowed labels are (0,0) and (1,-1/0/1)");
}

DickeLabel dicke_from_symmetry(Parity parity, MolecularSpin spin) {
    const bool super = (spin == MolecularSpin::singlet) == (parity == Parity::u);
    return {super ? 1 : 0, 0};
}

void TransitionSpec::validate() const {
    if (delta_lambda != 0 && delta_lambda != 1)
        throw precondition_error("TransitionSpec: delta_lambda must be 0 or 1");
    if (!(gamma > 0.0)) throw precondition_error("TransitionSpec: gamma must be positive");
    if (!(xi_rate >= 0.0)) throw precondition_error("TransitionSpec: xi_rate must be >= 0");
}

namespace {

// below this the closed forms lose the leading digits to 1/xi cancellations
constexpr double kSeriesCut = 0.5;

void check_xi(double xi) {
    if (!(xi >= 0.0) || !std::isfinite(xi))
        throw std::domain_error("fluorescence: xi must be finite and non-negative");
}

void check_dl(int delta_lambda) {
    if (delta_lambda != 0 && delta_lambda != 1)
        throw precondition_error("fluorescence: delta_lambda must be 0 or 1");
}

double f_sigma(double xi) {  // (3/2)[Si - sin/xi^2 + cos/xi]
    if (xi < kSeriesCut) {
        const double x2 = xi * xi;
        return xi * (1.0 + x2 * (-1.0 / 30.0 + x2 * (1.0 / 1400.0 - x2 / 105840.0)));
    }
    return 1.5 * (sine_integral(xi) - std::sin(xi) / (xi * xi) + std::cos(xi) / xi);
}

double f_pi(double xi) {  // (3/4)[Si - cos/xi + sin/xi^2]
    if (xi < kSeriesCut) {
        const double x2 = xi * xi;
        return xi * (1.0 + x2 * (-1.0 / 15.0 + x2 * (3.0 / 1400.0 - x2 / 26460.0)));
    }
    return 0.75 * (sine_integral(xi) - std::cos(xi) / xi + std::sin(xi) / (xi * xi));
}

double fp_sigma(double xi) {  // d/dxi f_sigma = 3 (sin - xi cos)/xi^3
    if (xi < kSeriesCut) {
        const double x2 = xi * xi;
        return 1.0 + x2 * (-1.0 / 10.0 + x2 * (1.0 / 280.0 - x2 / 15120.0));
    }
    return 3.0 * (std::sin(xi) - xi * std::cos(xi)) / (xi * xi * xi);
}

double fp_pi(double xi) {  // d/dxi f_pi = (3/2)[sin/xi + cos/xi^2 - sin/xi^3]
    if (xi < kSeriesCut) {
        const double x2 = xi * xi;
        return 1.0 + x2 * (-1.0 / 5.0 + x2 * (3.0 / 280.0 - x2 / 3780.0));
    }
    const double x2 = xi * xi;
    return 1.5 * (std::sin(xi) / xi + std::cos(xi) / x2 - std::sin(xi) / (x2 * xi));
}

int checked_sign(int sign) {
    if (sign != 1 && sign != -1) throw precondition_error("fluorescence: sign must be +-1");
    return sign;
}

}  // namespace

double cooperative_integral(int delta_lambda, double xi) {
    check_dl(delta_lambda);
    check_xi(xi);
    return delta_lambda == 0 ? f_sigma(xi) : f_pi(xi);
}

double averaged_rate(double xi, int delta_lambda, int sign) {
    check_dl(delta_lambda);
    checked_sign(sign);
    check_xi(xi);
    const double ratio = xi == 0.0 ? 1.0 : cooperative_integral(delta_lambda, xi) / xi;
    return 1.0 + sign * ratio;
}

double instantaneous_rate(double xi, int delta_lambda) {
    check_dl(delta_lambda);
    check_xi(xi);
    return delta_lambda == 0 ? fp_sigma(xi) : fp_pi(xi);
}

EmissionCurve ringing_curve(const std::vector<double>& xi_grid, int delta_lambda, int sign,
                            double gamma_over_xi_rate) {
    check_dl(delta_lambda);
    checked_sign(sign);
    if (!(gamma_over_xi_rate >= 0.0))
        throw precondition_error("ringing_curve: gamma/xi_rate must be >= 0");

    EmissionCurve out;
    double emitted = 0.0, prev_xi = 0.0, prev_rate = 0.0;
    for (std::size_t i = 0; i < xi_grid.size(); ++i) {
        const double xi = xi_grid[i];
        check_xi(xi);
        if (i > 0 && !(xi > prev_xi)) throw precondition_error("ringing_curve: grid not ascending");
        const double f = cooperative_integral(delta_lambda, xi);
        const double rho = std::exp(-gamma_over_xi_rate * (xi + sign * f));
        const double rate = (1.0 + sign * instantaneous_rate(xi, delta_lambda)) * rho;
        if (i > 0) emitted += 0.5 * (rate + prev_rate) * (xi - prev_xi) * gamma_over_xi_rate;
        out.t.push_back(xi);  // time in units of 1/xi_rate
        out.xi.push_back(xi);
        out.rate.push_back(rate);
        out.population.push_back(rho);
        out.emitted.push_back(gamma_over_xi_rate > 0.0 ? 1.0 - rho : emitted);
        prev_xi = xi;
        prev_rate = rate;
    }
    return out;
}

EmissionCurve emission_curve(const TransitionSpec& spec, const std::vector<double>& t_grid) {
    spec.validate();
    if (t_grid.empty() || t_grid.front() != 0.0)
        throw precondition_error("emission_curve: grid must start at 0");
    const double sgn = spec.dicke().sign();

    EmissionCurve out;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        if (i > 0 && !(t > t_grid[i - 1]))
            throw precondition_error("emission_curve: grid not ascending");
        const double xi = spec.xi_rate * t;
        double rho, rate;
        if (spec.xi_rate == 0.0) {
            // static Dicke limit: constant cooperative rate (1 +- 1) gamma
            rho = std::exp(-(1.0 + sgn) * spec.gamma * t);
            rate = (1.0 + sgn) * rho;
        } else {
            const double f = cooperative_integral(spec.delta_lambda, xi);
            rho = std::exp(-spec.gamma * t - sgn * spec.gamma / spec.xi_rate * f);
            rate = (1.0 + sgn * instantaneous_rate(xi, spec.delta_lambda)) * rho;
        }
        out.t.push_back(t);
        out.xi.push_back(xi);
        out.rate.push_back(rate);
        out.population.push_back(rho);
        out.emitted.push_back(1.0 - rho);
    }
    return out;
}

}  // namespace dimerlab
