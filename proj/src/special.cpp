#include "dimerlab/special.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace dimerlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Power series Si(x) = sum (-1)^n x^(2n+1) / ((2n+1)(2n+1)!), good for small x.
double si_series(double x) {
    const double x2 = x * x;
    double term = x;  // n = 0 value of x^(2n+1)/(2n+1)!
    double sum = x;
    for (int n = 1; n < 60; ++n) {
        term *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
        const double contrib = term / (2.0 * n + 1.0);
        sum += contrib;
        if (std::abs(contrib) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Si via the exponential integral: Si(x) = pi/2 + Im E1(ix), with E1 evaluated
// by a modified-Lentz continued fraction. Stable for x >= ~2.
double si_continued_fraction(double x) {
    using C = std::complex<double>;
    const C z(0.0, x);
    const double tiny = 1e-300;
    C b = z + 1.0;
    C c = 1.0 / tiny;
    C d = 1.0 / b;
    C h = d;
    for (int k = 1; k <= 200; ++k) {
        const double a = -static_cast<double>(k) * static_cast<double>(k);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const C del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    const C e1 = std::exp(-z) * h;
    return kPi / 2.0 + e1.imag();
}

}  // namespace

double sine_integral(double x) {
    if (!std::isfinite(x)) throw std::domain_error("sine_integral: non-finite argument");
    if (x < 0.0) return -sine_integral(-x);
    if (x < 2.0) return si_series(x);
    return si_continued_fraction(x);
}

}  // namespace dimerlab
