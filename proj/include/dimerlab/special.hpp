#pragma once

namespace dimerlab {

// Sine integral Si(x) = int_0^x sin(u)/u du, absolute error below 1e-13.
// Odd in x; throws std::domain_error on non-finite input.
double sine_integral(double x);

}  // namespace dimerlab
