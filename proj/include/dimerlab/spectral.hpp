#pragma once

#include "dimerlab/grid.hpp"

namespace dimerlab {

enum class EntropyBase { Two, E };

// Squared, renormalized singular values of the amplitude matrix with the grid
// measure sqrt(dx1 dx2) folded in. Input must be normalized to 1 within norm_tol.
ProbabilitySpectrum schmidt_spectrum(const ComplexGrid2D& psi, double norm_tol = 1e-8);

// -sum eps_n log eps_n with 0 log 0 := 0.
double vn_entropy(const ProbabilitySpectrum& spec, EntropyBase base);

}  // namespace dimerlab
