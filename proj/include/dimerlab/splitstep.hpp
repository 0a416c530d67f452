#pragma once

#include <vector>

#include "dimerlab/grid.hpp"

namespace dimerlab {

// Strang-split kinetic/potential propagation of i d(psi)/dt = [p^2/2m + V] psi
// (hbar = 1). The potential is sampled on psi's grid. Norm is conserved to 1e-8
// by construction; probability reaching the outer momentum band signals
// aliasing and raises accuracy_error.
ComplexGrid1D split_step_propagate(const ComplexGrid1D& psi,
                                   const std::vector<double>& potential,
                                   double mass, double dt, int steps);

}  // namespace dimerlab
