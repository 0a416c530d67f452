#pragma once

#include <vector>

#include "dimerlab/grid.hpp"

namespace dimerlab {

// Diagonal (photon-number) sector of a gain/loss master equation on a truncated
// Fock space:
//   dp_n/dt = gain [n p_{n-1} - (n+1) p_n] + loss [(n+1) p_{n+1} - n p_n].
// Requires gain < loss (below maser threshold); throws divergence_error
// otherwise. Probability is conserved to 1e-9 and the top-level occupation must
// stay below 1e-8, else accuracy_error.
std::vector<double> birth_death_lindblad(const std::vector<double>& p, double gain,
                                         double loss, double t);

double mean_occupation(const std::vector<double>& p);

}  // namespace dimerlab
