#pragma once

#include <cstddef>
#include <vector>

namespace dimerlab {

enum class Parity { u, g };
enum class MolecularSpin { singlet, triplet };

// Collective Dicke pseudospin of the singly-excited receding pair.
struct DickeLabel {
    int s;    // 0 or 1
    int s_z;  // |s_z| <= s

    void validate() const;
    bool superradiant() const { return s == 1; }
    // the +/- branch of the cooperative rates
    double sign() const { return superradiant() ? 1.0 : -1.0; }
};

// Parent-molecule parity and spin fix the Dicke state of the fragments:
// singlet u -> |1,0>, singlet g -> |0,0>; the correspondence flips for
// triplets.
DickeLabel dicke_from_symmetry(Parity parity, MolecularSpin spin);

// One dissociative optical transition. xi = k R(t) = xi_rate * t with
// R(t) = v t; delta_lambda in {0, 1} selects the Sigma* -> Sigma or
// Pi* -> Sigma rate law.
struct TransitionSpec {
    Parity parity;
    MolecularSpin spin;
    int delta_lambda;
    double gamma;    // single-atom spontaneous rate
    double xi_rate;  // d xi/dt = k v

    void validate() const;
    DickeLabel dicke() const { return dicke_from_symmetry(parity, spin); }
};

// F(xi): the bracketed cooperative integral, (3/2)[Si xi - sin xi/xi^2 +
// cos xi/xi] for delta_lambda = 0 and (3/4)[Si xi - cos xi/xi + sin xi/xi^2]
// for 1; F(xi)/xi -> 1 as xi -> 0.
double cooperative_integral(int delta_lambda, double xi);

// Time-averaged rate in units of gamma: 1 +- F(xi)/xi. Limits 2 (plus branch)
// and 0 (minus branch) at xi -> 0, and 1 at large xi.
double averaged_rate(double xi, int delta_lambda, int sign);

// Cooperative instantaneous contribution gamma(xi)/gamma = F'(xi); equals 1 at
// xi = 0 and |F'| <= 1 throughout.
double instantaneous_rate(double xi, int delta_lambda);

struct EmissionCurve {
    std::vector<double> t;
    std::vector<double> xi;
    std::vector<double> rate;        // dP/dt, units of gamma
    std::vector<double> population;  // remaining excited-state population
    std::vector<double> emitted;     // cumulative P(t)
};

// Rate and population on t_grid (ascending from 0):
// rho(t) = exp[-gamma t -+ (gamma/xi_rate) F(xi)], dP/dt = gamma(1 +- F') rho.
// xi_rate = 0 is the static Dicke limit.
EmissionCurve emission_curve(const TransitionSpec& spec, const std::vector<double>& t_grid);

// Fig.-style normalized ringing against xi, parameterized only by
// gamma/xi_rate; ratio 0 freezes the population at 1.
EmissionCurve ringing_curve(const std::vector<double>& xi_grid, int delta_lambda, int sign,
                            double gamma_over_xi_rate);

}  // namespace dimerlab
