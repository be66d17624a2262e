#ifndef RSC_MEASURES_HPP
#define RSC_MEASURES_HPP

#include <cstdint>
#include <unordered_map>

#include "rsc/complex.hpp"
#include "rsc/params.hpp"

namespace rsc {

/// Natural-log probability; -inf marks zero probability.
struct LogProb {
    double value = 0.0;
};

/// Lagrange multipliers of the general independent-simplex Hamiltonian:
/// alpha coupled to simplex presence, beta to boundary presence, xi the offset.
struct MultiplierSet {
    std::unordered_map<std::uint64_t, double> alpha;
    std::unordered_map<std::uint64_t, double> beta;
    double xi = 0.0;
};

// P(C) = prod_d p_d^{f_d} (1-p_d)^{phi_d - f_d}; -inf if any vertex is absent.
LogProb log_prob_kahle(const SimplicialComplex& c, const KahleParams& params);

// P(C) = prod over simplices of p^{a} (1-p)^{b-a}, vertices included.
LogProb log_prob_general(const SimplicialComplex& c, const GeneralParams& params);

// H(C) = sum alpha a + sum beta b + xi = -log_prob_general(C).
// All probabilities must lie strictly inside (0,1).
std::pair<double, MultiplierSet> hamiltonian_general(const SimplicialComplex& c, const GeneralParams& params);

// Closed-form expected counts for the Kahle model, 1 <= d <= n-1.
double expected_f(const KahleParams& params, int d);
double expected_phi(const KahleParams& params, int d);

// Closed-form expected a/b observables for the general model:
// abar = product of p over all non-empty faces including s, bbar over proper faces.
double expected_a(const Simplex& s, const GeneralParams& params);
double expected_b(const Simplex& s, const GeneralParams& params);

}  // namespace rsc

#endif
