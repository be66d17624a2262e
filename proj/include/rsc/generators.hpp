#ifndef RSC_GENERATORS_HPP
#define RSC_GENERATORS_HPP

#include "rsc/complex.hpp"
#include "rsc/params.hpp"
#include "rsc/rng.hpp"

namespace rsc {

// Erdos-Renyi G(n,p) as a 1-dimensional complex with all n vertices.
SimplicialComplex sample_gnp(int n, double p, RngState rng);

// Deterministic clique complex of a graph (input dimension <= 1).
SimplicialComplex flag_complex(const SimplicialComplex& graph);

// X(n,p) = flag complex of G(n,p).
SimplicialComplex sample_flag(int n, double p, RngState rng);

// Y_d(n,p): complete d-skeleton plus i.i.d. (d+1)-simplices, 1 <= d <= n-2.
SimplicialComplex sample_linial_meshulam(int n, int d, double p, RngState rng);

// Kahle model: dimension-by-dimension growth with per-dimension probabilities.
SimplicialComplex sample_kahle(const KahleParams& params, RngState rng);

// General independent-simplex model, including random vertices.
SimplicialComplex sample_general_delta(const GeneralParams& params, RngState rng);

}  // namespace rsc

#endif
