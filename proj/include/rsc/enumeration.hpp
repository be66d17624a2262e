#ifndef RSC_ENUMERATION_HPP
#define RSC_ENUMERATION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/params.hpp"
#include "rsc/rng.hpp"

namespace rsc {

enum class SpaceKind {
    FullVertexSet,   // all complexes on exactly n vertices
    AnyVertexSubset, // any vertex subset, empty complex included
    Graphs,          // complexes of dimension <= 1 with all n vertices
    FlagOnly,        // flag complexes on n vertices
    LinialMeshulam,  // full d-skeleton, dimension <= d+1
};

/// Exhaustively enumerated sample space, canonically ordered.
struct ComplexSpace {
    SpaceKind kind;
    int n = 0;
    int d = 0;  // LinialMeshulam only
    std::vector<SimplicialComplex> members;

    // Index lookup by complex identity; -1 if absent.
    int index_of(const SimplicialComplex& c) const;

private:
    mutable std::unordered_map<std::uint64_t, int> index_;
    friend ComplexSpace enumerate_space(SpaceKind, int, int);
};

// Compact identity key for complexes with n <= 5 (bitset over all face masks).
std::uint64_t complex_key(const SimplicialComplex& c);

ComplexSpace enumerate_space(SpaceKind kind, int n, int d = 1);

/// A probability vector aligned with a space's members.
struct ExactDistribution {
    std::shared_ptr<const ComplexSpace> space;
    std::vector<double> probs;
};

// Tagged model descriptions evaluated pointwise by exact_distribution.
struct GnpModel { int n; double p; };
struct FlagModel { int n; double p; };
struct LinialMeshulamModel { int n; int d; double p; };
struct KahleModel { KahleParams params; };
struct GeneralModel { GeneralParams params; };
using Model = std::variant<GnpModel, FlagModel, LinialMeshulamModel, KahleModel, GeneralModel>;

// Log-probability of a complex under a model; -inf outside the support.
double model_log_prob(const Model& model, const SimplicialComplex& c);

// Draw one sample from a model.
SimplicialComplex model_sample(const Model& model, RngState rng);

// Evaluates the model over the space; throws if the total mass deviates
// from 1 by more than 1e-10.
ExactDistribution exact_distribution(const Model& model, std::shared_ptr<const ComplexSpace> space);

// ln Z(theta) = ln sum_C exp(-sum_i theta_i x_i(C)), log-sum-exp form.
double log_partition_function(const std::vector<double>& theta,
                              const std::vector<std::vector<double>>& observable_values);
double partition_function(const std::vector<double>& theta,
                          const std::vector<std::vector<double>>& observable_values);

double entropy(const ExactDistribution& dist);

// KL(p||q); +inf when support(p) is not contained in support(q).
double kl_divergence(const ExactDistribution& p, const ExactDistribution& q);

// Distributions Q != P* with the same observable expectations, built by
// perturbing along the null space of the constraint matrix. Returns an
// empty list when the constraints determine the distribution uniquely.
std::vector<ExactDistribution> feasible_perturbations(
    const ExactDistribution& p_star,
    const std::vector<std::vector<double>>& observable_values,
    int count, double magnitude, RngState rng);

}  // namespace rsc

#endif
