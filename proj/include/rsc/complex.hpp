#ifndef RSC_COMPLEX_HPP
#define RSC_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "rsc/simplex.hpp"

namespace rsc {

/// Per-dimension simplex counts.
/// f[d]  = number of d-simplices in the complex, d = 0..n-1.
/// phi[d] = number of d-simplices in the filled (d-1)-skeleton, d = 1..n-1;
///          phi[0] is fixed to ambient_n for uniformity.
struct ObservableCounts {
    std::vector<long long> f;
    std::vector<long long> phi;
};

/// A labeled simplicial complex on vertex universe {0..ambient_n-1},
/// with every face stored explicitly, grouped by dimension.
/// Immutable value after construction; all operations are pure.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Builds the downward closure of the generator set. Idempotent.
    static SimplicialComplex closure(const std::vector<Simplex>& generators, int ambient_n);
    static SimplicialComplex closure_masks(const std::vector<std::uint64_t>& generators, int ambient_n);

    // Trusts `faces` to already be downward-closed (internal fast path).
    static SimplicialComplex from_closed_faces(std::vector<std::vector<std::uint64_t>> by_dim, int ambient_n);

    int ambient_n() const { return n_; }
    int dimension() const;  // -1 for the empty complex
    bool empty() const { return dimension() < 0; }

    bool contains(std::uint64_t mask) const;
    bool contains(const Simplex& s) const { return contains(s.mask); }

    // a_{i_d}: 1 iff the simplex is present.
    int a_value(const Simplex& s) const { return contains(s.mask) ? 1 : 0; }
    int a_value(std::uint64_t mask) const { return contains(mask) ? 1 : 0; }

    // b_{i_d}: 1 iff every codimension-1 face is present; 1 for singletons.
    int b_value(const Simplex& s) const { return b_value(s.mask); }
    int b_value(std::uint64_t mask) const;

    SimplicialComplex skeleton(int d) const;
    SimplicialComplex filled_skeleton(int d) const;

    ObservableCounts counts() const;
    long long f(int d) const;
    long long phi(int d) const;

    const std::vector<std::uint64_t>& simplices_of_dim(int d) const;
    std::uint64_t vertex_mask() const;
    long long total_faces() const;

    // Exhaustive downward-closure check (validator, O(faces * dim)).
    bool is_closed() const;

    bool operator==(const SimplicialComplex& o) const { return n_ == o.n_ && by_dim_ == o.by_dim_; }

    // Canonical order: lexicographic on the serialized face list
    // (faces sorted by dimension, then lexicographically).
    static bool canonical_less(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    int n_ = 0;
    // by_dim_[d]: numerically sorted masks of the d-simplices.
    std::vector<std::vector<std::uint64_t>> by_dim_;
};

}  // namespace rsc

#endif
