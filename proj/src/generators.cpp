#include "rsc/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rsc/binomial.hpp"
#include "rsc/detail/combi.hpp"

namespace rsc {

namespace {

using detail::candidate_simplices;
using detail::mask_in;

template <typename F>
void for_each_combination(int n, int k, F&& fn) {
    detail::for_each_combination(n, k, std::forward<F>(fn));
}

std::vector<std::uint64_t> all_vertices(int n) {
    std::vector<std::uint64_t> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = std::uint64_t{1} << i;
    return vs;
}

void check_n(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("sample: n out of [1,64]");
}

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample: probability out of [0,1]");
}

}  // namespace

SimplicialComplex sample_gnp(int n, double p, RngState rng) {
    check_n(n);
    check_p(p);
    RngState r = rng.substream(1);
    std::vector<std::vector<std::uint64_t>> by_dim(n);
    by_dim[0] = all_vertices(n);
    if (n >= 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (r.bernoulli(p)) by_dim[1].push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    }
    return SimplicialComplex::from_closed_faces(std::move(by_dim), n);
}

SimplicialComplex flag_complex(const SimplicialComplex& graph) {
    if (graph.dimension() > 1) throw std::invalid_argument("flag_complex: input dimension exceeds 1");
    int n = graph.ambient_n();
    std::vector<std::vector<std::uint64_t>> by_dim(n);
    by_dim[0] = std::vector<std::uint64_t>(graph.simplices_of_dim(0));
    if (n >= 2) by_dim[1] = std::vector<std::uint64_t>(graph.simplices_of_dim(1));
    const auto& edges = by_dim.size() > 1 ? by_dim[1] : by_dim[0];
    for (int d = 2; d < n; ++d) {
        if (by_dim[d - 1].empty()) break;
        // A clique extension: every pair inside the candidate must be an edge.
        for (std::uint64_t m : by_dim[d - 1]) {
            int top = 63 - std::countl_zero(m);
            for (int v = top + 1; v < n; ++v) {
                std::uint64_t vb = std::uint64_t{1} << v;
                bool clique = true;
                for (std::uint64_t rest = m; rest && clique; rest &= rest - 1) {
                    std::uint64_t u = rest & ~(rest - 1);
                    clique = mask_in(edges, u | vb);
                }
                if (clique) by_dim[d].push_back(m | vb);
            }
        }
        std::sort(by_dim[d].begin(), by_dim[d].end());
    }
    return SimplicialComplex::from_closed_faces(std::move(by_dim), n);
}

SimplicialComplex sample_flag(int n, double p, RngState rng) {
    return flag_complex(sample_gnp(n, p, rng));
}

SimplicialComplex sample_linial_meshulam(int n, int d, double p, RngState rng) {
    check_n(n);
    check_p(p);
    if (d < 1 || d > n - 2) throw std::invalid_argument("sample_linial_meshulam: d out of [1,n-2]");
    std::vector<std::vector<std::uint64_t>> by_dim(n);
    for (int k = 0; k <= d; ++k)
        for_each_combination(n, k + 1, [&](std::uint64_t m) { by_dim[k].push_back(m); });
    RngState r = rng.substream(static_cast<std::uint64_t>(d) + 1);
    for_each_combination(n, d + 2, [&](std::uint64_t m) {
        if (r.bernoulli(p)) by_dim[d + 1].push_back(m);
    });
    return SimplicialComplex::from_closed_faces(std::move(by_dim), n);
}

SimplicialComplex sample_kahle(const KahleParams& params, RngState rng) {
    params.validate();
    int n = params.n;
    std::vector<std::vector<std::uint64_t>> by_dim(n);
    by_dim[0] = all_vertices(n);
    for (int d = 1; d < n; ++d) {
        if (by_dim[d - 1].empty()) break;
        double pd = params.p_dim(d);
        if (pd == 0.0) break;  // no d-simplices, hence no candidates above
        auto cands = candidate_simplices(by_dim[d - 1], d, n);
        RngState r = rng.substream(static_cast<std::uint64_t>(d));
        for (std::uint64_t c : cands)
            if (r.bernoulli(pd)) by_dim[d].push_back(c);
        std::sort(by_dim[d].begin(), by_dim[d].end());
    }
    return SimplicialComplex::from_closed_faces(std::move(by_dim), n);
}

SimplicialComplex sample_general_delta(const GeneralParams& params, RngState rng) {
    params.validate();
    int n = params.n;
    std::vector<std::vector<std::uint64_t>> by_dim(n);
    {
        RngState r = rng.substream(0);
        for (int i = 0; i < n; ++i) {
            std::uint64_t v = std::uint64_t{1} << i;
            if (r.bernoulli(params.prob(v))) by_dim[0].push_back(v);
        }
    }
    for (int d = 1; d < n; ++d) {
        if (by_dim[d - 1].empty()) break;
        auto cands = candidate_simplices(by_dim[d - 1], d, n);
        RngState r = rng.substream(static_cast<std::uint64_t>(d));
        for (std::uint64_t c : cands)
            if (r.bernoulli(params.prob(c))) by_dim[d].push_back(c);
        std::sort(by_dim[d].begin(), by_dim[d].end());
    }
    return SimplicialComplex::from_closed_faces(std::move(by_dim), n);
}

}  // namespace rsc
