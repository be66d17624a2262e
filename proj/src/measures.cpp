#include "rsc/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "rsc/binomial.hpp"
#include "rsc/logsumexp.hpp"

namespace rsc {

LogProb log_prob_kahle(const SimplicialComplex& c, const KahleParams& params) {
    params.validate();
    if (c.ambient_n() != params.n)
        throw std::invalid_argument("log_prob_kahle: ambient size mismatch");
    if (c.f(0) != params.n) return LogProb{neg_inf};
    double lp = 0.0;
    for (int d = 1; d <= params.n - 1; ++d) {
        double pd = params.p_dim(d);
        long long fd = c.f(d);
        long long phid = c.phi(d);
        lp += xlogp(static_cast<double>(fd), pd);
        lp += xlogp(static_cast<double>(phid - fd), 1.0 - pd);
    }
    return LogProb{lp};
}

LogProb log_prob_general(const SimplicialComplex& c, const GeneralParams& params) {
    params.validate();
    if (c.ambient_n() > params.n)
        throw std::invalid_argument("log_prob_general: ambient size mismatch");
    int n = params.n;
    double lp = 0.0;
    // Vertex layer: b = 1 for every singleton.
    for (int i = 0; i < n; ++i) {
        std::uint64_t v = std::uint64_t{1} << i;
        double p = params.prob(v);
        if (c.a_value(v))
            lp += xlogp(1.0, p);
        else
            lp += xlogp(1.0, 1.0 - p);
    }
    // Higher layers: only simplices with b = 1 contribute a factor.
    std::uint64_t vm = c.vertex_mask();
    for (int d = 1; d < n; ++d) {
        for (std::uint64_t m : c.simplices_of_dim(d))
            lp += xlogp(1.0, params.prob(m));
        // Candidates with full boundary but absent: enumerate within present vertices.
        const auto& prev = c.simplices_of_dim(d - 1);
        for (std::uint64_t m : prev) {
            int top = 63 - std::countl_zero(m);
            for (int v = top + 1; v < n; ++v) {
                std::uint64_t vb = std::uint64_t{1} << v;
                if (!(vm & vb)) continue;
                std::uint64_t cand = m | vb;
                if (c.b_value(cand) && !c.contains(cand))
                    lp += xlogp(1.0, 1.0 - params.prob(cand));
            }
        }
    }
    return LogProb{lp};
}

std::pair<double, MultiplierSet> hamiltonian_general(const SimplicialComplex& c, const GeneralParams& params) {
    params.validate();
    int n = params.n;
    MultiplierSet ms;
    double h = 0.0;
    std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m = 1; m <= universe; ++m) {
        double p = params.prob(m);
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("hamiltonian_general: probabilities must be in (0,1)");
        double alpha = std::log((1.0 - p) / p);
        double beta = std::log(1.0 / (1.0 - p));
        int card = std::popcount(m);
        ms.alpha[m] = alpha;
        if (card >= 2) ms.beta[m] = beta;
        if (card == 1) ms.xi += beta;
        int a = c.a_value(m);
        int b = card == 1 ? 1 : c.b_value(m);
        h += alpha * a;
        if (card >= 2) h += beta * b;
    }
    h += ms.xi;
    return {h, ms};
}

double expected_f(const KahleParams& params, int d) {
    return params.p_dim(d) * expected_phi(params, d);
}

double expected_phi(const KahleParams& params, int d) {
    params.validate();
    if (d < 1 || d > params.n - 1)
        throw std::invalid_argument("expected_phi: dimension out of [1,n-1]");
    // phibar_d = C(n,d+1) prod_{k=1}^{d-1} p_k^{C(d+1,d-k)}, exact binomials.
    double val = static_cast<double>(binom(params.n, d + 1));
    for (int k = 1; k <= d - 1; ++k)
        val *= std::pow(params.p_dim(k), static_cast<double>(binom(d + 1, d - k)));
    return val;
}

double expected_a(const Simplex& s, const GeneralParams& params) {
    params.validate();
    double val = 1.0;
    for_each_nonempty_subset(s.mask, [&](std::uint64_t sub) { val *= params.prob(sub); });
    return val;
}

double expected_b(const Simplex& s, const GeneralParams& params) {
    params.validate();
    double val = 1.0;
    for_each_nonempty_subset(s.mask, [&](std::uint64_t sub) {
        if (sub != s.mask) val *= params.prob(sub);
    });
    return val;
}

}  // namespace rsc
