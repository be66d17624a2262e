#include "rsc/enumeration.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsc/binomial.hpp"
#include "rsc/detail/combi.hpp"
#include "rsc/generators.hpp"
#include "rsc/logsumexp.hpp"
#include "rsc/measures.hpp"

namespace rsc {

namespace {

using detail::candidate_simplices;
using detail::for_each_combination;

// Recursively extend a complex dimension by dimension: every subset of the
// admissible d-simplices (those with full boundary) yields a distinct branch.
void extend_dims(std::vector<std::vector<std::uint64_t>>& by_dim, int d, int n,
                 std::vector<SimplicialComplex>& out) {
    if (d >= n || by_dim[d - 1].empty()) {
        out.push_back(SimplicialComplex::from_closed_faces(by_dim, n));
        return;
    }
    auto cands = candidate_simplices(by_dim[d - 1], d, n);
    if (cands.empty()) {
        out.push_back(SimplicialComplex::from_closed_faces(by_dim, n));
        return;
    }
    if (cands.size() > 25) throw std::invalid_argument("enumerate_space: candidate set too large");
    std::uint64_t subsets = std::uint64_t{1} << cands.size();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        by_dim[d].clear();
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (bits & (std::uint64_t{1} << i)) by_dim[d].push_back(cands[i]);
        std::sort(by_dim[d].begin(), by_dim[d].end());
        extend_dims(by_dim, d + 1, n, out);
        by_dim[d].clear();
    }
}

// All complexes whose vertex set is exactly `vmask`, ambient size n.
void enumerate_on_vertex_set(std::uint64_t vmask, int n, std::vector<SimplicialComplex>& out) {
    std::vector<std::uint64_t> verts;
    for (std::uint64_t m = vmask; m; m &= m - 1) verts.push_back(m & ~(m - 1));
    std::vector<std::uint64_t> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) edges.push_back(verts[i] | verts[j]);
    if (edges.size() > 25) throw std::invalid_argument("enumerate_space: too many edges");
    std::uint64_t subsets = std::uint64_t{1} << edges.size();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        std::vector<std::vector<std::uint64_t>> by_dim(n);
        by_dim[0] = verts;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (bits & (std::uint64_t{1} << i)) by_dim[1].push_back(edges[i]);
        if (n >= 2) std::sort(by_dim[1].begin(), by_dim[1].end());
        if (n >= 2 && !by_dim[1].empty())
            extend_dims(by_dim, 2, n, out);
        else
            out.push_back(SimplicialComplex::from_closed_faces(std::move(by_dim), n));
    }
}

}  // namespace

std::uint64_t complex_key(const SimplicialComplex& c) {
    // FNV-1a over (n, sorted masks per dimension).
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mixin = [&](std::uint64_t x) {
        h ^= x;
        h *= 0x100000001b3ull;
    };
    mixin(static_cast<std::uint64_t>(c.ambient_n()));
    for (int d = 0; d < c.ambient_n(); ++d) {
        mixin(0xfeedfaceull + d);
        for (std::uint64_t m : c.simplices_of_dim(d)) mixin(m);
    }
    return h;
}

int ComplexSpace::index_of(const SimplicialComplex& c) const {
    if (index_.empty() && !members.empty()) {
        for (int i = 0; i < static_cast<int>(members.size()); ++i) index_.emplace(complex_key(members[i]), i);
    }
    auto [lo, hi] = index_.equal_range(complex_key(c));
    for (auto it = lo; it != hi; ++it)
        if (members[it->second] == c) return it->second;
    return -1;
}

ComplexSpace enumerate_space(SpaceKind kind, int n, int d) {
    if (n < 0 || n > 64) throw std::invalid_argument("enumerate_space: n out of range");
    ComplexSpace space;
    space.kind = kind;
    space.n = n;
    space.d = d;
    auto& out = space.members;
    switch (kind) {
        case SpaceKind::FullVertexSet: {
            if (n < 1 || n > 5) throw std::invalid_argument("enumerate_space: full space needs 1 <= n <= 5");
            std::uint64_t all = (std::uint64_t{1} << n) - 1;
            enumerate_on_vertex_set(all, n, out);
            break;
        }
        case SpaceKind::AnyVertexSubset: {
            if (n < 1 || n > 5) throw std::invalid_argument("enumerate_space: full space needs 1 <= n <= 5");
            std::uint64_t all = (std::uint64_t{1} << n) - 1;
            for (std::uint64_t vmask = 0; vmask <= all; ++vmask) enumerate_on_vertex_set(vmask, n, out);
            break;
        }
        case SpaceKind::Graphs:
        case SpaceKind::FlagOnly: {
            if (n < 1 || n > 7) throw std::invalid_argument("enumerate_space: graph space needs 1 <= n <= 7");
            std::vector<std::uint64_t> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
            std::uint64_t subsets = std::uint64_t{1} << edges.size();
            for (std::uint64_t bits = 0; bits < subsets; ++bits) {
                std::vector<std::vector<std::uint64_t>> by_dim(n);
                for (int i = 0; i < n; ++i) by_dim[0].push_back(std::uint64_t{1} << i);
                for (std::size_t i = 0; i < edges.size(); ++i)
                    if (bits & (std::uint64_t{1} << i)) by_dim[1].push_back(edges[i]);
                if (n >= 2) std::sort(by_dim[1].begin(), by_dim[1].end());
                auto g = SimplicialComplex::from_closed_faces(std::move(by_dim), n);
                out.push_back(kind == SpaceKind::Graphs ? g : flag_complex(g));
            }
            break;
        }
        case SpaceKind::LinialMeshulam: {
            if (d < 1 || d > n - 2) throw std::invalid_argument("enumerate_space: d out of [1,n-2]");
            if (binom(n, d + 2) > 25) throw std::invalid_argument("enumerate_space: LM space too large");
            std::vector<std::vector<std::uint64_t>> base(n);
            for (int k = 0; k <= d; ++k)
                for_each_combination(n, k + 1, [&](std::uint64_t m) { base[k].push_back(m); });
            std::vector<std::uint64_t> tops;
            for_each_combination(n, d + 2, [&](std::uint64_t m) { tops.push_back(m); });
            std::uint64_t subsets = std::uint64_t{1} << tops.size();
            for (std::uint64_t bits = 0; bits < subsets; ++bits) {
                auto by_dim = base;
                for (std::size_t i = 0; i < tops.size(); ++i)
                    if (bits & (std::uint64_t{1} << i)) by_dim[d + 1].push_back(tops[i]);
                out.push_back(SimplicialComplex::from_closed_faces(std::move(by_dim), n));
            }
            break;
        }
    }
    std::sort(out.begin(), out.end(), SimplicialComplex::canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return space;
}

double model_log_prob(const Model& model, const SimplicialComplex& c) {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, GnpModel>) {
                if (c.ambient_n() != m.n || c.f(0) != m.n || c.dimension() > 1) return neg_inf;
                double f1 = static_cast<double>(c.f(1));
                double total = binom_d(m.n, 2);
                return xlogp(f1, m.p) + xlogp(total - f1, 1.0 - m.p);
            } else if constexpr (std::is_same_v<T, FlagModel>) {
                if (c.ambient_n() != m.n || c.f(0) != m.n) return neg_inf;
                if (!(flag_complex(c.skeleton(1)) == c)) return neg_inf;
                double f1 = static_cast<double>(c.f(1));
                double total = binom_d(m.n, 2);
                return xlogp(f1, m.p) + xlogp(total - f1, 1.0 - m.p);
            } else if constexpr (std::is_same_v<T, LinialMeshulamModel>) {
                if (c.ambient_n() != m.n || c.dimension() > m.d + 1) return neg_inf;
                for (int k = 0; k <= m.d; ++k)
                    if (c.f(k) != static_cast<long long>(binom(m.n, k + 1))) return neg_inf;
                double ftop = static_cast<double>(c.f(m.d + 1));
                double total = binom_d(m.n, m.d + 2);
                return xlogp(ftop, m.p) + xlogp(total - ftop, 1.0 - m.p);
            } else if constexpr (std::is_same_v<T, KahleModel>) {
                if (c.ambient_n() != m.params.n || c.f(0) != m.params.n) return neg_inf;
                return log_prob_kahle(c, m.params).value;
            } else {
                return log_prob_general(c, m.params).value;
            }
        },
        model);
}

SimplicialComplex model_sample(const Model& model, RngState rng) {
    return std::visit(
        [&](const auto& m) -> SimplicialComplex {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, GnpModel>) return sample_gnp(m.n, m.p, rng);
            else if constexpr (std::is_same_v<T, FlagModel>) return sample_flag(m.n, m.p, rng);
            else if constexpr (std::is_same_v<T, LinialMeshulamModel>)
                return sample_linial_meshulam(m.n, m.d, m.p, rng);
            else if constexpr (std::is_same_v<T, KahleModel>) return sample_kahle(m.params, rng);
            else return sample_general_delta(m.params, rng);
        },
        model);
}

ExactDistribution exact_distribution(const Model& model, std::shared_ptr<const ComplexSpace> space) {
    ExactDistribution dist;
    dist.space = space;
    dist.probs.reserve(space->members.size());
    double sum = 0.0;
    for (const auto& c : space->members) {
        double p = std::exp(model_log_prob(model, c));
        dist.probs.push_back(p);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw std::runtime_error("exact_distribution: total mass " + std::to_string(sum) +
                                 " deviates from 1 beyond tolerance");
    return dist;
}

double log_partition_function(const std::vector<double>& theta,
                              const std::vector<std::vector<double>>& observable_values) {
    if (theta.size() != observable_values.size())
        throw std::invalid_argument("log_partition_function: theta/observable size mismatch");
    std::size_t count = observable_values.empty() ? 0 : observable_values[0].size();
    std::vector<double> args(count, 0.0);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (observable_values[i].size() != count)
            throw std::invalid_argument("log_partition_function: ragged observable matrix");
        for (std::size_t j = 0; j < count; ++j) args[j] -= theta[i] * observable_values[i][j];
    }
    double lz = log_sum_exp(args);
    if (!std::isfinite(lz)) throw std::runtime_error("log_partition_function: overflow");
    return lz;
}

double partition_function(const std::vector<double>& theta,
                          const std::vector<std::vector<double>>& observable_values) {
    return std::exp(log_partition_function(theta, observable_values));
}

double entropy(const ExactDistribution& dist) {
    double s = 0.0;
    for (double p : dist.probs)
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

double kl_divergence(const ExactDistribution& p, const ExactDistribution& q) {
    if (p.probs.size() != q.probs.size())
        throw std::invalid_argument("kl_divergence: misaligned spaces");
    double kl = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        if (p.probs[i] <= 0.0) continue;
        if (q.probs[i] <= 0.0) return std::numeric_limits<double>::infinity();
        kl += p.probs[i] * std::log(p.probs[i] / q.probs[i]);
    }
    return kl;
}

std::vector<ExactDistribution> feasible_perturbations(
    const ExactDistribution& p_star,
    const std::vector<std::vector<double>>& observable_values,
    int count, double magnitude, RngState rng) {
    const std::size_t N = p_star.probs.size();
    for (double p : p_star.probs)
        if (p <= 0.0)
            throw std::invalid_argument("feasible_perturbations: p_star must be strictly positive");
    if (!(magnitude > 0.0 && magnitude <= 1.0))
        throw std::invalid_argument("feasible_perturbations: magnitude out of (0,1]");
    const std::size_t r = observable_values.size();
    Eigen::MatrixXd A(r + 1, N);
    for (std::size_t i = 0; i < r; ++i) {
        if (observable_values[i].size() != N)
            throw std::invalid_argument("feasible_perturbations: ragged observable matrix");
        for (std::size_t j = 0; j < N; ++j) A(i, j) = observable_values[i][j];
    }
    for (std::size_t j = 0; j < N; ++j) A(r, j) = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    Eigen::MatrixXd kernel = lu.kernel();
    if (lu.dimensionOfKernel() == 0) return {};

    std::vector<ExactDistribution> result;
    result.reserve(count);
    RngState r_dir = rng.substream(17);
    int attempts = 0;
    while (static_cast<int>(result.size()) < count && attempts < 50 * count) {
        ++attempts;
        Eigen::VectorXd coeff(kernel.cols());
        for (int i = 0; i < coeff.size(); ++i) coeff(i) = r_dir.next_normal();
        Eigen::VectorXd v = kernel * coeff;
        double norm = v.norm();
        if (norm < 1e-12) continue;
        v /= norm;
        // Largest step keeping the perturbed vector nonnegative.
        double tmax = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < N; ++j)
            if (v(j) < 0.0) tmax = std::min(tmax, p_star.probs[j] / (-v(j)));
        if (!std::isfinite(tmax) || tmax <= 0.0) continue;
        // Vary the step length so both near-infinitesimal and near-boundary
        // perturbations appear in the sample.
        double scale = r_dir.next_double();
        double t = magnitude * tmax * scale * scale;
        if (t <= 0.0) continue;
        ExactDistribution q;
        q.space = p_star.space;
        q.probs.resize(N);
        for (std::size_t j = 0; j < N; ++j) q.probs[j] = p_star.probs[j] + t * v(j);
        result.push_back(std::move(q));
    }
    return result;
}

}  // namespace rsc
