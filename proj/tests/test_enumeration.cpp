#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <tuple>

#include "rsc/enumeration.hpp"
#include "rsc/maxent.hpp"
#include "rsc/measures.hpp"
#include "rsc/observables.hpp"

using namespace rsc;

namespace {

std::shared_ptr<const ComplexSpace> space3() {
    static auto s = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::FullVertexSet, 3));
    return s;
}

// Brute-force oracle: every downward-closed subset of the power set of {0,1,2}.
// The 7 non-empty subsets are indexed by their masks 1..7.
long long count_closed_families_3() {
    long long count = 0;
    for (int fam = 0; fam < (1 << 7); ++fam) {
        bool ok = true;
        for (int m = 1; m <= 7 && ok; ++m) {
            if (!(fam & (1 << (m - 1)))) continue;
            for (int sub = (m - 1) & m; sub; sub = (sub - 1) & m)
                if (!(fam & (1 << (sub - 1)))) { ok = false; break; }
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("nine complexes on a fixed 3-vertex set") {
    auto s = space3();
    CHECK(s->members.size() == 9);
    std::map<std::tuple<long long, long long, long long>, int> hist;
    for (const auto& c : s->members) ++hist[{c.f(1), c.f(2), c.phi(2)}];
    // edge count, triangle count, triangle candidates
    CHECK(hist[{0, 0, 0}] == 1);
    CHECK(hist[{1, 0, 0}] == 3);
    CHECK(hist[{2, 0, 0}] == 3);
    CHECK(hist[{3, 0, 1}] == 1);
    CHECK(hist[{3, 1, 1}] == 1);
    // canonical order is strict
    for (size_t i = 1; i < s->members.size(); ++i)
        CHECK(SimplicialComplex::canonical_less(s->members[i - 1], s->members[i]));
}

TEST_CASE("complexes over arbitrary vertex subsets of a 3-set") {
    auto oracle = count_closed_families_3();
    CHECK(oracle == 19);
    auto s = enumerate_space(SpaceKind::AnyVertexSubset, 3);
    CHECK(static_cast<long long>(s.members.size()) == oracle);
    CHECK(s.members.front().empty());
}

TEST_CASE("flag complexes on three vertices") {
    auto s = enumerate_space(SpaceKind::FlagOnly, 3);
    CHECK(s.members.size() == 8);  // one per graph; the triangle graph gets filled
    for (const auto& c : s.members) CHECK(c.f(2) == (c.f(1) == 3 ? 1 : 0));
}

TEST_CASE("graph space size") {
    CHECK(enumerate_space(SpaceKind::Graphs, 3).members.size() == 8);
    CHECK(enumerate_space(SpaceKind::Graphs, 4).members.size() == 64);
}

TEST_CASE("triangle layers over a complete graph") {
    auto s = enumerate_space(SpaceKind::LinialMeshulam, 4, 1);
    CHECK(s.members.size() == 16);  // any subset of the 4 triangles
    for (const auto& c : s.members) CHECK(c.f(1) == 6);
}

TEST_CASE("index lookup round-trips") {
    auto s = space3();
    for (size_t i = 0; i < s->members.size(); ++i)
        CHECK(s->index_of(s->members[i]) == static_cast<int>(i));
    auto outside = SimplicialComplex::closure({Simplex::from_vertices({0})}, 3);
    CHECK(s->index_of(outside) == -1);
}

TEST_CASE("exact model distributions normalize and locate mass correctly") {
    auto s = space3();
    auto dist = exact_distribution(Model{KahleModel{KahleParams(3, {0.4, 0.6})}}, s);
    double total = 0.0;
    for (double p : dist.probs) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    // graph model: no mass on complexes with triangles
    auto gdist = exact_distribution(Model{GnpModel{3, 0.5}}, s);
    for (size_t i = 0; i < s->members.size(); ++i)
        if (s->members[i].f(2) > 0) CHECK(gdist.probs[i] == 0.0);

    // p1 = 0 concentrates on the edgeless complex
    auto zero = exact_distribution(Model{KahleModel{KahleParams(3, {0.0, 0.5})}}, s);
    for (size_t i = 0; i < s->members.size(); ++i)
        CHECK(zero.probs[i] == doctest::Approx(s->members[i].f(1) == 0 ? 1.0 : 0.0));
}

TEST_CASE("triangle-layer model distribution") {
    auto s = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::LinialMeshulam, 4, 1));
    auto dist = exact_distribution(Model{LinialMeshulamModel{4, 1, 0.3}}, s);
    for (size_t i = 0; i < s->members.size(); ++i) {
        long long k = s->members[i].f(2);
        CHECK(dist.probs[i] ==
              doctest::Approx(std::pow(0.3, k) * std::pow(0.7, 4 - k)).epsilon(1e-12));
    }
}

TEST_CASE("flag model distribution matches the underlying graph law") {
    auto s = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::FlagOnly, 3));
    auto dist = exact_distribution(Model{FlagModel{3, 0.4}}, s);
    for (size_t i = 0; i < s->members.size(); ++i) {
        long long e = s->members[i].f(1);
        CHECK(dist.probs[i] ==
              doctest::Approx(std::pow(0.4, e) * std::pow(0.6, 3 - e)).epsilon(1e-12));
    }
}

TEST_CASE("sampling lands inside the enumerated support") {
    auto s = space3();
    Model model{KahleModel{KahleParams(3, {0.5, 0.5})}};
    std::set<int> seen;
    for (int i = 0; i < 2000; ++i) {
        auto c = model_sample(model, RngState{99, static_cast<std::uint64_t>(i)});
        int idx = s->index_of(c);
        CHECK(idx >= 0);
        seen.insert(idx);
    }
    CHECK(seen.size() == 9);
}

TEST_CASE("partition function at theta = 0 counts the space") {
    auto s = space3();
    std::vector<Observable> obs = {obs_f(1), obs_f(2)};
    auto values = evaluate_observables(obs, *s);
    CHECK(partition_function({0.0, 0.0}, values) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("partition function at the closed-form multipliers") {
    // theta coupled to (f1, f2, phi2) with
    //   e^{-t1} = p1/(1-p1), e^{-t2} = p2/(1-p2), e^{-t3} = 1-p2
    // gives Z = (1-p1)^{-3}
    auto s = space3();
    std::vector<Observable> obs = {obs_f(1), obs_f(2), obs_phi(2)};
    auto values = evaluate_observables(obs, *s);
    for (auto [p1, p2] : {std::pair{0.4, 0.6}, {0.25, 0.8}, {0.7, 0.3}}) {
        std::vector<double> theta = {-std::log(p1 / (1 - p1)), -std::log(p2 / (1 - p2)),
                                     -std::log(1 - p2)};
        CHECK(partition_function(theta, values) ==
              doctest::Approx(1.0 / std::pow(1 - p1, 3)).epsilon(1e-10));
    }
}

TEST_CASE("partition function of the two-constraint family") {
    // observables (f1, f2), with
    //   e^{-t1} = p1 (1-p1^2 p2) / (1-p1),
    //   e^{-t2} = p2 (1-p1^3 p2)^2 / (1-p1^2 p2)^3,
    // and Z = (1-p1^3 p2)^2 / (1-p1)^3.
    auto s = space3();
    std::vector<Observable> obs = {obs_f(1), obs_f(2)};
    auto values = evaluate_observables(obs, *s);
    double p1 = 0.5, p2 = 0.7;
    double u = 1 - p1, v = 1 - p1 * p1 * p2, w = 1 - p1 * p1 * p1 * p2;
    double t1 = -std::log(p1 * v / u);
    double t2 = -std::log(p2 * w * w / (v * v * v));
    double z = w * w / (u * u * u);
    CHECK(partition_function({t1, t2}, values) == doctest::Approx(z).epsilon(1e-10));
}

TEST_CASE("entropy of the uniform distribution") {
    auto s = space3();
    ExactDistribution uniform{s, std::vector<double>(9, 1.0 / 9.0)};
    CHECK(entropy(uniform) == doctest::Approx(std::log(9.0)).epsilon(1e-12));
}

TEST_CASE("kl divergence basics") {
    auto s = space3();
    auto p = exact_distribution(Model{KahleModel{KahleParams(3, {0.4, 0.6})}}, s);
    auto q = exact_distribution(Model{KahleModel{KahleParams(3, {0.5, 0.5})}}, s);
    CHECK(kl_divergence(p, p) == doctest::Approx(0.0));
    CHECK(kl_divergence(p, q) > 0.0);
    // support violation: q vanishes on triangles under the graph model
    auto graph = exact_distribution(Model{GnpModel{3, 0.5}}, s);
    CHECK(std::isinf(kl_divergence(p, graph)));
    CHECK(std::isfinite(kl_divergence(graph, p)));
}

TEST_CASE("entropy splits as maximum entropy minus kl") {
    // For Gibbs P* with constraints E[x] = xbar and any feasible Q:
    // S(Q) = S(P*) - KL(Q || P*).
    auto s = space3();
    auto p_star = exact_distribution(Model{KahleModel{KahleParams(3, {0.45, 0.35})}}, s);
    std::vector<Observable> obs = {obs_f(1), obs_f(2), obs_phi(2)};
    auto values = evaluate_observables(obs, *s);
    auto perturbed = feasible_perturbations(p_star, values, 5, 0.4, RngState{7, 0});
    CHECK(!perturbed.empty());
    for (const auto& q : perturbed) {
        CHECK(entropy(q) ==
              doctest::Approx(entropy(p_star) - kl_divergence(q, p_star)).epsilon(1e-9));
    }
}

TEST_CASE("feasible perturbations preserve the constrained expectations") {
    auto s = space3();
    auto p_star = exact_distribution(Model{KahleModel{KahleParams(3, {0.45, 0.35})}}, s);
    std::vector<Observable> obs = {obs_f(1), obs_f(2), obs_phi(2)};
    auto values = evaluate_observables(obs, *s);
    auto perturbed = feasible_perturbations(p_star, values, 8, 0.5, RngState{12, 0});
    CHECK(perturbed.size() >= 1);
    std::vector<double> target(obs.size(), 0.0);
    for (size_t i = 0; i < obs.size(); ++i)
        for (size_t j = 0; j < p_star.probs.size(); ++j)
            target[i] += p_star.probs[j] * values[i][j];
    for (const auto& q : perturbed) {
        double total = 0.0;
        bool same = true;
        for (size_t j = 0; j < q.probs.size(); ++j) {
            CHECK(q.probs[j] >= -1e-15);
            total += q.probs[j];
            if (std::abs(q.probs[j] - p_star.probs[j]) > 1e-12) same = false;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(!same);
        for (size_t i = 0; i < obs.size(); ++i) {
            double e = 0.0;
            for (size_t j = 0; j < q.probs.size(); ++j) e += q.probs[j] * values[i][j];
            CHECK(e == doctest::Approx(target[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("no perturbations when the constraints pin the distribution") {
    // constraining every point's indicator leaves no freedom
    auto s = space3();
    ExactDistribution uniform{s, std::vector<double>(9, 1.0 / 9.0)};
    std::vector<std::vector<double>> values(9, std::vector<double>(9, 0.0));
    for (int i = 0; i < 9; ++i) values[i][i] = 1.0;
    auto perturbed = feasible_perturbations(uniform, values, 5, 0.5, RngState{3, 0});
    CHECK(perturbed.empty());
}

TEST_CASE("unnormalized models are rejected") {
    auto s = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::Graphs, 3));
    // a 2-dimensional model leaks mass outside the graph space
    CHECK_THROWS(exact_distribution(Model{KahleModel{KahleParams(3, {0.5, 0.5})}}, s));
}
