#include <doctest.h>

#include <bit>
#include <cmath>
#include <memory>

#include "rsc/enumeration.hpp"
#include "rsc/generators.hpp"
#include "rsc/measures.hpp"

using namespace rsc;

namespace {

SimplicialComplex full_triangle() {
    return SimplicialComplex::closure({Simplex::from_vertices({0, 1, 2})}, 3);
}

SimplicialComplex empty_graph3() {
    return SimplicialComplex::closure({Simplex::from_vertices({0}), Simplex::from_vertices({1}),
                                       Simplex::from_vertices({2})}, 3);
}

}  // namespace

TEST_CASE("per-dimension probability of the full triangle") {
    double p1 = 0.4, p2 = 0.6;
    KahleParams params(3, {p1, p2});
    // f = (3,3,1), phi = (3,3,1): every edge and the triangle accepted
    double expected = 3.0 * std::log(p1) + std::log(p2);
    CHECK(log_prob_kahle(full_triangle(), params).value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("per-dimension probability of the empty graph on three vertices") {
    double p1 = 0.4, p2 = 0.6;
    KahleParams params(3, {p1, p2});
    // phi_1 = 3, no edges, no triangle candidates
    double expected = 3.0 * std::log(1.0 - p1);
    CHECK(log_prob_kahle(empty_graph3(), params).value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("per-dimension probability requires all vertices") {
    KahleParams params(3, {0.5, 0.5});
    auto partial = SimplicialComplex::closure({Simplex::from_vertices({0, 1})}, 3);
    CHECK(log_prob_kahle(partial, params).value == -std::numeric_limits<double>::infinity());
}

TEST_CASE("per-dimension probabilities sum to one over the full space") {
    auto space = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::FullVertexSet, 3));
    for (auto [p1, p2] : {std::pair{0.3, 0.7}, {0.5, 0.5}, {0.9, 0.1}}) {
        KahleParams params(3, {p1, p2});
        double total = 0.0;
        for (const auto& c : space->members) total += std::exp(log_prob_kahle(c, params).value);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("per-simplex probabilities sum to one, including random vertices") {
    auto space = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::AnyVertexSubset, 3));
    GeneralParams params(3, 0.5);
    params.set(Simplex::from_vertices({0}), 0.9);
    params.set(Simplex::from_vertices({0, 1}), 0.25);
    params.set(Simplex::from_vertices({0, 1, 2}), 0.7);
    double total = 0.0;
    for (const auto& c : space->members) total += std::exp(log_prob_general(c, params).value);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hamiltonian reproduces the log-probability") {
    GeneralParams params(4, 0.5);
    params.set(Simplex::from_vertices({0, 1}), 0.3);
    params.set(Simplex::from_vertices({1, 2, 3}), 0.8);
    RngState rng{55, 0};
    for (int i = 0; i < 40; ++i) {
        auto c = sample_general_delta(params, RngState{55, static_cast<std::uint64_t>(i)});
        auto [h, mult] = hamiltonian_general(c, params);
        CHECK(h == doctest::Approx(-log_prob_general(c, params).value).epsilon(1e-10));
    }
}

TEST_CASE("hamiltonian multipliers at p = 1/2") {
    // alpha = ln((1-p)/p) = 0 and beta = ln(1/(1-p)) = ln 2 for every simplex
    GeneralParams params(3, 0.5);
    auto [h, mult] = hamiltonian_general(full_triangle(), params);
    for (const auto& [m, a] : mult.alpha) CHECK(a == doctest::Approx(0.0));
    for (const auto& [m, b] : mult.beta) CHECK(b == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("hamiltonian rejects degenerate probabilities") {
    GeneralParams params(3, 1.0);
    CHECK_THROWS_AS(hamiltonian_general(full_triangle(), params), std::invalid_argument);
}

TEST_CASE("expected counts on three vertices") {
    double p1 = 0.35, p2 = 0.8;
    KahleParams params(3, {p1, p2});
    CHECK(expected_f(params, 1) == doctest::Approx(3.0 * p1).epsilon(1e-12));
    CHECK(expected_f(params, 2) == doctest::Approx(p1 * p1 * p1 * p2).epsilon(1e-12));
    CHECK(expected_phi(params, 2) == doctest::Approx(p1 * p1 * p1).epsilon(1e-12));
    CHECK(expected_phi(params, 1) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("expected count identities") {
    KahleParams params(8, {0.5, 0.4, 0.3, 0.2, 0.6, 0.7, 0.1});
    for (int d = 1; d <= 7; ++d)
        CHECK(expected_f(params, d) ==
              doctest::Approx(params.p_dim(d) * expected_phi(params, d)).epsilon(1e-12));
}

TEST_CASE("graph specialization of the expected counts") {
    // with p_2 = ... = 0 only dimension 1 survives: C(n,2) p
    KahleParams params(10, {0.3, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(expected_f(params, 1) == doctest::Approx(45.0 * 0.3).epsilon(1e-12));
    CHECK(expected_f(params, 2) == doctest::Approx(0.0));
    // flag specialization p_k = 1 for k >= 2: every triangle expected at p^3
    KahleParams flag(5, {0.4, 1, 1, 1});
    CHECK(expected_f(flag, 2) == doctest::Approx(10.0 * 0.4 * 0.4 * 0.4).epsilon(1e-12));
    CHECK(expected_f(flag, 3) == doctest::Approx(5.0 * std::pow(0.4, 6)).epsilon(1e-12));
}

TEST_CASE("expected counts agree with sampling") {
    KahleParams params(12, {0.5, 0.6, 0.4, 0, 0, 0, 0, 0, 0, 0, 0});
    const int samples = 20000;
    std::vector<double> sums(4, 0.0), sqs(4, 0.0);
    for (int i = 0; i < samples; ++i) {
        auto c = sample_kahle(params, RngState{321, static_cast<std::uint64_t>(i)});
        for (int d = 1; d <= 3; ++d) {
            double v = static_cast<double>(c.f(d));
            sums[d] += v;
            sqs[d] += v * v;
        }
    }
    for (int d = 1; d <= 3; ++d) {
        double mean = sums[d] / samples;
        double se = std::sqrt((sqs[d] / samples - mean * mean) / samples);
        CHECK(std::abs(mean - expected_f(params, d)) < 4.0 * se + 1e-9);
    }
}

TEST_CASE("expected simplex indicators as products over faces") {
    GeneralParams params(4, 1.0);
    double pv0 = 0.9, pv1 = 0.8, pe = 0.6, pt = 0.5;
    params.set(Simplex::from_vertices({0}), pv0);
    params.set(Simplex::from_vertices({1}), pv1);
    params.set(Simplex::from_vertices({0, 1}), pe);
    params.set(Simplex::from_vertices({0, 1, 2}), pt);

    auto edge = Simplex::from_vertices({0, 1});
    CHECK(expected_b(edge, params) == doctest::Approx(pv0 * pv1).epsilon(1e-12));
    CHECK(expected_a(edge, params) == doctest::Approx(pv0 * pv1 * pe).epsilon(1e-12));

    auto tri = Simplex::from_vertices({0, 1, 2});
    // vertices 0,1,2 and edges {0,1},{0,2},{1,2}; unset entries default to 1
    CHECK(expected_b(tri, params) == doctest::Approx(pv0 * pv1 * pe).epsilon(1e-12));
    CHECK(expected_a(tri, params) == doctest::Approx(pv0 * pv1 * pe * pt).epsilon(1e-12));
}

TEST_CASE("expected indicator identity abar = p bbar") {
    GeneralParams params(5, 0.5);
    params.set(Simplex::from_vertices({0, 2, 4}), 0.15);
    RngState rng{88, 0};
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t m = rng.next_u64() & 0x1f;
        if (!m) continue;
        Simplex s(m);
        CHECK(expected_a(s, params) ==
              doctest::Approx(params.prob(m) * expected_b(s, params)).epsilon(1e-12));
    }
}

TEST_CASE("expected indicators match exact enumeration on three vertices") {
    GeneralParams params(3, 0.5);
    params.set(Simplex::from_vertices({2}), 0.75);
    params.set(Simplex::from_vertices({0, 1}), 0.4);
    auto space = std::make_shared<ComplexSpace>(enumerate_space(SpaceKind::AnyVertexSubset, 3));
    for (std::uint64_t m = 1; m <= 7; ++m) {
        double abar = 0.0, bbar = 0.0;
        for (const auto& c : space->members) {
            double w = std::exp(log_prob_general(c, params).value);
            abar += w * c.a_value(m);
            bbar += w * c.b_value(m);
        }
        Simplex s(m);
        CHECK(expected_a(s, params) == doctest::Approx(abar).epsilon(1e-10));
        CHECK(expected_b(s, params) == doctest::Approx(bbar).epsilon(1e-10));
        // conditional appearance probability given a complete boundary
        if (std::popcount(m) >= 2)
            CHECK(abar / bbar == doctest::Approx(params.prob(m)).epsilon(1e-10));
    }
}
