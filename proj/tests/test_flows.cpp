#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "polybinom/errors.hpp"
#include "polybinom/flows.hpp"
#include "polybinom/survey.hpp"

using namespace polybinom;
using fixture::vec;

namespace {

Multigraph flipped(const Multigraph& g, std::uint64_t mask) {
    std::vector<Edge> edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if ((mask >> e) & 1U) {
            std::swap(edges[e].u, edges[e].v);
        }
    }
    return Multigraph(g.vertex_count(), edges);
}

Multigraph random_multigraph(std::mt19937_64& rng) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    }
    return Multigraph(n, edges);
}

}  // namespace

TEST_CASE("modular flow counts") {
    CHECK(modular_flow_count(fixture::double_edge(), 4) == 3);
    CHECK(modular_flow_count(fixture::theta(), 4) == 6);
    CHECK(modular_flow_count(fixture::p3(), 5) == 0);
    CHECK(modular_flow_count(fixture::single_loop(), 5) == 4);
    CHECK(modular_flow_count(fixture::double_edge(), 1) == 0);
    CHECK(modular_flow_count(Multigraph(3, {}), 1) == 1);
    CHECK_THROWS_AS(modular_flow_count(fixture::dipole(12), 3), CapExceeded);
}

TEST_CASE("integral flow counts") {
    CHECK(integral_flow_count(fixture::double_edge(), 3) == 4);
    CHECK(integral_flow_count(fixture::theta(), 3) == 6);
    CHECK(integral_flow_count(fixture::theta(), 4) == 18);
    CHECK(integral_flow_count(fixture::single_loop(), 4) == 6);
}

TEST_CASE("flow counts match brute force on random multigraphs") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const Multigraph g = random_multigraph(rng);
        for (int n = 1; n <= 4; ++n) {
            CHECK(modular_flow_count(g, n) == oracle::modular_flows(g, n));
            CHECK(modular_flow_count_exhaustive(g, n) == oracle::modular_flows(g, n));
            CHECK(integral_flow_count(g, n) == oracle::integral_flows(g, n));
        }
    }
}

TEST_CASE("flow counts do not depend on the reference orientation") {
    std::mt19937_64 rng(12);
    const Multigraph k4 = fixture::k4();
    for (int trial = 0; trial < 10; ++trial) {
        const Multigraph g = flipped(k4, rng() % 64);
        for (int n = 2; n <= 5; ++n) {
            CHECK(modular_flow_count(g, n) == modular_flow_count(k4, n));
            CHECK(integral_flow_count(g, n) == integral_flow_count(k4, n));
        }
    }
}

TEST_CASE("kochol terms") {
    const auto theta = kochol_orientation_counts(fixture::theta(), 3);
    REQUIRE(theta.size() == 6);
    for (const auto& t : theta) {
        CHECK(t.count == 1);
    }
    const auto dbl = kochol_orientation_counts(fixture::double_edge(), 2);
    REQUIRE(dbl.size() == 2);
    CHECK(dbl[0].count == 1);
    CHECK(dbl[1].count == 1);
    for (const auto& t : kochol_orientation_counts(fixture::k4(), 1)) {
        CHECK(t.count == 0);
    }
    for (int n = 1; n <= 5; ++n) {
        Integer sum = 0;
        for (const auto& t : kochol_orientation_counts(fixture::k4(), n)) {
            sum += t.count;
        }
        CHECK(sum == integral_flow_count(fixture::k4(), n));
    }
}

TEST_CASE("flow polynomials of the double edge") {
    const FlowResult r = flow_polynomials(fixture::double_edge(), CheckMode::Verify);
    CHECK(r.xi == 1);
    CHECK(r.phi == IntPolynomial(vec({-1, 1})));
    CHECK(r.phi_star.entries() == vec({0, 0, 1}));
    CHECK(r.phi_split.p() == vec({1, 1, 1}));
    CHECK(r.phi_split.q() == vec({1, 1}));
    CHECK(r.f == to_rational(IntPolynomial(vec({-2, 2}))));
    CHECK(r.f_star.entries() == vec({0, 0, 2}));
    CHECK(r.f_split.p() == vec({2, 2, 2}));
    CHECK(r.f_split.q() == vec({2, 2}));
    CHECK(r.totally_cyclic_count == 2);
    CHECK(r.indegree_sequence_count == 1);
}

TEST_CASE("flow polynomials of the theta graph") {
    const FlowResult r = flow_polynomials(fixture::theta(), CheckMode::Verify);
    CHECK(r.phi == IntPolynomial(vec({2, -3, 1})));
    CHECK(r.phi_star.entries() == vec({0, 0, 0, 2}));
    CHECK(r.phi_split.p() == vec({2, 2, 2, 2}));
    CHECK(r.phi_split.q() == vec({2, 2, 2}));
    CHECK(r.f == to_rational(IntPolynomial(vec({6, -9, 3}))));
    CHECK(r.f_star.entries() == vec({0, 0, 0, 6}));
    CHECK(r.f_split.p() == vec({6, 6, 6, 6}));
    CHECK(r.f_split.q() == vec({6, 6, 6}));
    CHECK(r.totally_cyclic_count == 6);
    CHECK(r.indegree_sequence_count == 2);
    REQUIRE(r.kochol.size() == 4);
    CHECK(r.kochol[2] == std::vector<Integer>(6, 1));
}

TEST_CASE("flow polynomial of K4") {
    const FlowResult r = flow_polynomials(fixture::k4(), CheckMode::Verify);
    CHECK(r.phi == IntPolynomial(vec({-6, 11, -6, 1})));
}

TEST_CASE("a loop multiplies the flow polynomials") {
    Multigraph with_loop(2, {{0, 1}, {0, 1}, {1, 1}});
    const FlowResult base = flow_polynomials(fixture::double_edge(), CheckMode::Verify);
    const FlowResult looped = flow_polynomials(with_loop, CheckMode::Verify);
    const IntPolynomial n1(vec({-1, 1}));
    CHECK(looped.phi == base.phi * n1);
    CHECK(looped.f == base.f * to_rational(n1) * Rational(2));
    CHECK(looped.totally_cyclic_count == 2 * base.totally_cyclic_count);
}

TEST_CASE("flow inputs rejected") {
    CHECK_THROWS_WITH_AS(flow_polynomials(fixture::p3()), doctest::Contains("bridge"), InputError);
    CHECK_THROWS_WITH_AS(flow_polynomials(Multigraph(3, {})), doctest::Contains("acyclic"), InputError);
    CHECK_THROWS_AS(flow_polynomials(fixture::dipole(12)), CapExceeded);
}

TEST_CASE("fixture set passes every audit") {
    for (const auto& g : flow_fixture_graphs()) {
        const FlowResult r = flow_polynomials(g, CheckMode::Verify);
        CHECK(all_ok(r.audits));
        CHECK(r.phi_split.p().front() == r.indegree_sequence_count);
        CHECK(r.f_split.p().front() == r.totally_cyclic_count);
    }
}

TEST_CASE("integral flow polynomial can have fractional coefficients") {
    // Values 0, 6, 36, 122 at n = 1..4 force leading coefficient 16/3.
    const FlowResult r = flow_polynomials(fixture::dipole(4), CheckMode::Verify);
    CHECK(r.f.coefficient(3) == Rational(16, 3));
    for (int n = 1; n <= 6; ++n) {
        CHECK(r.f(n) == Rational(oracle::integral_flows(fixture::dipole(4), n)));
    }
    CHECK(r.f_star.entries() == vec({0, 0, 6, 12, 14}));
    CHECK(r.f_star.entries() == oracle::series_numerator([](int n) { return oracle::integral_flows(fixture::dipole(4), n); }, 3, 1));
}
