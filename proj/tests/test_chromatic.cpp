#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "polybinom/chromatic.hpp"
#include "polybinom/errors.hpp"
#include "polybinom/survey.hpp"

using namespace polybinom;
using fixture::vec;

TEST_CASE("chromatic polynomial examples") {
    CHECK(chromatic_poly(fixture::k3()) == IntPolynomial(vec({0, 2, -3, 1})));
    CHECK(chromatic_poly(fixture::p3()) == IntPolynomial(vec({0, 1, -2, 1})));
    CHECK(chromatic_poly(fixture::single_loop()).is_zero());
    CHECK(chromatic_poly(fixture::double_edge()) == chromatic_poly(Multigraph(2, {{0, 1}})));
    CHECK(chromatic_poly(Multigraph(3, {})) == IntPolynomial(vec({0, 0, 0, 1})));
    CHECK_THROWS_AS(chromatic_poly(Multigraph(12, {})), CapExceeded);
}

TEST_CASE("chromatic polynomial matches brute-force colorings") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 2 == 0) {
                    edges.push_back({u, v});
                }
            }
        }
        const Multigraph g(n, edges);
        const IntPolynomial chi = chromatic_poly(g);
        for (int k = 0; k <= 4; ++k) {
            CHECK(chi(k) == oracle::proper_colorings(g, k));
        }
    }
}

TEST_CASE("chi star examples") {
    CHECK(chi_star(fixture::k3()).entries() == vec({0, 0, 0, 6}));
    CHECK(chi_star(fixture::p3()).entries() == vec({0, 0, 2, 4}));
    CHECK(chi_star(Multigraph(1, {})).entries() == vec({0, 1}));
}

TEST_CASE("a/b split of chromatic star vectors") {
    const auto k3 = theorem1_decomposition(fixture::k3(), CheckMode::Verify);
    CHECK(k3.split.p() == vec({6, 6, 6, 6}));
    CHECK(k3.split.q() == vec({6, 6, 6}));
    CHECK(k3.acyclic_count == 6);
    const auto p3 = theorem1_decomposition(fixture::p3(), CheckMode::Verify);
    CHECK(p3.split.p() == vec({4, 6, 6, 4}));
    CHECK(p3.split.q() == vec({4, 6, 4}));
    CHECK(p3.acyclic_count == 4);
    const auto k2 = theorem1_decomposition(Multigraph(2, {{0, 1}}), CheckMode::Verify);
    CHECK(k2.chi_star.entries() == vec({0, 0, 2}));
    CHECK(k2.split.p() == vec({2, 2, 2}));
    CHECK(k2.split.q() == vec({2, 2}));
    CHECK_THROWS_WITH_AS(theorem1_decomposition(Multigraph(2, {{0, 1}, {1, 1}})), doctest::Contains("loop"),
                         InputError);
}

TEST_CASE("multigraphs with parallel edges decompose like their simplification") {
    const auto doubled = theorem1_decomposition(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}}), CheckMode::Verify);
    const auto simple = theorem1_decomposition(fixture::p3(), CheckMode::Verify);
    CHECK(doubled.chi_star == simple.chi_star);
    CHECK(doubled.acyclic_count == simple.acyclic_count);
}

TEST_CASE("decomposition into order polynomials") {
    CHECK(chi_star_via_orders(fixture::k3()).entries() == vec({0, 0, 0, 6}));
    CHECK(chi_star_via_orders(fixture::p3()).entries() == vec({0, 0, 2, 4}));
    CHECK(chi_star_via_orders(Multigraph(2, {})).entries() == vec({0, 1, 1}));
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : connected_simple_graphs(n)) {
            CHECK(chi_star_via_orders(g) == chi_star(g));
        }
    }
}

TEST_CASE("hegedus bound") {
    CHECK(hegedus_bound_check(chi_star(fixture::k3())).ok());
    // v_{d-1} = 0 forces v_{d-j} <= C(j-1, j) = 0 for j >= 1.
    CHECK_FALSE(hegedus_bound_check(StarVector(vec({0, 1, 0, 1}), 3, SeriesStart::Zero)).ok());
}

TEST_CASE("linear forms") {
    LinearForm f{vec({10, 2, -8, -10}), Integer(40)};
    CHECK(f.normalized() == LinearForm{vec({5, 1, -4, -5}), Integer(20)});
    CHECK(f.normalized().to_string() == "5c_1 + c_2 - 4c_3 - 5c_4 + 20 >= 0");
    LinearForm negative{vec({-2, 4}), Integer(-6)};
    CHECK(negative.normalized() == LinearForm{vec({-1, 2}), Integer(-3)});
}

TEST_CASE("coefficient relations for d = 5, 6, 7") {
    const auto d5 = table1_forms(5);
    REQUIRE(d5.size() == 1);
    CHECK(d5[0].j == 2);
    CHECK(d5[0].form == LinearForm{vec({5, 1, -4, -5}), Integer(20)});
    const auto d6 = table1_forms(6);
    REQUIRE(d6.size() == 2);
    CHECK(d6[0].form == LinearForm{vec({-5, 5, 7, -19, -65}), Integer(245)});
    CHECK(d6[1].form == d6[0].form);
    const auto d7 = table1_forms(7);
    REQUIRE(d7.size() == 2);
    CHECK(d7[0].form == LinearForm{vec({21, -1, -9, 11, -9, -301}), Integer(1071)});
    CHECK(d7[1].form == LinearForm{vec({-7, -3, 8, 15, -52, -273}), Integer(1148)});
    CHECK_THROWS_AS(table1_forms(4), InputError);

    const auto matches = match_table1();
    REQUIRE(matches.size() == 4);
    for (const auto& m : matches) {
        CHECK_FALSE(m.matching_j.empty());
    }
}

TEST_CASE("coefficient relations hold on actual chromatic polynomials") {
    for (int n = 5; n <= 6; ++n) {
        for (const auto& g : connected_simple_graphs(n)) {
            const IntPolynomial chi = chromatic_poly(g);
            for (const auto& row : table1_forms(n)) {
                Integer value = row.form.constant;
                for (std::size_t i = 0; i < row.form.coefficients.size(); ++i) {
                    value += row.form.coefficients[i] * chi.coefficient(i + 1);
                }
                CHECK(value >= 0);
            }
        }
    }
}
