#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "polybinom/errors.hpp"
#include "polybinom/io.hpp"
#include "polybinom/poset.hpp"

using namespace polybinom;
using fixture::vec;

TEST_CASE("poset construction") {
    const Poset p(4, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
    CHECK_FALSE(p.less(0, 3));
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p.relation_count() == 3);
    CHECK(Poset::antichain(3).is_antichain());
    CHECK_THROWS_AS(Poset(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {2, 0}}), InputError);
    CHECK_THROWS_AS(Poset(2, {{0, 2}}), InputError);
}

TEST_CASE("natural labeling is order preserving") {
    const Poset p(4, {{3, 0}, {2, 1}, {3, 1}});
    const auto label = p.natural_labeling();
    CHECK(label == std::vector<int>{2, 3, 0, 1});
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (p.less(a, b)) {
                CHECK(label[static_cast<std::size_t>(a)] < label[static_cast<std::size_t>(b)]);
            }
        }
    }
}

TEST_CASE("strict order polynomial examples") {
    const RatPolynomial chain = strict_order_poly(Poset::chain(3));
    for (int n = -3; n <= 8; ++n) {
        CHECK(chain(n) == Rational(binomial(n, 3)));
    }
    CHECK(strict_order_poly(Poset::antichain(2)) == to_rational(IntPolynomial(vec({0, 0, 1}))));
    CHECK(chain.to_string() == "(1/6)n^3 - (1/2)n^2 + (1/3)n");
    CHECK(strict_order_poly(Poset::antichain(1)) == RatPolynomial::identity());
}

TEST_CASE("omega star and its split") {
    CHECK(omega_star(Poset::chain(3)).entries() == vec({0, 0, 0, 1}));
    CHECK(omega_star(Poset::antichain(2)).entries() == vec({0, 1, 1}));
    CHECK(omega_star(Poset::antichain(4)).entries() == vec({0, 1, 11, 11, 1}));
    CHECK(order_decomposition(Poset::chain(3)).p() == vec({1, 1, 1, 1}));
    CHECK(order_decomposition(Poset::chain(3)).q() == vec({1, 1, 1}));
    CHECK(order_decomposition(Poset::antichain(2)).p() == vec({1, 2, 1}));
    CHECK(order_decomposition(Poset::antichain(2)).q() == vec({1, 1}));
    CHECK(order_decomposition(Poset::antichain(1)).p() == vec({1, 1}));
    CHECK(order_decomposition(Poset::antichain(1)).q() == vec({1}));
}

TEST_CASE("order polytope lattice points") {
    CHECK(order_polytope_points(Poset::chain(3), 3, false) == 20);
    CHECK(order_polytope_points(Poset::antichain(2), 2, true) == 1);
    CHECK(order_polytope_points(Poset(3, {{0, 2}}), 1, true) == 0);
    CHECK_THROWS_AS(order_polytope_points(Poset::antichain(8), 20, false, 1000), CapExceeded);
}

TEST_CASE("h* from descents") {
    CHECK(hstar_via_descents(Poset::chain(3)).entries() == vec({1, 0, 0, 0}));
    CHECK(hstar_via_descents(Poset::antichain(2)).entries() == vec({1, 1, 0}));
    CHECK(hstar_via_descents(Poset::antichain(3)).entries() == vec({1, 4, 1, 0}));
    CHECK(linear_extensions(Poset::antichain(2)) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("library counts agree with brute force on random posets") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> rel;
        for (int a = 0; a < d; ++a) {
            for (int b = a + 1; b < d; ++b) {
                if (rng() % 3 == 0) {
                    rel.emplace_back(a, b);
                }
            }
        }
        std::vector<int> perm(static_cast<std::size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Poset p = Poset(d, rel).relabeled(perm);
        for (int n = 0; n <= 4; ++n) {
            CHECK(count_strict_maps(p, n) == oracle::order_maps(p, 1, n, true));
            CHECK(order_polytope_points(p, n, false) == oracle::order_maps(p, 0, n, false));
            if (n >= 1) {
                CHECK(order_polytope_points(p, n, true) == oracle::order_maps(p, 1, n - 1, true));
            }
        }
        auto h = oracle::descent_counts(p);
        CHECK(hstar_via_descents(p).entries() == h);
        CHECK(lattice_hstar(p).entries() == h);
        const auto om = oracle::series_numerator([&](int n) { return oracle::order_maps(p, 1, n, true); }, d, 1);
        CHECK(om.back() == 0);
        CHECK(omega_star(p).entries() == std::vector<Integer>(om.begin(), om.end() - 1));
    }
}

TEST_CASE("analysis of every poset up to five elements passes") {
    for (int d = 1; d <= 5; ++d) {
        for (const auto& p : enumerate_posets(d)) {
            const OrderResult r = analyze_poset(p, CheckMode::Verify);
            CHECK(all_ok(r.audits));
            CHECK(r.omega_star[static_cast<std::size_t>(d)] == 1);
        }
    }
    CHECK_THROWS_AS(analyze_poset(Poset(0, {})), InputError);
}

TEST_CASE("antichain audit is vacuous for antichains") {
    const OrderResult r = analyze_poset(Poset::antichain(3));
    bool seen = false;
    for (const auto& a : r.audits) {
        if (a.family == "omega_star_1_zero_unless_antichain") {
            seen = true;
            CHECK(a.verdict() == Verdict::Vacuous);
        }
    }
    CHECK(seen);
}

TEST_CASE("poset generator") {
    const std::size_t expected[] = {0, 1, 2, 5, 16, 63, 318};
    for (int d = 1; d <= 6; ++d) {
        CHECK(enumerate_posets(d).size() == expected[d]);
    }
    const Poset p(4, {{0, 1}, {2, 3}, {0, 3}});
    CHECK(p.certificate() == p.relabeled({3, 1, 0, 2}).certificate());
    CHECK(Poset::chain(3).certificate() != Poset::antichain(3).certificate());
    CHECK_THROWS_AS(Poset::antichain(9).certificate(), CapExceeded);
}

TEST_CASE("poset file parsing") {
    std::istringstream chain("elements 3\ncover 0 1\ncover 1 2\n");
    CHECK(parse_poset(chain) == Poset::chain(3));
    CHECK(read_poset_file(fixture::data_path("antichain4.poset")) == Poset::antichain(4));
    CHECK_THROWS_WITH_AS(read_poset_file(fixture::data_path("cyclic.poset")), doctest::Contains("not a partial order"),
                         InputError);
    std::istringstream self("elements 2\ncover 1 1\n");
    CHECK_THROWS_AS(parse_poset(self), InputError);
    std::istringstream round(to_text(Poset(4, {{0, 1}, {2, 3}, {0, 3}})));
    CHECK(parse_poset(round) == Poset(4, {{0, 1}, {2, 3}, {0, 3}}));
}
