#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "zsp/factor.hpp"
#include "zsp/graph.hpp"
#include "zsp/partition.hpp"

using namespace zsp;

TEST_CASE("cyclic_attack") {
    auto r1 = cyclic_attack(253, 25, 64);
    CHECK(r1.factor == 11);
    CHECK(r1.iterations <= 64);

    auto r2 = cyclic_attack(253, 24, 64);
    CHECK(r2.factor == 23);

    auto r3 = cyclic_attack(253, 23, 64);
    CHECK(r3.factor == 23);
    CHECK(r3.iterations == 0);  // gcd shortcut for zero-divisor input

    // kernel elements never separate: every iterate is 1 mod both primes
    auto r4 = cyclic_attack(253, 45, 64);
    CHECK_FALSE(r4.factor.has_value());

    CHECK_THROWS_AS(cyclic_attack(253, 0, 64), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_attack(253, 253, 64), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_attack(256, 5, 64), std::invalid_argument);
}

TEST_CASE("cyclic_attack succeeds on the whole d-set when periods differ") {
    auto c = build_context(11, 23);
    auto g = build_graph(full_ring(c), c);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        u64 w = g.nodes[i];
        if (classify(w, c) != SubsetClass::DSet) continue;
        const auto& cyc = g.cycles[g.cycle_index[i]];
        if (cyc.s_period == cyc.p_period) continue;
        u64 budget = 4 * std::lcm(cyc.s_period, cyc.p_period);
        auto res = cyclic_attack(c.N, w, budget);
        REQUIRE(res.factor.has_value());
        REQUIRE(c.N % *res.factor == 0);
        REQUIRE(res.iterations <= budget);
    }
}

TEST_CASE("collision_factor") {
    CHECK(collision_factor(253, 16, 39).factor == 23);
    CHECK(collision_factor(253, 1, 45).factor == 11);
    CHECK_FALSE(collision_factor(253, 16, 237).factor.has_value());  // y = -x
    CHECK_FALSE(collision_factor(253, 16, 16).factor.has_value());
    CHECK_THROWS_AS(collision_factor(253, 16, 40), std::invalid_argument);  // 16^2 != 40^2
}

TEST_CASE("treelevel_pairs") {
    auto c = build_context(11, 23);
    auto pairs3 = treelevel_pairs(3, c);
    CHECK(pairs3 == std::vector<std::pair<u64, u64>>{{16, 39}, {16, 214}});
    auto pairs1 = treelevel_pairs(1, c);
    CHECK(pairs1 == std::vector<std::pair<u64, u64>>{{1, 45}, {1, 208}});

    CHECK_THROWS_AS(treelevel_pairs(0, c), std::domain_error);
    CHECK_THROWS_AS(treelevel_pairs(23, c), std::domain_error);  // zero divisor
    CHECK_THROWS_AS(treelevel_pairs(2, c), std::domain_error);   // not cyclic
}

TEST_CASE("every treelevel pair factors, for every cyclic unit") {
    for (auto [s, p] : {std::pair<u64, u64>{11, 23}, {3, 7}, {29, 41}}) {
        auto c = build_context(s, p);
        auto g = build_graph(full_ring(c), c);
        for (size_t i = 0; i < g.nodes.size(); ++i) {
            u64 a = g.nodes[i];
            if (!g.cyclic[i] || std::gcd(a, c.N) != 1) continue;
            auto pairs = treelevel_pairs(a, c);
            REQUIRE(pairs.size() == 2);
            for (auto [x, y] : pairs) {
                auto res = collision_factor(c.N, x, y);
                REQUIRE(res.factor.has_value());
                REQUIRE((*res.factor == s || *res.factor == p));
            }
        }
    }
}
