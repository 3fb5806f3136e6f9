#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "zsp/graph.hpp"

using namespace zsp;

TEST_CASE("build_graph on the kernel of (29,41)") {
    auto c = build_context(29, 41);
    auto g = build_graph(ring_kernel(c), c);
    REQUIRE(g.cycles.size() == 1);
    CHECK(g.cycles[0].nodes == std::vector<u64>{1});
    CHECK(g.nodes.size() == 32);
    // unity's tree holds everything
    for (size_t i = 0; i < g.nodes.size(); ++i) CHECK(g.tree_root[i] == 1);
}

TEST_CASE("build_graph edge cases") {
    auto c = build_context(11, 23);
    auto g = build_graph({0}, c);
    REQUIRE(g.cycles.size() == 1);
    CHECK(g.cycles[0].nodes == std::vector<u64>{0});

    CHECK_THROWS_AS(build_graph({2}, c), std::domain_error);  // not closed
    CHECK_THROWS_AS(build_graph(full_ring(c), c, 10), BudgetExceeded);

    auto full = build_graph(full_ring(c), c);
    u64 twenty = 0;
    for (const auto& cyc : full.cycles)
        if (cyc.length == 20) ++twenty;
    CHECK(twenty == 2);
}

TEST_CASE("cycles_of the embedded fields of (11,23)") {
    auto c = build_context(11, 23);
    auto pc = cycles_of(embedded_field(c, Side::P), c);
    REQUIRE(pc.size() == 3);
    CHECK(pc[0].nodes == std::vector<u64>{0});
    CHECK(pc[1].nodes == std::vector<u64>{23});
    CHECK(pc[2].nodes == std::vector<u64>{69, 207, 92, 115});

    auto sc = cycles_of(embedded_field(c, Side::S), c);
    REQUIRE(sc.size() == 3);
    CHECK(sc[0].nodes == std::vector<u64>{0});
    CHECK(sc[1].nodes == std::vector<u64>{231});
    CHECK(sc[2].length == 10);

    auto one = cycles_of({1}, c);
    REQUIRE(one.size() == 1);
    CHECK(one[0].length == 1);
}

TEST_CASE("cyclic nodes project to cyclic components") {
    auto c = build_context(11, 23);
    auto g = build_graph(full_ring(c), c);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (!g.cyclic[i]) continue;
        auto pr = h_split(g.nodes[i], c);
        CHECK(is_cyclic_element(pr.xs, c));
        CHECK(is_cyclic_element(pr.yp, c));
    }
}

TEST_CASE("tree_of") {
    auto c2941 = build_context(29, 41);
    auto t = tree_of(1, 3, c2941);
    REQUIRE(t.levels.size() == 4);
    CHECK(t.levels[0].size() == 1);
    CHECK(t.levels[1].size() == 3);
    CHECK(t.levels[2].size() == 12);
    CHECK(t.levels[3].size() == 16);

    auto c = build_context(11, 23);
    auto t1 = tree_of(1, 1, c);
    CHECK(t1.levels[1] == std::vector<u64>{45, 208, 252});
    auto t3 = tree_of(3, 1, c);
    CHECK(t3.levels[1] == std::vector<u64>{39, 214, 237});
    // the cyclic square root 16 is not part of the tree
    CHECK_FALSE(t3.contains(16));

    CHECK_THROWS_AS(tree_of(2, 1, c), std::domain_error);  // 2 is not cyclic
}

TEST_CASE("level_of") {
    auto c = build_context(29, 41);
    auto t = tree_of(1, 3, c);
    CHECK(level_of(916, t) == 3);
    CHECK(level_of(1, t) == 0);
    CHECK_THROWS_AS(level_of(2, t), std::domain_error);

    auto c1123 = build_context(11, 23);
    auto t1 = tree_of(1, 1, c1123);
    CHECK(level_of(45, t1) == 1);
    // kernel level equals the least i with w^(2^i) = 1
    for (u32 lvl = 0; lvl < t.levels.size(); ++lvl)
        for (u64 w : t.levels[lvl]) {
            u32 i = 0;
            u64 v = w;
            while (v != 1) {
                v = fsquare(v, c);
                ++i;
            }
            REQUIRE(i == lvl);
        }
}

TEST_CASE("arc_of") {
    auto c = build_context(11, 23);
    CHECK(arc_of(3, 1, c).nodes == std::vector<u64>{3, 16});
    CHECK(arc_of(1, 2, c).nodes == std::vector<u64>{1, 1, 1});
    CHECK(arc_of(69, 2, c).nodes == std::vector<u64>{69, 115, 92});
    CHECK_THROWS_AS(arc_of(2, 1, c), std::domain_error);
    // wraps past the cycle length
    auto arc = arc_of(69, 5, c);
    CHECK(arc.nodes == std::vector<u64>{69, 115, 92, 207, 69, 115});
}

TEST_CASE("arc_tree_mul") {
    auto c = build_context(11, 23);
    auto kernel_tree = tree_of(1, 1, c);

    auto same = arc_tree_mul(arc_of(1, 1, c), kernel_tree, c);
    CHECK(same.levels == kernel_tree.levels);
    CHECK(same.parent == kernel_tree.parent);

    auto rooted3 = arc_tree_mul(arc_of(3, 1, c), kernel_tree, c);
    CHECK(rooted3.root == 3);
    CHECK(rooted3.levels[1] == std::vector<u64>{39, 214, 237});
    auto direct = tree_of(3, 1, c);
    CHECK(rooted3.levels == direct.levels);
    CHECK(rooted3.parent == direct.parent);

    // 115 = 5*23 shares a factor with N
    CHECK_THROWS_AS(arc_tree_mul(arc_of(69, 1, c), kernel_tree, c), std::domain_error);
    // height mismatch
    CHECK_THROWS_AS(arc_tree_mul(arc_of(3, 0, c), kernel_tree, c), std::domain_error);
}

TEST_CASE("arc_tree_mul equals tree_of for every cyclic unit of (11,23)") {
    auto c = build_context(11, 23);
    auto kernel_tree = tree_of(1, c.n, c);
    auto g = build_graph(full_ring(c), c);
    u64 tested = 0;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        u64 a = g.nodes[i];
        if (!g.cyclic[i] || std::gcd(a, c.N) != 1) continue;
        auto produced = arc_tree_mul(arc_of(a, c.n, c), kernel_tree, c);
        auto direct = tree_of(a, c.n, c);
        REQUIRE(produced.root == direct.root);
        REQUIRE(produced.levels == direct.levels);
        REQUIRE(produced.parent == direct.parent);
        ++tested;
    }
    CHECK(tested == 55);  // unity + the unit C4, C10 and both C20s
}

TEST_CASE("combine_cycles") {
    auto c = build_context(11, 23);
    auto pc = cycles_of(embedded_field(c, Side::P), c);
    auto sc = cycles_of(embedded_field(c, Side::S), c);
    const auto& c4 = pc[2];
    const auto& c10 = sc[2];

    auto combined = combine_cycles(c10, c4, c);
    REQUIRE(combined.size() == 2);  // gcd(10, 4)
    for (const auto& rec : combined) {
        CHECK(rec.length == 20);  // lcm(10, 4)
        CHECK(rec.s_period == 4);
        CHECK(rec.p_period == 10);
        CHECK(rec.s_laps == 5);
        CHECK(rec.p_laps == 2);
    }
    // the union covers every pairwise join
    std::set<u64> got;
    for (const auto& rec : combined) got.insert(rec.nodes.begin(), rec.nodes.end());
    std::set<u64> want;
    for (u64 a : c10.nodes)
        for (u64 b : c4.nodes) want.insert(addmod(a, b, c.N));
    CHECK(got == want);

    // fixed-point inputs give the unity cycle
    auto us_cyc = cycles_of({c.u_s}, c)[0];
    auto up_cyc = cycles_of({c.u_p}, c)[0];
    auto unity = combine_cycles(us_cyc, up_cyc, c);
    REQUIRE(unity.size() == 1);
    CHECK(unity[0].nodes == std::vector<u64>{1});

    CHECK_THROWS_AS(combine_cycles(c4, c10, c), std::domain_error);  // sides swapped
}

TEST_CASE("combine over all field-cycle pairs reproduces the ring's cycles") {
    for (auto [s, p] : {std::pair<u64, u64>{11, 23}, {29, 41}, {3, 7}}) {
        auto c = build_context(s, p);
        auto s_cycles = cycles_of(embedded_field(c, Side::S), c);
        auto p_cycles = cycles_of(embedded_field(c, Side::P), c);
        std::vector<std::vector<u64>> combined;
        for (const auto& cs : s_cycles)
            for (const auto& cp : p_cycles)
                for (auto& rec : combine_cycles(cs, cp, c)) combined.push_back(rec.nodes);
        std::vector<std::vector<u64>> actual;
        for (auto& rec : cycles_of(full_ring(c), c)) actual.push_back(rec.nodes);
        std::sort(combined.begin(), combined.end());
        std::sort(actual.begin(), actual.end());
        REQUIRE(combined == actual);
    }
}

TEST_CASE("inner_cycles") {
    auto c = build_context(11, 23);
    auto g = build_graph(full_ring(c), c);
    for (const auto& rec : g.cycles) {
        if (rec.length != 20) continue;
        auto inner = inner_cycles(rec, c);
        CHECK(inner.s_cycle.size() == 4);
        CHECK(inner.s_laps == 5);
        CHECK(inner.p_cycle.size() == 10);
        CHECK(inner.p_laps == 2);
        // projections are literal cycles of the embedded fields
        for (size_t t = 0; t < inner.s_cycle.size(); ++t) {
            CHECK(inner.s_cycle[t] % 23 == 0);
            CHECK(fsquare(inner.s_cycle[t], c) == inner.s_cycle[(t + 1) % 4]);
        }
        for (size_t t = 0; t < inner.p_cycle.size(); ++t) {
            CHECK(inner.p_cycle[t] % 11 == 0);
            CHECK(fsquare(inner.p_cycle[t], c) == inner.p_cycle[(t + 1) % 10]);
        }
        // period congruences
        for (u64 w : rec.nodes) {
            CHECK(pow2iter(w, 4, c) % 11 == w % 11);
            CHECK(pow2iter(w, 10, c) % 23 == w % 23);
        }
    }

    auto unity = cycles_of({1}, c)[0];
    auto triv = inner_cycles(unity, c);
    CHECK(triv.s_cycle == std::vector<u64>{c.u_p});
    CHECK(triv.p_cycle == std::vector<u64>{c.u_s});
    CHECK(triv.s_laps == 1);
    CHECK(triv.p_laps == 1);

    // a cycle wholly inside the s-multiples: zero p-side... the s-side
    // projection is pinned at 0
    auto sc = cycles_of(embedded_field(c, Side::S), c);
    auto inner10 = inner_cycles(sc[2], c);
    CHECK(inner10.s_cycle == std::vector<u64>{0});
    CHECK(inner10.s_laps == 10);
    CHECK(inner10.p_cycle.size() == 10);
}

TEST_CASE("every node is in exactly one cycle or one tree") {
    for (auto [s, p] : {std::pair<u64, u64>{11, 23}, {3, 7}}) {
        auto c = build_context(s, p);
        auto g = build_graph(full_ring(c), c);
        u64 cyclic_count = 0;
        for (size_t i = 0; i < g.nodes.size(); ++i) {
            if (g.cyclic[i]) {
                ++cyclic_count;
                CHECK(g.tree_root[i] == g.nodes[i]);
            } else {
                // the tree root is cyclic and the orbit reaches it
                auto root_idx = g.index_of(g.tree_root[i]);
                REQUIRE(root_idx.has_value());
                CHECK(g.cyclic[*root_idx]);
                u64 v = g.nodes[i];
                bool reached = false;
                for (u64 t = 0; t <= c.N && !reached; ++t) {
                    if (v == g.tree_root[i]) reached = true;
                    v = fsquare(v, c);
                }
                CHECK(reached);
            }
        }
        u64 in_cycles = 0;
        for (const auto& rec : g.cycles) in_cycles += rec.length;
        CHECK(cyclic_count == in_cycles);
    }
}

TEST_CASE("kernel tree is a quad tree") {
    auto c = build_context(29, 41);
    auto t = tree_of(1, c.n, c);
    u64 total = 0;
    for (const auto& lv : t.levels) total += lv.size();
    CHECK(total == 32);
    CHECK(t.levels.back().size() > 0);
    // interior branch factors multiply out of the component kernels
    for (u32 i = 0; i < c.n; ++i)
        for (u64 v : t.levels[i]) {
            u64 expected = sqrt_mod_n(v, c).size();
            if (v == 1 && expected > 0) --expected;
            u64 got = 0;
            for (u64 ch : t.levels[i + 1])
                if (t.parent.at(ch) == v) ++got;
            REQUIRE(got == expected);
        }
    // level = max of component levels
    auto stree = tree_of(c.u_s, c.l, c);
    auto ptree = tree_of(c.u_p, c.k, c);
    for (u32 i = 0; i < t.levels.size(); ++i)
        for (u64 w : t.levels[i]) {
            auto pr = h_split(w, c);
            REQUIRE(std::max(level_of(pr.xs, stree), level_of(pr.yp, ptree)) == i);
        }
}
