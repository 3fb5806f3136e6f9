#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "zsp/partition.hpp"

using namespace zsp;

TEST_CASE("factor_pow2") {
    CHECK(factor_pow2(11) == std::pair<u32, u64>{1, 5});
    CHECK(factor_pow2(29) == std::pair<u32, u64>{2, 7});
    CHECK(factor_pow2(41) == std::pair<u32, u64>{3, 5});
    CHECK_THROWS_AS(factor_pow2(1), std::invalid_argument);
}

TEST_CASE("largest_prime_factor") {
    CHECK(largest_prime_factor(0) == 1);
    CHECK(largest_prime_factor(1) == 1);
    CHECK(largest_prime_factor(4) == 2);
    CHECK(largest_prime_factor(10) == 5);
    CHECK(largest_prime_factor(97) == 97);
}

TEST_CASE("field kernels") {
    auto c = build_context(11, 23);
    CHECK(field_kernel(c, Side::S) == std::vector<u64>{22, 231});
    CHECK(field_kernel(c, Side::P) == std::vector<u64>{23, 230});

    auto c2 = build_context(29, 41);
    CHECK(field_kernel(c2, Side::P) == std::vector<u64>{41, 492, 697, 1148});
    CHECK(field_kernel(c2, Side::S).size() == 8);
}

TEST_CASE("ring kernel") {
    auto c = build_context(11, 23);
    CHECK(ring_kernel(c) == std::vector<u64>{1, 45, 208, 252});

    auto c2 = build_context(29, 41);
    auto kern = ring_kernel(c2);
    CHECK(kern.size() == 32);
    // membership characterization: annihilated to 1 within n squarings
    for (u64 w = 0; w < c2.N; ++w) {
        bool in = std::binary_search(kern.begin(), kern.end(), w);
        CHECK(in == (w != 0 && pow2iter(w, c2.n, c2) == 1));
    }

    CHECK(ring_kernel(build_context(3, 7)).size() == 4);
}

TEST_CASE("classify examples") {
    auto c = build_context(11, 23);
    CHECK(classify(0, c) == SubsetClass::Zero);
    CHECK(classify(24, c) == SubsetClass::OffByOneP);
    CHECK(classify(2, c) == SubsetClass::DSet);
    CHECK(classify(22, c) == SubsetClass::SKernel);
    CHECK(classify(23, c) == SubsetClass::PKernel);
    CHECK(classify(1, c) == SubsetClass::RingKernel);
    CHECK_THROWS_AS(classify(253, c), std::invalid_argument);
}

TEST_CASE("cardinalities") {
    auto rep = cardinalities(build_context(11, 23));
    CHECK(rep.n_multiples == 33);
    CHECK(rep.n_offbyone == 60);
    CHECK(rep.n_dset == 160);
    CHECK(rep.n_kernel == 4);
    CHECK(rep.n_dset_cyclic == 40);
    CHECK(rep.claimed_max_cycle == 10);  // lcm(2, 5)
    CHECK_FALSE(rep.observed_max_cycle.has_value());

    auto rep2 = cardinalities(build_context(29, 41));
    CHECK(rep2.n_kernel == 32);
    CHECK(rep2.n_dset == 768);
    CHECK(rep2.n_dset_cyclic == 24);

    auto rep3 = cardinalities(build_context(3, 7));
    CHECK(rep3.n_dset == 0);
    CHECK(rep3.claimed_max_cycle == 1);  // degenerate q = r = 1
}

TEST_CASE("enumerate_class") {
    auto c = build_context(11, 23);
    CHECK(enumerate_class(c, SubsetClass::Zero) == std::vector<u64>{0});
    CHECK(enumerate_class(c, SubsetClass::RingKernel) == std::vector<u64>{1, 45, 208, 252});
    CHECK(enumerate_class(c, SubsetClass::DSet).size() == 160);
    CHECK_THROWS_AS(enumerate_class(c, SubsetClass::DSet, 100), BudgetExceeded);
}

TEST_CASE("the nine cells partition the ring") {
    for (auto [s, p] : {std::pair<u64, u64>{11, 23}, {3, 7}, {29, 41}, {13, 17}}) {
        auto c = build_context(s, p);
        auto counts = class_counts(c);
        std::vector<u64> all;
        for (int i = 0; i < kSubsetClassCount; ++i) {
            auto members = enumerate_class(c, static_cast<SubsetClass>(i));
            REQUIRE(members.size() == counts[i]);
            all.insert(all.end(), members.begin(), members.end());
        }
        std::sort(all.begin(), all.end());
        REQUIRE(all.size() == c.N);
        for (u64 w = 0; w < c.N; ++w) REQUIRE(all[w] == w);

        auto rep = cardinalities(c);
        CHECK(counts[int(SubsetClass::DSet)] == rep.n_dset);
        CHECK(counts[int(SubsetClass::RingKernel)] == rep.n_kernel);
        u64 mult = counts[int(SubsetClass::Zero)] + counts[int(SubsetClass::SKernel)] +
                   counts[int(SubsetClass::SFieldRest)] + counts[int(SubsetClass::PKernel)] +
                   counts[int(SubsetClass::PFieldRest)];
        CHECK(mult == rep.n_multiples);
        CHECK(rep.n_multiples + rep.n_offbyone + rep.n_dset == c.N);
    }
}

TEST_CASE("off-by-one power characterization") {
    // the e-family tags are exactly the residues whose opposite-prime
    // component is annihilated within the matching kernel height
    for (auto [s, p] : {std::pair<u64, u64>{11, 23}, {29, 41}}) {
        auto c = build_context(s, p);
        for (u64 w = 0; w < c.N; ++w) {
            auto tag = classify(w, c);
            bool p_family = tag == SubsetClass::OffByOneP || tag == SubsetClass::RingKernel;
            REQUIRE(p_family == (w % s != 0 && powmod(w % p, u64{1} << c.l, p) == 1));
            bool s_family = tag == SubsetClass::OffByOneS || tag == SubsetClass::RingKernel;
            REQUIRE(s_family == (w % p != 0 && powmod(w % s, u64{1} << c.k, s) == 1));
        }
    }
}

TEST_CASE("d-set iterates stay away from the primes") {
    auto c = build_context(11, 23);
    for (u64 w : enumerate_class(c, SubsetClass::DSet)) {
        u64 v = w;
        for (u64 i = 0; i < 2 * c.n + 20 + 1; ++i) {
            u64 ms = v % 11, mp = v % 23;
            REQUIRE(ms != 0);
            REQUIRE(ms != 1);
            REQUIRE(ms != 10);
            REQUIRE(mp != 0);
            REQUIRE(mp != 1);
            REQUIRE(mp != 22);
            v = fsquare(v, c);
        }
    }
}
