#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "zsp/ring.hpp"

using namespace zsp;

namespace {

// brute-force root finder, the reference the library path is checked against
std::vector<u64> naive_roots(u64 a, u64 m) {
    std::vector<u64> out;
    for (u64 x = 0; x < m; ++x)
        if (x * x % m == a) out.push_back(x);
    return out;
}

}  // namespace

TEST_CASE("build_context derives the documented constants") {
    auto c = build_context(11, 23);
    CHECK(c.N == 253);
    CHECK(c.alpha == 2);
    CHECK(c.beta == 1);
    CHECK(c.u_s == 231);
    CHECK(c.u_p == 23);
    CHECK(c.k == 1);
    CHECK(c.q == 5);
    CHECK(c.l == 1);
    CHECK(c.r == 11);
    CHECK(c.n == 1);

    auto c2 = build_context(29, 41);
    CHECK(c2.u_s == 493);
    CHECK(c2.u_p == 697);
    CHECK(c2.k == 2);
    CHECK(c2.q == 7);
    CHECK(c2.l == 3);
    CHECK(c2.r == 5);

    auto c3 = build_context(3, 7);
    CHECK(c3.beta == 1);
    CHECK(c3.u_p == 7);
    CHECK(c3.u_s == 15);
}

TEST_CASE("build_context rejects bad input") {
    CHECK_THROWS_AS(build_context(9, 11), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(build_context(11, 11), std::invalid_argument);  // equal
    CHECK_THROWS_AS(build_context(2, 11), std::invalid_argument);   // even
    CHECK_THROWS_AS(build_context(0, 11), std::invalid_argument);
    // product over 2^62
    CHECK_THROWS_AS(build_context(2147483647ull, 4294967291ull), std::invalid_argument);
}

TEST_CASE("context invariants hold for assorted pairs") {
    for (auto [s, p] : {std::pair<u64, u64>{11, 23}, {29, 41}, {3, 7}, {13, 17}, {5, 19}}) {
        auto c = build_context(s, p);
        CHECK(static_cast<unsigned __int128>(c.beta) * p -
                  static_cast<unsigned __int128>(c.alpha) * s ==
              1);
        CHECK(addmod(c.u_s, c.u_p, c.N) == 1);
        CHECK(mulmod(c.u_s, c.u_s, c.N) == c.u_s);
        CHECK(mulmod(c.u_p, c.u_p, c.N) == c.u_p);
        CHECK((u64{1} << c.k) * c.q + 1 == s);
        CHECK((u64{1} << c.l) * c.r + 1 == p);
    }
}

TEST_CASE("fsquare and pow2iter") {
    auto c = build_context(11, 23);
    CHECK(fsquare(25, c) == 119);
    CHECK(fsquare(0, c) == 0);
    auto c2 = build_context(29, 41);
    CHECK(fsquare(697, c2) == 697);

    CHECK(pow2iter(2, 0, c) == 2);
    CHECK(pow2iter(24, 1, c) == 70);
    u64 v = pow2iter(25, 4, c);
    CHECK(v % 11 == 3);
    CHECK(v % 23 == 9);
}

TEST_CASE("h_split and h_join") {
    auto c = build_context(11, 23);
    CHECK(h_split(1, c) == CrtPair{231, 23});
    CHECK(h_split(0, c) == CrtPair{0, 0});
    CHECK(h_split(24, c) == CrtPair{231, 46});

    auto c2 = build_context(29, 41);
    CHECK(h_join({493, 697}, c2) == 1);
    CHECK(h_join({232, 41}, c2) == 273);
    CHECK(h_join({0, 0}, c2) == 0);
    CHECK_THROWS_AS(h_join({1, 23}, c), std::domain_error);   // 1 not a multiple of 11
    CHECK_THROWS_AS(h_join({22, 24}, c), std::domain_error);  // 24 not a multiple of 23
}

TEST_CASE("h round trip and ring laws, exhaustive on small pairs") {
    for (auto [s, p] : {std::pair<u64, u64>{11, 23}, {3, 7}, {13, 17}}) {
        auto c = build_context(s, p);
        for (u64 w = 0; w < c.N; ++w) {
            auto pr = h_split(w, c);
            CHECK(pr.xs % s == 0);
            CHECK(pr.yp % p == 0);
            REQUIRE(h_join(pr, c) == w);
        }
        for (u64 a = 0; a < c.N; ++a)
            for (u64 b = a; b < c.N; ++b) {
                auto pa = h_split(a, c), pb = h_split(b, c);
                auto psum = h_split(addmod(a, b, c.N), c);
                REQUIRE(psum.xs == addmod(pa.xs, pb.xs, c.N));
                REQUIRE(psum.yp == addmod(pa.yp, pb.yp, c.N));
                auto pprod = h_split(mulmod(a, b, c.N), c);
                REQUIRE(pprod.xs == mulmod(pa.xs, pb.xs, c.N));
                REQUIRE(pprod.yp == mulmod(pa.yp, pb.yp, c.N));
            }
    }
}

TEST_CASE("squaring has exactly four fixed points") {
    auto c = build_context(11, 23);
    std::vector<u64> fixed;
    for (u64 w = 0; w < c.N; ++w)
        if (fsquare(w, c) == w) fixed.push_back(w);
    CHECK(fixed == std::vector<u64>{0, 1, c.u_p, c.u_s});
}

TEST_CASE("sqrt_mod_prime matches the brute-force scan") {
    CHECK(sqrt_mod_prime(3, 11) == std::vector<u64>{5, 6});
    CHECK(sqrt_mod_prime(0, 11) == std::vector<u64>{0});
    CHECK(sqrt_mod_prime(2, 11).empty());
    for (u64 m : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 29ull, 41ull, 97ull, 193ull, 769ull}) {
        for (u64 a = 0; a < m; ++a) REQUIRE(sqrt_mod_prime(a, m) == naive_roots(a, m));
    }
    CHECK_THROWS_AS(sqrt_mod_prime(1, 4), std::invalid_argument);
}

TEST_CASE("sqrt_mod_n structure") {
    auto c = build_context(11, 23);
    CHECK(sqrt_mod_n(3, c) == std::vector<u64>{16, 39, 214, 237});
    CHECK(sqrt_mod_n(1, c) == std::vector<u64>{1, 45, 208, 252});
    CHECK(sqrt_mod_n(0, c) == std::vector<u64>{0});

    for (auto [s, p] : {std::pair<u64, u64>{11, 23}, {3, 7}}) {
        auto ctx = build_context(s, p);
        u64 total = 0;
        for (u64 a = 0; a < ctx.N; ++a) {
            auto roots = sqrt_mod_n(a, ctx);
            total += roots.size();
            for (u64 r0 : roots) REQUIRE(mulmod(r0, r0, ctx.N) == a);
            if (std::gcd(a, ctx.N) == 1) {
                REQUIRE((roots.size() == 0 || roots.size() == 4));
                for (u64 r0 : roots)
                    REQUIRE(std::binary_search(roots.begin(), roots.end(), ctx.N - r0));
            }
        }
        CHECK(total == ctx.N);  // every residue is a root of its own square
    }
}

TEST_CASE("crt_join picks the right residues") {
    auto c = build_context(29, 41);
    for (u64 w : {0ull, 1ull, 493ull, 1000ull, 1188ull}) {
        CHECK(crt_join(w % 29, w % 41, c) == w);
    }
}

TEST_CASE("is_prime is exact on small numbers") {
    u64 count = 0;
    for (u64 n = 0; n < 2000; ++n) {
        bool naive = n >= 2;
        for (u64 d = 2; d * d <= n && naive; ++d)
            if (n % d == 0) naive = false;
        REQUIRE(is_prime(n) == naive);
        count += naive;
    }
    CHECK(count == 303);
    CHECK(is_prime(2147483647ull));
    CHECK_FALSE(is_prime(2147483647ull * 3));
}
