#include "zsp/factor.hpp"

#include <numeric>

#include "zsp/graph.hpp"

namespace zsp {

FactorResult cyclic_attack(u64 n, u64 w, u64 max_iter) {
    if (n < 9 || n % 2 == 0) throw std::invalid_argument("modulus must be an odd composite");
    if (w <= 1 || w >= n) throw std::invalid_argument("start must satisfy 1 < w < n");

    FactorResult res{std::nullopt, 0, FactorMethod::Cyclic};
    u64 g = std::gcd(w, n);
    if (g > 1) {
        res.factor = g;
        return res;
    }

    // anchors sit at positions 2^m of the orbit; the hare covers
    // (2^m, 2^(m+1)], so window m sees iterate differences 1..2^m.
    // gcds are batched 8 steps at a time and replayed stepwise when a
    // batch collapses to n.
    u64 x = mulmod(w, w, n);  // position 1
    u64 it = 1;
    u64 anchor = x;
    u64 window = 1;
    while (it < max_iter) {
        u64 d = 1;
        while (d <= window && it < max_iter) {
            u64 batch_first_it = it;
            u64 replay_from = x;
            u64 prod = 1;
            u64 steps = 0;
            while (d <= window && it < max_iter && steps < 8) {
                x = mulmod(x, x, n);
                ++it;
                ++d;
                ++steps;
                prod = mulmod(prod, submod(x, anchor, n), n);
            }
            g = std::gcd(prod, n);
            if (g == n) {
                // replay the batch one gcd per step
                u64 y = replay_from;
                for (u64 t = 0; t < steps; ++t) {
                    y = mulmod(y, y, n);
                    g = std::gcd(submod(y, anchor, n), n);
                    if (g > 1 && g < n) {
                        res.factor = g;
                        res.iterations = batch_first_it + t + 1;
                        return res;
                    }
                }
            } else if (g > 1) {
                res.factor = g;
                res.iterations = it;
                return res;
            }
        }
        anchor = x;
        window *= 2;
    }
    res.iterations = it;
    return res;
}

FactorResult collision_factor(u64 n, u64 x, u64 y) {
    if (n < 9 || x >= n || y >= n) throw std::invalid_argument("arguments out of range");
    if (mulmod(x, x, n) != mulmod(y, y, n))
        throw std::invalid_argument("x^2 and y^2 must agree mod n");
    FactorResult res{std::nullopt, 0, FactorMethod::Collision};
    u64 g = std::gcd(submod(y, x, n), n);
    if (g > 1 && g < n) {
        res.factor = g;
        return res;
    }
    g = std::gcd(addmod(x, y, n), n);
    if (g > 1 && g < n) res.factor = g;
    return res;  // x = +-y leaves nothing to use
}

std::vector<std::pair<u64, u64>> treelevel_pairs(u64 a, const RingContext& ctx) {
    if (a >= ctx.N) throw std::invalid_argument("residue out of range");
    if (a == 0 || std::gcd(a, ctx.N) != 1) throw std::domain_error("root must be a unit");
    if (!is_cyclic_element(a, ctx)) throw std::domain_error("root must be a cyclic element");
    auto roots = sqrt_mod_n(a, ctx);
    if (roots.empty()) throw std::domain_error("no usable square roots");
    u64 x = roots[0];
    std::vector<std::pair<u64, u64>> out;
    for (u64 y : roots) {
        if (y == x || y == ctx.N - x) continue;
        auto got = collision_factor(ctx.N, x, y);
        if (!got.factor || ctx.N % *got.factor != 0)
            throw std::logic_error("square-root pair failed to factor");
        out.emplace_back(x, y);
    }
    return out;
}

}  // namespace zsp
