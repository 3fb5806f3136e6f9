#include "zsp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>

#include "zsp/factor.hpp"
#include "zsp/graph.hpp"
#include "zsp/groups.hpp"
#include "zsp/oracle.hpp"
#include "zsp/partition.hpp"

namespace zsp::checks {

namespace {

void explain(std::string* why, const std::string& msg) {
    if (why) {
        if (!why->empty()) *why += "; ";
        *why += msg;
    }
}

// reduction by a small runtime modulus without the div unit; exact for
// products below 2^52
struct SmallMod {
    u64 n;
    double inv;
    explicit SmallMod(u64 n_) : n(n_), inv(1.0 / static_cast<double>(n_)) {}
    u64 mul(u64 a, u64 b) const {
        u64 t = a * b;
        u64 quot = static_cast<u64>(static_cast<double>(t) * inv);
        i64 rem = static_cast<i64>(t - quot * n);
        if (rem < 0) rem += n;
        if (rem >= static_cast<i64>(n)) rem -= n;
        return static_cast<u64>(rem);
    }
};

}  // namespace

bool context_invariants(const RingContext& c, std::string* why) {
    bool ok = true;
    if (static_cast<unsigned __int128>(c.beta) * c.p - static_cast<unsigned __int128>(c.alpha) * c.s != 1) {
        ok = false;
        explain(why, "-alpha*s + beta*p != 1");
    }
    if (!(c.alpha > 0 && c.alpha < c.p && c.beta > 0 && c.beta < c.s)) {
        ok = false;
        explain(why, "bezout coefficients out of range");
    }
    if ((u64{1} << c.k) * c.q + 1 != c.s || c.q % 2 == 0) {
        ok = false;
        explain(why, "s-1 decomposition wrong");
    }
    if ((u64{1} << c.l) * c.r + 1 != c.p || c.r % 2 == 0) {
        ok = false;
        explain(why, "p-1 decomposition wrong");
    }
    if (addmod(c.u_s, c.u_p, c.N) != 1 || mulmod(c.u_s, c.u_s, c.N) != c.u_s ||
        mulmod(c.u_p, c.u_p, c.N) != c.u_p) {
        ok = false;
        explain(why, "fixed points are not complementary idempotents");
    }
    return ok;
}

bool h_round_trip(const RingContext& c, u64 budget, std::string* why) {
    if (c.N > budget) throw BudgetExceeded("h_round_trip: N exceeds the budget");
    for (u64 w = 0; w < c.N; ++w) {
        CrtPair pr = h_split(w, c);
        if (pr.xs % c.s != 0 || pr.yp % c.p != 0 || h_join(pr, c) != w) {
            explain(why, "h_join(h_split(w)) != w at w=" + std::to_string(w));
            return false;
        }
    }
    return true;
}

bool h_ring_isomorphism(const RingContext& c, u64 budget, std::string* why) {
    u64 N = c.N;
    if (static_cast<unsigned __int128>(N) * N > budget)
        throw BudgetExceeded("h_ring_isomorphism: N^2 exceeds the budget");
    if (h_split(1, c) != CrtPair{c.u_s, c.u_p}) {
        explain(why, "h(1) is not the embedded unity pair");
        return false;
    }
    if (!h_round_trip(c, budget, why)) return false;  // bijectivity

    std::vector<u64> xs(N), yp(N);
    for (u64 w = 0; w < N; ++w) {
        CrtPair pr = h_split(w, c);
        xs[w] = pr.xs;
        yp[w] = pr.yp;
    }

    std::atomic<bool> failed{false};
    std::atomic<u64> bad_w1{0}, bad_w2{0};
    const bool small = N < (u64{1} << 26);
    SmallMod sm(N);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (u64 w1 = 0; w1 < N; ++w1) {
        if (failed.load(std::memory_order_relaxed)) continue;
        u64 x1 = xs[w1], y1 = yp[w1];
        u64 sum = addmod(w1, w1, N);
        u64 prod = mulmod(w1, w1, N);
        for (u64 w2 = w1; w2 < N; ++w2) {
            bool bad;
            if (small) {
                bad = xs[sum] != addmod(x1, xs[w2], N) || yp[sum] != addmod(y1, yp[w2], N) ||
                      xs[prod] != sm.mul(x1, xs[w2]) || yp[prod] != sm.mul(y1, yp[w2]);
            } else {
                bad = xs[sum] != addmod(x1, xs[w2], N) || yp[sum] != addmod(y1, yp[w2], N) ||
                      xs[prod] != mulmod(x1, xs[w2], N) || yp[prod] != mulmod(y1, yp[w2], N);
            }
            if (bad) {
                failed.store(true, std::memory_order_relaxed);
                bad_w1.store(w1);
                bad_w2.store(w2);
                break;
            }
            ++sum;
            if (sum == N) sum = 0;
            prod += w1;
            if (prod >= N) prod -= N;
        }
    }
    if (failed) {
        explain(why, "homomorphism law failed at (" + std::to_string(bad_w1) + ", " +
                         std::to_string(bad_w2) + ")");
        return false;
    }
    return true;
}

bool idempotents(const RingContext& c, u64 budget, std::string* why) {
    if (c.N > budget) throw BudgetExceeded("idempotents: N exceeds the budget");
    std::vector<u64> found;
    for (u64 w = 0; w < c.N; ++w)
        if (mulmod(w, w, c.N) == w) found.push_back(w);
    std::vector<u64> want{0, 1, c.u_s, c.u_p};
    std::sort(want.begin(), want.end());
    if (found != want) {
        explain(why, "squaring has unexpected fixed points");
        return false;
    }
    return true;
}

bool sqrt_structure(const RingContext& c, u64 budget, std::string* why) {
    if (c.N > budget) throw BudgetExceeded("sqrt_structure: N exceeds the budget");
    u64 total = 0;
    for (u64 a = 0; a < c.N; ++a) {
        auto roots = sqrt_mod_n(a, c);
        total += roots.size();
        for (u64 r0 : roots)
            if (mulmod(r0, r0, c.N) != a) {
                explain(why, "bogus root for a=" + std::to_string(a));
                return false;
            }
        if (std::gcd(a, c.N) == 1) {
            if (roots.size() != 0 && roots.size() != 4) {
                explain(why, "unit with root count " + std::to_string(roots.size()));
                return false;
            }
            for (u64 r0 : roots)
                if (!std::binary_search(roots.begin(), roots.end(), c.N - r0)) {
                    explain(why, "roots of a=" + std::to_string(a) + " not closed under negation");
                    return false;
                }
        }
    }
    // every residue is a root of its own square, so the counts must add to N
    if (total != c.N) {
        explain(why, "root sets do not cover the ring exactly");
        return false;
    }
    return true;
}

bool classification_matches_oracle(const RingContext& c, u64 budget, std::string* why) {
    if (c.N > budget) throw BudgetExceeded("classification: N exceeds the budget");
    for (u64 w = 0; w < c.N; ++w)
        if (classify(w, c) != oracle::brute_classify(w, c.s, c.p)) {
            explain(why, "classify disagrees with the oracle at w=" + std::to_string(w));
            return false;
        }
    return true;
}

bool partition_covers(const RingContext& c, u64 budget, std::string* why) {
    std::vector<u64> all;
    auto counts = class_counts(c, budget);
    for (int i = 0; i < kSubsetClassCount; ++i) {
        auto tag = static_cast<SubsetClass>(i);
        auto members = enumerate_class(c, tag, budget);
        if (members.size() != counts[i]) {
            explain(why, std::string("count mismatch for ") + std::string(to_string(tag)));
            return false;
        }
        all.insert(all.end(), members.begin(), members.end());
    }
    std::sort(all.begin(), all.end());
    for (u64 w = 0; w < c.N; ++w)
        if (all[w] != w) {
            explain(why, "cells do not partition the ring");
            return false;
        }
    return all.size() == c.N;
}

bool cardinality_formulas(const RingContext& c, u64 budget, std::string* why) {
    auto counts = class_counts(c, budget);
    auto rep = cardinalities(c);
    u64 mult = counts[int(SubsetClass::Zero)] + counts[int(SubsetClass::SKernel)] +
               counts[int(SubsetClass::SFieldRest)] + counts[int(SubsetClass::PKernel)] +
               counts[int(SubsetClass::PFieldRest)];
    u64 off = counts[int(SubsetClass::OffByOneS)] + counts[int(SubsetClass::OffByOneP)] +
              counts[int(SubsetClass::RingKernel)];
    bool ok = true;
    if (mult != rep.n_multiples) {
        ok = false;
        explain(why, "multiples count != s+p-1");
    }
    if (off != rep.n_offbyone) {
        ok = false;
        explain(why, "off-by-one count != 2^(k+l)(q+r-1)");
    }
    if (counts[int(SubsetClass::DSet)] != rep.n_dset) {
        ok = false;
        explain(why, "d-set count != 2^(k+l)(q-1)(r-1)");
    }
    if (counts[int(SubsetClass::RingKernel)] != rep.n_kernel) {
        ok = false;
        explain(why, "kernel count != 2^(k+l)");
    }
    if (mult + off + counts[int(SubsetClass::DSet)] != c.N) {
        ok = false;
        explain(why, "three categories do not add to N");
    }
    // cyclic elements inside the d-set
    auto graph = build_graph(full_ring(c, budget), c, budget);
    u64 dcyc = 0;
    for (size_t i = 0; i < graph.nodes.size(); ++i)
        if (graph.cyclic[i] && classify(graph.nodes[i], c) == SubsetClass::DSet) ++dcyc;
    if (dcyc != rep.n_dset_cyclic) {
        ok = false;
        explain(why, "cyclic d-set count != (q-1)(r-1): got " + std::to_string(dcyc));
    }
    return ok;
}

bool cycles_match_oracle(const RingContext& c, u64 budget, std::string* why) {
    auto graph = build_graph(full_ring(c, budget), c, budget);
    auto brute = oracle::brute_graph(c.N, budget);
    if (graph.cycles.size() != brute.cycles.size()) {
        explain(why, "cycle counts differ");
        return false;
    }
    for (size_t i = 0; i < graph.cycles.size(); ++i)
        if (graph.cycles[i].nodes != brute.cycles[i]) {
            explain(why, "cycle " + std::to_string(i) + " differs");
            return false;
        }
    for (u64 w = 0; w < c.N; ++w) {
        auto idx = graph.index_of(w);
        if (static_cast<bool>(graph.cyclic[*idx]) != static_cast<bool>(brute.is_cyclic[w]) ||
            graph.tree_root[*idx] != brute.tree_root[w] ||
            graph.cycle_index[*idx] != brute.cycle_id[w]) {
            explain(why, "node assignment differs at w=" + std::to_string(w));
            return false;
        }
    }
    return true;
}

bool kernel_tree_shape(const RingContext& c, std::string* why) {
    auto tree = tree_of(1, c.n, c);
    std::vector<u64> nodes;
    for (const auto& lv : tree.levels) nodes.insert(nodes.end(), lv.begin(), lv.end());
    std::sort(nodes.begin(), nodes.end());
    if (nodes != ring_kernel(c)) {
        explain(why, "kernel tree nodes != ring kernel");
        return false;
    }
    if (nodes.size() != (u64{1} << (c.k + c.l))) {
        explain(why, "kernel tree size != 2^(k+l)");
        return false;
    }
    if (tree.levels[c.n].empty()) {
        explain(why, "kernel tree shorter than max(k,l)");
        return false;
    }
    // child counts are the product of the component branch factors
    for (u32 i = 0; i < c.n; ++i)
        for (u64 v : tree.levels[i]) {
            u64 expected = sqrt_mod_n(v, c).size();
            if (v == tree.root && expected > 0) --expected;  // cyclic preimage
            u64 got = 0;
            for (u64 ch : tree.levels[i + 1])
                if (tree.parent.at(ch) == v) ++got;
            if (got != expected) {
                explain(why, "branch factor mismatch at node " + std::to_string(v));
                return false;
            }
        }
    return true;
}

bool level_rule(const RingContext& c, std::string* why) {
    auto tree = tree_of(1, c.n, c);
    auto stree = tree_of(c.u_s, c.l, c);  // s-multiples kernel tree
    auto ptree = tree_of(c.u_p, c.k, c);
    for (u32 i = 0; i < tree.levels.size(); ++i)
        for (u64 w : tree.levels[i]) {
            CrtPair pr = h_split(w, c);
            u32 want = std::max(level_of(pr.xs, stree), level_of(pr.yp, ptree));
            if (want != i) {
                explain(why, "level rule fails at " + std::to_string(w));
                return false;
            }
        }
    return true;
}

bool arc_tree_identity(const RingContext& c, u64 budget, std::string* why) {
    auto graph = build_graph(full_ring(c, budget), c, budget);
    auto kernel_tree = tree_of(1, c.n, c);
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        u64 a = graph.nodes[i];
        if (!graph.cyclic[i]) continue;
        if (std::gcd(a, c.N) != 1) {
            // arcs through zero divisors must be rejected
            bool threw = false;
            try {
                arc_tree_mul(arc_of(a, c.n, c), kernel_tree, c);
            } catch (const std::domain_error&) {
                threw = true;
            }
            if (!threw) {
                explain(why, "zero-divisor arc not rejected at a=" + std::to_string(a));
                return false;
            }
            continue;
        }
        auto produced = arc_tree_mul(arc_of(a, c.n, c), kernel_tree, c);
        auto direct = tree_of(a, c.n, c);
        if (produced.root != direct.root || produced.levels != direct.levels ||
            produced.parent != direct.parent) {
            explain(why, "arc*tree != tree at a=" + std::to_string(a));
            return false;
        }
    }
    return true;
}

bool cycle_correspondence(const RingContext& c, u64 budget, std::string* why) {
    auto s_cycles = cycles_of(embedded_field(c, Side::S), c, budget);
    auto p_cycles = cycles_of(embedded_field(c, Side::P), c, budget);
    std::vector<std::vector<u64>> combined;
    for (const auto& cs : s_cycles)
        for (const auto& cp : p_cycles) {
            auto got = combine_cycles(cs, cp, c);
            u64 mu = cs.length, nu = cp.length;
            if (got.size() != std::gcd(mu, nu)) {
                explain(why, "combine produced the wrong number of cycles");
                return false;
            }
            for (const auto& rec : got) {
                if (rec.length != std::lcm(mu, nu)) {
                    explain(why, "combined cycle has the wrong length");
                    return false;
                }
                combined.push_back(rec.nodes);
            }
        }
    std::vector<std::vector<u64>> actual;
    for (const auto& rec : cycles_of(full_ring(c, budget), c, budget)) actual.push_back(rec.nodes);
    std::sort(combined.begin(), combined.end());
    std::sort(actual.begin(), actual.end());
    if (combined != actual) {
        explain(why, "combined cycles do not reproduce the ring's cycle multiset");
        return false;
    }
    return true;
}

bool inner_congruences(const RingContext& c, u64 budget, std::string* why) {
    for (const auto& rec : cycles_of(full_ring(c, budget), c, budget)) {
        auto inner = inner_cycles(rec, c);
        if (inner.s_cycle.size() != rec.s_period || inner.p_cycle.size() != rec.p_period ||
            inner.s_laps != rec.s_laps || inner.p_laps != rec.p_laps) {
            explain(why, "inner cycle sizes disagree with the record");
            return false;
        }
        u64 mu = rec.s_period, nu = rec.p_period;
        for (u64 t = 0; t < mu; ++t) {
            u64 v = inner.s_cycle[t];
            if (v % c.p != 0 || fsquare(v, c) != inner.s_cycle[(t + 1) % mu] ||
                v % c.s != rec.nodes[t] % c.s) {
                explain(why, "s-side projection is not an embedded cycle");
                return false;
            }
        }
        for (u64 t = 0; t < nu; ++t) {
            u64 v = inner.p_cycle[t];
            if (v % c.s != 0 || fsquare(v, c) != inner.p_cycle[(t + 1) % nu] ||
                v % c.p != rec.nodes[t] % c.p) {
                explain(why, "p-side projection is not an embedded cycle");
                return false;
            }
        }
        for (u64 w : rec.nodes) {
            if (pow2iter(w, mu, c) % c.s != w % c.s || pow2iter(w, nu, c) % c.p != w % c.p) {
                explain(why, "period congruence fails on cycle node " + std::to_string(w));
                return false;
            }
        }
    }
    return true;
}

bool group_axiom_suite(const RingContext& c, u64 budget, std::string* why) {
    for (GroupVariant v :
         {GroupVariant::Plus1P, GroupVariant::PlusMinus1P, GroupVariant::Plus1S,
          GroupVariant::PlusMinus1S, GroupVariant::EP, GroupVariant::ES}) {
        auto grp = offbyone_group(v, c, budget);
        auto rep = check_group_axioms(grp.members, c, 1, budget);
        if (!rep.ok()) {
            explain(why, std::string(to_string(v)) + ": axioms fail on the exclusion set");
            return false;
        }
        std::vector<u64> augmented = grp.members;
        augmented.insert(augmented.end(), grp.excluded.begin(), grp.excluded.end());
        std::sort(augmented.begin(), augmented.end());
        auto rep2 = check_group_axioms(augmented, c, 1, budget);
        bool witness_ok = rep2.inverse_witness &&
                          std::binary_search(grp.excluded.begin(), grp.excluded.end(),
                                             *rep2.inverse_witness);
        if (rep2.all_invertible || !witness_ok || !rep2.closed) {
            explain(why, std::string(to_string(v)) + ": re-added zeros not caught");
            return false;
        }
    }
    auto rep = check_group_axioms(ring_kernel(c), c, 1, budget);
    if (!rep.ok()) {
        explain(why, "ring kernel fails the group axioms");
        return false;
    }
    return true;
}

bool inverse_closed_form(const RingContext& c, u64 budget, std::string* why) {
    for (GroupVariant v :
         {GroupVariant::Plus1P, GroupVariant::PlusMinus1P, GroupVariant::Plus1S,
          GroupVariant::PlusMinus1S, GroupVariant::EP, GroupVariant::ES}) {
        auto grp = offbyone_group(v, c, budget);
        for (u64 w : grp.members) {
            if (offbyone_inverse(w, v, c) != modinv(w, c.N)) {
                explain(why, std::string(to_string(v)) + ": closed form disagrees with euclid at " +
                                 std::to_string(w));
                return false;
            }
        }
        for (u64 z : grp.excluded) {
            bool threw = false;
            try {
                offbyone_inverse(z, v, c);
            } catch (const std::domain_error&) {
                threw = true;
            }
            if (!threw) {
                explain(why, std::string(to_string(v)) + ": excluded element accepted");
                return false;
            }
        }
    }
    return true;
}

bool embedding_isomorphisms(const RingContext& c, u64 budget, std::string* why) {
    if (mulmod(c.u_p, c.u_p, c.N) != c.u_p || mulmod(c.u_s, c.u_s, c.N) != c.u_s) {
        explain(why, "embedded unities are not idempotent");
        return false;
    }
    // g and g1 are bijections carrying both ring operations
    struct Case {
        EmbeddingKind kind;
        u64 field;
        Side image_side;
    };
    for (auto [kind, field, image_side] :
         {Case{EmbeddingKind::G, c.s, Side::P}, Case{EmbeddingKind::G1, c.p, Side::S}}) {
        auto map = embedding(kind, c);
        std::vector<u64> domain(field);
        std::iota(domain.begin(), domain.end(), u64{0});
        auto codomain = embedded_field(c, image_side);
        auto rep = check_isomorphism<u64>(
            domain, [&](u64 x) { return embed(map, x, c); },
            [&](u64 a, u64 b) { return mulmod(a, b, field); },
            [&](u64 a, u64 b) { return mulmod(a, b, c.N); }, &codomain, budget);
        if (!rep.ok()) {
            explain(why, "embedding is not a multiplicative bijection");
            return false;
        }
        for (u64 a = 0; a < field; ++a)
            for (u64 b = a; b < field; ++b)
                if (embed(map, addmod(a, b, field), c) !=
                    addmod(embed(map, a, c), embed(map, b, c), c.N)) {
                    explain(why, "embedding is not additive");
                    return false;
                }
    }
    // the +1 group maps onto the nonzero embedded field
    {
        auto grp = offbyone_group(GroupVariant::Plus1P, c, budget);
        auto star = embedded_field(c, Side::P);
        star.erase(star.begin());  // drop 0
        auto rep = check_isomorphism_mod_n(
            grp.members, [&](u64 w) { return mulmod(c.u_p, w, c.N); }, &star, c, budget);
        if (!rep.ok()) {
            explain(why, "plus1-p group is not isomorphic to the embedded field units");
            return false;
        }
        for (u64 w : grp.members)
            if (mulmod(c.u_s, w, c.N) != c.u_s) {
                explain(why, "absorbing law fails on plus1-p");
                return false;
            }
    }
    {
        auto grp = offbyone_group(GroupVariant::Plus1S, c, budget);
        auto star = embedded_field(c, Side::S);
        star.erase(star.begin());
        auto rep = check_isomorphism_mod_n(
            grp.members, [&](u64 w) { return mulmod(c.u_s, w, c.N); }, &star, c, budget);
        if (!rep.ok()) {
            explain(why, "plus1-s group is not isomorphic to the embedded field units");
            return false;
        }
    }
    // h restricted to the kernel lands bijectively on the kernel pair set
    {
        auto kernel = ring_kernel(c);
        auto sk = field_kernel(c, Side::S);
        auto pk = field_kernel(c, Side::P);
        std::vector<CrtPair> codomain;
        for (u64 a : sk)
            for (u64 b : pk) codomain.push_back({a, b});
        auto rep = check_isomorphism<CrtPair>(
            kernel, [&](u64 w) { return h_split(w, c); },
            [&](u64 a, u64 b) { return mulmod(a, b, c.N); },
            [&](const CrtPair& a, const CrtPair& b) {
                return CrtPair{mulmod(a.xs, b.xs, c.N), mulmod(a.yp, b.yp, c.N)};
            },
            &codomain, budget);
        if (!rep.ok()) {
            explain(why, "h does not map the kernel onto the kernel pair set");
            return false;
        }
    }
    return true;
}

bool d_distance(const RingContext& c, u64 budget, std::string* why) {
    auto graph = build_graph(full_ring(c, budget), c, budget);
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        u64 w = graph.nodes[i];
        if (classify(w, c) != SubsetClass::DSet) continue;
        u64 theta = graph.cycles[graph.cycle_index[i]].length;
        u64 v = w;
        for (u64 t = 0; t <= 2 * c.n + theta; ++t) {
            u64 ms = v % c.s, mp = v % c.p;
            if (ms == 0 || ms == 1 || ms == c.s - 1 || mp == 0 || mp == 1 || mp == c.p - 1) {
                explain(why, "iterate of " + std::to_string(w) + " comes within 1 of a multiple");
                return false;
            }
            v = fsquare(v, c);
        }
    }
    return true;
}

bool offbyone_characterization(const RingContext& c, u64 budget, std::string* why) {
    if (c.N > budget) throw BudgetExceeded("offbyone_characterization: N exceeds the budget");
    for (u64 w = 0; w < c.N; ++w) {
        SubsetClass tag = classify(w, c);
        bool in_p_family = tag == SubsetClass::OffByOneP || tag == SubsetClass::RingKernel;
        bool power_p = w % c.s != 0 && powmod(w % c.p, u64{1} << c.l, c.p) == 1;
        if (in_p_family != power_p) {
            explain(why, "p-side off-by-one characterization fails at w=" + std::to_string(w));
            return false;
        }
        bool in_s_family = tag == SubsetClass::OffByOneS || tag == SubsetClass::RingKernel;
        bool power_s = w % c.p != 0 && powmod(w % c.s, u64{1} << c.k, c.s) == 1;
        if (in_s_family != power_s) {
            explain(why, "s-side off-by-one characterization fails at w=" + std::to_string(w));
            return false;
        }
    }
    return true;
}

bool treelevel_pairs_factor(const RingContext& c, u64 budget, std::string* why) {
    auto graph = build_graph(full_ring(c, budget), c, budget);
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        u64 a = graph.nodes[i];
        if (!graph.cyclic[i] || std::gcd(a, c.N) != 1) continue;
        auto pairs = treelevel_pairs(a, c);
        if (pairs.size() != 2) {
            explain(why, "expected 2 pairs at a=" + std::to_string(a));
            return false;
        }
        for (auto [x, y] : pairs) {
            auto res = collision_factor(c.N, x, y);
            if (!res.factor || (*res.factor != c.s && *res.factor != c.p)) {
                explain(why, "pair does not factor at a=" + std::to_string(a));
                return false;
            }
        }
    }
    return true;
}

bool cyclic_attack_completeness(const RingContext& c, u64 budget, std::string* why) {
    auto graph = build_graph(full_ring(c, budget), c, budget);
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        u64 w = graph.nodes[i];
        if (classify(w, c) != SubsetClass::DSet) continue;
        const auto& cyc = graph.cycles[graph.cycle_index[i]];
        u64 mu = cyc.s_period, nu = cyc.p_period;
        if (mu == nu) continue;
        u64 max_iter = 4 * std::lcm(mu, nu);
        auto res = cyclic_attack(c.N, w, max_iter);
        if (!res.factor || c.N % *res.factor != 0) {
            explain(why, "attack missed w=" + std::to_string(w) + " within " +
                             std::to_string(max_iter) + " squarings");
            return false;
        }
    }
    return true;
}

MaxCycleReport max_cycle_report(const RingContext& c, u64 budget) {
    MaxCycleReport rep;
    rep.claimed = cardinalities(c).claimed_max_cycle;
    auto brute = oracle::brute_graph(c.N, budget);
    for (const auto& cyc : brute.cycles) rep.observed = std::max<u64>(rep.observed, cyc.size());
    rep.mismatch = rep.claimed != rep.observed;
    return rep;
}

}  // namespace zsp::checks

namespace zsp {

std::vector<CheckResult> verify_pair(const RingContext& ctx, u64 budget) {
    using Check = bool (*)(const RingContext&, u64, std::string*);
    struct Entry {
        const char* name;
        Check fn;
    };
    const Entry entries[] = {
        {"h-round-trip", checks::h_round_trip},
        {"idempotents", checks::idempotents},
        {"sqrt-structure", checks::sqrt_structure},
        {"classification-vs-oracle", checks::classification_matches_oracle},
        {"partition-cover", checks::partition_covers},
        {"cardinality-formulas", checks::cardinality_formulas},
        {"cycles-vs-oracle", checks::cycles_match_oracle},
        {"arc-tree-identity", checks::arc_tree_identity},
        {"cycle-correspondence", checks::cycle_correspondence},
        {"inner-congruences", checks::inner_congruences},
        {"group-axioms", checks::group_axiom_suite},
        {"inverse-closed-form", checks::inverse_closed_form},
        {"embedding-isomorphisms", checks::embedding_isomorphisms},
        {"d-distance", checks::d_distance},
        {"offbyone-characterization", checks::offbyone_characterization},
        {"treelevel-pairs", checks::treelevel_pairs_factor},
        {"cyclic-attack-completeness", checks::cyclic_attack_completeness},
    };

    std::vector<CheckResult> out;
    {
        std::string why;
        bool ok = checks::context_invariants(ctx, &why);
        out.push_back({"context-invariants", ok, why});
    }
    for (const auto& e : entries) {
        std::string why;
        bool ok = e.fn(ctx, budget, &why);
        out.push_back({e.name, ok, why});
    }
    {
        CheckResult res{"h-ring-isomorphism", true, ""};
        if (static_cast<unsigned __int128>(ctx.N) * ctx.N > budget) {
            res.detail = "skipped: N^2 exceeds the budget";
        } else {
            std::string why;
            res.ok = checks::h_ring_isomorphism(ctx, budget, &why);
            res.detail = why;
        }
        out.push_back(std::move(res));
    }
    {
        std::string why;
        bool ok = checks::kernel_tree_shape(ctx, &why);
        out.push_back({"kernel-tree-shape", ok, why});
    }
    {
        std::string why;
        bool ok = checks::level_rule(ctx, &why);
        out.push_back({"level-rule", ok, why});
    }
    {
        auto rep = checks::max_cycle_report(ctx, budget);
        std::ostringstream detail;
        detail << "claimed " << rep.claimed << ", observed " << rep.observed
               << (rep.mismatch ? " (MISMATCH; observed value is authoritative)" : "");
        out.push_back({"max-cycle-report", true, detail.str()});
    }
    return out;
}

}  // namespace zsp
