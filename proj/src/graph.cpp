#include "zsp/graph.hpp"

#include <algorithm>
#include <numeric>

namespace zsp {

namespace {

u64 period_mod(const std::vector<u64>& nodes, u64 m) {
    // the mod-m projection of a cycle is itself a squaring orbit, so the
    // first return to nodes[0] mod m is its period
    u64 theta = nodes.size();
    for (u64 e = 1; e < theta; ++e)
        if (nodes[e] % m == nodes[0] % m) return e;
    return theta;
}

CycleRecord make_record(std::vector<u64> nodes, const RingContext& ctx) {
    auto mn = std::min_element(nodes.begin(), nodes.end());
    std::rotate(nodes.begin(), mn, nodes.end());
    CycleRecord rec;
    rec.length = nodes.size();
    rec.s_period = period_mod(nodes, ctx.s);
    rec.p_period = period_mod(nodes, ctx.p);
    rec.s_laps = rec.length / rec.s_period;
    rec.p_laps = rec.length / rec.p_period;
    rec.nodes = std::move(nodes);
    if (rec.length != std::lcm(rec.s_period, rec.p_period))
        throw std::logic_error("cycle length must be lcm of its component periods");
    return rec;
}

void validate_cycle(const CycleRecord& c, const RingContext& ctx) {
    if (c.nodes.empty()) throw std::domain_error("empty cycle");
    u64 theta = c.nodes.size();
    for (u64 t = 0; t < theta; ++t)
        if (fsquare(c.nodes[t], ctx) != c.nodes[(t + 1) % theta])
            throw std::domain_error("nodes do not form a squaring cycle");
}

void index_tree_node(RootedTree& t, u64 w, u32 level) { t.level_index.emplace(w, level); }

}  // namespace

std::optional<size_t> FunctionalGraph::index_of(u64 w) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
    if (it == nodes.end() || *it != w) return std::nullopt;
    return static_cast<size_t>(it - nodes.begin());
}

FunctionalGraph build_graph(const std::vector<u64>& domain, const RingContext& ctx, u64 budget) {
    if (domain.size() > budget) throw BudgetExceeded("build_graph: domain exceeds the budget");
    FunctionalGraph g;
    g.nodes = domain;
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
    size_t n = g.nodes.size();

    g.succ.resize(n);
#ifdef _OPENMP
#pragma omp parallel for
#endif
    for (size_t i = 0; i < n; ++i) {
        auto idx = g.index_of(fsquare(g.nodes[i], ctx));
        if (!idx) {
            // flag and bail out after the loop; throwing inside an omp loop is UB
            g.succ[i] = ~u32{0};
        } else {
            g.succ[i] = static_cast<u32>(*idx);
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (g.succ[i] == ~u32{0}) throw std::domain_error("domain not closed under squaring");

    // reverse adjacency (CSR)
    g.pred_offsets.assign(n + 1, 0);
    for (size_t i = 0; i < n; ++i) ++g.pred_offsets[g.succ[i] + 1];
    for (size_t i = 0; i < n; ++i) g.pred_offsets[i + 1] += g.pred_offsets[i];
    g.pred_data.resize(n);
    {
        std::vector<u32> cursor(g.pred_offsets.begin(), g.pred_offsets.end() - 1);
        for (size_t i = 0; i < n; ++i) g.pred_data[cursor[g.succ[i]]++] = static_cast<u32>(i);
    }

    // iterated-walk coloring: 0 unseen, 1 on current path, 2 finished
    g.cyclic.assign(n, 0);
    g.cycle_index.assign(n, 0);
    g.tree_root.assign(n, 0);
    std::vector<char> state(n, 0);
    std::vector<u32> path;
    std::vector<std::vector<u64>> raw_cycles;
    std::vector<u32> cycle_of(n, 0);

    for (size_t start = 0; start < n; ++start) {
        if (state[start]) continue;
        path.clear();
        u32 x = static_cast<u32>(start);
        while (state[x] == 0) {
            state[x] = 1;
            path.push_back(x);
            x = g.succ[x];
        }
        size_t tail_begin = path.size();
        if (state[x] == 1) {
            // x starts a fresh cycle somewhere on the current path
            auto it = std::find(path.begin(), path.end(), x);
            tail_begin = static_cast<size_t>(it - path.begin());
            std::vector<u64> cyc;
            for (size_t j = tail_begin; j < path.size(); ++j) {
                u32 idx = path[j];
                g.cyclic[idx] = 1;
                cycle_of[idx] = static_cast<u32>(raw_cycles.size());
                g.tree_root[idx] = g.nodes[idx];
                cyc.push_back(g.nodes[idx]);
            }
            raw_cycles.push_back(std::move(cyc));
        }
        // tree part of the path, nearest to the cycle first
        for (size_t j = tail_begin; j-- > 0;) {
            u32 idx = path[j];
            u32 nx = g.succ[idx];
            cycle_of[idx] = cycle_of[nx];
            g.tree_root[idx] = g.cyclic[nx] ? g.nodes[nx] : g.tree_root[nx];
        }
        for (u32 idx : path) state[idx] = 2;
    }

    // canonical cycle order: by length, then smallest node
    std::vector<CycleRecord> recs;
    recs.reserve(raw_cycles.size());
    for (auto& cyc : raw_cycles) recs.push_back(make_record(std::move(cyc), ctx));
    std::vector<u32> order(recs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](u32 a, u32 b) {
        if (recs[a].length != recs[b].length) return recs[a].length < recs[b].length;
        return recs[a].nodes[0] < recs[b].nodes[0];
    });
    std::vector<u32> rank(recs.size());
    for (u32 i = 0; i < order.size(); ++i) rank[order[i]] = i;
    g.cycles.resize(recs.size());
    for (u32 i = 0; i < order.size(); ++i) g.cycles[i] = std::move(recs[order[i]]);
    for (size_t i = 0; i < n; ++i) g.cycle_index[i] = rank[cycle_of[i]];
    return g;
}

std::vector<CycleRecord> cycles_of(const std::vector<u64>& domain, const RingContext& ctx,
                                   u64 budget) {
    return build_graph(domain, ctx, budget).cycles;
}

std::pair<u64, u64> orbit_shape(u64 a, const RingContext& ctx) {
    // Brent
    u64 power = 1, lam = 1;
    u64 tortoise = a, hare = fsquare(a, ctx);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = fsquare(hare, ctx);
        ++lam;
    }
    u64 mu = 0;
    tortoise = hare = a;
    for (u64 i = 0; i < lam; ++i) hare = fsquare(hare, ctx);
    while (tortoise != hare) {
        tortoise = fsquare(tortoise, ctx);
        hare = fsquare(hare, ctx);
        ++mu;
    }
    return {mu, lam};
}

bool is_cyclic_element(u64 a, const RingContext& ctx) { return orbit_shape(a, ctx).first == 0; }

RootedTree tree_of(u64 a, u32 height, const RingContext& ctx) {
    auto [pre, theta] = orbit_shape(a, ctx);
    if (pre != 0) throw std::domain_error("tree root must be a cyclic element");
    u64 cyclic_pred = pow2iter(a, theta - 1, ctx);

    RootedTree t;
    t.root = a;
    t.height = height;
    t.levels.assign(height + 1, {});
    t.levels[0] = {a};
    index_tree_node(t, a, 0);
    for (u32 i = 1; i <= height; ++i) {
        std::vector<u64> next;
        for (u64 v : t.levels[i - 1]) {
            for (u64 r0 : sqrt_mod_n(v, ctx)) {
                if (i == 1 && r0 == cyclic_pred) continue;
                next.push_back(r0);
                t.parent.emplace(r0, v);
            }
        }
        std::sort(next.begin(), next.end());
        for (u64 w : next) index_tree_node(t, w, i);
        t.levels[i] = std::move(next);
    }
    return t;
}

u32 level_of(u64 w, const RootedTree& tree) {
    auto it = tree.level_index.find(w);
    if (it == tree.level_index.end()) throw std::domain_error("element is not in the tree");
    return it->second;
}

Arc arc_of(u64 a, u32 n, const RingContext& ctx) {
    auto [pre, theta] = orbit_shape(a, ctx);
    if (pre != 0) throw std::domain_error("arc start must be a cyclic element");
    std::vector<u64> cyc(theta);
    cyc[0] = a;
    for (u64 t = 1; t < theta; ++t) cyc[t] = fsquare(cyc[t - 1], ctx);
    Arc arc;
    arc.nodes.resize(n + 1);
    for (u64 i = 0; i <= n; ++i) arc.nodes[i] = cyc[(theta - i % theta) % theta];
    return arc;
}

RootedTree arc_tree_mul(const Arc& arc, const RootedTree& tree, const RingContext& ctx) {
    if (arc.length() != tree.height)
        throw std::domain_error("arc length must equal the tree height");
    for (u64 a : arc.nodes)
        if (std::gcd(a, ctx.N) != 1)
            throw std::domain_error("arc node shares a factor with the modulus");

    RootedTree out;
    out.root = mulmod(arc.nodes[0], tree.root, ctx.N);
    out.height = tree.height;
    out.levels.assign(tree.height + 1, {});
    out.levels[0] = {out.root};
    index_tree_node(out, out.root, 0);
    for (u32 i = 1; i <= tree.height; ++i) {
        std::vector<u64> lv;
        lv.reserve(tree.levels[i].size());
        for (u64 b : tree.levels[i]) {
            u64 cnode = mulmod(arc.nodes[i], b, ctx.N);
            lv.push_back(cnode);
            out.parent.emplace(cnode, mulmod(arc.nodes[i - 1], tree.parent.at(b), ctx.N));
        }
        std::sort(lv.begin(), lv.end());
        for (u64 w : lv) index_tree_node(out, w, i);
        out.levels[i] = std::move(lv);
    }
    return out;
}

std::vector<CycleRecord> combine_cycles(const CycleRecord& cs, const CycleRecord& cp,
                                        const RingContext& ctx) {
    validate_cycle(cs, ctx);
    validate_cycle(cp, ctx);
    for (u64 w : cs.nodes)
        if (w % ctx.s != 0) throw std::domain_error("cs must be a cycle of the s-multiples field");
    for (u64 w : cp.nodes)
        if (w % ctx.p != 0) throw std::domain_error("cp must be a cycle of the p-multiples field");

    u64 mu = cs.nodes.size(), nu = cp.nodes.size();
    u64 g = std::gcd(mu, nu), L = std::lcm(mu, nu);
    std::vector<CycleRecord> out;
    out.reserve(g);
    for (u64 delta = 0; delta < g; ++delta) {
        std::vector<u64> seq(L);
        for (u64 t = 0; t < L; ++t)
            seq[t] = addmod(cs.nodes[(t + delta) % mu], cp.nodes[t % nu], ctx.N);
        out.push_back(make_record(std::move(seq), ctx));
    }
    std::sort(out.begin(), out.end(),
              [](const CycleRecord& a, const CycleRecord& b) { return a.nodes[0] < b.nodes[0]; });
    return out;
}

InnerCycles inner_cycles(const CycleRecord& c, const RingContext& ctx) {
    validate_cycle(c, ctx);
    u64 theta = c.nodes.size();
    u64 mu = period_mod(c.nodes, ctx.s);
    u64 nu = period_mod(c.nodes, ctx.p);
    InnerCycles inner;
    inner.s_laps = theta / mu;
    inner.p_laps = theta / nu;
    for (u64 t = 0; t < mu; ++t) inner.s_cycle.push_back(mulmod(ctx.u_p, c.nodes[t], ctx.N));
    for (u64 t = 0; t < nu; ++t) inner.p_cycle.push_back(mulmod(ctx.u_s, c.nodes[t], ctx.N));
    return inner;
}

std::vector<u64> embedded_field(const RingContext& ctx, Side side) {
    u64 mult = side == Side::S ? ctx.s : ctx.p;
    u64 count = side == Side::S ? ctx.p : ctx.s;
    std::vector<u64> out(count);
    for (u64 t = 0; t < count; ++t) out[t] = t * mult;
    return out;
}

std::vector<u64> full_ring(const RingContext& ctx, u64 budget) {
    if (ctx.N > budget) throw BudgetExceeded("full_ring: N exceeds the budget");
    std::vector<u64> out(ctx.N);
    std::iota(out.begin(), out.end(), u64{0});
    return out;
}

std::vector<u64> unit_group(const RingContext& ctx, u64 budget) {
    if (ctx.N > budget) throw BudgetExceeded("unit_group: N exceeds the budget");
    std::vector<u64> out;
    out.reserve(ctx.N - ctx.s - ctx.p + 1);
    for (u64 w = 1; w < ctx.N; ++w)
        if (w % ctx.s != 0 && w % ctx.p != 0) out.push_back(w);
    return out;
}

}  // namespace zsp
