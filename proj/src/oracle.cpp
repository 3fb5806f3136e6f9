#include "zsp/oracle.hpp"

#include <algorithm>

namespace zsp::oracle {

namespace {

// local arithmetic, kept separate from zsp::mulmod and friends
u64 o_mul(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 o_sq_pow(u64 x, u32 times, u64 m) {
    for (u32 i = 0; i < times; ++i) x = o_mul(x, x, m);
    return x;
}

u32 twos_in(u64 m) {
    u32 e = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++e;
    }
    return e;
}

}  // namespace

BruteGraph brute_graph(u64 n, u64 budget) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    if (n > budget) throw BudgetExceeded("brute_graph: n exceeds the element budget");
    BruteGraph g;
    g.n = n;
    g.successor.resize(n);
    for (u64 w = 0; w < n; ++w) g.successor[w] = o_mul(w, w, n);

    g.is_cyclic.assign(n, 0);
    g.cycle_id.assign(n, 0);
    g.tree_root.assign(n, 0);
    std::vector<char> state(n, 0);
    std::vector<u64> path;
    std::vector<u32> owner(n, 0);
    std::vector<std::vector<u64>> raw;

    for (u64 start = 0; start < n; ++start) {
        if (state[start]) continue;
        path.clear();
        u64 x = start;
        while (state[x] == 0) {
            state[x] = 1;
            path.push_back(x);
            x = g.successor[x];
        }
        size_t tail = path.size();
        if (state[x] == 1) {
            auto it = std::find(path.begin(), path.end(), x);
            tail = static_cast<size_t>(it - path.begin());
            std::vector<u64> cyc(path.begin() + tail, path.end());
            for (u64 v : cyc) {
                g.is_cyclic[v] = 1;
                owner[v] = static_cast<u32>(raw.size());
                g.tree_root[v] = v;
            }
            raw.push_back(std::move(cyc));
        }
        for (size_t j = tail; j-- > 0;) {
            u64 v = path[j];
            u64 nx = g.successor[v];
            owner[v] = owner[nx];
            g.tree_root[v] = g.is_cyclic[nx] ? nx : g.tree_root[nx];
        }
        for (u64 v : path) state[v] = 2;
    }

    for (auto& cyc : raw) {
        auto mn = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mn, cyc.end());
    }
    std::vector<u32> order(raw.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<u32>(i);
    std::sort(order.begin(), order.end(), [&](u32 a, u32 b) {
        if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
        return raw[a][0] < raw[b][0];
    });
    std::vector<u32> rank(raw.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<u32>(i);
    g.cycles.resize(raw.size());
    for (size_t i = 0; i < order.size(); ++i) g.cycles[i] = std::move(raw[order[i]]);
    for (u64 w = 0; w < n; ++w) g.cycle_id[w] = rank[owner[w]];
    return g;
}

SubsetClass brute_classify(u64 w, u64 s, u64 p) {
    u64 n = s * p;
    if (w >= n) throw std::invalid_argument("residue out of range");
    if (w == 0) return SubsetClass::Zero;
    u32 k = twos_in(s - 1);
    u32 l = twos_in(p - 1);
    u64 a = w % s, b = w % p;
    bool ker_s_side = b != 0 && o_sq_pow(b, l, p) == 1;  // mod-p part annihilated within l steps
    bool ker_p_side = a != 0 && o_sq_pow(a, k, s) == 1;
    if (a == 0) return ker_s_side ? SubsetClass::SKernel : SubsetClass::SFieldRest;
    if (b == 0) return ker_p_side ? SubsetClass::PKernel : SubsetClass::PFieldRest;
    if (ker_s_side && ker_p_side) return SubsetClass::RingKernel;
    if (ker_s_side) return SubsetClass::OffByOneP;
    if (ker_p_side) return SubsetClass::OffByOneS;
    return SubsetClass::DSet;
}

}  // namespace zsp::oracle
