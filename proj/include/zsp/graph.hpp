#pragma once

#include <optional>
#include <span>
#include <unordered_map>

#include "zsp/partition.hpp"
#include "zsp/ring.hpp"

namespace zsp {

/// A cycle of the squaring map: nodes[t+1] = nodes[t]^2 mod N, starting at
/// the smallest member. s_period is the period of nodes[t] mod s — the
/// matching inner cycle lives in the p-multiples field — and symmetrically
/// for p_period. length = lcm(s_period, p_period).
struct CycleRecord {
    std::vector<u64> nodes;
    u64 length = 0;
    u64 s_period = 0;  // mu
    u64 p_period = 0;  // nu
    u64 s_laps = 0;    // length / s_period
    u64 p_laps = 0;
};

struct RootedTree {
    u64 root = 0;
    u32 height = 0;
    std::vector<std::vector<u64>> levels;     // levels[0] = {root}; each ascending
    std::unordered_map<u64, u64> parent;      // child -> child^2, absent for the root
    std::unordered_map<u64, u32> level_index;
    bool contains(u64 w) const { return level_index.count(w) != 0; }
};

/// Consecutive cycle nodes (a_0, ..., a_n) with a_{i-1} = a_i^2 mod N.
struct Arc {
    std::vector<u64> nodes;
    u64 length() const { return nodes.size() - 1; }
};

struct FunctionalGraph {
    std::vector<u64> nodes;  // sorted domain
    std::vector<u32> succ;   // index into nodes
    std::vector<u32> pred_offsets, pred_data;  // reverse adjacency, CSR
    std::vector<char> cyclic;
    std::vector<u32> cycle_index;  // cycle reached by each node's orbit
    std::vector<u64> tree_root;    // first cyclic node on the orbit (self if cyclic)
    std::vector<CycleRecord> cycles;

    std::optional<size_t> index_of(u64 w) const;
    std::span<const u32> preds_of(size_t i) const {
        return {pred_data.data() + pred_offsets[i], pred_data.data() + pred_offsets[i + 1]};
    }
};

/// domain must be closed under squaring mod N.
FunctionalGraph build_graph(const std::vector<u64>& domain, const RingContext& ctx,
                            u64 budget = kDefaultBudget);

std::vector<CycleRecord> cycles_of(const std::vector<u64>& domain, const RingContext& ctx,
                                   u64 budget = kDefaultBudget);

/// (preperiod, period) of the squaring orbit of a.
std::pair<u64, u64> orbit_shape(u64 a, const RingContext& ctx);
bool is_cyclic_element(u64 a, const RingContext& ctx);

/// Leveled preimage tree over a cyclic root; the cyclic preimage of the
/// root is not part of the tree.
RootedTree tree_of(u64 a, u32 height, const RingContext& ctx);

u32 level_of(u64 w, const RootedTree& tree);

/// Walks the cycle of a backwards; indices past the cycle length wrap.
Arc arc_of(u64 a, u32 n, const RingContext& ctx);

/// Levelwise product: level i of the result is a_i * (level i of tree).
/// Requires arc length == tree height and every arc node coprime to N.
RootedTree arc_tree_mul(const Arc& arc, const RootedTree& tree, const RingContext& ctx);

/// Pairs a cycle of the s-multiples field with one of the p-multiples
/// field; yields gcd(mu, nu) cycles of length lcm(mu, nu).
std::vector<CycleRecord> combine_cycles(const CycleRecord& cs, const CycleRecord& cp,
                                        const RingContext& ctx);

/// The two embedded-field cycles a ring cycle projects onto. s_cycle holds
/// the period-mu projection tracking nodes mod s (its residues are
/// p-multiples), phase-aligned with the input cycle.
struct InnerCycles {
    std::vector<u64> s_cycle;
    u64 s_laps = 0;
    std::vector<u64> p_cycle;
    u64 p_laps = 0;
};

InnerCycles inner_cycles(const CycleRecord& c, const RingContext& ctx);

// common domains
std::vector<u64> embedded_field(const RingContext& ctx, Side side);
std::vector<u64> full_ring(const RingContext& ctx, u64 budget = kDefaultBudget);
std::vector<u64> unit_group(const RingContext& ctx, u64 budget = kDefaultBudget);

}  // namespace zsp
