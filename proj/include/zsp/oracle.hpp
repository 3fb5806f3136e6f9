#pragma once

#include "zsp/partition.hpp"
#include "zsp/ring.hpp"

namespace zsp::oracle {

/// Definition-literal successor tableau of w -> w^2 mod n. Single-threaded
/// on purpose; shares no arithmetic helpers with the main modules so that
/// agreement between the two is evidence rather than tautology.
struct BruteGraph {
    u64 n = 0;
    std::vector<u64> successor;
    std::vector<char> is_cyclic;
    std::vector<u32> cycle_id;
    std::vector<u64> tree_root;
    std::vector<std::vector<u64>> cycles;  // ordered by (length, smallest node)
};

BruteGraph brute_graph(u64 n, u64 budget = kDefaultBudget);

/// Classifies by the literal set definitions: divisibility plus component
/// order tests carried out mod s and mod p, no splitting map involved.
SubsetClass brute_classify(u64 w, u64 s, u64 p);

}  // namespace zsp::oracle
