#pragma once

#include <string>

#include "json.hpp"
#include "zsp/graph.hpp"
#include "zsp/partition.hpp"

namespace zsp {

/// Full analysis document, schema_version "1": context constants, the
/// per-cell census, every cycle, and the preimage tree of every cyclic
/// root (so the whole successor map can be reconstructed).
nlohmann::json export_json(const RingContext& ctx, u64 budget = kDefaultBudget);

/// One edge w -> w^2 per residue, cycle nodes emitted first.
std::string export_dot(const RingContext& ctx, u64 budget = kDefaultBudget);

/// Header w,successor,class,cyclic,tree_root; one row per residue.
std::string export_csv(const RingContext& ctx, u64 budget = kDefaultBudget);

nlohmann::json tree_json(const RootedTree& tree);
std::string tree_csv(const RootedTree& tree);   // value,level,parent
std::string tree_dot(const RootedTree& tree);

nlohmann::json cycles_json(const std::vector<CycleRecord>& cycles);
std::string cycles_csv(const std::vector<CycleRecord>& cycles);
std::string cycles_dot(const std::vector<CycleRecord>& cycles);

}  // namespace zsp
