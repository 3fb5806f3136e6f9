#pragma once

#include <string>

#include "zsp/ring.hpp"

namespace zsp {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // empty on success unless informational
};

/// Per-pair verification checks. Each returns true on success and, on
/// failure, appends a short description to *why (when given). Budgeted
/// checks throw BudgetExceeded rather than skipping silently.
namespace checks {

bool context_invariants(const RingContext& ctx, std::string* why = nullptr);
bool h_round_trip(const RingContext& ctx, u64 budget = kDefaultBudget, std::string* why = nullptr);
bool h_ring_isomorphism(const RingContext& ctx, u64 budget = kDefaultBudget,
                        std::string* why = nullptr);
bool idempotents(const RingContext& ctx, u64 budget = kDefaultBudget, std::string* why = nullptr);
bool sqrt_structure(const RingContext& ctx, u64 budget = kDefaultBudget, std::string* why = nullptr);
bool classification_matches_oracle(const RingContext& ctx, u64 budget = kDefaultBudget,
                                   std::string* why = nullptr);
bool partition_covers(const RingContext& ctx, u64 budget = kDefaultBudget,
                      std::string* why = nullptr);
bool cardinality_formulas(const RingContext& ctx, u64 budget = kDefaultBudget,
                          std::string* why = nullptr);
bool cycles_match_oracle(const RingContext& ctx, u64 budget = kDefaultBudget,
                         std::string* why = nullptr);
bool kernel_tree_shape(const RingContext& ctx, std::string* why = nullptr);
bool level_rule(const RingContext& ctx, std::string* why = nullptr);
bool arc_tree_identity(const RingContext& ctx, u64 budget = kDefaultBudget,
                       std::string* why = nullptr);
bool cycle_correspondence(const RingContext& ctx, u64 budget = kDefaultBudget,
                          std::string* why = nullptr);
bool inner_congruences(const RingContext& ctx, u64 budget = kDefaultBudget,
                       std::string* why = nullptr);
bool group_axiom_suite(const RingContext& ctx, u64 budget = kDefaultBudget,
                       std::string* why = nullptr);
bool inverse_closed_form(const RingContext& ctx, u64 budget = kDefaultBudget,
                         std::string* why = nullptr);
bool embedding_isomorphisms(const RingContext& ctx, u64 budget = kDefaultBudget,
                            std::string* why = nullptr);
bool d_distance(const RingContext& ctx, u64 budget = kDefaultBudget, std::string* why = nullptr);
bool offbyone_characterization(const RingContext& ctx, u64 budget = kDefaultBudget,
                               std::string* why = nullptr);
bool treelevel_pairs_factor(const RingContext& ctx, u64 budget = kDefaultBudget,
                            std::string* why = nullptr);
bool cyclic_attack_completeness(const RingContext& ctx, u64 budget = kDefaultBudget,
                                std::string* why = nullptr);

/// claimed lcm(q--, r--) vs the max cycle length actually observed.
struct MaxCycleReport {
    u64 claimed = 0;
    u64 observed = 0;
    bool mismatch = false;
};
MaxCycleReport max_cycle_report(const RingContext& ctx, u64 budget = kDefaultBudget);

}  // namespace checks

/// Runs the whole suite against one pair. The pairwise h-law check is
/// reported as skipped when N^2 exceeds the budget; everything else
/// requires N within budget.
std::vector<CheckResult> verify_pair(const RingContext& ctx, u64 budget = kDefaultBudget);

}  // namespace zsp
