#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "zsp/ring.hpp"

namespace zsp {

/// The nine disjoint cells of ℤ_N, determined by where the two components
/// of h(w) fall: zero, the side kernel, or the rest of the embedded field.
enum class SubsetClass : int {
    Zero = 0,
    SKernel,      // multiples of s inside the s-side kernel
    SFieldRest,   // remaining nonzero multiples of s
    PKernel,
    PFieldRest,
    RingKernel,   // both components in their kernels
    OffByOneS,    // s-side e-family minus the ring kernel
    OffByOneP,    // p-side e-family minus the ring kernel
    DSet,         // both components outside kernel and zero
};

inline constexpr int kSubsetClassCount = 9;

std::string_view to_string(SubsetClass tag);

enum class Side { S, P };

struct CardinalityReport {
    u64 n_multiples = 0;      // s + p - 1
    u64 n_offbyone = 0;       // 2^(k+l) * (q + r - 1)
    u64 n_dset = 0;           // 2^(k+l) * (q-1) * (r-1)
    u64 n_kernel = 0;         // 2^(k+l)
    u64 n_dset_cyclic = 0;    // (q-1) * (r-1)
    u64 claimed_max_cycle = 0;  // lcm of the largest prime factors of q-1, r-1
    std::optional<u64> observed_max_cycle;  // filled from graph construction
};

/// Decomposes m - 1 = 2^exponent * odd_part.
std::pair<u32, u64> factor_pow2(u64 m);

u64 largest_prime_factor(u64 m);  // 1 for m < 2

/// Side::S gives the kernel of the s-multiples field (size 2^l),
/// Side::P the kernel of the p-multiples field (size 2^k). Ascending.
std::vector<u64> field_kernel(const RingContext& ctx, Side side);

/// All w with w^(2^i) = 1 mod N for some i <= n; equals the h-join of the
/// two side kernels. Size 2^(k+l), ascending.
std::vector<u64> ring_kernel(const RingContext& ctx);

SubsetClass classify(u64 w, const RingContext& ctx);

CardinalityReport cardinalities(const RingContext& ctx);

/// Ascending list of every residue in the given cell.
std::vector<u64> enumerate_class(const RingContext& ctx, SubsetClass tag,
                                 u64 budget = kDefaultBudget);

/// Per-cell census of [0, N), indexed by SubsetClass. Parallel sweep.
std::array<u64, kSubsetClassCount> class_counts(const RingContext& ctx,
                                                u64 budget = kDefaultBudget);

}  // namespace zsp
