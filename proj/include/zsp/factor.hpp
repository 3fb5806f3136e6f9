#pragma once

#include <optional>

#include "zsp/ring.hpp"

namespace zsp {

enum class FactorMethod { Cyclic, Collision };

struct FactorResult {
    std::optional<u64> factor;  // proper divisor of N when present
    u64 iterations = 0;         // squarings performed
    FactorMethod method = FactorMethod::Cyclic;
};

/// Squaring-orbit attack on an opaque odd composite: gcds of iterate
/// differences over doubling windows expose a factor whenever the orbit
/// periods modulo the two hidden primes differ. max_iter caps the number
/// of squarings; exhaustion returns an empty factor, not an error.
FactorResult cyclic_attack(u64 n, u64 w, u64 max_iter);

/// From x^2 = y^2 mod n with x != +-y, gcd(y - x, n) is a proper factor.
FactorResult collision_factor(u64 n, u64 x, u64 y);

/// All unordered square-root pairs {x, y} of a cyclic unit a with
/// x != +-y; each pair factors N. White-box: uses the context to
/// enumerate the roots.
std::vector<std::pair<u64, u64>> treelevel_pairs(u64 a, const RingContext& ctx);

}  // namespace zsp
