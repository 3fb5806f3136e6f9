#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zsp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kDefaultBudget = 10'000'000;

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// a, b < m <= 2^62, so a + b never wraps u64
inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 t = a + b;
    return t >= m ? t - m : t;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m);
u64 modinv(u64 a, u64 m);  // throws std::domain_error when gcd(a, m) != 1
bool is_prime(u64 n);      // deterministic for all 64-bit inputs

/// All per-pair constants. Immutable after build_context and safe to share
/// across threads; every operation in this library is a pure function of
/// its arguments.
struct RingContext {
    u64 s = 0, p = 0, N = 0;
    u32 k = 0;
    u64 q = 0;  // s - 1 = 2^k * q, q odd
    u32 l = 0;
    u64 r = 0;  // p - 1 = 2^l * r, r odd
    u64 alpha = 0, beta = 0;  // -alpha*s + beta*p = 1, 0 < alpha < p, 0 < beta < s
    u64 u_s = 0;  // (-alpha*s) mod N: the idempotent that is 0 mod s, 1 mod p
    u64 u_p = 0;  // (beta*p) mod N: the idempotent that is 1 mod s, 0 mod p
    u32 n = 0;    // max(k, l)
};

/// Image of an element under the splitting map h: w = xs + yp mod N.
/// xs is a multiple of s and congruent to w mod p; yp is a multiple of p
/// and congruent to w mod s.
struct CrtPair {
    u64 xs = 0;
    u64 yp = 0;
    friend bool operator==(const CrtPair&, const CrtPair&) = default;
    friend bool operator<(const CrtPair& a, const CrtPair& b) {
        return a.xs != b.xs ? a.xs < b.xs : a.yp < b.yp;
    }
};

RingContext build_context(u64 s, u64 p);

u64 fsquare(u64 w, const RingContext& ctx);
u64 pow2iter(u64 w, u64 i, const RingContext& ctx);  // w^(2^i) by i squarings

CrtPair h_split(u64 w, const RingContext& ctx);
u64 h_join(const CrtPair& pair, const RingContext& ctx);

/// Unique w in [0, N) with w = rs (mod s) and w = rp (mod p).
u64 crt_join(u64 rs, u64 rp, const RingContext& ctx);

/// Square roots of a mod an odd prime m: 0, 1 or 2 values, ascending.
std::vector<u64> sqrt_mod_prime(u64 a, u64 m);

/// All square roots of a mod N, ascending. For a coprime to N the count
/// is 0 or 4 and the set is closed under negation.
std::vector<u64> sqrt_mod_n(u64 a, const RingContext& ctx);

}  // namespace zsp
