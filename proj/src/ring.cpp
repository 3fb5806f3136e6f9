#include "zsp/ring.hpp"

#include <algorithm>
#include <numeric>

namespace zsp {

u64 powmod(u64 a, u64 e, u64 m) {
    u64 acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return acc;
}

u64 modinv(u64 a, u64 m) {
    a %= m;
    i64 t0 = 0, t1 = 1;
    u64 r0 = m, r1 = a;
    while (r1 != 0) {
        u64 quot = r0 / r1;
        i64 tn = t0 - static_cast<i64>(quot) * t1;
        t0 = t1;
        t1 = tn;
        u64 rn = r0 - quot * r1;
        r0 = r1;
        r1 = rn;
    }
    if (r0 != 1) throw std::domain_error("modinv: element not invertible");
    return t0 < 0 ? static_cast<u64>(t0 + static_cast<i64>(m)) : static_cast<u64>(t0);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    u64 t = n - 1;
    u32 e = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++e;
    }
    // deterministic witness set for 64-bit inputs
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a % n, t, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (u32 i = 1; i < e; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

RingContext build_context(u64 s, u64 p) {
    if (s < 3 || s % 2 == 0 || !is_prime(s)) throw std::invalid_argument("s must be an odd prime >= 3");
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime >= 3");
    if (s == p) throw std::invalid_argument("s and p must be distinct");
    if (static_cast<unsigned __int128>(s) * p >= (static_cast<unsigned __int128>(1) << 62))
        throw std::invalid_argument("s*p must stay below 2^62");

    RingContext c;
    c.s = s;
    c.p = p;
    c.N = s * p;
    c.q = s - 1;
    while (c.q % 2 == 0) {
        c.q /= 2;
        ++c.k;
    }
    c.r = p - 1;
    while (c.r % 2 == 0) {
        c.r /= 2;
        ++c.l;
    }
    c.beta = modinv(p % s, s);        // 0 < beta < s
    c.alpha = (c.beta * p - 1) / s;   // beta*p = alpha*s + 1, so 0 < alpha < p
    c.u_p = c.beta * p;
    c.u_s = c.N - c.alpha * s;
    c.n = std::max(c.k, c.l);
    return c;
}

u64 fsquare(u64 w, const RingContext& ctx) {
    if (w >= ctx.N) throw std::invalid_argument("residue out of range");
    return mulmod(w, w, ctx.N);
}

u64 pow2iter(u64 w, u64 i, const RingContext& ctx) {
    if (w >= ctx.N) throw std::invalid_argument("residue out of range");
    for (u64 t = 0; t < i; ++t) w = mulmod(w, w, ctx.N);
    return w;
}

CrtPair h_split(u64 w, const RingContext& ctx) {
    if (w >= ctx.N) throw std::invalid_argument("residue out of range");
    u64 xs = mulmod(ctx.u_s, w, ctx.N);
    // u_s + u_p = 1 mod N, so the second component is w - xs
    return {xs, submod(w, xs, ctx.N)};
}

u64 h_join(const CrtPair& pair, const RingContext& ctx) {
    if (pair.xs >= ctx.N || pair.yp >= ctx.N) throw std::invalid_argument("residue out of range");
    if (pair.xs % ctx.s != 0) throw std::domain_error("xs component must be a multiple of s");
    if (pair.yp % ctx.p != 0) throw std::domain_error("yp component must be a multiple of p");
    return addmod(pair.xs, pair.yp, ctx.N);
}

u64 crt_join(u64 rs, u64 rp, const RingContext& ctx) {
    // u_p picks the mod-s residue, u_s the mod-p residue
    return addmod(mulmod(rs % ctx.s, ctx.u_p, ctx.N), mulmod(rp % ctx.p, ctx.u_s, ctx.N), ctx.N);
}

std::vector<u64> sqrt_mod_prime(u64 a, u64 m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("modulus must be an odd prime");
    a %= m;
    if (a == 0) return {0};
    if (powmod(a, (m - 1) / 2, m) != 1) return {};

    u64 root;
    if (m % 4 == 3) {
        root = powmod(a, (m + 1) / 4, m);
    } else {
        // Tonelli-Shanks; the generator comes from the smallest non-residue
        u64 t = m - 1;
        u32 e = 0;
        while (t % 2 == 0) {
            t /= 2;
            ++e;
        }
        u64 z = 2;
        while (powmod(z, (m - 1) / 2, m) != m - 1) ++z;
        u64 c = powmod(z, t, m);
        u64 x = powmod(a, (t + 1) / 2, m);
        u64 b = powmod(a, t, m);
        u32 ord = e;
        while (b != 1) {
            u64 v = b;
            u32 i = 0;
            while (v != 1) {
                v = mulmod(v, v, m);
                ++i;
            }
            u64 g = c;
            for (u32 j = 0; j + i + 1 < ord; ++j) g = mulmod(g, g, m);
            x = mulmod(x, g, m);
            c = mulmod(g, g, m);
            b = mulmod(b, c, m);
            ord = i;
        }
        root = x;
    }
    u64 other = m - root;
    if (root > other) std::swap(root, other);
    return {root, other};
}

std::vector<u64> sqrt_mod_n(u64 a, const RingContext& ctx) {
    if (a >= ctx.N) throw std::invalid_argument("residue out of range");
    auto rs = sqrt_mod_prime(a % ctx.s, ctx.s);
    if (rs.empty()) return {};
    auto rp = sqrt_mod_prime(a % ctx.p, ctx.p);
    if (rp.empty()) return {};
    std::vector<u64> out;
    out.reserve(rs.size() * rp.size());
    for (u64 x : rs)
        for (u64 y : rp) out.push_back(crt_join(x, y, ctx));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace zsp
