#include "zsp/partition.hpp"

#include <algorithm>
#include <numeric>

namespace zsp {

std::string_view to_string(SubsetClass tag) {
    switch (tag) {
        case SubsetClass::Zero: return "Zero";
        case SubsetClass::SKernel: return "SKernel";
        case SubsetClass::SFieldRest: return "SFieldRest";
        case SubsetClass::PKernel: return "PKernel";
        case SubsetClass::PFieldRest: return "PFieldRest";
        case SubsetClass::RingKernel: return "RingKernel";
        case SubsetClass::OffByOneS: return "OffByOneS";
        case SubsetClass::OffByOneP: return "OffByOneP";
        case SubsetClass::DSet: return "DSet";
    }
    return "?";
}

std::pair<u32, u64> factor_pow2(u64 m) {
    if (m < 2) throw std::invalid_argument("factor_pow2: m must be >= 2");
    u64 odd = m - 1;
    u32 e = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++e;
    }
    return {e, odd};
}

u64 largest_prime_factor(u64 m) {
    if (m < 2) return 1;
    u64 best = 1;
    for (u64 d = 2; d * d <= m; ++d) {
        while (m % d == 0) {
            best = d;
            m /= d;
        }
    }
    return m > 1 ? m : best;
}

std::vector<u64> field_kernel(const RingContext& ctx, Side side) {
    u64 mult = side == Side::S ? ctx.s : ctx.p;
    u64 count = side == Side::S ? ctx.p : ctx.s;
    u32 height = side == Side::S ? ctx.l : ctx.k;
    u64 unity = side == Side::S ? ctx.u_s : ctx.u_p;
    std::vector<u64> out;
    out.reserve(u64{1} << height);
    for (u64 t = 1; t < count; ++t) {
        u64 e = t * mult;  // < N
        if (pow2iter(e, height, ctx) == unity) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> ring_kernel(const RingContext& ctx) {
    auto sk = field_kernel(ctx, Side::S);
    auto pk = field_kernel(ctx, Side::P);
    std::vector<u64> out;
    out.reserve(sk.size() * pk.size());
    for (u64 a : sk)
        for (u64 b : pk) out.push_back(addmod(a, b, ctx.N));
    std::sort(out.begin(), out.end());
    return out;
}

SubsetClass classify(u64 w, const RingContext& ctx) {
    if (w >= ctx.N) throw std::invalid_argument("residue out of range");
    if (w == 0) return SubsetClass::Zero;
    CrtPair pr = h_split(w, ctx);
    // component in its side kernel <=> 2^height squarings reach the side unity
    bool xs_kernel = pr.xs != 0 && pow2iter(pr.xs, ctx.l, ctx) == ctx.u_s;
    bool yp_kernel = pr.yp != 0 && pow2iter(pr.yp, ctx.k, ctx) == ctx.u_p;
    if (pr.yp == 0) return xs_kernel ? SubsetClass::SKernel : SubsetClass::SFieldRest;
    if (pr.xs == 0) return yp_kernel ? SubsetClass::PKernel : SubsetClass::PFieldRest;
    if (xs_kernel && yp_kernel) return SubsetClass::RingKernel;
    if (xs_kernel) return SubsetClass::OffByOneP;
    if (yp_kernel) return SubsetClass::OffByOneS;
    return SubsetClass::DSet;
}

CardinalityReport cardinalities(const RingContext& ctx) {
    CardinalityReport rep;
    u64 two_kl = u64{1} << (ctx.k + ctx.l);
    rep.n_multiples = ctx.s + ctx.p - 1;
    rep.n_offbyone = two_kl * (ctx.q + ctx.r - 1);
    rep.n_dset = two_kl * (ctx.q - 1) * (ctx.r - 1);
    rep.n_kernel = two_kl;
    rep.n_dset_cyclic = (ctx.q - 1) * (ctx.r - 1);
    rep.claimed_max_cycle = std::lcm(largest_prime_factor(ctx.q - 1), largest_prime_factor(ctx.r - 1));
    return rep;
}

std::vector<u64> enumerate_class(const RingContext& ctx, SubsetClass tag, u64 budget) {
    if (ctx.N > budget) throw BudgetExceeded("enumerate_class: N exceeds the element budget");
    std::vector<u64> out;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<u64> local;
#pragma omp for nowait
        for (u64 w = 0; w < ctx.N; ++w)
            if (classify(w, ctx) == tag) local.push_back(w);
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
#else
    for (u64 w = 0; w < ctx.N; ++w)
        if (classify(w, ctx) == tag) out.push_back(w);
#endif
    return out;
}

std::array<u64, kSubsetClassCount> class_counts(const RingContext& ctx, u64 budget) {
    if (ctx.N > budget) throw BudgetExceeded("class_counts: N exceeds the element budget");
    std::array<u64, kSubsetClassCount> out{};
#ifdef _OPENMP
#pragma omp parallel
    {
        std::array<u64, kSubsetClassCount> local{};
#pragma omp for nowait
        for (u64 w = 0; w < ctx.N; ++w) ++local[static_cast<int>(classify(w, ctx))];
#pragma omp critical
        for (int i = 0; i < kSubsetClassCount; ++i) out[i] += local[i];
    }
#else
    for (u64 w = 0; w < ctx.N; ++w) ++out[static_cast<int>(classify(w, ctx))];
#endif
    return out;
}

}  // namespace zsp
