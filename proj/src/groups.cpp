#include "zsp/groups.hpp"

#include <numeric>
#include <unordered_set>

namespace zsp {

namespace {

bool side_is_p(GroupVariant v) {
    return v == GroupVariant::Plus1P || v == GroupVariant::PlusMinus1P || v == GroupVariant::EP;
}

// raw family as defined, before removing absorbing elements
std::vector<u64> raw_family(GroupVariant v, const RingContext& c, u64 budget) {
    std::vector<u64> out;
    u64 mult = side_is_p(v) ? c.p : c.s;     // the "yp"/"xs" stride
    u64 count = side_is_p(v) ? c.s : c.p;    // index range of the stride
    switch (v) {
        case GroupVariant::Plus1P:
        case GroupVariant::Plus1S:
            for (u64 t = 0; t < count; ++t) out.push_back((t * mult + 1) % c.N);
            break;
        case GroupVariant::PlusMinus1P:
        case GroupVariant::PlusMinus1S:
            for (u64 t = 0; t < count; ++t) out.push_back((t * mult + 1) % c.N);
            for (u64 t = 1; t <= count; ++t) out.push_back(t * mult - 1);
            break;
        case GroupVariant::EP:
        case GroupVariant::ES: {
            auto kernel = field_kernel(c, side_is_p(v) ? Side::S : Side::P);
            if (count * kernel.size() > budget)
                throw BudgetExceeded("enumerate_group: family exceeds the element budget");
            for (u64 t = 0; t < count; ++t)
                for (u64 e : kernel) out.push_back(addmod(t * mult, e, c.N));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string_view to_string(GroupVariant v) {
    switch (v) {
        case GroupVariant::Plus1P: return "plus1-p";
        case GroupVariant::PlusMinus1P: return "plusminus1-p";
        case GroupVariant::Plus1S: return "plus1-s";
        case GroupVariant::PlusMinus1S: return "plusminus1-s";
        case GroupVariant::EP: return "e-p";
        case GroupVariant::ES: return "e-s";
    }
    return "?";
}

EmbeddingMap embedding(EmbeddingKind kind, const RingContext& ctx) {
    return {kind, kind == EmbeddingKind::G ? ctx.u_p : ctx.u_s};
}

u64 embed(const EmbeddingMap& map, u64 x, const RingContext& ctx) {
    u64 range = map.kind == EmbeddingKind::G ? ctx.s : ctx.p;
    if (x >= range) throw std::invalid_argument("embed: element outside the source field");
    return mulmod(map.multiplier, x, ctx.N);
}

std::vector<u64> offbyone_zero(GroupVariant v, const RingContext& ctx) {
    switch (v) {
        case GroupVariant::Plus1P: return {ctx.u_s};
        case GroupVariant::Plus1S: return {ctx.u_p};
        case GroupVariant::PlusMinus1P: {
            std::vector<u64> out{ctx.u_s, ctx.N - ctx.u_s};
            std::sort(out.begin(), out.end());
            return out;
        }
        case GroupVariant::PlusMinus1S: {
            std::vector<u64> out{ctx.u_p, ctx.N - ctx.u_p};
            std::sort(out.begin(), out.end());
            return out;
        }
        case GroupVariant::EP: return field_kernel(ctx, Side::S);
        case GroupVariant::ES: return field_kernel(ctx, Side::P);
    }
    return {};
}

OffByOneGroup offbyone_group(GroupVariant v, const RingContext& ctx, u64 budget) {
    OffByOneGroup g;
    g.variant = v;
    g.excluded = offbyone_zero(v, ctx);
    auto raw = raw_family(v, ctx, budget);
    std::set_difference(raw.begin(), raw.end(), g.excluded.begin(), g.excluded.end(),
                        std::back_inserter(g.members));
    return g;
}

std::vector<u64> enumerate_group(GroupVariant v, const RingContext& ctx, u64 budget) {
    if (v == GroupVariant::EP || v == GroupVariant::ES) return raw_family(v, ctx, budget);
    return offbyone_group(v, ctx, budget).members;
}

u64 offbyone_inverse(u64 w, GroupVariant v, const RingContext& c) {
    if (w >= c.N) throw std::invalid_argument("residue out of range");
    u64 s = c.s, p = c.p;
    switch (v) {
        case GroupVariant::Plus1P:
        case GroupVariant::Plus1S:
        case GroupVariant::PlusMinus1P:
        case GroupVariant::PlusMinus1S: {
            bool pside = side_is_p(v);
            u64 m = pside ? p : s;       // w = t*m +- 1
            u64 o = pside ? s : p;       // congruence is solved mod o
            bool plus = w % m == 1;
            bool minus = w % m == m - 1;
            bool pm = v == GroupVariant::PlusMinus1P || v == GroupVariant::PlusMinus1S;
            if (!(plus || (pm && minus))) throw std::domain_error("not a member of the family");
            if (w % o == 0) throw std::domain_error("excluded zero element");
            if (plus) {
                u64 x = (w - 1) / m;
                // y = -x * w^(-1) mod o, inverse is y*m + 1
                u64 y = mulmod((o - x % o) % o, modinv(w % o, o), o);
                return y * m + 1;
            }
            u64 x = (w + 1) / m;  // in [1..o]
            u64 y = mulmod((o - x % o) % o, modinv(w % o, o), o);
            if (y == 0) y = o;
            return y * m - 1;
        }
        case GroupVariant::EP: {
            if (w % p == 0 || pow2iter(mulmod(c.u_s, w, c.N), c.l, c) != c.u_s)
                throw std::domain_error("not a member of the family");
            if (w % s == 0) throw std::domain_error("excluded zero element");
            // y = beta*(w mod s)^(-1) mod s, e2 = -alpha*(w mod p)^(-1) mod p
            u64 y = mulmod(c.beta % s, modinv(w % s, s), s);
            u64 e2 = mulmod((p - c.alpha % p) % p, modinv(w % p, p), p);
            return (y * p + e2 * s) % c.N;
        }
        case GroupVariant::ES: {
            if (w % s == 0 || pow2iter(mulmod(c.u_p, w, c.N), c.k, c) != c.u_p)
                throw std::domain_error("not a member of the family");
            if (w % p == 0) throw std::domain_error("excluded zero element");
            u64 y = mulmod((p - c.alpha % p) % p, modinv(w % p, p), p);
            u64 e2 = mulmod(c.beta % s, modinv(w % s, s), s);
            return (y * s + e2 * p) % c.N;
        }
    }
    throw std::invalid_argument("unknown variant");
}

GroupAxiomReport check_group_axioms(const std::vector<u64>& members, const RingContext& ctx,
                                    u64 unity, u64 budget) {
    u64 n = members.size();
    if (static_cast<unsigned __int128>(n) * n > budget)
        throw BudgetExceeded("check_group_axioms: |members|^2 exceeds the budget");

    GroupAxiomReport rep;
    std::vector<u64> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    auto in_set = [&](u64 v) { return std::binary_search(sorted.begin(), sorted.end(), v); };

    // closure; witness is the lexicographically smallest failing pair
    u64 wa = ~u64{0}, wb = ~u64{0};
#ifdef _OPENMP
#pragma omp parallel
    {
        u64 la = ~u64{0}, lb = ~u64{0};
#pragma omp for nowait
        for (u64 i = 0; i < n; ++i) {
            u64 a = sorted[i];
            for (u64 j = 0; j < n; ++j) {
                u64 prod = mulmod(a, sorted[j], ctx.N);
                if (!in_set(prod)) {
                    if (a < la || (a == la && sorted[j] < lb)) {
                        la = a;
                        lb = sorted[j];
                    }
                    break;
                }
            }
        }
#pragma omp critical
        if (la < wa || (la == wa && lb < wb)) {
            wa = la;
            wb = lb;
        }
    }
#else
    for (u64 i = 0; i < n && wa == ~u64{0}; ++i)
        for (u64 j = 0; j < n; ++j) {
            u64 prod = mulmod(sorted[i], sorted[j], ctx.N);
            if (!in_set(prod)) {
                wa = sorted[i];
                wb = sorted[j];
                break;
            }
        }
#endif
    if (wa != ~u64{0}) {
        rep.closed = false;
        rep.closure_witness = {wa, wb};
    }

    rep.has_identity = in_set(unity);
    if (rep.has_identity)
        for (u64 a : sorted)
            if (mulmod(unity, a, ctx.N) != a) {
                rep.has_identity = false;
                break;
            }

    // a unit has the unique candidate inverse unity * a^(-1); non-units
    // need a scan since a*b = unity may have several solutions
    for (u64 a : sorted) {
        bool found = false;
        if (std::gcd(a, ctx.N) == 1) {
            found = in_set(mulmod(modinv(a, ctx.N), unity, ctx.N));
        } else {
            for (u64 b : sorted)
                if (mulmod(a, b, ctx.N) == unity) {
                    found = true;
                    break;
                }
        }
        if (!found) {
            rep.all_invertible = false;
            rep.inverse_witness = a;
            break;
        }
    }
    return rep;
}

IsoReport check_isomorphism_mod_n(const std::vector<u64>& domain,
                                  const std::function<u64(u64)>& map,
                                  const std::vector<u64>* codomain, const RingContext& ctx,
                                  u64 budget) {
    u64 N = ctx.N;
    return check_isomorphism<u64>(
        domain, [&](u64 a) { return map(a); }, [N](u64 a, u64 b) { return mulmod(a, b, N); },
        [N](u64 a, u64 b) { return mulmod(a, b, N); }, codomain, budget);
}

}  // namespace zsp
