#pragma once

#include <algorithm>
#include <functional>
#include <optional>

#include "zsp/partition.hpp"
#include "zsp/ring.hpp"

namespace zsp {

enum class EmbeddingKind {
    G,   // F_s -> p-multiples field, x |-> u_p * x
    G1,  // F_p -> s-multiples field, x |-> u_s * x
};

struct EmbeddingMap {
    EmbeddingKind kind;
    u64 multiplier;
};

EmbeddingMap embedding(EmbeddingKind kind, const RingContext& ctx);
u64 embed(const EmbeddingMap& map, u64 x, const RingContext& ctx);

enum class GroupVariant {
    Plus1P,       // { yp + 1 } minus its absorbing element u_s
    PlusMinus1P,  // { yp +- 1 } minus { u_s, N - u_s }
    Plus1S,       // { xs + 1 } minus u_p
    PlusMinus1S,  // { xs +- 1 } minus { u_p, N - u_p }
    EP,           // { yp + e : e in the s-side kernel }
    ES,           // { xs + e : e in the p-side kernel }
};

std::string_view to_string(GroupVariant v);

/// members: the actual multiplicative group (absorbing elements removed).
/// excluded: what was removed — a single element for the +1 families, a
/// pair for the +-1 families, the whole zero-divisor kernel row for the
/// e-families.
struct OffByOneGroup {
    GroupVariant variant;
    std::vector<u64> members;   // ascending
    std::vector<u64> excluded;  // ascending
};

OffByOneGroup offbyone_group(GroupVariant v, const RingContext& ctx,
                             u64 budget = kDefaultBudget);

/// Absorbing ("zero") elements of the variant's family.
std::vector<u64> offbyone_zero(GroupVariant v, const RingContext& ctx);

/// Inverse inside the group, by the per-family closed-form congruence
/// (not by generic extended Euclid). Throws std::domain_error for
/// excluded elements and non-members.
u64 offbyone_inverse(u64 w, GroupVariant v, const RingContext& ctx);

/// The family as listed: post-exclusion for the +1 / +-1 variants, the
/// raw set (kernel row and ring kernel included) for the e-variants.
std::vector<u64> enumerate_group(GroupVariant v, const RingContext& ctx,
                                 u64 budget = kDefaultBudget);

struct GroupAxiomReport {
    bool closed = true;
    bool has_identity = true;
    bool all_invertible = true;
    std::optional<std::pair<u64, u64>> closure_witness;  // smallest failing product pair
    std::optional<u64> inverse_witness;                  // smallest member without inverse
    bool ok() const { return closed && has_identity && all_invertible; }
};

/// Exhaustive closure / identity / inverse check over the member list.
/// `unity` defaults to 1; pass the embedded unity (u_s or u_p) when the
/// set lives inside an embedded field.
GroupAxiomReport check_group_axioms(const std::vector<u64>& members, const RingContext& ctx,
                                    u64 unity = 1, u64 budget = kDefaultBudget);

struct IsoReport {
    bool injective = true;
    bool surjective = true;
    bool multiplicative = true;
    std::optional<std::pair<u64, u64>> witness;  // offending domain element(s)
    bool ok() const { return injective && surjective && multiplicative; }
};

/// Exhaustive bijective-homomorphism check. map: domain element -> Value;
/// dom_mul multiplies two domain elements, img_mul two images. When a
/// codomain is given, surjectivity onto it is required (as a set).
template <typename Value, typename MapFn, typename DomMul, typename ImgMul>
IsoReport check_isomorphism(const std::vector<u64>& domain, MapFn&& map, DomMul&& dom_mul,
                            ImgMul&& img_mul, const std::vector<Value>* codomain,
                            u64 budget = kDefaultBudget) {
    if (static_cast<unsigned __int128>(domain.size()) * domain.size() > budget)
        throw BudgetExceeded("check_isomorphism: |domain|^2 exceeds the budget");
    IsoReport rep;
    std::vector<Value> image;
    image.reserve(domain.size());
    for (u64 a : domain) image.push_back(map(a));

    std::vector<Value> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        rep.injective = false;
        for (size_t i = 0; i < domain.size() && !rep.witness; ++i)
            for (size_t j = i + 1; j < domain.size(); ++j)
                if (image[i] == image[j]) {
                    rep.witness = {domain[i], domain[j]};
                    break;
                }
    }
    if (codomain) {
        std::vector<Value> want = *codomain;
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        auto have = sorted;
        have.erase(std::unique(have.begin(), have.end()), have.end());
        rep.surjective = have == want;
    }
    for (size_t i = 0; i < domain.size() && rep.multiplicative; ++i)
        for (size_t j = i; j < domain.size(); ++j) {
            if (!(map(dom_mul(domain[i], domain[j])) == img_mul(image[i], image[j]))) {
                rep.multiplicative = false;
                rep.witness = {domain[i], domain[j]};
                break;
            }
        }
    return rep;
}

/// Convenience form for residue-valued maps: domain and image both multiply mod N.
IsoReport check_isomorphism_mod_n(const std::vector<u64>& domain,
                                  const std::function<u64(u64)>& map,
                                  const std::vector<u64>* codomain, const RingContext& ctx,
                                  u64 budget = kDefaultBudget);

}  // namespace zsp
