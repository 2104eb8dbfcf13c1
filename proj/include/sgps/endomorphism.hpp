#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgps/finite_ring.hpp"

namespace sgps {

/// A unital ring endomorphism, stored as a total map on element ids.
struct Endomorphism {
    const FiniteRing* ring = nullptr;
    std::vector<ElemId> map;
    std::string name;

    ElemId operator()(ElemId a) const { return map[a]; }
    bool is_identity() const;
    bool is_bijective() const;
};

/// Checks additivity, multiplicativity and phi(1) = 1; on failure returns the
/// first violating pair.
bool is_unital_endomorphism(const FiniteRing& r, const std::vector<ElemId>& map,
                            std::pair<ElemId, ElemId>* witness = nullptr);

Endomorphism identity_endo(const FiniteRing& r);
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);  // a -> f(g(a))
std::optional<Endomorphism> inverse(const Endomorphism& f);

/// All unital ring endomorphisms of `r`, found by a generator-image search:
/// the prime subring is fixed pointwise, extra generators are picked greedily
/// and every assignment of images is validated in full. Deterministic order,
/// identity first (named "id"), the rest sorted by map vector ("e1", "e2", ...).
/// Throws CapacityError when r.order exceeds `cap`.
std::vector<Endomorphism> enumerate_endomorphisms(const FiniteRing& r, int cap = 16);

}  // namespace sgps
