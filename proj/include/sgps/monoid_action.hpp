#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgps/endomorphism.hpp"
#include "sgps/ordered_monoid.hpp"

namespace sgps {

/// Monoid homomorphism from the exponent monoid into End(R), given by one
/// endomorphism per monoid generator (one for N and Z, k commuting ones for
/// N^k). For Z the generator must be an automorphism so that negative
/// exponents act through its inverse.
///
/// Tables of composed powers are memoized; `prefetch` fills the cache for a
/// known exponent set so later lookups are read-only (the memo itself is not
/// synchronized).
class MonoidAction {
public:
    MonoidAction(const FiniteRing& ring, OrderedMonoid monoid, std::vector<Endomorphism> generators);

    const FiniteRing& ring() const { return *ring_; }
    const OrderedMonoid& monoid() const { return monoid_; }
    const std::vector<Endomorphism>& generators() const { return gens_; }
    std::string name() const;
    bool is_trivial() const;

    /// Table of omega_s; memoized per exponent.
    const std::vector<ElemId>& table(const MonElem& s) const;
    ElemId apply(const MonElem& s, ElemId a) const { return table(s)[a]; }
    void prefetch(const std::vector<MonElem>& exps) const;

private:
    const FiniteRing* ring_;
    OrderedMonoid monoid_;
    std::vector<Endomorphism> gens_;
    std::vector<Endomorphism> gen_inverses_;  // populated for groups
    mutable std::map<MonElem, std::vector<ElemId>> cache_;
};

/// Convenience: every exponent acts as the identity.
MonoidAction trivial_action(const FiniteRing& ring, const OrderedMonoid& monoid);

/// S-compatibility: for every generator image sigma and all a, b,
/// ab = 0 iff a sigma(b) = 0. Compatible endomorphisms compose, so checking
/// generators covers every omega_s (including inverses on Z).
struct CompatibilityResult {
    bool compatible = true;
    ElemId a = -1, b = -1;
    int generator = -1;
};
CompatibilityResult is_compatible(const MonoidAction& action);

}  // namespace sgps
