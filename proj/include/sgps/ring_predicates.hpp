#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgps/elem_set.hpp"
#include "sgps/finite_ring.hpp"

namespace sgps {

enum class Side { left, right, two_sided };

std::string to_string(Side s);

/// Enumeration caps and the pair budget, overridable from the environment
/// (SGPS_IDEAL_CAP, SGPS_ENDO_CAP, SGPS_BUDGET).
struct Caps {
    int ideal_cap = 64;
    int endo_cap = 16;
    std::uint64_t budget = 10'000'000;
};

/// Additive subgroup absorbing ring multiplication on the declared side(s).
struct Ideal {
    const FiniteRing* ring = nullptr;
    ElemSet elems;
    Side side = Side::two_sided;

    bool is_proper() const { return elems.count() < ring->order; }
    bool is_zero() const { return elems.count() == 1; }
};

/// Smallest ideal of the given sidedness containing `gens`.
Ideal ideal_closure(const FiniteRing& r, const std::vector<ElemId>& gens, Side side);

bool is_ideal(const FiniteRing& r, const ElemSet& s, Side side,
              std::pair<ElemId, ElemId>* absorb_witness = nullptr);

/// All proper ideals of the given sidedness (including {0}), enumerated by
/// breadth-first closure of generator extensions. Sorted by element lists.
/// Throws CapacityError when r.order > caps.ideal_cap.
std::vector<Ideal> enumerate_ideals(const FiniteRing& r, Side side, const Caps& caps = {});

/// Maximal proper one-sided ideals, in the enumeration order above.
std::vector<Ideal> one_sided_maximal_ideals(const FiniteRing& r, Side side, const Caps& caps = {});

// --- elementwise predicates --------------------------------------------------

/// {e : e*e = e} in id order with centrality flags.
struct IdempotentInfo {
    ElemId e;
    bool central;
};
std::vector<IdempotentInfo> idempotents(const FiniteRing& r);

struct AbelianResult {
    bool abelian = true;
    ElemId e = -1, r = -1;  // non-central idempotent and the element it misses
};
AbelianResult is_abelian(const FiniteRing& r);

struct RegularResult {
    bool regular = true;
    ElemId witness = -1;  // a with no x satisfying a x a = a
};
RegularResult is_regular(const FiniteRing& r);

struct SemiregularResult {
    bool semiregular = true;
    std::string failed_clause;  // "quotient-not-regular" or "idempotent-does-not-lift"
    ElemId witness = -1;        // element of R/J(R)
};
SemiregularResult is_semiregular(const FiniteRing& r, const Caps& caps = {});

struct QuasiDuoResult {
    bool quasi_duo = true;
    std::optional<Ideal> offender;            // maximal one-sided ideal that is not two-sided
    std::pair<ElemId, ElemId> absorb_fail{-1, -1};  // (r, m) with r*m or m*r escaping
};
QuasiDuoResult is_quasi_duo(const FiniteRing& r, const Caps& caps = {});

struct PrimeResult {
    bool prime = true;
    ElemId a = -1, b = -1;  // aRb subset of P with a, b outside P
};
/// P must be two-sided and proper; otherwise throws SpecError.
PrimeResult is_prime_ideal(const FiniteRing& r, const Ideal& p);

// --- radical and nil structure ----------------------------------------------

/// J(R) as the quasi-regular elements {a : 1 - ra is left invertible for all
/// r}, cross-checked against the intersection of all maximal left ideals.
/// Disagreement raises InternalError.
Ideal jacobson_radical(const FiniteRing& r, const Caps& caps = {});

/// Least k with I^k = {0}, or nullopt when the powers stabilize above zero.
std::optional<int> nilpotency_index(const Ideal& ideal);

struct QuotientRing {
    FiniteRing ring;
    std::vector<ElemId> projection;  // element id -> coset id
};
/// Coset ring by a two-sided ideal; the projection is validated as a
/// surjective unital homomorphism.
QuotientRing quotient_ring(const FiniteRing& r, const Ideal& ideal);

struct NilStructure {
    ElemSet nil;        // nilpotent elements
    Ideal nil_star;     // intersection of all prime two-sided ideals
    bool two_primal = false;
};
NilStructure nil_structure(const FiniteRing& r, const Caps& caps = {});

/// side = right: {c : x c = 0 for all x in X}; side = left mirrored.
ElemSet annihilator(const FiniteRing& r, const std::vector<ElemId>& xs, Side side);

// --- aggregated profile -------------------------------------------------------

struct PropertyProfile {
    std::string ring_name;
    int order = 0;
    AbelianResult abelian;
    RegularResult regular;
    SemiregularResult semiregular;
    QuasiDuoResult quasi_duo;
    NilStructure nil;
    Ideal radical;
    std::optional<int> radical_nilpotency_index;
    std::vector<IdempotentInfo> idems;
    std::vector<Ideal> maximal_left, maximal_right;
};

PropertyProfile compute_property_profile(const FiniteRing& r, const Caps& caps = {});

}  // namespace sgps
