#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgps/elem_set.hpp"
#include "sgps/errors.hpp"

namespace sgps {

/// Elements of a finite ring are dense ids 0..order-1. Ids are canonical per
/// constructor: zmod uses residues; coordinate constructors (gf, product,
/// smatrix, uppertri) enumerate coordinate tuples with the first coordinate
/// varying fastest, so witnesses in reports are stable across runs.
using ElemId = int;

/// A finite unital ring given by complete addition/multiplication tables.
/// Instances are immutable once built; every builder validates the axioms
/// exhaustively before returning.
struct FiniteRing {
    int order = 0;
    std::vector<ElemId> add_table;  // order*order, row-major
    std::vector<ElemId> mul_table;
    std::vector<ElemId> neg_table;  // additive inverses, derived
    ElemId zero = 0;
    ElemId one = 0;
    std::string name;        // canonical spec string, e.g. "zmod 4"
    std::string provenance;  // human description of the construction
    std::vector<std::string> elem_names;
    bool commutative = false;  // derived

    ElemId add(ElemId a, ElemId b) const { return add_table[a * order + b]; }
    ElemId mul(ElemId a, ElemId b) const { return mul_table[a * order + b]; }
    ElemId neg(ElemId a) const { return neg_table[a]; }
    ElemId sub(ElemId a, ElemId b) const { return add(a, neg(b)); }
    const std::string& elem_name(ElemId a) const { return elem_names[a]; }

    /// Fills neg_table/commutative and sanity-checks id ranges. Builders call
    /// this after validate_ring_axioms has passed.
    void finalize();
};

/// One checked law. `witness` holds the violating elements (unused slots -1).
struct AxiomCheck {
    std::string law;
    bool pass = true;
    std::array<ElemId, 3> witness{-1, -1, -1};
};

/// Outcome of the exhaustive O(n^3) axiom scan. `mul_commutative` is
/// informational and does not affect `all_pass`.
struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool all_pass = true;
    bool mul_commutative = true;
    std::string first_failure;  // empty when all_pass
};

ValidationReport validate_ring_axioms(const FiniteRing& ring);

// --- constructors -----------------------------------------------------------

FiniteRing build_zmod(int n);
/// q = p^k with an irreducible modulus polynomial over Z_p. `poly` uses the
/// textual form "x^2+x+1"; when empty a built-in default for small q is used.
FiniteRing build_gf(int q, const std::string& poly = "");
FiniteRing build_product(const FiniteRing& a, const FiniteRing& b);
/// Constant-diagonal upper triangular n x n matrices over `base` (elements
/// a0*I + a1*E + ... + a_{n-1}*E^{n-1} with E the upper shift, E^n = 0).
FiniteRing build_s_matrix(int n, const FiniteRing& base);
/// Full upper triangular n x n matrices over `base`.
FiniteRing build_upper_triangular(int n, const FiniteRing& base);
/// Explicit tables; throws AxiomError naming the first failed law.
FiniteRing build_table(int n, ElemId one, std::vector<ElemId> add, std::vector<ElemId> mul,
                       const std::string& name = "table");

/// Parses a ring spec string and builds the ring. Accepted forms:
///   zmod 4 | zmod4 | gf 4 [poly=x^2+x+1] | gf4 | product zmod2 zmod2
///   smatrix 2 zmod2 | uppertri 2 zmod2 | table file=path
/// Nested arguments use the compact (no-space) forms.
FiniteRing build_ring(const std::string& spec);

/// Table file format: header line "n one=<id>", then two whitespace-separated
/// n x n integer matrices (add, then mul).
FiniteRing build_table_from_file(const std::string& path);

}  // namespace sgps
