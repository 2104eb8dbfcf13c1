#include <algorithm>

#include "doctest.h"
#include "sgps/catalog.hpp"
#include "sgps/endomorphism.hpp"
#include "sgps/ring_predicates.hpp"

using namespace sgps;

namespace {

std::vector<int> elems(const ElemSet& s) { return s.to_vector(); }

std::vector<FiniteRing> default_catalog() {
    std::vector<FiniteRing> rings;
    for (const auto& spec : catalog_generate(8)) rings.push_back(build_ring(spec));
    return rings;
}

}  // namespace

TEST_CASE("zmod construction and axioms") {
    FiniteRing r = build_zmod(4);
    CHECK(r.order == 4);
    CHECK(r.add(2, 2) == 0);
    CHECK(r.mul(2, 2) == 0);
    CHECK(r.elem_name(3) == "3");
    CHECK(validate_ring_axioms(r).all_pass);
    CHECK_THROWS_AS(build_zmod(1), SpecError);
}

TEST_CASE("smatrix 2 over Z2 is the order-4 ring a + bE with E^2 = 0") {
    FiniteRing r = build_ring("smatrix 2 zmod2");
    CHECK(r.order == 4);
    ElemId e = 2;  // coordinates (0,1)
    CHECK(r.elem_name(e) == "E");
    CHECK(r.mul(e, e) == r.zero);
    CHECK(r.commutative);
}

TEST_CASE("gf(4): every nonzero element is a unit") {
    FiniteRing r = build_gf(4, "x^2+x+1");
    CHECK(r.order == 4);
    for (ElemId a = 1; a < 4; ++a) {
        bool unit = false;
        for (ElemId b = 1; b < 4; ++b)
            if (r.mul(a, b) == r.one) unit = true;
        CHECK(unit);
    }
    ElemId g = 2;
    CHECK(r.elem_name(g) == "g");
    CHECK(r.mul(g, g) == 3);            // g^2 = g + 1
    CHECK(r.mul(g, r.mul(g, g)) == 1);  // g^3 = 1
    CHECK_THROWS_AS(build_gf(4, "x^2+1"), SpecError);  // (x+1)^2 mod 2
    CHECK_THROWS_AS(build_gf(12), SpecError);
}

TEST_CASE("validate_ring_axioms flags a broken table with a witness") {
    FiniteRing z4 = build_zmod(4);
    auto mul = z4.mul_table;
    mul[2 * 4 + 3] = 1;  // 2*3 := 1 breaks associativity
    CHECK_THROWS_AS(build_table(4, 1, z4.add_table, mul, "broken"), AxiomError);

    FiniteRing patched = z4;
    patched.mul_table = mul;
    auto rep = validate_ring_axioms(patched);
    CHECK_FALSE(rep.all_pass);
    auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                           [](const AxiomCheck& c) { return c.law == "mul-associative"; });
    REQUIRE(it != rep.checks.end());
    CHECK_FALSE(it->pass);
    // the witness triple really violates associativity
    auto [a, b, c] = std::tuple{it->witness[0], it->witness[1], it->witness[2]};
    CHECK(patched.mul(patched.mul(a, b), c) != patched.mul(a, patched.mul(b, c)));
}

TEST_CASE("upper triangular ring validates, with informational non-commutativity") {
    FiniteRing r = build_ring("uppertri 2 zmod2");
    CHECK(r.order == 8);
    auto rep = validate_ring_axioms(r);
    CHECK(rep.all_pass);
    CHECK_FALSE(rep.mul_commutative);
    const ElemId e11 = 1, e12 = 2;
    CHECK(r.mul(e11, e12) == e12);
    CHECK(r.mul(e12, e11) == r.zero);
    CHECK(r.elem_name(e11) == "[1,0;0,0]");
}

TEST_CASE("idempotents and centrality") {
    FiniteRing z4 = build_zmod(4);
    auto idem = idempotents(z4);
    REQUIRE(idem.size() == 2);
    CHECK(idem[0].e == 0);
    CHECK(idem[1].e == 1);
    CHECK(idem[0].central);
    CHECK(idem[1].central);

    FiniteRing p22 = build_ring("product zmod2 zmod2");
    auto all = idempotents(p22);
    CHECK(all.size() == 4);
    for (const auto& info : all) CHECK(info.central);

    FiniteRing ut = build_ring("uppertri 2 zmod2");
    auto ut_idem = idempotents(ut);
    auto e11 = std::find_if(ut_idem.begin(), ut_idem.end(),
                            [](const IdempotentInfo& i) { return i.e == 1; });
    REQUIRE(e11 != ut_idem.end());
    CHECK_FALSE(e11->central);
}

TEST_CASE("is_abelian with deterministic witness") {
    CHECK(is_abelian(build_zmod(8)).abelian);
    CHECK(is_abelian(build_ring("smatrix 3 zmod2")).abelian);

    auto res = is_abelian(build_ring("uppertri 2 zmod2"));
    CHECK_FALSE(res.abelian);
    CHECK(res.e == 1);  // E11
    CHECK(res.r == 2);  // E12
}

TEST_CASE("jacobson radical against frozen values") {
    CHECK(elems(jacobson_radical(build_zmod(4)).elems) == std::vector<int>{0, 2});
    CHECK(elems(jacobson_radical(build_gf(4)).elems) == std::vector<int>{0});
    CHECK(elems(jacobson_radical(build_ring("uppertri 2 zmod2")).elems) ==
          std::vector<int>{0, 2});  // {0, E12}
}

TEST_CASE("nilpotency indices") {
    FiniteRing z4 = build_zmod(4), z8 = build_zmod(8);
    CHECK(nilpotency_index(jacobson_radical(z4)) == 2);
    CHECK(nilpotency_index(jacobson_radical(z8)) == 3);
    Ideal zero{&z4, ElemSet::single(4, 0), Side::two_sided};
    CHECK(nilpotency_index(zero) == 1);
}

TEST_CASE("quotient rings") {
    FiniteRing z4 = build_zmod(4);
    auto q = quotient_ring(z4, jacobson_radical(z4));
    CHECK(q.ring.order == 2);
    CHECK(q.projection[2] == q.ring.zero);

    Ideal zero{&z4, ElemSet::single(4, 0), Side::two_sided};
    auto q0 = quotient_ring(z4, zero);
    CHECK(q0.ring.order == 4);

    FiniteRing sm = build_ring("smatrix 2 zmod2");
    auto qs = quotient_ring(sm, jacobson_radical(sm));
    CHECK(qs.ring.order == 2);

    Ideal left_only{&z4, ElemSet::single(4, 0), Side::left};
    CHECK_THROWS_AS(quotient_ring(z4, left_only), SpecError);
}

TEST_CASE("von Neumann regularity") {
    CHECK(is_regular(build_gf(4)).regular);
    auto res = is_regular(build_zmod(4));
    CHECK_FALSE(res.regular);
    CHECK(res.witness == 2);
    CHECK(is_regular(build_zmod(6)).regular);
}

TEST_CASE("semiregularity on sample rings") {
    CHECK(is_semiregular(build_zmod(4)).semiregular);
    CHECK(is_semiregular(build_gf(4)).semiregular);
}

TEST_CASE("maximal one-sided ideals") {
    FiniteRing z6 = build_zmod(6);
    auto ml = one_sided_maximal_ideals(z6, Side::left);
    REQUIRE(ml.size() == 2);
    CHECK(elems(ml[0].elems) == std::vector<int>{0, 2, 4});
    CHECK(elems(ml[1].elems) == std::vector<int>{0, 3});

    auto gf_ml = one_sided_maximal_ideals(build_gf(4), Side::left);
    REQUIRE(gf_ml.size() == 1);
    CHECK(elems(gf_ml[0].elems) == std::vector<int>{0});

    auto ut_mr = one_sided_maximal_ideals(build_ring("uppertri 2 zmod2"), Side::right);
    REQUIRE(ut_mr.size() == 2);
    CHECK(ut_mr[0].elems.count() == 4);
    CHECK(ut_mr[1].elems.count() == 4);

    Caps tight;
    tight.ideal_cap = 4;
    CHECK_THROWS_AS(one_sided_maximal_ideals(z6, Side::left, tight), CapacityError);
}

TEST_CASE("quasi-duo decisions") {
    CHECK(is_quasi_duo(build_zmod(12)).quasi_duo);
    CHECK(is_quasi_duo(build_ring("smatrix 2 zmod2")).quasi_duo);
    // decided by the checker, then cross-checked against the definition
    FiniteRing ut = build_ring("uppertri 2 zmod2");
    auto res = is_quasi_duo(ut);
    bool expected = true;
    for (Side side : {Side::left, Side::right})
        for (const auto& m : one_sided_maximal_ideals(ut, side))
            if (!is_ideal(ut, m.elems, Side::two_sided)) expected = false;
    CHECK(res.quasi_duo == expected);
}

TEST_CASE("prime ideal tests with witnesses") {
    FiniteRing z4 = build_zmod(4);
    Ideal p{&z4, ElemSet(4), Side::two_sided};
    p.elems.set(0);
    p.elems.set(2);
    CHECK(is_prime_ideal(z4, p).prime);

    FiniteRing p22 = build_ring("product zmod2 zmod2");
    Ideal zero{&p22, ElemSet::single(4, 0), Side::two_sided};
    auto res = is_prime_ideal(p22, zero);
    CHECK_FALSE(res.prime);
    CHECK(p22.elem_name(res.a) == "(1,0)");
    CHECK(p22.elem_name(res.b) == "(0,1)");

    FiniteRing gf4 = build_gf(4);
    Ideal gzero{&gf4, ElemSet::single(4, 0), Side::two_sided};
    CHECK(is_prime_ideal(gf4, gzero).prime);

    Ideal improper{&z4, ElemSet::full(4), Side::two_sided};
    CHECK_THROWS_AS(is_prime_ideal(z4, improper), SpecError);
}

TEST_CASE("nil structure and two-primality") {
    auto z4 = nil_structure(build_zmod(4));
    CHECK(elems(z4.nil) == std::vector<int>{0, 2});
    CHECK(elems(z4.nil_star.elems) == std::vector<int>{0, 2});
    CHECK(z4.two_primal);

    auto gf4 = nil_structure(build_gf(4));
    CHECK(elems(gf4.nil) == std::vector<int>{0});
    CHECK(gf4.two_primal);

    FiniteRing ut = build_ring("uppertri 2 zmod2");
    auto res = nil_structure(ut);
    CHECK(elems(res.nil) == std::vector<int>{0, 2});  // {0, E12}
    CHECK(res.two_primal);
}

TEST_CASE("annihilators") {
    FiniteRing z4 = build_zmod(4);
    CHECK(elems(annihilator(z4, {0, 2}, Side::right)) == std::vector<int>{0, 2});
    CHECK(elems(annihilator(z4, {1}, Side::right)) == std::vector<int>{0});
    CHECK(annihilator(z4, {}, Side::right).count() == 4);

    FiniteRing z6 = build_zmod(6);
    CHECK(elems(annihilator(z6, {0, 2, 4}, Side::right)) == std::vector<int>{0, 3});
}

TEST_CASE("endomorphism enumeration") {
    FiniteRing z4r = build_zmod(4);
    auto z4 = enumerate_endomorphisms(z4r);
    REQUIRE(z4.size() == 1);
    CHECK(z4[0].name == "id");
    CHECK(z4[0].is_identity());

    FiniteRing gf4 = build_gf(4);
    auto endos = enumerate_endomorphisms(gf4);
    REQUIRE(endos.size() == 2);
    CHECK(endos[0].is_identity());
    CHECK(endos[1].map == std::vector<int>{0, 1, 3, 2});  // Frobenius x -> x^2

    FiniteRing p22r = build_ring("product zmod2 zmod2");
    auto p22 = enumerate_endomorphisms(p22r);
    CHECK(p22.size() == 4);

    Caps tight;
    tight.endo_cap = 2;
    CHECK_THROWS_AS(enumerate_endomorphisms(gf4, tight.endo_cap), CapacityError);
}

TEST_CASE("catalog-wide structural invariants") {
    for (const FiniteRing& r : default_catalog()) {
        CAPTURE(r.name);
        CHECK(validate_ring_axioms(r).all_pass);

        // radical: quasi-regularity must match both maximal-ideal intersections
        Ideal j = jacobson_radical(r);
        ElemSet right_inter = ElemSet::full(r.order);
        for (const auto& m : one_sided_maximal_ideals(r, Side::right)) right_inter &= m.elems;
        CHECK(j.elems == right_inter);

        // finite rings are semiperfect: semi-regular with nil radical
        CHECK(is_semiregular(r).semiregular);
        CHECK(nilpotency_index(j).has_value());

        if (r.commutative) {
            CHECK(is_abelian(r).abelian);
            CHECK(is_quasi_duo(r).quasi_duo);
        }

        // maximal two-sided ideals are prime
        for (const auto& m : one_sided_maximal_ideals(r, Side::two_sided)) {
            Ideal p{&r, m.elems, Side::two_sided};
            CHECK(is_prime_ideal(r, p).prime);
        }

        // Nil_*(R) inside J(R)
        CHECK(j.elems.contains(nil_structure(r).nil_star.elems));
    }
}

TEST_CASE("annihilators shrink as the set grows") {
    for (const char* spec : {"zmod 8", "uppertri 2 zmod2", "gf 4"}) {
        FiniteRing r = build_ring(spec);
        std::vector<ElemId> xs;
        ElemSet prev = ElemSet::full(r.order);
        for (ElemId x = 0; x < r.order; ++x) {
            xs.push_back(x);
            ElemSet cur = annihilator(r, xs, Side::right);
            CHECK(prev.contains(cur));
            prev = cur;
        }
    }
}

TEST_CASE("ring spec parsing errors name the field") {
    CHECK_THROWS_AS(build_ring("frobnicate 3"), SpecError);
    CHECK_THROWS_AS(build_ring("zmod x"), SpecError);
    CHECK_THROWS_AS(build_ring("gf 4 irr=x^2"), SpecError);
    CHECK_THROWS_AS(build_ring("table file=/nonexistent/path.tbl"), SpecError);
    CHECK(build_ring("zmod4").order == 4);  // compact form
}
