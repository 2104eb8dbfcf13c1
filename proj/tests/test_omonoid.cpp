#include "doctest.h"
#include "sgps/ordered_monoid.hpp"
#include "oracles.hpp"

using namespace sgps;

TEST_CASE("monoid specs parse") {
    CHECK(OrderedMonoid::parse("N").kind() == MonoidKind::naturals);
    CHECK(OrderedMonoid::parse("Z").is_group());
    OrderedMonoid n2 = OrderedMonoid::parse("N^2 lex");
    CHECK(n2.rank() == 2);
    CHECK(n2.name() == "N^2 lex");
    CHECK_THROWS_AS(OrderedMonoid::parse("Q"), SpecError);
    CHECK_THROWS_AS(OrderedMonoid::parse("N^1 lex"), SpecError);
}

TEST_CASE("lexicographic comparison") {
    OrderedMonoid n2 = OrderedMonoid::naturals_lex(2);
    CHECK(n2.compare({1, 0}, {0, 5}) > 0);
    CHECK(n2.compare({0, 5}, {1, 0}) < 0);
    CHECK(n2.compare({2, 3}, {2, 3}) == 0);
    CHECK(n2.op({1, 2}, {3, 4}) == MonElem{4, 6});
}

TEST_CASE("membership and right division") {
    OrderedMonoid n = OrderedMonoid::naturals();
    CHECK(n.contains({3}));
    CHECK_FALSE(n.contains({-1}));
    CHECK(n.solve_right({1}, {3}) == MonElem{2});
    CHECK_FALSE(n.solve_right({3}, {1}).has_value());

    OrderedMonoid z = OrderedMonoid::integers();
    CHECK(z.solve_right({3}, {1}) == MonElem{-2});
}

TEST_CASE("strict order validation") {
    CHECK(validate_strict_order(OrderedMonoid::naturals(), 10).pass);
    CHECK(validate_strict_order(OrderedMonoid::integers(), 5).pass);
    auto rep = validate_strict_order(OrderedMonoid::naturals_lex(2), 4);
    CHECK(rep.pass);
    CHECK(rep.triples_checked > 0);
    CHECK_THROWS_AS(validate_strict_order(OrderedMonoid::naturals(), 0), SpecError);
}

TEST_CASE("total order trichotomy and transitivity on samples") {
    OrderedMonoid n2 = OrderedMonoid::naturals_lex(2);
    testutil::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        MonElem a{rng.below(9), rng.below(9)}, b{rng.below(9), rng.below(9)},
            c{rng.below(9), rng.below(9)};
        int ab = n2.compare(a, b);
        CHECK(ab == -n2.compare(b, a));
        if (ab < 0 && n2.compare(b, c) < 0) CHECK(n2.compare(a, c) < 0);
    }
}

TEST_CASE("identity is minimal in N and N^k but not in Z") {
    OrderedMonoid n = OrderedMonoid::naturals();
    for (int e = 0; e <= 10; ++e) CHECK(n.compare(n.identity(), {e}) <= 0);
    OrderedMonoid n2 = OrderedMonoid::naturals_lex(2);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) CHECK(n2.compare(n2.identity(), {i, j}) <= 0);
    OrderedMonoid z = OrderedMonoid::integers();
    CHECK(z.compare(z.identity(), {-1}) > 0);
}

TEST_CASE("support validation reports extremes") {
    OrderedMonoid n = OrderedMonoid::naturals();
    auto rep = validate_support(n, {{0}, {1}, {3}});
    CHECK(rep.artinian);
    CHECK(rep.narrow);
    CHECK(rep.min == MonElem{0});
    CHECK(rep.max == MonElem{3});

    auto empty = validate_support(n, {});
    CHECK(empty.artinian);
    CHECK(empty.narrow);
    CHECK_FALSE(empty.min.has_value());

    OrderedMonoid n2 = OrderedMonoid::naturals_lex(2);
    auto lex = validate_support(n2, {{0, 1}, {1, 0}});
    CHECK(lex.min == MonElem{0, 1});
}
