#include "quadcross/bounds.hpp"

#include "quadcross/bracket.hpp"
#include "quadcross/constructions.hpp"
#include "quadcross/errors.hpp"

#include <doctest.h>

using namespace quadcross;

TEST_CASE("lower bound rules are exact ceilings") {
    CHECK(lb_resolution(3) == 1);
    CHECK(lb_resolution(0) == 0);
    CHECK(lb_resolution(12) == 2);
    for (int k = 1; k <= 4; ++k) CHECK(lb_resolution(12 * k) == 2 * k);

    CHECK(lb_span(12) == 1);
    CHECK(lb_span(40) == 3);
    CHECK(lb_span(16) == 1);

    CHECK(lb_alternating(3) == 1);
    CHECK(lb_alternating(9) == 3);
    CHECK(lb_alternating(8) == 2);

    CHECK(lb_torus(2, 3) == 1);
    CHECK(lb_torus(3, 4) == 2);
    CHECK(lb_torus(2, 2) == 1);
}

TEST_CASE("span and alternating bounds agree on reduced alternating diagrams") {
    for (int n = 2; n <= 10; ++n) {
        const Diagram d = twist_chain(n);
        const int span = kauffman_bracket(d).span();
        CHECK(span == 4 * n);
        CHECK(lb_span(span) == lb_alternating(n));
    }
}

TEST_CASE("combine determines the trefoil") {
    BoundFlags flags;
    flags.torus = {{2, 3}};
    const BoundsReport r = combine(twist_chain(3), flags);
    CHECK(r.determined);
    CHECK(r.q_value == 1);
}

TEST_CASE("combine determines the (2,5) torus knot") {
    const BoundsReport r = combine(twist_chain(5));
    CHECK(r.best_lower == 2);
    CHECK(r.best_upper == 2);
    CHECK(r.determined);
}

TEST_CASE("combine brackets the figure eight between 1 and 2") {
    const BoundsReport r = combine(two_bridge({2, 2}));
    CHECK(r.best_lower == 1);
    CHECK(r.best_upper == 2);
    CHECK_FALSE(r.determined);
}

TEST_CASE("combine on the unknot") {
    const BoundsReport r = combine(Diagram::unknot());
    CHECK(r.determined);
    CHECK(r.q_value == 0);
}

TEST_CASE("combine never reports determined with unequal bounds") {
    for (const Diagram& d : {twist_chain(4), two_bridge({3, 2}), two_bridge({2, 2}),
                             two_bridge({4, 1, 3}), pretzel({3, 3, 3})}) {
        const BoundsReport r = combine(d);
        REQUIRE(r.best_lower.has_value());
        REQUIRE(r.best_upper.has_value());
        CHECK(*r.best_lower <= *r.best_upper);
        CHECK(r.determined == (*r.best_lower == *r.best_upper));
    }
}

TEST_CASE("quadruple diagrams get span bounds from the quadruple state sum") {
    DiagramBuilder b;
    b.add_quad(quad_type_heights(QuadType::q1432));
    b.connect(0, 0, 0, 1);
        b.connect(0, 2, 0, 7);
        b.connect(0, 3, 0, 6);
        b.connect(0, 4, 0, 5);
    const BoundsReport r = combine(b.build());
    REQUIRE(r.best_lower.has_value());
    CHECK(*r.best_lower >= 0);
    CHECK(*r.best_upper == 1);
}
