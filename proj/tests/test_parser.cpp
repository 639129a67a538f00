#include "pcalg/parser.hpp"

#include <doctest.h>

using namespace pcalg;

TEST_CASE("grammar: worked expressions") {
    CHECK(parse_pcpoly("[V,X1]*X2", 2) ==
          (commutator(PCPoly::v(2), PCPoly::x(2, 1)) * PCPoly::x(2, 2)));
    CHECK(parse_pcpoly("[U,[V,X1]_2]", 1) ==
          commutator(PCPoly::u(1), ad_pow(PCPoly::v(1), PCPoly::x(1, 1), 2)));
    CHECK(parse_pcpoly("(X1 + V)^2", 1) ==
          (PCPoly::x(1, 1) + PCPoly::v(1)) * (PCPoly::x(1, 1) + PCPoly::v(1)));
    CHECK(parse_pcpoly("3/2*U^2*V*X1", 1) ==
          Rat(3, 2) * (PCPoly::u(1) * PCPoly::u(1) * PCPoly::v(1) * PCPoly::x(1, 1)));
    CHECK(parse_pcpoly("-X1 + 2", 1) == Rat(2) * PCPoly::unit(1) - PCPoly::x(1, 1));
}

TEST_CASE("precedence: power over product over sum; bracket is an atom") {
    CHECK(parse_pcpoly("X1*V^2", 1) == PCPoly::x(1, 1) * PCPoly::v(1) * PCPoly::v(1));
    CHECK(parse_pcpoly("X1+V*X1", 1) == PCPoly::x(1, 1) + PCPoly::v(1) * PCPoly::x(1, 1));
    CHECK(parse_pcpoly("[V,X1]_0", 1) == PCPoly::x(1, 1));
}

TEST_CASE("weyl literals") {
    WeylElement a = parse_weyl("1/2*v^2*w - w");
    WeylElement expected = WeylElement::monomial(2, 1, Rat(1, 2)) - WeylElement::w();
    CHECK(a == expected);
    CHECK(parse_weyl("v*w - w*v") == WeylElement::unit());
}

TEST_CASE("errors carry positions") {
    try {
        parse_pcpoly("X1 + * V", 1);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }

    CHECK_THROWS_AS(parse_pcpoly("X3", 2), ParseError);   // index out of range
    CHECK_THROWS_AS(parse_pcpoly("w", 2), ParseError);    // unknown identifier
    CHECK_THROWS_AS(parse_pcpoly("X1 X2", 2), ParseError); // trailing input
    CHECK_THROWS_AS(parse_pcpoly("1/0", 1), ParseError);  // zero denominator
    CHECK_THROWS_AS(parse_pcpoly("[V,X1", 1), ParseError);
    CHECK_THROWS_AS(parse_weyl("U"), ParseError);
}
