#include "matspace/field.hpp"

#include "doctest.h"

using namespace matspace;

TEST_CASE("field axioms hold exhaustively for every supported size") {
    for (unsigned q : supported_fields()) {
        CAPTURE(q);
        const FieldTable& f = make_field(q);
        REQUIRE(f.q() == q);
        for (unsigned a = 0; a < q; ++a) {
            Elem ea = static_cast<Elem>(a);
            CHECK(f.add(ea, 0) == ea);
            CHECK(f.mul(ea, 1) == ea);
            CHECK(f.mul(ea, 0) == 0);
            CHECK(f.add(ea, f.neg(ea)) == 0);
            if (a != 0) CHECK(f.mul(ea, f.inv(ea)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                Elem eb = static_cast<Elem>(b);
                CHECK(f.add(ea, eb) == f.add(eb, ea));
                CHECK(f.mul(ea, eb) == f.mul(eb, ea));
                CHECK(f.sub(ea, eb) == f.add(ea, f.neg(eb)));
                if (b != 0) CHECK(f.mul(f.div(ea, eb), eb) == ea);
                for (unsigned c = 0; c < q; ++c) {
                    Elem ec = static_cast<Elem>(c);
                    CHECK(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)));
                    CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
                    CHECK(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
                }
            }
        }
        // characteristic: p ones sum to zero, fewer do not
        Elem s = 0;
        for (unsigned i = 1; i < f.characteristic(); ++i) {
            s = f.add(s, 1);
            CHECK(s != 0);
        }
        CHECK(f.add(s, 1) == 0);
    }
}

TEST_CASE("multiplicative group is cyclic of order q - 1") {
    for (unsigned q : supported_fields()) {
        CAPTURE(q);
        const FieldTable& f = make_field(q);
        unsigned generators = 0;
        for (unsigned a = 1; a < q; ++a) {
            Elem x = 1;
            unsigned order = 0;
            do {
                x = f.mul(x, static_cast<Elem>(a));
                ++order;
            } while (x != 1);
            CHECK((q - 1) % order == 0);
            if (order == q - 1) ++generators;
        }
        CHECK(generators > 0);
    }
}

TEST_CASE("GF(4) table matches x^2 + x + 1") {
    const FieldTable& f = make_field(4);
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == 2);
    // 2 encodes x, 3 encodes x + 1
    CHECK(f.add(2, 2) == 0);
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.mul(3, 3) == 2);
    CHECK(f.inv(2) == 3);
    CHECK(f.inv(3) == 2);
}

TEST_CASE("GF(8) table matches x^3 + x + 1") {
    const FieldTable& f = make_field(8);
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == 3);
    // 2 encodes x, 4 encodes x^2
    CHECK(f.mul(2, 2) == 4);
    CHECK(f.mul(2, 4) == 3); // x^3 = x + 1
    CHECK(f.mul(4, 4) == 6); // x^4 = x^2 + x
}

TEST_CASE("GF(9) table matches x^2 + 1") {
    const FieldTable& f = make_field(9);
    CHECK(f.characteristic() == 3);
    CHECK(f.degree() == 2);
    // 3 encodes x
    CHECK(f.mul(3, 3) == 2); // x^2 = -1
    CHECK(f.neg(1) == 2);
    CHECK(f.mul(3, 6) == 1); // x * 2x = 2x^2 = 1
}

TEST_CASE("prime fields are residue arithmetic") {
    for (unsigned q : {2u, 3u, 5u, 7u}) {
        const FieldTable& f = make_field(q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                CHECK(f.add(static_cast<Elem>(a), static_cast<Elem>(b)) == (a + b) % q);
                CHECK(f.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == (a * b) % q);
            }
    }
}

TEST_CASE("unsupported sizes and zero inverses throw") {
    CHECK_THROWS_AS(make_field(6), unsupported_field_error);
    CHECK_THROWS_AS(make_field(16), unsupported_field_error);
    CHECK_THROWS_AS(make_field(0), unsupported_field_error);
    CHECK_THROWS_AS(make_field(2).inv(0), value_error);
}

TEST_CASE("make_field returns one shared table per size") {
    CHECK(&make_field(4) == &make_field(4));
    CHECK(make_field(2) == make_field(2));
}
