#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galform/serial.hpp"

using namespace galform;

TEST_CASE("field round trips") {
    for (const Field& f : {Field::rationals(), Field::prime(7),
                           Field::extension(2, {1, 1, 1}),
                           Field::extension(3, {1, 0, 0, 2, 1})}) {
        Field g = field_from_json(field_to_json(f));
        CHECK(g == f);
    }
    Field rx = Field::rational_extension({Rational(-2), Rational(0), Rational(1)});
    CHECK(field_from_json(field_to_json(rx)) == rx);
}

TEST_CASE("element and poly round trips") {
    Field q = Field::rationals();
    FieldElement r = q.from_rational(Rational(-7, 3));
    CHECK(element_from_json(q, element_to_json(r)) == r);

    Field f4 = Field::extension(2, {1, 1, 1});
    FieldElement t = f4.from_coeffs({0, 1});
    CHECK(element_from_json(f4, element_to_json(t)) == t);

    Poly p = Poly::from_ints(q, {-2, 0, 1});
    Poly p2 = poly_from_json(q, poly_to_json(p));
    CHECK(p2 == p);

    Poly z = Poly(f4, {});
    CHECK(poly_from_json(f4, poly_to_json(z)).is_zero());
}

TEST_CASE("group round trip validates the table") {
    FiniteGroup s3 = dihedral_group(3);
    FiniteGroup back = group_from_json(group_to_json(s3));
    CHECK(back.order == 6);
    CHECK(back.table == s3.table);

    Json bad = group_to_json(s3);
    bad["table"][1][1] = 1;  // breaks cancellation
    CHECK_THROWS_AS(group_from_json(bad), error);
}

TEST_CASE("family point round trips and still verifies") {
    FamilyPoint pt = construct_point_finite_field(3, 1, 2);
    FamilyPoint back = point_from_json(point_to_json(pt));
    CHECK(back.f == pt.f);
    CHECK(back.h == pt.h);
    CHECK(verify_family_point(back).pass());

    FamilyPoint rat = construct_point_cyclotomic(5);
    FamilyPoint rback = point_from_json(point_to_json(rat));
    CHECK(verify_family_point(rback).pass());
    CHECK(rback.e == rat.e);
}

TEST_CASE("root datum round trip validates") {
    for (const BasedRootDatum& b : enumerate_root_data(2)) {
        BasedRootDatum back = root_datum_from_json(root_datum_to_json(b));
        CHECK(back.datum.rank == b.datum.rank);
        CHECK(back.datum.roots == b.datum.roots);
        CHECK(back.datum.coroots == b.datum.coroots);
        CHECK(back.base == b.base);
    }

    Json bad = root_datum_to_json(enumerate_root_data(1)[1]);
    bad["coroots"][0][0] = "5";
    CHECK_THROWS_AS(root_datum_from_json(bad), error);
}

TEST_CASE("presentation serialization shape") {
    FamilyPoint pt = construct_point_finite_field(2, 1, 2);
    Presentation pr = emit_presentation(pt.gamma).first;
    Json j = presentation_to_json(pr);
    CHECK(j["variables"].size() == 9);
    CHECK(j["relations"].size() == 15);
    // every monomial exponent vector matches the variable count
    for (const auto& rel : j["relations"])
        for (const auto& term : rel) CHECK(term[1].size() == 9);
}
