#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octo/fields.hpp"

#include <set>
#include <vector>

using namespace octo;

TEST_CASE("prime field arithmetic") {
    auto f7 = FieldSpec::prime(7);
    CHECK(f7->from_int(3) + f7->from_int(5) == f7->one());
    CHECK(f7->from_int(3) - f7->from_int(5) == f7->from_int(5));
    // 15 mod 7 = 1, cross-checked against plain integers.
    CHECK(f7->from_int(3) * f7->from_int(5) == f7->from_int(15 % 7));
    CHECK(f7->from_int(3).inv() == f7->from_int(5));
    CHECK(f7->one().inv() == f7->one());
}

TEST_CASE("inverse of zero fails") {
    auto f2 = FieldSpec::prime(2);
    CHECK_THROWS_AS(f2->zero().inv(), not_invertible_error);
}

TEST_CASE("mixed-field operands rejected") {
    auto f2 = FieldSpec::prime(2);
    auto f3 = FieldSpec::prime(3);
    CHECK_THROWS_AS(f2->one() + f3->one(), domain_error);
}

TEST_CASE("GF(4) generator multiplication reduces by the modulus") {
    auto f4 = FieldSpec::extension(2, 2, {1, 1, 1}); // y^2 + y + 1
    const FieldElem g = f4->generator();
    // g*g = y^2 = y + 1.
    CHECK(g * g == g + f4->one());
    CHECK(g * (g + f4->one()) == f4->one()); // y * (y+1) = y^2 + y = 1
}

TEST_CASE("enumeration is complete, duplicate-free, lexicographic") {
    auto f2 = FieldSpec::prime(2);
    auto e2 = f2->enumerate();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == f2->zero());
    CHECK(e2[1] == f2->one());

    auto f3 = FieldSpec::prime(3);
    auto e3 = f3->enumerate();
    REQUIRE(e3.size() == 3);
    CHECK(e3[2] == f3->from_int(2));

    auto f4 = FieldSpec::with_default_modulus(2, 2);
    auto e4 = f4->enumerate();
    REQUIRE(e4.size() == 4);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& x : e4) seen.insert(x.coords());
    CHECK(seen.size() == 4);
}

TEST_CASE("coords round trip") {
    auto f4 = FieldSpec::with_default_modulus(2, 2);
    const FieldElem g = f4->generator();
    CHECK((g + f4->one()).coords() == std::vector<std::uint32_t>{1, 1});
    CHECK(f4->zero().coords() == std::vector<std::uint32_t>{0, 0});
    CHECK_THROWS_AS(f4->from_coords({1}), domain_error);

    auto f9 = FieldSpec::with_default_modulus(3, 2);
    for (const auto& a : f9->enumerate()) CHECK(f9->from_coords(a.coords()) == a);
}

TEST_CASE("addition is coordinatewise") {
    auto f9 = FieldSpec::with_default_modulus(3, 2);
    for (const auto& a : f9->enumerate())
        for (const auto& b : f9->enumerate()) {
            const auto ca = a.coords(), cb = b.coords(), cs = (a + b).coords();
            for (std::size_t i = 0; i < ca.size(); ++i)
                CHECK(cs[i] == (ca[i] + cb[i]) % 3);
        }
}

TEST_CASE("field axioms hold exhaustively for small fields") {
    std::vector<FieldSpecPtr> fields;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u,
                            37u, 41u, 43u, 47u, 53u, 59u, 61u})
        fields.push_back(FieldSpec::prime(p));
    for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {2u, 6u},
                        {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}})
        fields.push_back(FieldSpec::with_default_modulus(p, k));

    for (const auto& f : fields) {
        REQUIRE(f->order() <= 64);
        const auto elems = f->enumerate();
        for (const auto& a : elems) {
            if (!a.is_zero()) CHECK(a * a.inv() == f->one());
            for (const auto& b : elems) {
                CHECK(a * b == b * a);
                CHECK(a + b == b + a);
                for (const auto& c : elems) {
                    CHECK((a * b) * c == a * (b * c));
                    CHECK((a + b) + c == a + (b + c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("Frobenius additivity and perfectness in characteristic 2") {
    for (std::uint32_t k = 1; k <= 6; ++k) {
        auto f = FieldSpec::with_default_modulus(2, k);
        const auto elems = f->enumerate();
        std::set<std::vector<std::uint32_t>> squares;
        for (const auto& a : elems) {
            squares.insert((a * a).coords());
            for (const auto& b : elems)
                CHECK((a + b) * (a + b) == a * a + b * b);
        }
        // Squaring is a bijection: every element has a square root.
        CHECK(squares.size() == elems.size());
    }
}

TEST_CASE("modulus validation") {
    // y^2 + 1 = (y+1)^2 over GF(2): reducible.
    CHECK_THROWS_AS(FieldSpec::extension(2, 2, {1, 0, 1}), domain_error);
    // Not monic.
    CHECK_THROWS_AS(FieldSpec::extension(3, 2, {1, 0, 2}), domain_error);
    // Wrong degree.
    CHECK_THROWS_AS(FieldSpec::extension(2, 2, {1, 1}), domain_error);
    // Non-prime characteristic.
    CHECK_THROWS_AS(FieldSpec::prime(6), domain_error);
}

TEST_CASE("field spec literals") {
    CHECK(FieldSpec::parse("gf:5")->order() == 5);
    auto f4 = FieldSpec::parse("gf:2^2");
    CHECK(f4->order() == 4);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    auto f9 = FieldSpec::parse("gf:3^2:1,0,1");
    CHECK(f9->order() == 9);
    CHECK_THROWS_AS(FieldSpec::parse("gf:"), parse_error);
    CHECK_THROWS_AS(FieldSpec::parse("xx:5"), parse_error);
    CHECK_THROWS_AS(FieldSpec::parse("gf:7^9"), std::exception); // over every bound
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(FieldSpec::prime(1048583), capacity_error); // smallest prime > 2^20
}

TEST_CASE("element literals") {
    auto f7 = FieldSpec::prime(7);
    CHECK(parse_field_elem(f7, "-1") == f7->from_int(6));
    CHECK(parse_field_elem(f7, "10") == f7->from_int(3));
    auto f4 = FieldSpec::parse("gf:2^2");
    CHECK(parse_field_elem(f4, "1.1") == f4->generator() + f4->one());
    CHECK_THROWS_AS(parse_field_elem(f7, "x"), parse_error);
}
