#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octo/octonion.hpp"
#include "octo/solver.hpp"
#include "octo/suites.hpp"

#include <random>

using namespace octo;

namespace {

Octonion<FieldElem> basis(const FieldSpecPtr& f, OctIndex i) {
    return Octonion<FieldElem>::basis(i, f->one());
}

} // namespace

TEST_CASE("basis products match the figure") {
    const auto& t = mul_table();
    // e_1 e_w = e_-wb
    CHECK(t(OctIndex::e1, OctIndex::ew).sign == 1);
    CHECK(t(OctIndex::e1, OctIndex::ew).index == OctIndex::emwb);
    // e_w e_1 = -e_-wb
    CHECK(t(OctIndex::ew, OctIndex::e1).sign == -1);
    CHECK(t(OctIndex::ew, OctIndex::e1).index == OctIndex::emwb);
    // e_-1 e_1 = -e_0
    CHECK(t(OctIndex::em1, OctIndex::e1).sign == -1);
    CHECK(t(OctIndex::em1, OctIndex::e1).index == OctIndex::e0);
    // e_-1 e_-1 = 0
    CHECK(t(OctIndex::em1, OctIndex::em1).sign == 0);
}

TEST_CASE("table regenerates from the generating rules") {
    CHECK(table_rule_discrepancies().empty());
}

TEST_CASE("identity element and basis multiplication") {
    auto f5 = FieldSpec::prime(5);
    const auto one = Octonion<FieldElem>::one_like(f5->one());
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const auto x = random_octonion(f5, rng);
        CHECK(one * x == x);
        CHECK(x * one == x);
    }
    CHECK(basis(f5, OctIndex::e1) * basis(f5, OctIndex::e0) == basis(f5, OctIndex::e1));
    CHECK(basis(f5, OctIndex::e0) * basis(f5, OctIndex::e0) == basis(f5, OctIndex::e0));
    CHECK(basis(f5, OctIndex::em0) * basis(f5, OctIndex::e1) == basis(f5, OctIndex::e1));
}

TEST_CASE("trace and norm") {
    auto f5 = FieldSpec::prime(5);
    // x = e_0 - e_-0 + e_w - e_-w: T = 0, N = -2.
    auto x = basis(f5, OctIndex::e0) - basis(f5, OctIndex::em0) +
             basis(f5, OctIndex::ew) - basis(f5, OctIndex::emw);
    CHECK(x.trace() == f5->zero());
    CHECK(x.norm() == f5->from_int(-2));
    // x^2 = T(x)x - N(x) = 2.
    CHECK(x * x == f5->from_int(2) * Octonion<FieldElem>::one_like(f5->one()));

    // x = e_0 + a e_1 + e_-1: T = 1, N = a, N(1-x) = a.
    const FieldElem alpha = f5->from_int(3);
    auto y = basis(f5, OctIndex::e0) + alpha * basis(f5, OctIndex::e1) +
             basis(f5, OctIndex::em1);
    CHECK(y.trace() == f5->one());
    CHECK(y.norm() == alpha);
    const auto one = Octonion<FieldElem>::one_like(f5->one());
    CHECK((one - y).norm() == alpha);

    CHECK(one.trace() == f5->from_int(2));
    CHECK(one.norm() == f5->one());
}

TEST_CASE("square law x^2 = T(x)x - N(x)") {
    auto f7 = FieldSpec::prime(7);
    CHECK(oct_square_check(Octonion<FieldElem>::zero_like(f7->one())));
    std::mt19937_64 rng(29);
    for (int i = 0; i < 1000; ++i) CHECK(oct_square_check(random_octonion(f7, rng)));
}

TEST_CASE("inverse formula") {
    auto f5 = FieldSpec::prime(5);
    auto x = basis(f5, OctIndex::e0) - basis(f5, OctIndex::em0) +
             basis(f5, OctIndex::ew) - basis(f5, OctIndex::emw);
    const auto one = Octonion<FieldElem>::one_like(f5->one());
    const auto xinv = x.inverse();
    CHECK(x * xinv == one);
    CHECK(xinv * x == one);
    // N(x)^-1 (T(x) - x) = (-2)^-1 (0 - x) = 2^-1 x = 3x over GF(5).
    CHECK(xinv == f5->from_int(3) * x);

    CHECK_THROWS_AS(basis(f5, OctIndex::e1).inverse(), not_invertible_error);
    CHECK(one.inverse() == one);

    std::mt19937_64 rng(31);
    for (const auto& spec : {FieldSpec::prime(3), FieldSpec::prime(7)}) {
        for (int i = 0; i < 500; ++i) {
            const auto x2 = random_octonion(spec, rng);
            if (!x2.is_invertible()) continue;
            CHECK(x2 * x2.inverse() == Octonion<FieldElem>::one_like(spec->one()));
            CHECK(x2.inverse() * x2 == Octonion<FieldElem>::one_like(spec->one()));
        }
    }
}

TEST_CASE("alternativity and flexibility") {
    for (const auto& spec : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
        const auto res = alternativity_basis_suite(spec);
        CHECK(res.failures == 0);
    }
    std::mt19937_64 rng(37);
    auto f5 = FieldSpec::prime(5);
    for (int i = 0; i < 2000; ++i) {
        const auto x = random_octonion(f5, rng);
        const auto y = random_octonion(f5, rng);
        CHECK(associator(x, x, y).is_zero());
        CHECK(associator(y, x, x).is_zero());
        CHECK(associator(x, y, x).is_zero());
    }
}

TEST_CASE("a nonzero associator exists (nonassociativity witness)") {
    auto f3 = FieldSpec::prime(3);
    bool found = false;
    for (int i = 0; i < 8 && !found; ++i)
        for (int j = 0; j < 8 && !found; ++j)
            for (int k = 0; k < 8 && !found; ++k)
                if (!associator(basis(f3, static_cast<OctIndex>(i)),
                                basis(f3, static_cast<OctIndex>(j)),
                                basis(f3, static_cast<OctIndex>(k)))
                         .is_zero())
                    found = true;
    CHECK(found);
}

TEST_CASE("Moufang identities") {
    std::mt19937_64 rng(41);
    auto f3 = FieldSpec::prime(3);
    for (int i = 0; i < 500; ++i) {
        CHECK(moufang_check(random_octonion(f3, rng), random_octonion(f3, rng),
                            random_octonion(f3, rng))
                  .all());
    }
    const auto one = Octonion<FieldElem>::one_like(f3->one());
    CHECK(moufang_check(one, one, one).all());
    // Rational-function coefficients (exact arithmetic in Z2(t)).
    for (int i = 0; i < 25; ++i) {
        CHECK(moufang_check(random_ratfunc_octonion(rng), random_ratfunc_octonion(rng),
                            random_ratfunc_octonion(rng))
                  .all());
    }
}

TEST_CASE("Hua identity on scalars") {
    auto f7 = FieldSpec::prime(7);
    const auto one = Octonion<FieldElem>::one_like(f7->one());
    const auto a = f7->from_int(2) * one;
    const auto b = f7->from_int(3) * one;
    const auto hua = hua_check(a, b);
    REQUIRE(hua.applicable);
    CHECK(hua.equal);
    // aba = 2*3*2 = 12 = 5 mod 7.
    CHECK(hua.rhs == f7->from_int(5) * one);
    CHECK(hua.lhs == f7->from_int(5) * one);
}

TEST_CASE("Hua identity with a = 1") {
    auto f5 = FieldSpec::prime(5);
    const auto one = Octonion<FieldElem>::one_like(f5->one());
    const auto b = f5->from_int(2) * one;
    const auto hua = hua_check(one, b);
    REQUIRE(hua.applicable);
    CHECK(hua.equal);
    CHECK(hua.rhs == b);
}

TEST_CASE("Hua identity on random pairs") {
    std::mt19937_64 rng(43);
    auto f5 = FieldSpec::prime(5);
    const auto res = hua_suite(f5, 1000, rng);
    CHECK(res.samples == 1000);
    CHECK(res.failures == 0);
    // Flexibility: (ab)a = a(ba) on random pairs.
    for (int i = 0; i < 200; ++i) {
        const auto a = random_octonion(f5, rng);
        const auto b = random_octonion(f5, rng);
        CHECK((a * b) * a == a * (b * a));
    }
}

TEST_CASE("norm multiplicativity") {
    std::mt19937_64 rng(47);
    for (const auto& spec : {FieldSpec::prime(3), FieldSpec::prime(7),
                             FieldSpec::with_default_modulus(2, 2)}) {
        for (int i = 0; i < 3000; ++i) {
            const auto x = random_octonion(spec, rng);
            const auto y = random_octonion(spec, rng);
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }
}

TEST_CASE("polarized norm form has full rank 8") {
    for (const auto& spec : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
        // B(e_i, e_j) = N(e_i + e_j) - N(e_i) - N(e_j); prime fields, so the
        // entries are GF(p) scalars and RrefGFp measures the rank.
        RrefGFp rref(spec->characteristic(), 8);
        for (int i = 0; i < 8; ++i) {
            std::vector<std::uint32_t> row(8);
            const auto ei = basis(spec, static_cast<OctIndex>(i));
            for (int j = 0; j < 8; ++j) {
                const auto ej = basis(spec, static_cast<OctIndex>(j));
                const FieldElem bij = (ei + ej).norm() - ei.norm() - ej.norm();
                row[static_cast<std::size_t>(j)] = bij.coords()[0];
            }
            rref.add_row(std::move(row));
        }
        CHECK(rref.rank() == 8);
    }
}

TEST_CASE("two-generator subrings are associative (Artin-style scan)") {
    std::mt19937_64 rng(53);
    auto f3 = FieldSpec::prime(3);
    for (int i = 0; i < 10; ++i)
        CHECK(artin_word_check(random_octonion(f3, rng), random_octonion(f3, rng), 2));
    // Single generator: power-associativity.
    const auto x = random_octonion(f3, rng);
    CHECK(artin_word_check(x, x, 2));
    // Depth 3 over GF(2) on a fixed sample set.
    auto f2 = FieldSpec::prime(2);
    std::mt19937_64 rng2(1);
    for (int i = 0; i < 5; ++i)
        CHECK(artin_word_check(random_octonion(f2, rng2), random_octonion(f2, rng2), 3));
    CHECK_THROWS_AS(artin_word_check(x, x, 4), domain_error);
}

TEST_CASE("octonions over rational function coefficients") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_ratfunc_octonion(rng);
        const auto y = random_ratfunc_octonion(rng);
        CHECK(associator(x, x, y).is_zero());
        CHECK(associator(x, y, x).is_zero());
        CHECK(oct_square_check(x));
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("mixed-field octonion product rejected") {
    auto f2 = FieldSpec::prime(2);
    auto f3 = FieldSpec::prime(3);
    const auto x = Octonion<FieldElem>::one_like(f2->one());
    const auto y = Octonion<FieldElem>::one_like(f3->one());
    CHECK_THROWS_AS(x * y, domain_error);
}
