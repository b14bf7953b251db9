#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octo/patho_map.hpp"
#include "octo/suites.hpp"

#include <random>

using namespace octo;

namespace {
RatFunc2 rf(const char* s) { return parse_ratfunc(s); }
} // namespace

TEST_CASE("anchors f(1) = A and f(t) = B") {
    const PathoMap m(rf("1/(t+1)"), rf("t^3"));
    CHECK(m.eval(RatFunc2::one()) == m.A());
    CHECK(m.eval(RatFunc2::t()) == m.B());
    CHECK(m.eval(RatFunc2::zero()).is_zero());
}

TEST_CASE("odd powers: f(t^3) = t^2 B") {
    const PathoMap m(rf("1"), rf("t"));
    CHECK(m.eval(rf("t^3")) == rf("t^2") * m.B());
}

TEST_CASE("negative powers: f(1/t) = B/t^2") {
    const PathoMap m(rf("1"), rf("t+1"));
    CHECK(m.eval(rf("1/t")) == RatFunc2(Poly2::one(), Poly2::monomial(2)) * m.B());
}

TEST_CASE("power anchors for n in [-10, 10]") {
    for (const auto& [a, b] : {std::pair{"1", "t"}, {"1/(t+1)", "t^3"}, {"t", "1"}}) {
        const PathoMap m(rf(a), rf(b));
        const auto res = patho_anchor_suite(m);
        CHECK(res.failures == 0);
    }
}

TEST_CASE("functional identity f(x) + x^2 f(x^-1) = 0") {
    const PathoMap m(rf("1/(t+1)"), rf("t"));
    CHECK(m.check_identity(RatFunc2::t()));
    CHECK(m.check_identity(RatFunc2::one())); // A + A = 0 in characteristic 2
    CHECK(m.check_identity(rf("(t^2+1)/(t^3+t+1)")));
    CHECK_THROWS_AS(m.check_identity(RatFunc2::zero()), domain_error);

    std::mt19937_64 rng(61);
    const auto res = patho_identity_suite(m, 2000, rng);
    CHECK(res.failures == 0);
}

TEST_CASE("square law f(a^2 b) = a^2 f(b)") {
    const PathoMap m(rf("t"), rf("1"));
    // a = t, b = t^n reproduces f(t^{n+2}) = t^2 f(t^n).
    for (int n = -5; n <= 5; ++n)
        CHECK(m.eval(RatFunc2::t_pow(n + 2)) == rf("t^2") * m.eval(RatFunc2::t_pow(n)));
    CHECK(m.check_square_law(RatFunc2::zero(), rf("t+1")));
    std::mt19937_64 rng(67);
    for (int i = 0; i < 1000; ++i)
        CHECK(m.check_square_law(random_ratfunc(rng), random_ratfunc(rng)));
}

TEST_CASE("well-definedness across unreduced representations") {
    const PathoMap m(rf("1"), rf("t^2"));
    CHECK(m.well_defined_on(RatFunc2::t(), Poly2::from_coeffs({1, 1})));
    CHECK(m.well_defined_on(rf("(t+1)/t"), Poly2::one()));
    CHECK_THROWS_AS(m.well_defined_on(RatFunc2::t(), Poly2::zero()), domain_error);
    std::mt19937_64 rng(71);
    const auto res = patho_welldef_suite(m, 1000, rng);
    CHECK(res.failures == 0);
}

TEST_CASE("additivity") {
    const PathoMap m(rf("1/(t+1)"), rf("t^3"));
    std::mt19937_64 rng(73);
    const auto res = patho_additivity_suite(m, 5000, rng);
    CHECK(res.failures == 0);
}

TEST_CASE("non-linearity witness fires exactly when B != tA") {
    // B != tA: the map is not x -> xq.
    CHECK(patho_nonlinearity_witness(PathoMap(rf("1"), rf("t^2"))));
    CHECK(patho_nonlinearity_witness(PathoMap(rf("t"), rf("1"))));
    // B = tA: the standard solution f(x) = xA.
    CHECK_FALSE(patho_nonlinearity_witness(PathoMap(rf("1"), rf("t"))));
    CHECK_FALSE(patho_nonlinearity_witness(PathoMap(rf("1/(t+1)"), rf("t/(t+1)"))));
}

TEST_CASE("g = f serves both maps: f(a^2 b) = a^2 g(b) with a single evaluator") {
    const PathoMap m(rf("1/(t+1)"), rf("t^3"));
    std::mt19937_64 rng(79);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_ratfunc(rng, 4);
        const auto b = random_ratfunc(rng, 4);
        CHECK(m.eval(a.square() * b) == a.square() * m.eval(b));
    }
}
