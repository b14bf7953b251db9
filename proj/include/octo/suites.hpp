#pragma once

// Property-suite drivers shared by the CLI and the verification tests:
// alternativity/flexibility, Moufang, Hua, norm multiplicativity, the
// square law, and the pathological-map checks, with seed-reproducible
// sampling (mt19937_64).

#include "octo/octonion.hpp"
#include "octo/patho_map.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace octo {

inline constexpr const char* kRngName = "mt19937_64";

struct SuiteResult {
    std::string name;
    std::uint64_t samples = 0;
    std::uint64_t failures = 0;
    std::uint64_t inapplicable = 0;
    bool exhaustive = false;
    std::string counterexample;

    bool passed() const { return failures == 0; }
};

// --- samplers -----------------------------------------------------------

inline FieldElem random_field_elem(const FieldSpecPtr& spec, std::mt19937_64& rng) {
    std::vector<std::uint32_t> coords(spec->degree());
    std::uniform_int_distribution<std::uint32_t> dist(0, spec->characteristic() - 1);
    for (auto& c : coords) c = dist(rng);
    return spec->from_coords(coords);
}

inline Octonion<FieldElem> random_octonion(const FieldSpecPtr& spec, std::mt19937_64& rng) {
    std::array<FieldElem, 8> c{};
    for (auto& x : c) x = random_field_elem(spec, rng);
    return Octonion<FieldElem>(c);
}

/// Random reduced rational function with numerator/denominator degree
/// bounds; the denominator is resampled until nonzero.
inline RatFunc2 random_ratfunc(std::mt19937_64& rng, int max_deg = 8) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> bit(0, 1);
    auto rand_poly = [&](int deg) {
        std::vector<int> coeffs(static_cast<std::size_t>(deg) + 1);
        for (auto& c : coeffs) c = bit(rng);
        return Poly2::from_coeffs(coeffs);
    };
    const Poly2 num = rand_poly(deg_dist(rng));
    Poly2 den;
    do {
        den = rand_poly(deg_dist(rng));
    } while (den.is_zero());
    return RatFunc2(num, den);
}

inline Poly2 random_poly2(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<int> coeffs(static_cast<std::size_t>(deg_dist(rng)) + 1);
    for (auto& c : coeffs) c = bit(rng);
    return Poly2::from_coeffs(coeffs);
}

inline Octonion<RatFunc2> random_ratfunc_octonion(std::mt19937_64& rng, int max_deg = 1) {
    std::array<RatFunc2, 8> c{};
    for (auto& x : c) x = random_ratfunc(rng, max_deg);
    return Octonion<RatFunc2>(c);
}

// --- octonion axiom suites ---------------------------------------------

/// Linearized alternativity and flexibility over every basis triple, plus
/// all two-term coefficient patterns (exhaustive quadratic polarization).
inline SuiteResult alternativity_basis_suite(const FieldSpecPtr& spec) {
    SuiteResult res{"alternativity_basis", 0, 0, 0, true, ""};
    const FieldElem one = spec->one();
    std::vector<Octonion<FieldElem>> e;
    for (int i = 0; i < 8; ++i)
        e.push_back(Octonion<FieldElem>::basis(static_cast<OctIndex>(i), one));
    const auto elems = spec->enumerate();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (const auto& alpha : elems)
                for (const auto& beta : elems) {
                    const auto x = alpha * e[static_cast<std::size_t>(i)] +
                                   beta * e[static_cast<std::size_t>(j)];
                    for (int k = 0; k < 8; ++k) {
                        const auto& y = e[static_cast<std::size_t>(k)];
                        ++res.samples;
                        if (!associator(x, x, y).is_zero() ||
                            !associator(y, x, x).is_zero() ||
                            !associator(x, y, x).is_zero()) {
                            ++res.failures;
                            if (res.counterexample.empty())
                                res.counterexample =
                                    "x=" + x.to_string() + " y=" + y.to_string();
                        }
                    }
                }
    return res;
}

inline SuiteResult alternativity_random_suite(const FieldSpecPtr& spec,
                                              std::uint64_t samples, std::mt19937_64& rng) {
    SuiteResult res{"alternativity_random", 0, 0, 0, false, ""};
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto x = random_octonion(spec, rng);
        const auto y = random_octonion(spec, rng);
        ++res.samples;
        if (!associator(x, x, y).is_zero() || !associator(y, x, x).is_zero() ||
            !associator(x, y, x).is_zero()) {
            ++res.failures;
            if (res.counterexample.empty())
                res.counterexample = "x=" + x.to_string() + " y=" + y.to_string();
        }
    }
    return res;
}

/// N(xy) = N(x)N(y) and x^2 = T(x)x - N(x) on random elements.
inline SuiteResult norm_square_suite(const FieldSpecPtr& spec, std::uint64_t samples,
                                     std::mt19937_64& rng) {
    SuiteResult res{"norm_multiplicativity_square_law", 0, 0, 0, false, ""};
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto x = random_octonion(spec, rng);
        const auto y = random_octonion(spec, rng);
        ++res.samples;
        const bool norm_ok = (x * y).norm() == x.norm() * y.norm();
        const bool square_ok = oct_square_check(x);
        if (!norm_ok || !square_ok) {
            ++res.failures;
            if (res.counterexample.empty())
                res.counterexample = "x=" + x.to_string() + " y=" + y.to_string();
        }
    }
    return res;
}

inline SuiteResult moufang_suite(const FieldSpecPtr& spec, std::uint64_t samples,
                                 std::mt19937_64& rng) {
    SuiteResult res{"moufang", 0, 0, 0, false, ""};
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto x = random_octonion(spec, rng);
        const auto y = random_octonion(spec, rng);
        const auto a = random_octonion(spec, rng);
        ++res.samples;
        if (!moufang_check(x, y, a).all()) {
            ++res.failures;
            if (res.counterexample.empty())
                res.counterexample = "x=" + x.to_string() + " y=" + y.to_string() +
                                     " a=" + a.to_string();
        }
    }
    return res;
}

template <class Sampler>
SuiteResult hua_suite_generic(std::uint64_t target_valid, Sampler&& sample) {
    SuiteResult res{"hua", 0, 0, 0, false, ""};
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = target_valid * 64 + 1024;
    while (res.samples < target_valid && attempts < max_attempts) {
        ++attempts;
        auto [a, b] = sample();
        const auto hua = hua_check(a, b);
        if (!hua.applicable) {
            ++res.inapplicable;
            continue;
        }
        ++res.samples;
        if (!hua.equal) {
            ++res.failures;
            if (res.counterexample.empty())
                res.counterexample = "a=" + a.to_string() + " b=" + b.to_string();
        }
    }
    return res;
}

inline SuiteResult hua_suite(const FieldSpecPtr& spec, std::uint64_t target_valid,
                             std::mt19937_64& rng) {
    return hua_suite_generic(target_valid, [&] {
        return std::pair{random_octonion(spec, rng), random_octonion(spec, rng)};
    });
}

inline SuiteResult hua_ratfunc_suite(std::uint64_t target_valid, std::mt19937_64& rng,
                                     int max_deg = 1) {
    return hua_suite_generic(target_valid, [&] {
        return std::pair{random_ratfunc_octonion(rng, max_deg),
                         random_ratfunc_octonion(rng, max_deg)};
    });
}

inline SuiteResult table_rules_suite() {
    SuiteResult res{"table_rules_agreement", 64, 0, 0, true, ""};
    const auto diffs = table_rule_discrepancies();
    res.failures = diffs.size();
    if (!diffs.empty())
        res.counterexample = std::string("cell (") + kOctIndexNames[diffs[0].first] +
                             ", " + kOctIndexNames[diffs[0].second] + ")";
    return res;
}

// --- pathological map suites -------------------------------------------

inline SuiteResult patho_additivity_suite(const PathoMap& m, std::uint64_t samples,
                                          std::mt19937_64& rng) {
    SuiteResult res{"patho_additivity", 0, 0, 0, false, ""};
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto x = random_ratfunc(rng);
        const auto y = random_ratfunc(rng);
        ++res.samples;
        if (m.eval(x + y) != m.eval(x) + m.eval(y)) {
            ++res.failures;
            if (res.counterexample.empty())
                res.counterexample = "x=" + x.to_string() + " y=" + y.to_string();
        }
    }
    return res;
}

inline SuiteResult patho_identity_suite(const PathoMap& m, std::uint64_t samples,
                                        std::mt19937_64& rng) {
    SuiteResult res{"patho_identity", 0, 0, 0, false, ""};
    for (std::uint64_t s = 0; s < samples; ++s) {
        RatFunc2 x;
        do {
            x = random_ratfunc(rng);
        } while (x.is_zero());
        ++res.samples;
        if (!m.check_identity(x)) {
            ++res.failures;
            if (res.counterexample.empty()) res.counterexample = "x=" + x.to_string();
        }
    }
    return res;
}

inline SuiteResult patho_welldef_suite(const PathoMap& m, std::uint64_t samples,
                                       std::mt19937_64& rng) {
    SuiteResult res{"patho_well_definedness", 0, 0, 0, false, ""};
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto x = random_ratfunc(rng);
        Poly2 w;
        do {
            w = random_poly2(rng, 6);
        } while (w.is_zero());
        ++res.samples;
        if (!m.well_defined_on(x, w)) {
            ++res.failures;
            if (res.counterexample.empty())
                res.counterexample = "x=" + x.to_string() + " w=" + w.to_string();
        }
    }
    return res;
}

/// f(t^{2n}) = t^{2n} A and f(t^{2n+1}) = t^{2n} B for n in [-range, range].
inline SuiteResult patho_anchor_suite(const PathoMap& m, int range = 10) {
    SuiteResult res{"patho_power_anchors", 0, 0, 0, true, ""};
    for (int n = -range; n <= range; ++n) {
        const RatFunc2 t2n = RatFunc2::t_pow(2 * n);
        ++res.samples;
        if (m.eval(t2n) != t2n * m.A()) {
            ++res.failures;
            if (res.counterexample.empty())
                res.counterexample = "x=t^" + std::to_string(2 * n);
        }
        ++res.samples;
        if (m.eval(RatFunc2::t_pow(2 * n + 1)) != t2n * m.B()) {
            ++res.failures;
            if (res.counterexample.empty())
                res.counterexample = "x=t^" + std::to_string(2 * n + 1);
        }
    }
    return res;
}

/// The counterexample's content: when B != t A, f is not x -> x q.
inline bool patho_nonlinearity_witness(const PathoMap& m) {
    return m.eval(RatFunc2::t()) != RatFunc2::t() * m.eval(RatFunc2::one());
}

} // namespace octo
