#pragma once

// The additive maps f = g on Z2(t) parameterized by (A, B): the explicit
// family of non-standard solutions of f(x) + x^2 f(x^-1) = 0 that exists
// because Z2(t) is not perfect. For x = (P(t^2)+Q(t^2)t)/(R(t^2)+S(t^2)t),
//
//   f(x) = ((P R + Q S t)/(R(t^2)+S(t^2)t))^2 A
//        + ((P S + Q R)/(R(t^2)+S(t^2)t))^2 B.
//
// The evaluator canonicalizes x first; well-definedness across unreduced
// representations is a checkable property, not an assumption.

#include "octo/errors.hpp"
#include "octo/ratfunc2.hpp"

#include <utility>

namespace octo {

class PathoMap {
  public:
    PathoMap(RatFunc2 a, RatFunc2 b) : a_(std::move(a)), b_(std::move(b)) {}

    const RatFunc2& A() const { return a_; }
    const RatFunc2& B() const { return b_; }

    RatFunc2 eval(const RatFunc2& x) const {
        return eval_on_parts(x.num(), x.den());
    }

    /// Evaluates the defining formula on the unreduced representation
    /// (num*w)/(den*w) and compares with the canonical evaluation.
    bool well_defined_on(const RatFunc2& x, const Poly2& w) const {
        if (w.is_zero()) throw domain_error("representation multiplier must be nonzero");
        return eval_on_parts(x.num() * w, x.den() * w) == eval(x);
    }

    /// f(x) + x^2 f(x^-1) == 0; x must be nonzero.
    bool check_identity(const RatFunc2& x) const {
        if (x.is_zero()) throw domain_error("identity check requires nonzero x");
        const RatFunc2 lhs = eval(x) + x.square() * eval(x.inv());
        return lhs.is_zero();
    }

    /// f(a^2 b) == a^2 f(b).
    bool check_square_law(const RatFunc2& a, const RatFunc2& b) const {
        const RatFunc2 a2 = a.square();
        return eval(a2 * b) == a2 * eval(b);
    }

  private:
    RatFunc2 eval_on_parts(const Poly2& num, const Poly2& den) const {
        const auto [p, q] = num.even_odd_split();
        const auto [r, s] = den.even_odd_split();
        // Shared denominator is den itself: den = R(t^2) + S(t^2) t.
        const Poly2 u1 = p * r + q * s * Poly2::t();
        const Poly2 u2 = p * s + q * r;
        const RatFunc2 f1 = RatFunc2(u1, den).square();
        const RatFunc2 f2 = RatFunc2(u2, den).square();
        return f1 * a_ + f2 * b_;
    }

    RatFunc2 a_;
    RatFunc2 b_;
};

} // namespace octo
