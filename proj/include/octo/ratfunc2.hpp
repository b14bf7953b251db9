#pragma once

// Exact arithmetic in GF(2)[t] and the rational function field Z2(t).
// Polynomials are bit vectors (64 coefficients per word, little-endian);
// addition is XOR. Fractions are kept fully reduced, which over GF(2) is a
// unique canonical form, so equality is structural.

#include "octo/errors.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace octo {

/// Cap on intermediate polynomial degrees; guards runaway CLI inputs.
inline constexpr int kPoly2DegreeCap = 4096;

/// Polynomial over GF(2). Zero has degree() == -1.
class Poly2 {
  public:
    Poly2() = default;

    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return monomial(0); }
    static Poly2 t() { return monomial(1); }

    static Poly2 monomial(int deg) {
        Poly2 r;
        r.set_coeff(deg, true);
        return r;
    }

    /// From a little-endian list of 0/1 coefficients.
    static Poly2 from_coeffs(const std::vector<int>& coeffs) {
        Poly2 r;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] & 1) r.set_coeff(static_cast<int>(i), true);
        return r;
    }

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const {
        if (words_.empty()) return -1;
        const std::uint64_t top = words_.back();
        int bit = 63;
        while (!((top >> bit) & 1)) --bit;
        return static_cast<int>(words_.size() - 1) * 64 + bit;
    }

    bool coeff(int i) const {
        if (i < 0) return false;
        const std::size_t w = static_cast<std::size_t>(i) / 64;
        if (w >= words_.size()) return false;
        return (words_[w] >> (i % 64)) & 1;
    }

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.words_ == b.words_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }
    friend bool operator<(const Poly2& a, const Poly2& b) { return a.words_ < b.words_; }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r;
        r.words_.resize(std::max(a.words_.size(), b.words_.size()), 0);
        for (std::size_t i = 0; i < r.words_.size(); ++i) {
            std::uint64_t w = i < a.words_.size() ? a.words_[i] : 0;
            if (i < b.words_.size()) w ^= b.words_[i];
            r.words_[i] = w;
        }
        r.trim();
        return r;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        if (a.is_zero() || b.is_zero()) return Poly2();
        const int dr = a.degree() + b.degree();
        if (dr > kPoly2DegreeCap)
            throw capacity_error("polynomial degree cap exceeded");
        Poly2 r;
        r.words_.resize(static_cast<std::size_t>(dr) / 64 + 1, 0);
        for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
            std::uint64_t w = a.words_[wi];
            while (w) {
                const int bit = __builtin_ctzll(w);
                w &= w - 1;
                r.xor_shifted(b, static_cast<int>(wi) * 64 + bit);
            }
        }
        r.trim();
        return r;
    }

    /// Quotient and remainder; b must be nonzero.
    static std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b) {
        if (b.is_zero()) throw domain_error("polynomial division by zero");
        Poly2 q, r = a;
        const int db = b.degree();
        int dr = r.degree();
        while (dr >= db) {
            const int shift = dr - db;
            q.set_coeff(shift, true);
            r.xor_shifted(b, shift);
            r.trim();
            dr = r.degree();
        }
        q.trim();
        return {q, r};
    }

    /// The (monic, hence unique) gcd.
    static Poly2 gcd(Poly2 a, Poly2 b) {
        while (!b.is_zero()) {
            Poly2 r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    /// (even part E, odd part O) with *this == E(t^2) + O(t^2)*t.
    std::pair<Poly2, Poly2> even_odd_split() const {
        Poly2 even, odd;
        const int d = degree();
        for (int i = 0; i <= d; ++i) {
            if (!coeff(i)) continue;
            if (i % 2 == 0)
                even.set_coeff(i / 2, true);
            else
                odd.set_coeff(i / 2, true);
        }
        even.trim();
        odd.trim();
        return {even, odd};
    }

    /// P(t) -> P(t^2); over GF(2) this equals P(t)^2.
    Poly2 frobenius_expand() const {
        Poly2 r;
        const int d = degree();
        if (2 * d > kPoly2DegreeCap)
            throw capacity_error("polynomial degree cap exceeded");
        for (int i = 0; i <= d; ++i)
            if (coeff(i)) r.set_coeff(2 * i, true);
        r.trim();
        return r;
    }

    /// Descending-power text, e.g. `t^3+t+1`; zero prints as `0`.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            if (!coeff(i)) continue;
            if (!first) os << '+';
            first = false;
            if (i == 0)
                os << '1';
            else if (i == 1)
                os << 't';
            else
                os << "t^" << i;
        }
        return os.str();
    }

    /// Number of nonzero terms.
    int term_count() const {
        int n = 0;
        for (auto w : words_) n += __builtin_popcountll(w);
        return n;
    }

  private:
    void set_coeff(int i, bool v) {
        if (i < 0) throw domain_error("negative polynomial degree");
        if (i > kPoly2DegreeCap) throw capacity_error("polynomial degree cap exceeded");
        const std::size_t w = static_cast<std::size_t>(i) / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        if (v)
            words_[w] |= std::uint64_t{1} << (i % 64);
        else
            words_[w] &= ~(std::uint64_t{1} << (i % 64));
        if (!v) trim();
    }

    void xor_shifted(const Poly2& b, int shift) {
        const std::size_t ws = static_cast<std::size_t>(shift) / 64;
        const int bs = shift % 64;
        const std::size_t need = ws + b.words_.size() + (bs ? 1 : 0);
        if (words_.size() < need) words_.resize(need, 0);
        for (std::size_t i = 0; i < b.words_.size(); ++i) {
            words_[ws + i] ^= b.words_[i] << bs;
            if (bs) words_[ws + i + 1] ^= b.words_[i] >> (64 - bs);
        }
    }

    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

/// Element of Z2(t): a fully reduced fraction of Poly2.
class RatFunc2 {
  public:
    RatFunc2() : num_(), den_(Poly2::one()) {}

    RatFunc2(Poly2 num, Poly2 den) {
        if (den.is_zero()) throw domain_error("rational function with zero denominator");
        if (num.is_zero()) {
            num_ = Poly2();
            den_ = Poly2::one();
            return;
        }
        Poly2 g = Poly2::gcd(num, den);
        num_ = Poly2::divmod(num, g).first;
        den_ = Poly2::divmod(den, g).first;
    }

    static RatFunc2 zero() { return RatFunc2(); }
    static RatFunc2 one() { return RatFunc2(Poly2::one(), Poly2::one()); }
    static RatFunc2 t() { return RatFunc2(Poly2::t(), Poly2::one()); }
    static RatFunc2 from_poly(Poly2 p) { return RatFunc2(std::move(p), Poly2::one()); }

    /// t^n for any integer n (negative exponents give 1/t^|n|).
    static RatFunc2 t_pow(int n) {
        if (n >= 0) return RatFunc2(Poly2::monomial(n), Poly2::one());
        return RatFunc2(Poly2::one(), Poly2::monomial(-n));
    }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend bool operator==(const RatFunc2& a, const RatFunc2& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc2& a, const RatFunc2& b) { return !(a == b); }

    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
        return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    // Characteristic 2: subtraction and negation coincide with addition.
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) { return a + b; }
    RatFunc2 operator-() const { return *this; }

    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
        return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
    }

    RatFunc2 inv() const {
        if (is_zero()) throw not_invertible_error("zero rational function has no inverse");
        return RatFunc2(den_, num_);
    }

    RatFunc2 square() const {
        return from_reduced(num_.frobenius_expand(), den_.frobenius_expand());
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        std::string n = num_.to_string();
        std::string d = den_.to_string();
        if (num_.term_count() > 1) n = "(" + n + ")";
        if (den_.term_count() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

    /// Trusted constructor for fractions already known to be reduced
    /// (e.g. squaring a reduced fraction keeps it reduced).
    static RatFunc2 from_reduced(Poly2 num, Poly2 den) {
        RatFunc2 r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

  private:
    Poly2 num_;
    Poly2 den_;
};

// --- literal grammar ---------------------------------------------------
//   ratfunc := sum ( "/" sum )? ;
//   sum     := term ( "+" term )* ;
//   term    := "0" | "1" | "t" ( "^" uint )? | "(" sum ")" ;
// Whitespace is skipped everywhere.

namespace detail {

class RatFuncParser {
  public:
    explicit RatFuncParser(std::string_view text) : text_(text) {}

    RatFunc2 parse() {
        Poly2 num = parse_sum();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            Poly2 den = parse_sum();
            skip_ws();
            if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
            if (den.is_zero()) throw domain_error("denominator is the zero polynomial");
            return RatFunc2(std::move(num), std::move(den));
        }
        if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
        return RatFunc2::from_poly(std::move(num));
    }

  private:
    Poly2 parse_sum() {
        Poly2 acc = parse_term();
        while (true) {
            skip_ws();
            if (peek() != '+') break;
            ++pos_;
            acc = acc + parse_term();
        }
        return acc;
    }

    Poly2 parse_term() {
        skip_ws();
        const char c = peek();
        if (c == '0') {
            ++pos_;
            return Poly2::zero();
        }
        if (c == '1') {
            ++pos_;
            return Poly2::one();
        }
        if (c == 't') {
            ++pos_;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw parse_error("expected exponent after '^'", pos_);
                long e = 0;
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    e = e * 10 + (peek() - '0');
                    if (e > kPoly2DegreeCap) throw capacity_error("exponent exceeds degree cap");
                    ++pos_;
                }
                return Poly2::monomial(static_cast<int>(e));
            }
            return Poly2::t();
        }
        if (c == '(') {
            ++pos_;
            Poly2 inner = parse_sum();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw parse_error("expected term", pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RatFunc2 parse_ratfunc(std::string_view text) {
    return detail::RatFuncParser(text).parse();
}

} // namespace octo
