#pragma once

// Split octonion algebra in the basis e_i, i in I = {+-0, +-1, +-w, +-wb},
// where w denotes omega and wb its conjugate (w^2 = wb, w*wb = 1).
// Coefficient storage order is fixed as
//   (e_-1, e_wb, e_w, e_0, e_-0, e_-w, e_-wb, e_1)
// so test vectors are bit-exact. The multiplicative identity is e_0 + e_-0.

#include "octo/errors.hpp"
#include "octo/fields.hpp"
#include "octo/ratfunc2.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace octo {

/// Basis slot in storage order.
enum class OctIndex : std::uint8_t {
    em1 = 0, // e_-1
    ewb = 1, // e_wb
    ew = 2,  // e_w
    e0 = 3,  // e_0
    em0 = 4, // e_-0
    emw = 5, // e_-w
    emwb = 6, // e_-wb
    e1 = 7,  // e_1
};

inline constexpr std::array<const char*, 8> kOctIndexNames = {
    "e_-1", "e_wb", "e_w", "e_0", "e_-0", "e_-w", "e_-wb", "e_1"};

/// One basis product: sign 0 means the product is zero.
struct BasisProduct {
    int sign; // -1, 0, +1
    OctIndex index;
};

/// The 8x8 basis multiplication table.
struct MulTable {
    std::array<std::array<BasisProduct, 8>, 8> entry;

    const BasisProduct& operator()(OctIndex i, OctIndex j) const {
        return entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

namespace detail {

// Figure-style table, rows are the left factor, in storage order.
// Shorthand: slot numbers 0..7 as in OctIndex.
inline constexpr std::int8_t kTableSign[8][8] = {
    // e_-1   e_wb  e_w   e_0   e_-0  e_-w  e_-wb e_1
    {0, 0, 0, 0, +1, +1, -1, -1},  // e_-1
    {0, 0, -1, +1, 0, 0, -1, +1},  // e_wb
    {0, +1, 0, +1, 0, -1, 0, -1},  // e_w
    {+1, 0, 0, +1, 0, +1, +1, 0},  // e_0
    {0, +1, +1, 0, +1, 0, 0, +1},  // e_-0
    {-1, 0, -1, 0, +1, 0, +1, 0},  // e_-w
    {+1, -1, 0, 0, +1, -1, 0, 0},  // e_-wb
    {-1, -1, +1, +1, 0, 0, 0, 0},  // e_1
};

inline constexpr std::uint8_t kTableIndex[8][8] = {
    {0, 0, 0, 0, 0, 1, 2, 3},  // e_-1: ., ., ., ., e_-1, e_wb, -e_w, -e_0
    {0, 0, 0, 1, 0, 0, 4, 5},  // e_wb: ., ., -e_-1, e_wb, ., ., -e_-0, e_-w
    {0, 0, 0, 2, 0, 4, 0, 6},  // e_w:  ., e_-1, ., e_w, ., -e_-0, ., -e_-wb
    {0, 0, 0, 3, 0, 5, 6, 0},  // e_0:  e_-1, ., ., e_0, ., e_-w, e_-wb, .
    {0, 1, 2, 0, 4, 0, 0, 7},  // e_-0: ., e_wb, e_w, ., e_-0, ., ., e_1
    {1, 0, 3, 0, 5, 0, 7, 0},  // e_-w: -e_wb, ., -e_0, ., e_-w, ., e_1, .
    {2, 3, 0, 0, 6, 7, 0, 0},  // e_-wb: e_w, -e_0, ., ., e_-wb, -e_1, ., .
    {4, 5, 6, 7, 0, 0, 0, 0},  // e_1:  -e_-0, -e_-w, e_-wb, e_1, ., ., ., .
};

} // namespace detail

/// The explicit 8x8 basis product table; the authoritative source.
/// regenerate_table_from_rules() rebuilds it independently as a cross-check.
inline const MulTable& mul_table() {
    static const MulTable table = [] {
        MulTable t{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                t.entry[i][j] = {detail::kTableSign[i][j],
                                 static_cast<OctIndex>(detail::kTableIndex[i][j])};
        return t;
    }();
    return table;
}

// --- rules-based regeneration ------------------------------------------
// The table is also derivable from three generating products closed under
// two symmetries: negating all subscripts, and multiplying all subscripts
// by w (tag rotation 1 -> w -> wb -> 1, with 0 fixed).

namespace detail {

// (sign, tag) view of an index: tag in {0:zero, 1:one, 2:w, 3:wb}.
struct SignTag {
    int sign; // +1 or -1 subscript sign
    int tag;
};

inline SignTag to_signtag(OctIndex i) {
    switch (i) {
        case OctIndex::em1: return {-1, 1};
        case OctIndex::ewb: return {+1, 3};
        case OctIndex::ew: return {+1, 2};
        case OctIndex::e0: return {+1, 0};
        case OctIndex::em0: return {-1, 0};
        case OctIndex::emw: return {-1, 2};
        case OctIndex::emwb: return {-1, 3};
        case OctIndex::e1: return {+1, 1};
    }
    throw domain_error("bad index");
}

inline OctIndex from_signtag(SignTag s) {
    for (int i = 0; i < 8; ++i) {
        const auto st = to_signtag(static_cast<OctIndex>(i));
        if (st.sign == s.sign && st.tag == s.tag) return static_cast<OctIndex>(i);
    }
    throw domain_error("bad sign/tag");
}

inline SignTag negate_subscript(SignTag s) { return {-s.sign, s.tag}; }

inline SignTag rotate_subscript(SignTag s) {
    // tag * w: 0 -> 0, 1 -> w, w -> wb, wb -> 1.
    static constexpr int rot[4] = {0, 2, 3, 1};
    return {s.sign, rot[s.tag]};
}

} // namespace detail

/// Regenerates the table from the three generating rules plus the two
/// subscript symmetries; products not generated are zero.
inline MulTable regenerate_table_from_rules() {
    using detail::SignTag;
    struct Rule {
        SignTag a, b;
        int sign;
        SignTag c;
    };
    // Seeds:  e_1 e_w = -e_w e_1 = e_-wb;  e_1 e_0 = e_-0 e_1 = e_1;
    //         e_-1 e_1 = -e_0;  e_0 e_0 = e_0.
    std::vector<Rule> rules = {
        {{+1, 1}, {+1, 2}, +1, {-1, 3}}, // e_1 e_w = e_-wb
        {{+1, 2}, {+1, 1}, -1, {-1, 3}}, // e_w e_1 = -e_-wb
        {{+1, 1}, {+1, 0}, +1, {+1, 1}}, // e_1 e_0 = e_1
        {{-1, 0}, {+1, 1}, +1, {+1, 1}}, // e_-0 e_1 = e_1
        {{-1, 1}, {+1, 1}, -1, {+1, 0}}, // e_-1 e_1 = -e_0
        {{+1, 0}, {+1, 0}, +1, {+1, 0}}, // e_0 e_0 = e_0
    };

    MulTable t{};
    for (auto& row : t.entry)
        for (auto& e : row) e = {0, OctIndex::em1};

    for (const auto& rule : rules) {
        SignTag a = rule.a, b = rule.b, c = rule.c;
        for (int neg = 0; neg < 2; ++neg) {
            SignTag an = a, bn = b, cn = c;
            if (neg) {
                an = detail::negate_subscript(an);
                bn = detail::negate_subscript(bn);
                cn = detail::negate_subscript(cn);
            }
            for (int rot = 0; rot < 3; ++rot) {
                const auto i = static_cast<std::size_t>(detail::from_signtag(an));
                const auto j = static_cast<std::size_t>(detail::from_signtag(bn));
                t.entry[i][j] = {rule.sign, detail::from_signtag(cn)};
                an = detail::rotate_subscript(an);
                bn = detail::rotate_subscript(bn);
                cn = detail::rotate_subscript(cn);
            }
        }
    }
    return t;
}

/// Cell-by-cell differences between the figure table and the rules-derived
/// one; empty means full agreement.
inline std::vector<std::pair<int, int>> table_rule_discrepancies() {
    const MulTable& fig = mul_table();
    const MulTable gen = regenerate_table_from_rules();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const auto& a = fig.entry[i][j];
            const auto& b = gen.entry[i][j];
            const bool same =
                a.sign == b.sign && (a.sign == 0 || a.index == b.index);
            if (!same) out.emplace_back(i, j);
        }
    return out;
}

// --- coefficient-field abstraction -------------------------------------

template <class C>
struct scalar_traits;

template <>
struct scalar_traits<FieldElem> {
    static FieldElem zero(const FieldElem& like) { return like.spec()->zero(); }
    static FieldElem one(const FieldElem& like) { return like.spec()->one(); }
};

template <>
struct scalar_traits<RatFunc2> {
    static RatFunc2 zero(const RatFunc2&) { return RatFunc2::zero(); }
    static RatFunc2 one(const RatFunc2&) { return RatFunc2::one(); }
};

// --- octonion values ----------------------------------------------------

template <class C>
class Octonion {
  public:
    explicit Octonion(std::array<C, 8> coeffs) : c_(std::move(coeffs)) {}

    static Octonion zero_like(const C& scalar) {
        const C z = scalar_traits<C>::zero(scalar);
        return Octonion(std::array<C, 8>{z, z, z, z, z, z, z, z});
    }

    /// The multiplicative identity e_0 + e_-0.
    static Octonion one_like(const C& scalar) {
        Octonion r = zero_like(scalar);
        const C o = scalar_traits<C>::one(scalar);
        r.c_[static_cast<std::size_t>(OctIndex::e0)] = o;
        r.c_[static_cast<std::size_t>(OctIndex::em0)] = o;
        return r;
    }

    static Octonion basis(OctIndex i, const C& scalar_one) {
        Octonion r = zero_like(scalar_one);
        r.c_[static_cast<std::size_t>(i)] = scalar_traits<C>::one(scalar_one);
        return r;
    }

    const C& coeff(OctIndex i) const { return c_[static_cast<std::size_t>(i)]; }
    const C& coeff(std::size_t i) const { return c_[i]; }
    const std::array<C, 8>& coeffs() const { return c_; }

    C& coeff_mut(OctIndex i) { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const C& x) { return x.is_zero(); });
    }

    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r = a;
        for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r = a;
        for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    Octonion operator-() const {
        Octonion r = *this;
        for (std::size_t i = 0; i < 8; ++i) r.c_[i] = -c_[i];
        return r;
    }

    friend Octonion operator*(const Octonion& a, const Octonion& b) {
        const MulTable& t = mul_table();
        Octonion r = zero_like(a.c_[0]);
        for (std::size_t i = 0; i < 8; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < 8; ++j) {
                if (b.c_[j].is_zero()) continue;
                const BasisProduct& bp = t.entry[i][j];
                if (bp.sign == 0) continue;
                const std::size_t k = static_cast<std::size_t>(bp.index);
                C term = a.c_[i] * b.c_[j];
                if (bp.sign < 0) term = -term;
                r.c_[k] = r.c_[k] + term;
            }
        }
        return r;
    }

    /// Scalar multiple.
    friend Octonion operator*(const C& s, const Octonion& a) {
        Octonion r = a;
        for (std::size_t i = 0; i < 8; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    /// T(x) = lambda_0 + lambda_-0.
    C trace() const {
        return c_[static_cast<std::size_t>(OctIndex::e0)] +
               c_[static_cast<std::size_t>(OctIndex::em0)];
    }

    /// N(x) = l_-1 l_1 + l_-wb l_wb + l_-w l_w + l_-0 l_0.
    C norm() const {
        const auto& l = c_;
        auto at = [&](OctIndex i) -> const C& { return l[static_cast<std::size_t>(i)]; };
        return at(OctIndex::em1) * at(OctIndex::e1) +
               at(OctIndex::emwb) * at(OctIndex::ewb) +
               at(OctIndex::emw) * at(OctIndex::ew) +
               at(OctIndex::em0) * at(OctIndex::e0);
    }

    bool is_invertible() const { return !norm().is_zero(); }

    /// x^-1 = N(x)^-1 (T(x) - x); requires N(x) != 0.
    Octonion inverse() const {
        const C n = norm();
        if (n.is_zero()) throw not_invertible_error("octonion has zero norm");
        const C ninv = n.inv();
        Octonion r = trace() * one_like(c_[0]) - *this;
        return ninv * r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < 8; ++i) {
            if (i) s += ',';
            s += c_[i].to_string();
        }
        return s;
    }

  private:
    std::array<C, 8> c_;
};

/// (x, y, z) = (xy)z - x(yz).
template <class C>
Octonion<C> associator(const Octonion<C>& x, const Octonion<C>& y, const Octonion<C>& z) {
    return (x * y) * z - x * (y * z);
}

/// Whether x^2 equals T(x) x - N(x) 1, computed by independent routes.
template <class C>
bool oct_square_check(const Octonion<C>& x) {
    const Octonion<C> direct = x * x;
    const Octonion<C> via_form =
        x.trace() * x - x.norm() * Octonion<C>::one_like(x.coeff(0));
    return direct == via_form;
}

struct MoufangResult {
    bool left;   // (xax)y = x[a(xy)]
    bool right;  // y(xax) = [(yx)a]x
    bool middle; // (xy)(ax) = x(ya)x
    bool all() const { return left && right && middle; }
};

template <class C>
MoufangResult moufang_check(const Octonion<C>& x, const Octonion<C>& y,
                            const Octonion<C>& a) {
    const Octonion<C> xax = (x * a) * x; // flexibility makes the bracketing immaterial
    MoufangResult r{};
    r.left = xax * y == x * (a * (x * y));
    r.right = y * xax == ((y * x) * a) * x;
    r.middle = (x * y) * (a * x) == (x * (y * a)) * x;
    return r;
}

template <class C>
struct HuaResult {
    bool applicable;
    Octonion<C> lhs;
    Octonion<C> rhs;
    bool equal;
};

/// Hua's identity a - (a^-1 + (b^-1 - a)^-1)^-1 = (ab)a. Requires every
/// intermediate inverse to exist; otherwise reports inapplicable.
template <class C>
HuaResult<C> hua_check(const Octonion<C>& a, const Octonion<C>& b) {
    const Octonion<C> zero = Octonion<C>::zero_like(a.coeff(0));
    HuaResult<C> out{false, zero, zero, false};
    const Octonion<C> one = Octonion<C>::one_like(a.coeff(0));
    if (!a.is_invertible() || !b.is_invertible()) return out;
    if (!(a * b - one).is_invertible()) return out;
    const Octonion<C> binv = b.inverse();
    const Octonion<C> u = binv - a;
    if (!u.is_invertible()) return out;
    const Octonion<C> v = a.inverse() + u.inverse();
    if (!v.is_invertible()) return out;
    out.applicable = true;
    out.lhs = a - v.inverse();
    out.rhs = (a * b) * a;
    out.equal = out.lhs == out.rhs;
    return out;
}

/// Artin-style check: generates words in {x, y} closed under products and
/// inverses of invertible words, up to `depth` closure rounds, then verifies
/// every associator of three generated elements vanishes.
template <class C>
bool artin_word_check(const Octonion<C>& x, const Octonion<C>& y, int depth,
                      std::size_t max_words = 24) {
    if (depth < 1 || depth > 3) throw domain_error("artin depth must be in [1,3]");
    std::vector<Octonion<C>> words = {Octonion<C>::one_like(x.coeff(0)), x, y};
    auto push = [&](const Octonion<C>& w) {
        if (words.size() >= max_words) return;
        if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
    };
    for (int round = 0; round < depth; ++round) {
        const std::size_t count = words.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) push(words[i] * words[j]);
        for (std::size_t i = 0; i < count; ++i)
            if (words[i].is_invertible()) push(words[i].inverse());
    }
    for (const auto& a : words)
        for (const auto& b : words)
            for (const auto& c : words)
                if (!associator(a, b, c).is_zero()) return false;
    return true;
}

} // namespace octo
