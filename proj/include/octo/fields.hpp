#pragma once

// Exact arithmetic in GF(p) and GF(p^k) with prime-subfield coordinate views.
// Extension fields are represented in the power basis of an explicit monic
// irreducible modulus, so coordinates are reproducible across runs.

#include "octo/errors.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace octo {

/// Largest supported extension degree (coordinates are stored inline).
inline constexpr std::size_t kMaxExtDegree = 8;

/// Default cap on enumerable structure sizes; OCTO_MAX_ELEMS overrides it.
inline std::uint64_t enumeration_bound() {
    static const std::uint64_t bound = [] {
        if (const char* env = std::getenv("OCTO_MAX_ELEMS")) {
            const auto v = std::strtoull(env, nullptr, 10);
            if (v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1} << 20;
    }();
    return bound;
}

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;
class FieldElem;

/// A finite field GF(p^k). For k > 1 the modulus is a monic irreducible
/// degree-k polynomial over GF(p), coefficients little-endian.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    static FieldSpecPtr prime(std::uint32_t p) {
        return FieldSpecPtr(new FieldSpec(p, 1, {}));
    }

    static FieldSpecPtr extension(std::uint32_t p, std::uint32_t k,
                                  std::vector<std::uint32_t> modulus) {
        return FieldSpecPtr(new FieldSpec(p, k, std::move(modulus)));
    }

    /// GF(p^k) with a built-in modulus, available for the small fields the
    /// test suites use. Throws domain_error when no default is known.
    static FieldSpecPtr with_default_modulus(std::uint32_t p, std::uint32_t k);

    /// Parses `gf:p`, `gf:p^k` or `gf:p^k:c0,c1,...,ck`.
    static FieldSpecPtr parse(std::string_view text);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_field(const FieldSpec& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "gf:" << p_;
        if (k_ > 1) {
            os << '^' << k_ << ':';
            for (std::size_t i = 0; i < modulus_.size(); ++i) {
                if (i) os << ',';
                os << modulus_[i];
            }
        }
        return os.str();
    }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t v) const;
    /// Element with the given prime-subfield coordinates (length k).
    FieldElem from_coords(const std::vector<std::uint32_t>& coords) const;
    /// The power-basis generator y (requires k > 1).
    FieldElem generator() const;

    /// All p^k elements in lexicographic coordinate order
    /// (coordinate 0 varies fastest).
    std::vector<FieldElem> enumerate() const;

  private:
    FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
        : p_(p), k_(k), modulus_(std::move(modulus)) {
        if (!detail::is_prime(p_)) throw domain_error("field characteristic must be prime");
        if (k_ < 1 || k_ > kMaxExtDegree) throw domain_error("extension degree out of range");
        order_ = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            if (order_ > enumeration_bound() / p_)
                throw capacity_error("field order exceeds enumeration bound");
            order_ *= p_;
        }
        if (k_ == 1) {
            if (!modulus_.empty()) throw domain_error("prime field takes no modulus");
        } else {
            validate_modulus();
        }
    }

    void validate_modulus() const;

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_; // length k+1, monic, little-endian
};

/// An element of a FieldSpec. Immutable value; coordinates live inline.
class FieldElem {
  public:
    FieldElem() : spec_(nullptr), c_{} {}

    FieldElem(FieldSpecPtr spec, std::array<std::uint32_t, kMaxExtDegree> coords)
        : spec_(std::move(spec)), c_(coords) {}

    const FieldSpecPtr& spec() const { return spec_; }

    bool is_zero() const {
        for (std::uint32_t i = 0; i < spec_->degree(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    bool is_one() const {
        if (c_[0] != 1) return false;
        for (std::uint32_t i = 1; i < spec_->degree(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    /// Prime-subfield coordinates, length k, little-endian in the power basis.
    std::vector<std::uint32_t> coords() const {
        return std::vector<std::uint32_t>(c_.begin(), c_.begin() + spec_->degree());
    }

    std::uint32_t coord(std::size_t i) const { return c_[i]; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        const auto k = a.spec_->degree();
        for (std::uint32_t i = 0; i < k; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        FieldElem r = a;
        const auto p = a.spec_->characteristic();
        for (std::uint32_t i = 0; i < a.spec_->degree(); ++i)
            r.c_[i] = (a.c_[i] + b.c_[i]) % p;
        return r;
    }

    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        FieldElem r = a;
        const auto p = a.spec_->characteristic();
        for (std::uint32_t i = 0; i < a.spec_->degree(); ++i)
            r.c_[i] = (a.c_[i] + p - b.c_[i]) % p;
        return r;
    }

    FieldElem operator-() const {
        FieldElem r = *this;
        const auto p = spec_->characteristic();
        for (std::uint32_t i = 0; i < spec_->degree(); ++i)
            r.c_[i] = (p - c_[i]) % p;
        return r;
    }

    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        const auto p = static_cast<std::uint64_t>(a.spec_->characteristic());
        const auto k = a.spec_->degree();
        FieldElem r = a;
        if (k == 1) {
            r.c_[0] = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(a.c_[0]) * b.c_[0]) % p);
            return r;
        }
        // Schoolbook product followed by reduction modulo the modulus.
        std::array<std::uint64_t, 2 * kMaxExtDegree> prod{};
        for (std::uint32_t i = 0; i < k; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::uint32_t j = 0; j < k; ++j)
                prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % p;
        }
        const auto& m = a.spec_->modulus();
        for (std::int32_t d = 2 * static_cast<std::int32_t>(k) - 2;
             d >= static_cast<std::int32_t>(k); --d) {
            const std::uint64_t top = prod[d] % p;
            if (top == 0) continue;
            prod[d] = 0;
            // x^d = x^(d-k) * (x^k), and x^k = -sum m_i x^i (modulus is monic).
            for (std::uint32_t i = 0; i < k; ++i) {
                const std::uint64_t sub = (top * m[i]) % p;
                prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
            }
        }
        for (std::uint32_t i = 0; i < k; ++i)
            r.c_[i] = static_cast<std::uint32_t>(prod[i] % p);
        return r;
    }

    /// Multiplicative inverse by extended Euclid. Throws on zero.
    FieldElem inv() const;

    std::string to_string() const {
        std::ostringstream os;
        const auto k = spec_->degree();
        if (k == 1) {
            os << c_[0];
        } else {
            for (std::uint32_t i = 0; i < k; ++i) {
                if (i) os << '.';
                os << c_[i];
            }
        }
        return os.str();
    }

  private:
    static void check_same(const FieldElem& a, const FieldElem& b) {
        if (a.spec_.get() != b.spec_.get() && !a.spec_->same_field(*b.spec_))
            throw domain_error("operands belong to different fields");
    }

    FieldSpecPtr spec_;
    std::array<std::uint32_t, kMaxExtDegree> c_;
};

namespace detail {

// Polynomial helpers over GF(p) for modulus validation and inversion.
// Vectors are little-endian coefficient lists, possibly with trailing zeros.

inline void poly_trim(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<std::uint32_t> poly_mul_p(const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b,
                                             std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    poly_trim(r);
    return r;
}

// Remainder of a modulo monic-normalizable b (b nonzero).
inline std::vector<std::uint32_t> poly_rem_p(std::vector<std::uint32_t> a,
                                             const std::vector<std::uint32_t>& b,
                                             std::uint64_t p) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    // Inverse of the leading coefficient of b.
    std::uint64_t lead_inv = 1;
    {
        std::uint64_t lead = b.back() % p, acc = 1, base = lead, e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = acc;
    }
    while (a.size() > db) {
        const std::uint64_t q = a.back() % p * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        if (q != 0)
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = static_cast<std::uint32_t>(
                    (a[shift + i] + p - q * b[i] % p) % p);
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace detail

inline void FieldSpec::validate_modulus() const {
    if (modulus_.size() != k_ + 1)
        throw domain_error("modulus must have degree equal to the extension degree");
    for (auto c : modulus_)
        if (c >= p_) throw domain_error("modulus coefficient out of range");
    if (modulus_.back() != 1) throw domain_error("modulus must be monic");
    // Irreducibility by trial division: a reducible degree-k polynomial has a
    // monic factor of degree <= k/2.
    for (std::uint32_t d = 1; 2 * d <= k_; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p_;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> divisor(d + 1, 0);
            std::uint64_t v = idx;
            for (std::uint32_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(v % p_);
                v /= p_;
            }
            divisor[d] = 1;
            if (detail::poly_rem_p(modulus_, divisor, p_).empty())
                throw domain_error("modulus is reducible over GF(p)");
        }
    }
}

inline FieldElem FieldSpec::zero() const {
    return FieldElem(shared_from_this(), {});
}

inline FieldElem FieldSpec::one() const {
    std::array<std::uint32_t, kMaxExtDegree> c{};
    c[0] = 1;
    return FieldElem(shared_from_this(), c);
}

inline FieldElem FieldSpec::from_int(std::int64_t v) const {
    std::array<std::uint32_t, kMaxExtDegree> c{};
    const auto p = static_cast<std::int64_t>(p_);
    c[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
    return FieldElem(shared_from_this(), c);
}

inline FieldElem FieldSpec::from_coords(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != k_) throw domain_error("coordinate vector has wrong length");
    std::array<std::uint32_t, kMaxExtDegree> c{};
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (coords[i] >= p_) throw domain_error("coordinate out of range");
        c[i] = coords[i];
    }
    return FieldElem(shared_from_this(), c);
}

inline FieldElem FieldSpec::generator() const {
    if (k_ < 2) throw domain_error("prime field has no power-basis generator");
    std::array<std::uint32_t, kMaxExtDegree> c{};
    c[1] = 1;
    return FieldElem(shared_from_this(), c);
}

inline std::vector<FieldElem> FieldSpec::enumerate() const {
    if (order_ > enumeration_bound())
        throw capacity_error("field too large to enumerate");
    std::vector<FieldElem> out;
    out.reserve(order_);
    std::array<std::uint32_t, kMaxExtDegree> c{};
    const auto self = shared_from_this();
    for (std::uint64_t n = 0; n < order_; ++n) {
        out.emplace_back(self, c);
        for (std::uint32_t i = 0; i < k_; ++i) {
            if (++c[i] < p_) break;
            c[i] = 0;
        }
    }
    return out;
}

inline FieldElem FieldElem::inv() const {
    if (is_zero()) throw not_invertible_error("zero is not invertible");
    const auto p = static_cast<std::uint64_t>(spec_->characteristic());
    const auto k = spec_->degree();
    if (k == 1) {
        // Fermat: a^(p-2).
        std::uint64_t acc = 1, base = c_[0] % p, e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        FieldElem r = *this;
        r.c_[0] = static_cast<std::uint32_t>(acc);
        return r;
    }
    // Extended Euclid on (element, modulus) over GF(p)[x].
    std::vector<std::uint32_t> r0(coords()), r1 = spec_->modulus();
    detail::poly_trim(r0);
    std::vector<std::uint32_t> s0{1}, s1{};
    while (!r1.empty()) {
        // Compute quotient digit by digit via repeated leading-term division.
        std::vector<std::uint32_t> q;
        std::vector<std::uint32_t> rem = r0;
        {
            const std::size_t db = r1.size() - 1;
            std::uint64_t lead = r1.back() % p, acc = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            const std::uint64_t lead_inv = acc;
            if (rem.size() > db) q.assign(rem.size() - db, 0);
            while (rem.size() > db) {
                const std::uint64_t qc = rem.back() % p * lead_inv % p;
                const std::size_t shift = rem.size() - 1 - db;
                q[shift] = static_cast<std::uint32_t>(qc);
                for (std::size_t i = 0; i <= db; ++i)
                    rem[shift + i] = static_cast<std::uint32_t>(
                        (rem[shift + i] + p - qc * r1[i] % p) % p);
                detail::poly_trim(rem);
                if (rem.empty()) break;
            }
            detail::poly_trim(q);
        }
        // (r0, r1) <- (r1, r0 - q*r1); same recurrence for s.
        auto qs = detail::poly_mul_p(q, s1, p);
        std::vector<std::uint32_t> s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s2.size(); ++i) {
            std::uint64_t v = (i < s0.size() ? s0[i] : 0);
            v = (v + p - (i < qs.size() ? qs[i] : 0)) % p;
            s2[i] = static_cast<std::uint32_t>(v);
        }
        detail::poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible.
    std::uint64_t g = r0.empty() ? 0 : r0[0] % p;
    std::uint64_t acc = 1, base = g, e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    std::array<std::uint32_t, kMaxExtDegree> c{};
    for (std::size_t i = 0; i < s0.size() && i < k; ++i)
        c[i] = static_cast<std::uint32_t>(s0[i] * acc % p);
    FieldElem r(spec_, c);
    return r;
}

inline FieldSpecPtr FieldSpec::with_default_modulus(std::uint32_t p, std::uint32_t k) {
    if (k == 1) return prime(p);
    struct Entry {
        std::uint32_t p, k;
        std::vector<std::uint32_t> mod;
    };
    static const std::vector<Entry> table = {
        {2, 2, {1, 1, 1}},          // y^2 + y + 1
        {2, 3, {1, 1, 0, 1}},       // y^3 + y + 1
        {2, 4, {1, 1, 0, 0, 1}},    // y^4 + y + 1
        {2, 5, {1, 0, 1, 0, 0, 1}}, // y^5 + y^2 + 1
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {3, 2, {1, 0, 1}},          // y^2 + 1
        {3, 3, {1, 2, 0, 1}},       // y^3 + 2y + 1
        {5, 2, {2, 0, 1}},          // y^2 + 2
        {7, 2, {1, 0, 1}},          // y^2 + 1
    };
    for (const auto& e : table)
        if (e.p == p && e.k == k) return extension(p, k, e.mod);
    throw domain_error("no built-in modulus for gf:" + std::to_string(p) + "^" +
                       std::to_string(k) + "; supply one explicitly");
}

inline FieldSpecPtr FieldSpec::parse(std::string_view text) {
    if (text.substr(0, 3) != "gf:")
        throw parse_error("field spec must start with 'gf:'", 0);
    std::string body(text.substr(3));
    std::uint32_t p = 0, k = 1;
    std::size_t pos = 0;
    auto read_uint = [&](std::uint32_t& out) {
        if (pos >= body.size() || !std::isdigit(static_cast<unsigned char>(body[pos])))
            throw parse_error("expected integer in field spec", pos + 3);
        std::uint64_t v = 0;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
            v = v * 10 + (body[pos] - '0');
            if (v > (std::uint64_t{1} << 32)) throw parse_error("integer too large", pos + 3);
            ++pos;
        }
        out = static_cast<std::uint32_t>(v);
    };
    read_uint(p);
    if (pos < body.size() && body[pos] == '^') {
        ++pos;
        read_uint(k);
    }
    if (pos == body.size()) {
        return k == 1 ? prime(p) : with_default_modulus(p, k);
    }
    if (body[pos] != ':') throw parse_error("unexpected character in field spec", pos + 3);
    ++pos;
    std::vector<std::uint32_t> mod;
    while (true) {
        std::uint32_t c = 0;
        read_uint(c);
        mod.push_back(c);
        if (pos == body.size()) break;
        if (body[pos] != ',') throw parse_error("expected ',' in modulus list", pos + 3);
        ++pos;
    }
    return extension(p, k, std::move(mod));
}

/// Parses a field-element literal: an integer (prime subfield, negatives
/// allowed) or dot-separated coordinates `c0.c1...` for extension fields.
inline FieldElem parse_field_elem(const FieldSpecPtr& spec, std::string_view text) {
    if (text.empty()) throw parse_error("empty field element literal", 0);
    if (text.find('.') == std::string_view::npos) {
        std::size_t i = 0;
        bool neg = false;
        if (text[0] == '-' || text[0] == '+') {
            neg = text[0] == '-';
            i = 1;
        }
        std::int64_t v = 0;
        if (i == text.size()) throw parse_error("malformed integer literal", i);
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("malformed integer literal", i);
            v = v * 10 + (text[i] - '0');
            if (v > (std::int64_t{1} << 40)) throw parse_error("integer too large", i);
        }
        return spec->from_int(neg ? -v : v);
    }
    std::vector<std::uint32_t> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('.', start);
        if (end == std::string_view::npos) end = text.size();
        std::uint32_t v = 0;
        if (end == start) throw parse_error("empty coordinate", start);
        for (std::size_t i = start; i < end; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("malformed coordinate", i);
            v = v * 10 + static_cast<std::uint32_t>(text[i] - '0');
        }
        coords.push_back(v % spec->characteristic());
        if (end == text.size()) break;
        start = end + 1;
    }
    return spec->from_coords(coords);
}

} // namespace octo
