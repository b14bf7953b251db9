#pragma once

// Computes the space of additive pairs (f, g) with f(x) + x^2 g(x^-1) = 0
// over a finite split octonion algebra or finite field, by exact linear
// algebra over the prime subfield GF(p).
//
// An additive map on a finite field/algebra is exactly a GF(p)-linear map
// (the prime subfield is fixed by addition, and additivity forces
// GF(p)-homogeneity), so f and g are n x n matrices F, G over GF(p) acting
// on coordinate vectors, and the identity becomes the linear system
//   F v(x) + L(x^2) G v(x^-1) = 0   for every invertible x,
// where L(a) is the left-multiplication matrix of a. The solution space is
// the nullspace of the stacked system.
//
// Every pair (R(q), -R(q)) is a solution, which bounds the rank by
// unknowns - dim{q}. Once the rank reaches that bound, elimination stops
// and the remaining invertible elements are checked directly against the
// kernel basis, so the scan stays exhaustive.

#include "octo/errors.hpp"
#include "octo/fields.hpp"
#include "octo/octonion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octo {

enum class AlgebraKind { octonion, field };
enum class SolveMode { pair, f_eq_g };

inline const char* to_string(AlgebraKind k) {
    return k == AlgebraKind::octonion ? "octonion" : "field";
}
inline const char* to_string(SolveMode m) {
    return m == SolveMode::pair ? "pair" : "f_eq_g";
}

/// A finite algebra (split octonions over GF(p^k), or GF(p^k) itself)
/// viewed as an n-dimensional GF(p)-algebra with precomputed structure
/// constants, n = 8k or k.
class AlgebraHandle {
  public:
    using Coords = std::vector<std::uint32_t>;

    AlgebraHandle(AlgebraKind kind, FieldSpecPtr field)
        : kind_(kind), field_(std::move(field)) {
        p_ = field_->characteristic();
        k_ = field_->degree();
        n_ = kind_ == AlgebraKind::octonion ? 8 * k_ : k_;
        total_ = 1;
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (total_ > enumeration_bound() / p_)
                throw capacity_error("algebra exceeds enumeration bound");
            total_ *= p_;
        }
        build_structure();
    }

    AlgebraKind kind() const { return kind_; }
    const FieldSpecPtr& field() const { return field_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t dim() const { return n_; }
    std::uint64_t total_elements() const { return total_; }

    Coords zero() const { return Coords(n_, 0); }

    Coords one() const {
        Coords c(n_, 0);
        if (kind_ == AlgebraKind::field) {
            c[0] = 1;
        } else {
            c[static_cast<std::size_t>(OctIndex::e0) * k_] = 1;
            c[static_cast<std::size_t>(OctIndex::em0) * k_] = 1;
        }
        return c;
    }

    Coords basis(std::size_t b) const {
        Coords c(n_, 0);
        c[b] = 1;
        return c;
    }

    /// Lexicographic successor (coordinate 0 varies fastest); false on wrap.
    bool next(Coords& c) const {
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (++c[i] < p_) return true;
            c[i] = 0;
        }
        return false;
    }

    void mul(const Coords& x, const Coords& y, Coords& out) const {
        std::fill(out.begin(), out.end(), 0);
        for (std::uint32_t a = 0; a < n_; ++a) {
            if (x[a] == 0) continue;
            for (std::uint32_t b = 0; b < n_; ++b) {
                if (y[b] == 0) continue;
                const std::uint64_t xy = static_cast<std::uint64_t>(x[a]) * y[b] % p_;
                for (const auto& term : struct_[a * n_ + b])
                    out[term.first] = static_cast<std::uint32_t>(
                        (out[term.first] + xy * term.second) % p_);
            }
        }
    }

    Coords mul(const Coords& x, const Coords& y) const {
        Coords out(n_);
        mul(x, y, out);
        return out;
    }

    bool is_unit(const Coords& c) const {
        if (kind_ == AlgebraKind::field)
            return std::any_of(c.begin(), c.end(), [](std::uint32_t v) { return v != 0; });
        return !to_octonion(c).norm().is_zero();
    }

    Coords inverse(const Coords& c) const {
        if (kind_ == AlgebraKind::field) {
            return field_->from_coords(c).inv().coords();
        }
        return from_octonion(to_octonion(c).inverse());
    }

    Octonion<FieldElem> to_octonion(const Coords& c) const {
        if (kind_ != AlgebraKind::octonion) throw domain_error("not an octonion algebra");
        std::array<FieldElem, 8> coeffs{};
        for (std::size_t i = 0; i < 8; ++i) {
            std::vector<std::uint32_t> block(c.begin() + i * k_, c.begin() + (i + 1) * k_);
            coeffs[i] = field_->from_coords(block);
        }
        return Octonion<FieldElem>(coeffs);
    }

    Coords from_octonion(const Octonion<FieldElem>& o) const {
        Coords c(n_, 0);
        for (std::size_t i = 0; i < 8; ++i) {
            const auto block = o.coeff(i).coords();
            for (std::uint32_t j = 0; j < k_; ++j) c[i * k_ + j] = block[j];
        }
        return c;
    }

    /// Left- and right-multiplication matrices of a, row-major n x n:
    /// L v(y) = v(a y), R v(y) = v(y a).
    std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    mul_matrices(const Coords& a) const {
        std::vector<std::uint32_t> L(n_ * n_, 0), R(n_ * n_, 0);
        Coords tmp(n_);
        for (std::uint32_t b = 0; b < n_; ++b) {
            const Coords eb = basis(b);
            mul(a, eb, tmp);
            for (std::uint32_t r = 0; r < n_; ++r) L[r * n_ + b] = tmp[r];
            mul(eb, a, tmp);
            for (std::uint32_t r = 0; r < n_; ++r) R[r * n_ + b] = tmp[r];
        }
        return {std::move(L), std::move(R)};
    }

  private:
    void build_structure() {
        struct_.assign(static_cast<std::size_t>(n_) * n_, {});
        if (kind_ == AlgebraKind::field) {
            for (std::uint32_t a = 0; a < n_; ++a)
                for (std::uint32_t b = 0; b < n_; ++b) {
                    const FieldElem prod =
                        field_->from_coords(basis(a)) * field_->from_coords(basis(b));
                    store_terms(a, b, prod.coords());
                }
            return;
        }
        for (std::uint32_t a = 0; a < n_; ++a)
            for (std::uint32_t b = 0; b < n_; ++b) {
                const auto prod = to_octonion(basis(a)) * to_octonion(basis(b));
                store_terms(a, b, from_octonion(prod));
            }
    }

    void store_terms(std::uint32_t a, std::uint32_t b,
                     const std::vector<std::uint32_t>& coords) {
        auto& slot = struct_[a * n_ + b];
        for (std::uint32_t i = 0; i < n_; ++i)
            if (coords[i] != 0) slot.emplace_back(i, coords[i]);
    }

    AlgebraKind kind_;
    FieldSpecPtr field_;
    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t n_ = 0;
    std::uint64_t total_ = 0;
    // struct_[a*n+b] = sparse coords of (basis a)*(basis b).
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> struct_;
};

/// Incremental reduced row echelon form over GF(p); leftmost-nonzero pivots.
class RrefGFp {
  public:
    RrefGFp(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

    /// Reduces the row against the current basis and inserts it if it is
    /// independent. Returns whether the rank grew.
    bool add_row(std::vector<std::uint32_t> row) {
        reduce(row);
        std::size_t piv = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (row[c] % p_ != 0) {
                piv = c;
                break;
            }
        if (piv == cols_) return false;
        const std::uint64_t inv = mod_inv(row[piv] % p_);
        for (auto& v : row) v = static_cast<std::uint32_t>(v % p_ * inv % p_);
        // Back-substitute into existing rows, then insert sorted by pivot.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::uint64_t c = rows_[i][piv] % p_;
            if (c == 0) continue;
            for (std::size_t j = piv; j < cols_; ++j)
                rows_[i][j] = static_cast<std::uint32_t>(
                    (rows_[i][j] + static_cast<std::uint64_t>(p_ - 1) * c % p_ * row[j]) % p_);
        }
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < piv) ++at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), piv);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    /// Basis of the nullspace, one vector per free column, in column order.
    std::vector<std::vector<std::uint32_t>> kernel_basis() const {
        std::vector<bool> is_pivot(cols_, false);
        for (auto pc : pivots_) is_pivot[pc] = true;
        std::vector<std::vector<std::uint32_t>> out;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<std::uint32_t> v(cols_, 0);
            v[f] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                v[pivots_[i]] = (p_ - rows_[i][f] % p_) % p_;
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    void reduce(std::vector<std::uint32_t>& row) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::uint64_t c = row[pivots_[i]] % p_;
            if (c == 0) continue;
            const std::uint64_t mc = (p_ - c) % p_;
            const auto& basis_row = rows_[i];
            for (std::size_t j = pivots_[i]; j < cols_; ++j)
                row[j] = static_cast<std::uint32_t>((row[j] + mc * basis_row[j]) % p_);
        }
    }

    std::uint64_t mod_inv(std::uint64_t a) const {
        std::uint64_t acc = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return acc;
    }

    std::uint32_t p_;
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

struct KernelInterpretation {
    std::vector<std::uint32_t> q_coeffs;
    bool is_right_mul_pair;
};

struct SolveReport {
    AlgebraKind kind;
    std::string field;
    SolveMode mode;
    std::size_t unknowns = 0;
    std::uint64_t elements_enumerated = 0;
    std::uint64_t invertible_count = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t expected_dim = 0;
    bool verdict = false;
    std::vector<KernelInterpretation> interpretations;
    std::vector<std::vector<std::uint32_t>> kernel;
    // f = g is encoded by appending the rows F - G = 0 to the system.
    std::string f_eq_g_encoding = "extra_rows";
};

namespace detail {

/// dim{q : R(q) = -R(q)} over GF(p); n in characteristic 2, else 0, but
/// computed rather than assumed.
inline std::size_t symmetric_q_dimension(const AlgebraHandle& h) {
    const std::uint32_t n = h.dim();
    RrefGFp sys(h.p(), n);
    // Columns of the map q -> vec(2 R(q)); one constraint row per matrix cell.
    std::vector<std::vector<std::uint32_t>> col_mats;
    for (std::uint32_t c = 0; c < n; ++c)
        col_mats.push_back(h.mul_matrices(h.basis(c)).second);
    for (std::uint32_t cell = 0; cell < n * n; ++cell) {
        std::vector<std::uint32_t> row(n, 0);
        for (std::uint32_t c = 0; c < n; ++c)
            row[c] = 2 * col_mats[c][cell] % h.p();
        sys.add_row(std::move(row));
    }
    return n - sys.rank();
}

struct FGView {
    // Kernel vectors list F entries row-major, then G entries row-major.
    static std::uint32_t F(const std::vector<std::uint32_t>& v, std::uint32_t n,
                           std::uint32_t r, std::uint32_t c) {
        return v[r * n + c];
    }
    static std::uint32_t G(const std::vector<std::uint32_t>& v, std::uint32_t n,
                           std::uint32_t r, std::uint32_t c) {
        return v[n * n + r * n + c];
    }
};

inline void matvec(const std::vector<std::uint32_t>& v, bool g_block, std::uint32_t n,
                   std::uint32_t p, const std::vector<std::uint32_t>& x,
                   std::vector<std::uint32_t>& out) {
    const std::size_t base = g_block ? static_cast<std::size_t>(n) * n : 0;
    for (std::uint32_t r = 0; r < n; ++r) {
        std::uint64_t acc = 0;
        const std::size_t row = base + static_cast<std::size_t>(r) * n;
        for (std::uint32_t c = 0; c < n; ++c)
            acc += static_cast<std::uint64_t>(v[row + c]) * x[c];
        out[r] = static_cast<std::uint32_t>(acc % p);
    }
}

/// F v(x) + x^2 * (G v(x^-1)) == 0 for one kernel vector and one unit x.
inline bool satisfies_constraint(const AlgebraHandle& h,
                                 const std::vector<std::uint32_t>& vec,
                                 const AlgebraHandle::Coords& vx,
                                 const AlgebraHandle::Coords& x_sq,
                                 const AlgebraHandle::Coords& vx_inv,
                                 std::vector<std::uint32_t>& fx,
                                 std::vector<std::uint32_t>& gxi,
                                 std::vector<std::uint32_t>& prod) {
    const std::uint32_t n = h.dim();
    const std::uint32_t p = h.p();
    matvec(vec, false, n, p, vx, fx);
    matvec(vec, true, n, p, vx_inv, gxi);
    h.mul(x_sq, gxi, prod);
    for (std::uint32_t r = 0; r < n; ++r)
        if ((fx[r] + prod[r]) % p != 0) return false;
    return true;
}

} // namespace detail

/// Exhaustive check of the identity for an explicit pair of map matrices
/// (F then G packed as one vector), independent of the elimination path.
inline bool verify_solution(const AlgebraHandle& h, const std::vector<std::uint32_t>& fg) {
    const std::uint32_t n = h.dim();
    if (fg.size() != 2 * static_cast<std::size_t>(n) * n)
        throw domain_error("packed (F,G) vector has wrong size");
    AlgebraHandle::Coords x = h.zero();
    AlgebraHandle::Coords x_sq(n), fx(n), gxi(n), prod(n);
    do {
        if (!h.is_unit(x)) continue;
        h.mul(x, x, x_sq);
        const auto x_inv = h.inverse(x);
        if (!detail::satisfies_constraint(h, fg, x, x_sq, x_inv, fx, gxi, prod))
            return false;
    } while (h.next(x));
    return true;
}

/// Packs (R(q), -R(q)) as a kernel-style vector.
inline std::vector<std::uint32_t> right_mul_pair(const AlgebraHandle& h,
                                                 const AlgebraHandle::Coords& q) {
    const std::uint32_t n = h.dim();
    const auto R = h.mul_matrices(q).second;
    std::vector<std::uint32_t> v(2 * static_cast<std::size_t>(n) * n, 0);
    for (std::size_t i = 0; i < R.size(); ++i) {
        v[i] = R[i];
        v[n * static_cast<std::size_t>(n) + i] = (h.p() - R[i] % h.p()) % h.p();
    }
    return v;
}

inline SolveReport solve_identity(const AlgebraHandle& h, SolveMode mode) {
    const std::uint32_t n = h.dim();
    const std::uint32_t p = h.p();
    const std::size_t unknowns = 2 * static_cast<std::size_t>(n) * n;

    SolveReport rep;
    rep.kind = h.kind();
    rep.field = h.field()->to_string();
    rep.mode = mode;
    rep.unknowns = unknowns;
    rep.elements_enumerated = h.total_elements();
    rep.expected_dim =
        mode == SolveMode::pair ? n : detail::symmetric_q_dimension(h);

    RrefGFp sys(p, unknowns);
    if (mode == SolveMode::f_eq_g) {
        // F - G = 0, one row per matrix cell.
        for (std::size_t cell = 0; cell < static_cast<std::size_t>(n) * n; ++cell) {
            std::vector<std::uint32_t> row(unknowns, 0);
            row[cell] = 1;
            row[static_cast<std::size_t>(n) * n + cell] = p - 1;
            sys.add_row(std::move(row));
        }
    }

    // Rank cannot exceed this: the (R(q), -R(q)) family always solves the
    // system, so elimination may stop there; the tail of the scan is then
    // checked against the kernel basis directly.
    const std::size_t rank_cap = unknowns - rep.expected_dim;

    std::optional<std::vector<std::vector<std::uint32_t>>> kernel;
    AlgebraHandle::Coords x = h.zero();
    AlgebraHandle::Coords x_sq(n), fx(n), gxi(n), prod(n);
    std::vector<std::uint32_t> Lmat;
    do {
        if (!h.is_unit(x)) continue;
        ++rep.invertible_count;
        h.mul(x, x, x_sq);
        const auto x_inv = h.inverse(x);

        if (kernel) {
            bool all_ok = true;
            for (const auto& vec : *kernel)
                if (!detail::satisfies_constraint(h, vec, x, x_sq, x_inv, fx, gxi, prod)) {
                    all_ok = false;
                    break;
                }
            if (all_ok) continue;
            kernel.reset(); // fall through and eliminate this element's rows
        }

        Lmat = h.mul_matrices(x_sq).first;
        for (std::uint32_t r = 0; r < n; ++r) {
            std::vector<std::uint32_t> row(unknowns, 0);
            for (std::uint32_t c = 0; c < n; ++c) row[r * n + c] = x[c];
            for (std::uint32_t i = 0; i < n; ++i) {
                const std::uint64_t l = Lmat[r * n + i];
                if (l == 0) continue;
                for (std::uint32_t j = 0; j < n; ++j)
                    row[static_cast<std::size_t>(n) * n + i * n + j] =
                        static_cast<std::uint32_t>(
                            (row[static_cast<std::size_t>(n) * n + i * n + j] +
                             l * x_inv[j]) % p);
            }
            sys.add_row(std::move(row));
        }
        if (sys.rank() >= rank_cap) kernel = sys.kernel_basis();
    } while (h.next(x));

    rep.rank = sys.rank();
    rep.kernel = kernel ? std::move(*kernel) : sys.kernel_basis();
    rep.kernel_dim = rep.kernel.size();

    // Interpretation: every kernel vector must be (R(q), -R(q)) for
    // q = f(1) (and F = G with R(q) = -R(q) in f_eq_g mode).
    const auto v1 = h.one();
    bool all_pairs = true;
    for (const auto& vec : rep.kernel) {
        std::vector<std::uint32_t> q(n);
        detail::matvec(vec, false, n, p, v1, q);
        const auto R = h.mul_matrices(q).second;
        bool ok = true;
        for (std::size_t i = 0; i < R.size() && ok; ++i) {
            const std::uint32_t f_entry = vec[i];
            const std::uint32_t g_entry = vec[static_cast<std::size_t>(n) * n + i];
            if (f_entry != R[i] % p) ok = false;
            if (mode == SolveMode::pair) {
                if (g_entry != (p - R[i] % p) % p) ok = false;
            } else {
                if (g_entry != f_entry) ok = false;
                if ((2 * R[i]) % p != 0) ok = false; // R(q) = -R(q)
            }
        }
        all_pairs = all_pairs && ok;
        rep.interpretations.push_back({std::move(q), ok});
    }
    rep.verdict = all_pairs && rep.kernel_dim == rep.expected_dim;
    return rep;
}

} // namespace octo
