#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lincor/bitvec.hpp"
#include "lincor/error.hpp"

namespace lincor {

/// Reduced row-echelon form over GF(2). Returns the echelon matrix and the
/// pivot column of each nonzero row. The input is taken by value; nothing is
/// mutated in place.
inline std::pair<BitMatrix, std::vector<std::size_t>> rref(BitMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.col_count() && r < m.row_count(); ++c) {
        std::size_t sel = r;
        while (sel < m.row_count() && !m.get(sel, c))
            ++sel;
        if (sel == m.row_count())
            continue;
        std::swap(m.row(r), m.row(sel));
        for (std::size_t i = 0; i < m.row_count(); ++i)
            if (i != r && m.get(i, c))
                m.row(i).xor_with(m.row(r));
        pivots.push_back(c);
        ++r;
    }
    // drop all-zero rows so equal row spaces give equal canonical forms
    std::vector<BitVector> rows;
    rows.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        rows.push_back(m.row(i));
    return {BitMatrix(std::move(rows)), std::move(pivots)};
}

/// GF(2) row rank via Gaussian elimination on a copy.
inline std::size_t rank(const BitMatrix& m) { return rref(m).second.size(); }

/// y = G * x over GF(2): output bit j is the parity of row_j AND x.
inline BitVector mat_vec(const BitMatrix& g, const BitVector& x) {
    if (x.length() != g.col_count())
        fail(ErrorKind::Usage, "mat_vec: vector length " + std::to_string(x.length()) +
                                   " != matrix cols " + std::to_string(g.col_count()));
    BitVector y(g.row_count());
    for (std::size_t j = 0; j < g.row_count(); ++j)
        y.set(j, g.row(j).dot(x));
    return y;
}

/// An [n,k] binary linear code given by a full-rank generator matrix.
/// Immutable after construction.
class BinaryLinearCode {
  public:
    BinaryLinearCode(BitMatrix gen, std::optional<std::size_t> claimed_d = {},
                     std::string name = {}, std::string family = {},
                     std::optional<BitVector> cyclic_gen_poly = {})
        : gen_(std::move(gen)), claimed_d_(claimed_d), name_(std::move(name)),
          family_(std::move(family)), cyclic_gen_poly_(std::move(cyclic_gen_poly)) {
        if (rank(gen_) != gen_.row_count())
            fail(ErrorKind::Integrity, "generator matrix of '" + name_ + "' is rank deficient");
    }

    std::size_t n() const noexcept { return gen_.col_count(); }
    std::size_t k() const noexcept { return gen_.row_count(); }
    const BitMatrix& gen() const noexcept { return gen_; }
    const std::optional<std::size_t>& claimed_d() const noexcept { return claimed_d_; }
    const std::string& name() const noexcept { return name_; }
    const std::string& family() const noexcept { return family_; }
    const std::optional<BitVector>& cyclic_gen_poly() const noexcept { return cyclic_gen_poly_; }
    bool is_cyclic() const noexcept { return cyclic_gen_poly_.has_value(); }

    double rate() const noexcept { return double(k()) / double(n()); }

    /// Columns where every generator row is zero; such correctors waste an
    /// input bit and are rejected at load time.
    std::vector<std::size_t> zero_columns() const {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n(); ++c) {
            bool any = false;
            for (std::size_t r = 0; r < k() && !any; ++r)
                any = gen_.get(r, c);
            if (!any && k() > 0)
                cols.push_back(c);
        }
        return cols;
    }

    void require_no_zero_columns() const {
        auto cols = zero_columns();
        if (!cols.empty())
            fail(ErrorKind::Integrity, "generator of '" + name_ + "' has an all-zero column (first at " +
                                           std::to_string(cols.front()) + ")");
    }

  private:
    BitMatrix gen_;
    std::optional<std::size_t> claimed_d_;
    std::string name_;
    std::string family_;
    std::optional<BitVector> cyclic_gen_poly_;
};

/// Dual code: an [n, n-k] code whose generator is a parity-check matrix of c.
/// Built from the null space basis of the RREF of c's generator.
inline BinaryLinearCode dual(const BinaryLinearCode& c) {
    auto [ech, pivots] = rref(c.gen());
    if (pivots.size() != c.k())
        fail(ErrorKind::Integrity, "dual: generator not full rank");
    std::vector<bool> is_pivot(c.n(), false);
    std::vector<std::size_t> pivot_row(c.n(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        pivot_row[pivots[r]] = r;
    }
    std::vector<BitVector> rows;
    rows.reserve(c.n() - c.k());
    for (std::size_t f = 0; f < c.n(); ++f) {
        if (is_pivot[f])
            continue;
        BitVector h(c.n());
        h.set(f, true);
        for (std::size_t p = 0; p < c.n(); ++p)
            if (is_pivot[p] && ech.get(pivot_row[p], f))
                h.set(p, true);
        rows.push_back(std::move(h));
    }
    BitMatrix gen = rows.empty() ? BitMatrix(0, c.n()) : BitMatrix(std::move(rows));
    return BinaryLinearCode(std::move(gen), {}, c.name().empty() ? "" : c.name() + "_dual",
                            c.family());
}

// --- GF(2)[x] helpers on BitVectors (coefficients, lowest degree first) ----

inline std::ptrdiff_t poly_degree(const BitVector& p) {
    for (std::size_t i = p.length(); i-- > 0;)
        if (p.get(i))
            return std::ptrdiff_t(i);
    return -1;
}

/// Remainder of x^n + 1 divided by g over GF(2).
inline bool divides_xn_plus_1(const BitVector& g, std::size_t n) {
    std::ptrdiff_t dg = poly_degree(g);
    std::vector<bool> rem(n + 1, false);
    rem[0] = true;
    rem[n] = true;
    for (std::size_t i = n + 1; i-- > std::size_t(dg);) {
        std::size_t top = i;
        if (!rem[top])
            continue;
        std::size_t shift = top - std::size_t(dg);
        for (std::ptrdiff_t j = 0; j <= dg; ++j)
            rem[shift + std::size_t(j)] = rem[shift + std::size_t(j)] ^ g.get(std::size_t(j));
    }
    return std::none_of(rem.begin(), rem.end(), [](bool b) { return b; });
}

/// Cyclic [n, n-deg(g)] code whose generator rows are x^i * g(x), i = 0..k-1.
inline BinaryLinearCode expand_cyclic(std::size_t n, const BitVector& gen_poly,
                                      std::optional<std::size_t> claimed_d = {},
                                      std::string name = {}, std::string family = {}) {
    std::ptrdiff_t dg = poly_degree(gen_poly);
    if (dg < 0)
        fail(ErrorKind::Usage, "expand_cyclic: zero generator polynomial");
    if (std::size_t(dg) >= n)
        fail(ErrorKind::Usage, "expand_cyclic: deg(g) >= n");
    if (!divides_xn_plus_1(gen_poly, n))
        fail(ErrorKind::Integrity, "expand_cyclic: g(x) does not divide x^n + 1 for '" + name + "'");
    std::size_t k = n - std::size_t(dg);
    std::vector<BitVector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        BitVector row(n);
        for (std::ptrdiff_t j = 0; j <= dg; ++j)
            if (gen_poly.get(std::size_t(j)))
                row.set(i + std::size_t(j), true);
        rows.push_back(std::move(row));
    }
    BitVector poly(std::size_t(dg) + 1);
    for (std::ptrdiff_t j = 0; j <= dg; ++j)
        poly.set(std::size_t(j), gen_poly.get(std::size_t(j)));
    return BinaryLinearCode(BitMatrix(std::move(rows)), claimed_d, std::move(name),
                            std::move(family), std::move(poly));
}

/// Same codeword set test via canonical RREF of the generators.
inline bool same_code(const BinaryLinearCode& a, const BinaryLinearCode& b) {
    return rref(a.gen()).first == rref(b.gen()).first;
}

} // namespace lincor
