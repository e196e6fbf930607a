#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ctforge/checked.hpp"

namespace ctforge {

using IntVector = std::vector<Int>;

/// Dense square integer matrix with checked arithmetic. Rows and columns are
/// indexed by quiver vertices (0-based internally).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }
    Int& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    IntMatrix transposed() const {
        IntMatrix t(n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    IntMatrix operator-() const {
        IntMatrix m(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = checked::sub(0, a_[k]);
        return m;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.n_ != y.n_) throw ValidationError("matrix dimension mismatch");
        IntMatrix p(x.n_);
        for (std::size_t r = 0; r < x.n_; ++r)
            for (std::size_t k = 0; k < x.n_; ++k) {
                Int xrk = x(r, k);
                if (xrk == 0) continue;
                for (std::size_t c = 0; c < x.n_; ++c)
                    p(r, c) = checked::add(p(r, c), checked::mul(xrk, y(k, c)));
            }
        return p;
    }

    IntVector apply(std::span<const Int> v) const {
        if (v.size() != n_) throw ValidationError("vector length does not match matrix size");
        IntVector out(n_, 0);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) out[r] = checked::add(out[r], checked::mul((*this)(r, c), v[c]));
        return out;
    }

    IntMatrix power(int e) const {
        if (e < 0) return inverse().power(-e);
        IntMatrix result = identity(n_);
        for (int k = 0; k < e; ++k) result = result * (*this);
        return result;
    }

    bool is_identity() const { return *this == identity(n_); }

    /// Exact inverse; throws unless the inverse is integral.
    IntMatrix inverse() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

/// Row-major rational matrix used by the elimination routines below.
using RationalRows = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place, choosing pivots among the first
/// `ncols` columns (later columns are carried along, e.g. an augmented block).
/// Returns the pivot column of each nonzero row, in order.
inline std::vector<std::size_t> row_reduce(RationalRows& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = Rational(1) / rows[r][c];
        if (!(inv == Rational(1)))
            for (std::size_t k = c; k < width; ++k) rows[r][k] = rows[r][k] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (std::size_t k = c; k < width; ++k)
                if (!rows[r][k].is_zero()) rows[i][k] = rows[i][k] - f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RationalRows rows, std::size_t ncols) { return row_reduce(rows, ncols).size(); }

/// Basis of { x : A x = 0 } for A given by rows over `ncols` unknowns.
inline RationalRows nullspace(RationalRows rows, std::size_t ncols) {
    auto pivots = row_reduce(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    RationalRows basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline IntMatrix IntMatrix::inverse() const {
    RationalRows aug(n_, std::vector<Rational>(2 * n_, Rational(0)));
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) aug[r][c] = Rational((*this)(r, c));
        aug[r][n_ + r] = Rational(1);
    }
    auto pivots = row_reduce(aug, n_);
    if (pivots.size() != n_) throw ValidationError("matrix is singular");
    IntMatrix inv(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) {
            const Rational& q = aug[r][n_ + c];
            if (!q.is_integer()) throw ValidationError("matrix inverse is not integral");
            inv(r, c) = q.num();
        }
    return inv;
}

} // namespace ctforge
