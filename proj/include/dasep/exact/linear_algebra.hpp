#pragma once

// Exact dense linear algebra on Eigen matrices over any field S from
// scalar.hpp, plus the fraction-free solver for matrices over Q(q).

#include <dasep/errors.hpp>
#include <dasep/exact/scalar.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace dasep {

/// Reduced row echelon form and pivot columns.
template <class S>
struct Echelon {
    Mat<S> rref;
    std::vector<Eigen::Index> pivots;
    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <class S>
Echelon<S> row_echelon(Mat<S> a) {
    Echelon<S> out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index piv = row;
        while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) a.row(piv).swap(a.row(row));
        const S inv = S(1) / a(row, col);
        for (Eigen::Index j = col; j < a.cols(); ++j)
            if (!is_zero(a(row, j))) a(row, j) = a(row, j) * inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == row || is_zero(a(i, col))) continue;
            const S f = a(i, col);
            for (Eigen::Index j = col; j < a.cols(); ++j)
                if (!is_zero(a(row, j))) a(i, j) = a(i, j) - f * a(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rref = std::move(a);
    return out;
}

template <class S>
Eigen::Index rank(const Mat<S>& a) {
    return row_echelon<S>(a).rank();
}

/// Columns form a basis of {x : a x = 0}.
template <class S>
Mat<S> nullspace(const Mat<S>& a) {
    const Echelon<S> e = row_echelon<S>(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Mat<S> basis(a.cols(), a.cols() - e.rank());
    basis.setZero();
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        basis(free, k) = S(1);
        for (Eigen::Index r = 0; r < e.rank(); ++r) basis(e.pivots[static_cast<std::size_t>(r)], k) = -e.rref(r, free);
        ++k;
    }
    return basis;
}

/// Some solution of a x = b; throws SingularMatrix when there is none.
template <class S>
Vec<S> solve(const Mat<S>& a, const Vec<S>& b) {
    Mat<S> aug(a.rows(), a.cols() + 1);
    aug << a, b;
    const Echelon<S> e = row_echelon<S>(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) throw SingularMatrix("linear system has no solution");
    Vec<S> x(a.cols());
    x.setZero();
    for (Eigen::Index r = 0; r < e.rank(); ++r) x(e.pivots[static_cast<std::size_t>(r)]) = e.rref(r, a.cols());
    return x;
}

/// Throws SingularMatrix when a is singular.
template <class S>
Mat<S> inverse(const Mat<S>& a) {
    if (a.rows() != a.cols()) throw SingularMatrix("inverse of a non-square matrix");
    const Eigen::Index n = a.rows();
    Mat<S> aug(n, 2 * n);
    aug.setZero();
    aug.leftCols(n) = a;
    for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
    const Echelon<S> e = row_echelon<S>(std::move(aug));
    if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) throw SingularMatrix("matrix is singular");
    return e.rref.rightCols(n);
}

template <class S>
S determinant(Mat<S> a) {
    S det(1);
    const Eigen::Index n = a.rows();
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = c;
        while (piv < n && is_zero(a(piv, c))) ++piv;
        if (piv == n) return S(0);
        if (piv != c) {
            a.row(piv).swap(a.row(c));
            det = -det;
        }
        det = det * a(c, c);
        const S inv = S(1) / a(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            const S f = a(i, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
        }
    }
    return det;
}

/**
 * Fraction-free (Bareiss) forward elimination over an integral domain D with
 * exact division. On return a is upper triangular and the last pivot is
 * +-det. Returns the column permutation-free row sign and the rank; rows
 * are swapped for pivoting. `divide` must perform exact division.
 */
template <class D, class Divide>
std::pair<int, Eigen::Index> bareiss_eliminate(Mat<D>& a, Eigen::Index ncols, Divide divide) {
    int sign = 1;
    D prev(1);
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < ncols && row < a.rows(); ++col) {
        Eigen::Index piv = row;
        while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) {
            a.row(piv).swap(a.row(row));
            sign = -sign;
        }
        for (Eigen::Index i = row + 1; i < a.rows(); ++i) {
            for (Eigen::Index j = col + 1; j < a.cols(); ++j)
                a(i, j) = divide(a(row, col) * a(i, j) - a(i, col) * a(row, j), prev);
            a(i, col) = D(0);
        }
        prev = a(row, col);
        ++row;
    }
    return {sign, row};
}

/**
 * Exact solution of m x = rhs over Q(q). Rows are cleared of denominators,
 * eliminated fraction-free over Q[q, 1/q], and back-substituted in Q(q).
 * Throws SingularMatrix when m is singular.
 */
Vec<RationalFunction> ratfunc_matrix_solve(const Mat<RationalFunction>& m, const Vec<RationalFunction>& rhs);

}  // namespace dasep
