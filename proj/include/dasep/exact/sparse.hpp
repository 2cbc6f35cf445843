#pragma once

#include <dasep/exact/scalar.hpp>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace dasep {

/// Row-major sparse matrix with ordered rows. No stored zeros.
template <class T>
class SparseMatrix {
public:
    using Row = std::map<int, T>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {}

    static SparseMatrix identity(int n, const T& one = T(1)) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.rows_[static_cast<std::size_t>(i)].emplace(i, one);
        return m;
    }

    static SparseMatrix from_dense(const Mat<T>& d) {
        SparseMatrix m(static_cast<int>(d.rows()), static_cast<int>(d.cols()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!is_zero(d(i, j))) m.rows_[static_cast<std::size_t>(i)].emplace(j, d(i, j));
        return m;
    }

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    T get(int i, int j) const {
        const Row& r = row(i);
        auto it = r.find(j);
        return it == r.end() ? T(0) : it->second;
    }

    void set(int i, int j, const T& v) {
        Row& r = rows_[static_cast<std::size_t>(i)];
        if (is_zero(v)) r.erase(j);
        else r[j] = v;
    }

    void add(int i, int j, const T& v) {
        if (is_zero(v)) return;
        Row& r = rows_[static_cast<std::size_t>(i)];
        auto [it, inserted] = r.emplace(j, v);
        if (!inserted) {
            it->second = it->second + v;
            if (is_zero(it->second)) r.erase(it);
        }
    }

    std::size_t nonzeros() const {
        std::size_t k = 0;
        for (const auto& r : rows_) k += r.size();
        return k;
    }

    Mat<T> to_dense() const {
        Mat<T> d(rows(), cols());
        d.setZero();
        for (int i = 0; i < rows(); ++i)
            for (const auto& [j, v] : row(i)) d(i, j) = v;
        return d;
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols(), rows());
        for (int i = 0; i < rows(); ++i)
            for (const auto& [j, v] : row(i)) t.rows_[static_cast<std::size_t>(j)].emplace(i, v);
        return t;
    }

    /// Entrywise image under f; zero images are dropped.
    template <class F>
    auto map(F f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        SparseMatrix<U> out(rows(), cols());
        for (int i = 0; i < rows(); ++i)
            for (const auto& [j, v] : row(i)) out.set(i, j, f(v));
        return out;
    }

    /// this += c * other.
    template <class C>
    void add_scaled(const SparseMatrix& other, const C& c) {
        for (int i = 0; i < other.rows(); ++i)
            for (const auto& [j, v] : other.row(i)) add(i, j, c * v);
    }

    SparseMatrix& operator+=(const SparseMatrix& other) {
        for (int i = 0; i < other.rows(); ++i)
            for (const auto& [j, v] : other.row(i)) add(i, j, v);
        return *this;
    }
    SparseMatrix& operator-=(const SparseMatrix& other) {
        for (int i = 0; i < other.rows(); ++i)
            for (const auto& [j, v] : other.row(i)) add(i, j, -v);
        return *this;
    }
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        SparseMatrix c(a.rows(), b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (const auto& [k, av] : a.row(i))
                for (const auto& [j, bv] : b.row(k)) c.add(i, j, av * bv);
        return c;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

private:
    int cols_ = 0;
    std::vector<Row> rows_;
};

/// Kronecker product; index (i, k) of the result is i * b.rows() + k.
template <class T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
    SparseMatrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, av] : a.row(i))
            for (int k = 0; k < b.rows(); ++k)
                for (const auto& [l, bv] : b.row(k)) out.add(i * b.rows() + k, j * b.cols() + l, av * bv);
    return out;
}

}  // namespace dasep
