#pragma once

// Generator of the two-species Type D ASEP with parameters (q, n, delta):
// the 16-state two-site matrix and the L-site sum of local terms.
// Site states: 0 empty, 1 species 1, 2 species 2, 3 both.

#include <dasep/errors.hpp>
#include <dasep/exact/sparse.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dasep {

using Configuration = std::vector<int>;

struct AsepParams {
    int n = 2;
    int delta = 0;
};

/// Throws InvalidParams unless n >= 2 and 0 <= delta <= n - 2.
void check_params(const AsepParams& p);

/// Two-site states in block order: the 4-state class, the four 2-state
/// classes, then the absorbing states.
const std::array<std::pair<int, int>, 16>& local_basis();

/// Position of (a, b) in local_basis().
int local_index(int a, int b);

template <class S>
void check_q(const QField<S>& field) {
    if constexpr (is_exact_v<S>) {
        if (field.q() == S(1)) throw InvalidParams("q = 1 is not allowed");
    } else {
        if (field.q() == 1.0) throw InvalidParams("q = 1 is not allowed");
    }
}

/// Fills the diagonal so every row sums to zero.
template <class S>
void fill_diagonal(Mat<S>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        S s(0);
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (j != i) s = s + m(i, j);
        m(i, i) = -s;
    }
}

/// The 4x4 block on (3,0), (2,1), (0,3), (1,2).
template <class S>
Mat<S> block_l1(const AsepParams& p, const QField<S>& field) {
    check_params(p);
    check_q(field);
    const int n = p.n, d = p.delta;
    const auto Q = [&](int e) { return field.power(e); };
    const S sq = (Q(n - 1) - Q(1 - n)) * (Q(n - 1) - Q(1 - n));
    const S a = Q(2 * n - 2) - Q(2 * n - 4) + S(2) * Q(-2);
    const S b = Q(2 * n) - Q(2 * n - 2) + S(2);
    const S c = Q(-2 * n) - Q(2 - 2 * n) + S(2);
    const S e = S(2) * Q(2) + Q(2 - 2 * n) - Q(4 - 2 * n);
    Mat<S> m = Mat<S>::Zero(4, 4);
    m(0, 1) = Q(-2 * d) * a;
    m(0, 2) = sq * Q(-2);
    m(0, 3) = a;
    m(1, 0) = Q(-2 * d) * b;
    m(1, 2) = c;
    m(1, 3) = sq;
    m(2, 0) = Q(2) * sq;
    m(2, 1) = e;
    m(2, 3) = Q(2 * d) * e;
    m(3, 0) = b;
    m(3, 1) = sq;
    m(3, 2) = Q(2 * d) * c;
    fill_diagonal(m);
    return m;
}

/// The 2x2 block on (first, second) of each 2-state class.
template <class S>
Mat<S> block_l2(const AsepParams& p, const QField<S>& field) {
    check_params(p);
    check_q(field);
    const S s = field.power(1 - 2 * p.n) + field.power(2 * p.n - 1);
    Mat<S> m = Mat<S>::Zero(2, 2);
    m(0, 1) = s / field.q();
    m(1, 0) = field.q() * s;
    fill_diagonal(m);
    return m;
}

/// Rows and columns in local_basis() order.
template <class S>
Mat<S> local_generator(const AsepParams& p, const QField<S>& field) {
    Mat<S> m = Mat<S>::Zero(16, 16);
    m.topLeftCorner(4, 4) = block_l1(p, field);
    const Mat<S> l2 = block_l2(p, field);
    for (int k = 0; k < 4; ++k) m.block(4 + 2 * k, 4 + 2 * k, 2, 2) = l2;
    return m;
}

/// Lexicographic ordering of tuples over {0,1,2,3}: index sum_x c_x 4^{L-1-x}.
std::int64_t config_index(const Configuration& c);
Configuration config_at(std::int64_t index, int sites);

struct GeneratorOptions {
    std::int64_t max_states = 1 << 16;
};

/// L^{1,2} + ... + L^{L-1,L} in lexicographic basis.
template <class S>
SparseMatrix<S> multi_site_generator(const AsepParams& p, int sites, const QField<S>& field,
                                     GeneratorOptions opts = {}) {
    if (sites < 2) throw InvalidParams("need at least two sites");
    std::int64_t states = 1;
    for (int x = 0; x < sites; ++x) {
        states *= 4;
        if (states > opts.max_states) throw DimensionOverflow("4^" + std::to_string(sites) + " states exceed the cap");
    }
    const Mat<S> local = local_generator(p, field);
    const auto& basis = local_basis();
    SparseMatrix<S> g(static_cast<int>(states), static_cast<int>(states));
    for (std::int64_t s = 0; s < states; ++s) {
        const Configuration c = config_at(s, sites);
        for (int x = 0; x + 1 < sites; ++x) {
            const int i = local_index(c[static_cast<std::size_t>(x)], c[static_cast<std::size_t>(x + 1)]);
            for (int j = 0; j < 16; ++j) {
                if (is_zero(local(i, j))) continue;
                Configuration t = c;
                t[static_cast<std::size_t>(x)] = basis[static_cast<std::size_t>(j)].first;
                t[static_cast<std::size_t>(x + 1)] = basis[static_cast<std::size_t>(j)].second;
                g.add(static_cast<int>(s), static_cast<int>(config_index(t)), local(i, j));
            }
        }
    }
    return g;
}

/// Number of particles of species 1 and species 2 in a configuration.
std::pair<int, int> species_counts(const Configuration& c);

struct PositivityReport {
    double q = 0;
    double min_rate = 0;
    std::vector<std::pair<int, int>> violations;  // (row, col) in local_basis() order
};

/// Off-diagonal entries of the local generator at each q, which must be >= 0.
std::vector<PositivityReport> rate_positivity_scan(const AsepParams& p, const std::vector<double>& qs);

}  // namespace dasep
