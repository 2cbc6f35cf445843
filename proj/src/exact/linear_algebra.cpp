#include <dasep/exact/linear_algebra.hpp>

namespace dasep {

namespace {

// Least common multiple of the denominators in a row, up to a rational unit.
LaurentPoly row_denominator(const Mat<RationalFunction>& m, const Vec<RationalFunction>& rhs, Eigen::Index i) {
    LaurentPoly l(1);
    auto absorb = [&](const RationalFunction& f) {
        if (f.den().is_one()) return;
        const LaurentPoly g = gcd(l, f.den());
        l = *divide_exact(l, g) * f.den();
    };
    for (Eigen::Index j = 0; j < m.cols(); ++j) absorb(m(i, j));
    absorb(rhs(i));
    return l;
}

}  // namespace

Vec<RationalFunction> ratfunc_matrix_solve(const Mat<RationalFunction>& m, const Vec<RationalFunction>& rhs) {
    if (m.rows() != m.cols() || rhs.size() != m.rows()) throw SingularMatrix("ratfunc_matrix_solve needs a square system");
    const Eigen::Index n = m.rows();
    Mat<LaurentPoly> a(n, n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const LaurentPoly l = row_denominator(m, rhs, i);
        for (Eigen::Index j = 0; j <= n; ++j) {
            const RationalFunction& f = j < n ? m(i, j) : rhs(i);
            a(i, j) = f.is_zero() ? LaurentPoly() : *divide_exact(l, f.den()) * f.num();
        }
    }
    auto divide = [](const LaurentPoly& x, const LaurentPoly& y) {
        auto d = divide_exact(x, y);
        if (!d) throw Error("Bareiss step: inexact division");
        return *d;
    };
    const auto [sign, rk] = bareiss_eliminate(a, n, divide);
    (void)sign;
    if (rk < n) throw SingularMatrix("matrix over Q(q) is singular");
    Vec<RationalFunction> x(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        RationalFunction acc(a(i, n));
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (!a(i, j).is_zero()) acc -= RationalFunction(a(i, j)) * x(j);
        x(i) = acc / RationalFunction(a(i, i));
    }
    return x;
}

}  // namespace dasep
