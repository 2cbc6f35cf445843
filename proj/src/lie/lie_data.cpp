#include <dasep/lie/lie_data.hpp>

#include <dasep/errors.hpp>

namespace dasep {

void check_rank(int n) {
    if (n < 2) throw InvalidParams("rank n must be at least 2, got " + std::to_string(n));
}

LVector WeightLabel::vec(int n) const {
    LVector v = LVector::Zero(n);
    v(index - 1) = sign;
    return v;
}

std::string WeightLabel::to_string() const {
    return (sign > 0 ? "L" : "-L") + std::to_string(index);
}

int cartan_entry(int i, int j, int n) {
    if (i == j) return 2;
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (lo == n - 2 && hi == n) return -1;
    if (hi == lo + 1 && hi <= n - 1) return -1;
    return 0;
}

Eigen::MatrixXi cartan_matrix(int n) {
    Eigen::MatrixXi a(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = cartan_entry(i, j, n);
    return a;
}

LVector simple_root(int i, int n) {
    LVector v = LVector::Zero(n);
    if (i < n) {
        v(i - 1) = 1;
        v(i) = -1;
    } else {
        v(n - 2) = 1;
        v(n - 1) = 1;
    }
    return v;
}

int root_inner(int i, int j, int n) { return simple_root(i, n).dot(simple_root(j, n)); }

int weight_coordinate(int k, int n) { return k <= n ? k : 3 * n + 1 - k; }

int vector_at_coordinate(int c, int n) { return c <= n ? c : 3 * n + 1 - c; }

Eigen::VectorXi weight_vector(int k, int n) {
    Eigen::VectorXi v = Eigen::VectorXi::Zero(2 * n);
    v(weight_coordinate(k, n) - 1) = 1;
    return v;
}

WeightLabel weight_of_vector(int k, int n) {
    if (k <= n) return {k, 1};
    return {2 * n + 1 - k, -1};
}

int rho_exponent(const WeightLabel& mu, int n) {
    return mu.sign > 0 ? 2 * mu.index - 2 * n : 2 * n - 2 * mu.index;
}

int mu_lambda_exponent(const WeightLabel& mu, const WeightLabel& lam, int n) {
    return (mu.vec(n) - lam.vec(n)).dot(mu.vec(n));
}

RationalFunction rho_factor(const WeightLabel& mu, int n) {
    return RationalFunction(LaurentPoly::q_pow(rho_exponent(mu, n)));
}

RationalFunction mu_lambda_factor(const WeightLabel& mu, const WeightLabel& lam, int n) {
    return RationalFunction(LaurentPoly::q_pow(mu_lambda_exponent(mu, lam, n)));
}

CartanExponents cartan_exponents(const LVector& w, int n) {
    // H_{L_i} = -1/2 H_{-2L_i}; accumulate 2c to stay in integers.
    Eigen::VectorXi twice = Eigen::VectorXi::Zero(n);
    for (int i = 1; i <= n; ++i) {
        const int wi = w(i - 1);
        if (wi == 0) continue;
        Eigen::VectorXi minus_two = Eigen::VectorXi::Zero(n);
        minus_two(n - 2) += 1;
        minus_two(n - 1) -= 1;
        for (int j = i; j <= n - 1; ++j) minus_two(j - 1) -= 2;
        twice -= wi * minus_two;
    }
    CartanExponents c(n);
    for (int k = 0; k < n; ++k) {
        if (twice(k) % 2 != 0) throw NotInRootLattice("weight is not in the root lattice");
        c(k) = twice(k) / 2;
    }
    return c;
}

FundamentalMatrices fundamental_matrices(int n, FnSign fn_sign) {
    check_rank(n);
    const int d = 2 * n;
    FundamentalMatrices m;
    m.n = n;
    m.E.assign(n + 1, Eigen::MatrixXi::Zero(d, d));
    m.F.assign(n + 1, Eigen::MatrixXi::Zero(d, d));
    m.H.assign(n + 1, Eigen::MatrixXi::Zero(d, d));
    auto at = [](Eigen::MatrixXi& x, int i, int j) -> int& { return x(i - 1, j - 1); };
    for (int i = 1; i <= n - 1; ++i) {
        at(m.E[i], i, i + 1) = 1;
        at(m.E[i], n + i + 1, n + i) = -1;
        at(m.F[i], i + 1, i) = 1;
        at(m.F[i], n + i, n + i + 1) = -1;
        at(m.H[i], i, i) = 1;
        at(m.H[i], i + 1, i + 1) = -1;
        at(m.H[i], n + i, n + i) = -1;
        at(m.H[i], n + i + 1, n + i + 1) = 1;
    }
    at(m.E[n], n - 1, 2 * n) = 1;
    at(m.E[n], n, 2 * n - 1) = -1;
    if (fn_sign == FnSign::transpose) {
        m.F[n] = m.E[n].transpose();
    } else {
        at(m.F[n], 2 * n - 1, n) = 1;
        at(m.F[n], 2 * n, n - 1) = -1;
    }
    at(m.H[n], n - 1, n - 1) = 1;
    at(m.H[n], n, n) = 1;
    at(m.H[n], 2 * n - 1, 2 * n - 1) = -1;
    at(m.H[n], 2 * n, 2 * n) = -1;
    return m;
}

Eigen::VectorXi cartan_diagonal(const CartanExponents& c, const FundamentalMatrices& m) {
    Eigen::VectorXi diag = Eigen::VectorXi::Zero(2 * m.n);
    for (int i = 1; i <= m.n; ++i) diag += c(i - 1) * m.H[i].diagonal();
    return diag;
}

}  // namespace dasep
