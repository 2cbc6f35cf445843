#include <doctest.h>

#include <dasep/errors.hpp>
#include <dasep/exact/scalar.hpp>
#include <dasep/lie/lie_data.hpp>

using namespace dasep;

namespace {

// Independent oracle: solve sum c_k alpha_k = w by forward substitution in
// the L-basis.
Eigen::VectorXi triangular_cartan(const LVector& w, int n) {
    Eigen::VectorXi c = Eigen::VectorXi::Zero(n);
    int run = 0;
    for (int k = 1; k <= n - 2; ++k) {
        run += w(k - 1);
        c(k - 1) = run;
    }
    const int a = w(n - 2) + (n >= 3 ? c(n - 3) : 0);
    if ((a + w(n - 1)) % 2 != 0) throw NotInRootLattice("odd");
    c(n - 1) = (a + w(n - 1)) / 2;
    c(n - 2) = (a - w(n - 1)) / 2;
    return c;
}

Mat<RationalFunction> to_ratfunc(const Eigen::MatrixXi& m) {
    Mat<RationalFunction> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = RationalFunction(m(i, j));
    return out;
}

Mat<RationalFunction> k_matrix(const Eigen::MatrixXi& h, int sign) {
    Mat<RationalFunction> k = Mat<RationalFunction>::Zero(h.rows(), h.cols());
    for (Eigen::Index i = 0; i < h.rows(); ++i) k(i, i) = RationalFunction(LaurentPoly::q_pow(sign * h(i, i)));
    return k;
}

bool is_zero_matrix(const Mat<RationalFunction>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("cartan entries") {
    CHECK(cartan_entry(3, 3, 5) == 2);
    CHECK(cartan_entry(3, 5, 5) == -1);
    CHECK(cartan_entry(1, 3, 5) == 0);
    CHECK(cartan_entry(4, 5, 5) == 0);
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(root_inner(i, j, n) == cartan_entry(i, j, n));
}

TEST_CASE("fundamental matrices match the displayed formulas") {
    const auto m = fundamental_matrices(5);
    Eigen::MatrixXi e5 = Eigen::MatrixXi::Zero(10, 10);
    e5(3, 9) = 1;
    e5(4, 8) = -1;
    CHECK(m.E[5] == e5);
    Eigen::MatrixXi h1 = Eigen::MatrixXi::Zero(10, 10);
    h1(0, 0) = 1;
    h1(1, 1) = -1;
    h1(5, 5) = -1;
    h1(6, 6) = 1;
    CHECK(m.H[1] == h1);
    const auto printed = fundamental_matrices(5, FnSign::as_printed);
    CHECK(printed.F[5] == -m.F[5]);
    CHECK(printed.F[5](8, 4) == 1);
}

TEST_CASE("quantum group relations in the representation") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const auto m = fundamental_matrices(n);
        const RationalFunction r = RationalFunction(LaurentPoly::q() - LaurentPoly::q_pow(-1));
        for (int i = 1; i <= n; ++i) {
            // [E_i, F_i] = (K_i - K_i^{-1}) / (q - 1/q), computed over Q(q)
            const Mat<RationalFunction> lhs = to_ratfunc(m.E[i] * m.F[i] - m.F[i] * m.E[i]);
            Mat<RationalFunction> rhs = k_matrix(m.H[i], 1) - k_matrix(m.H[i], -1);
            for (Eigen::Index a = 0; a < rhs.rows(); ++a) rhs(a, a) = rhs(a, a) / r;
            CHECK(lhs == rhs);
            for (int j = 1; j <= n; ++j) {
                if (i != j) CHECK((m.E[i] * m.F[j] - m.F[j] * m.E[i]).isZero());
                // K_i E_j K_i^{-1} = q^{(a_i, a_j)} E_j, entrywise through the diagonal
                for (int a = 0; a < 2 * n; ++a)
                    for (int b = 0; b < 2 * n; ++b) {
                        if (m.E[j](a, b) != 0) CHECK(m.H[i](a, a) - m.H[i](b, b) == root_inner(i, j, n));
                        if (m.F[j](a, b) != 0) CHECK(m.H[i](a, a) - m.H[i](b, b) == -root_inner(i, j, n));
                    }
                if (cartan_entry(i, j, n) != -1) continue;
                // Serre relation, standard [2] = q + 1/q and the (1 + q) variant
                const Mat<RationalFunction> ei = to_ratfunc(m.E[i]), ej = to_ratfunc(m.E[j]);
                const Mat<RationalFunction> fi = to_ratfunc(m.F[i]), fj = to_ratfunc(m.F[j]);
                for (const RationalFunction& c : {RationalFunction(LaurentPoly::q() + LaurentPoly::q_pow(-1)),
                                                  RationalFunction(LaurentPoly::q() + LaurentPoly(1))}) {
                    CHECK(is_zero_matrix(Mat<RationalFunction>(ei * ei * ej - ei * ej * ei * c + ej * ei * ei)));
                    CHECK(is_zero_matrix(Mat<RationalFunction>(fi * fi * fj - fi * fj * fi * c + fj * fi * fi)));
                }
            }
        }
    }
}

TEST_CASE("printed F_n breaks only the [E_n, F_n] relation") {
    const auto m = fundamental_matrices(4, FnSign::as_printed);
    CHECK(m.E[4] * m.F[4] - m.F[4] * m.E[4] == -m.H[4]);
    CHECK(m.E[3] * m.F[3] - m.F[3] * m.E[3] == m.H[3]);
}

TEST_CASE("weight vectors") {
    CHECK(weight_vector(1, 5)(0) == 1);
    CHECK(weight_vector(7, 5)(8) == 1);
    CHECK(weight_vector(10, 5)(5) == 1);
    CHECK(weight_of_vector(5, 5) == WeightLabel{5, 1});
    CHECK(weight_of_vector(6, 5) == WeightLabel{5, -1});
    CHECK(weight_of_vector(10, 5) == WeightLabel{1, -1});
    for (int n = 2; n <= 6; ++n) {
        const auto m = fundamental_matrices(n);
        for (int k = 1; k <= 2 * n; ++k) {
            CHECK(weight_of_vector(k, n).position(n) == k);
            CHECK(vector_at_coordinate(weight_coordinate(k, n), n) == k);
            // H_i acts on v_k by (alpha_i, wt(v_k))
            const int c = weight_coordinate(k, n) - 1;
            for (int i = 1; i <= n; ++i) CHECK(m.H[i](c, c) == simple_root(i, n).dot(weight_of_vector(k, n).vec(n)));
        }
    }
}

TEST_CASE("rho and mu-lambda factors") {
    const auto q = [](int e) { return RationalFunction(LaurentPoly::q_pow(e)); };
    CHECK(rho_factor({1, 1}, 5) == q(-8));
    CHECK(rho_factor({1, -1}, 5) == q(8));
    CHECK(rho_factor({5, 1}, 5) == q(0));
    CHECK(mu_lambda_factor({3, 1}, {3, 1}, 5) == q(0));
    CHECK(mu_lambda_factor({2, 1}, {2, -1}, 5) == q(2));
    CHECK(mu_lambda_factor({4, 1}, {5, 1}, 5) == q(1));
}

TEST_CASE("cartan exponents") {
    LVector w = LVector::Zero(5);
    w(0) = 2;
    CHECK(cartan_exponents(w, 5) == (Eigen::VectorXi(5) << 2, 2, 2, 1, 1).finished());
    w.setZero();
    w(3) = 1;
    w(4) = -1;
    CHECK(cartan_exponents(w, 5) == (Eigen::VectorXi(5) << 0, 0, 0, 1, 0).finished());
    CHECK(cartan_exponents(LVector::Zero(5), 5) == Eigen::VectorXi::Zero(5));
    w.setZero();
    w(0) = 1;
    CHECK_THROWS_AS(cartan_exponents(w, 5), NotInRootLattice);

    for (int n = 2; n <= 6; ++n) {
        const auto m = fundamental_matrices(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        LVector v = LVector::Zero(n);
                        v(i - 1) += si;
                        v(j - 1) += sj;
                        const CartanExponents c = cartan_exponents(v, n);
                        CHECK(c == triangular_cartan(v, n));
                        const Eigen::VectorXi diag = cartan_diagonal(c, m);
                        for (int k = 1; k <= 2 * n; ++k)
                            CHECK(diag(weight_coordinate(k, n) - 1) == v.dot(weight_of_vector(k, n).vec(n)));
                    }
    }
}
