#include <doctest.h>

#include <dasep/errors.hpp>
#include <dasep/exact/interpolation.hpp>
#include <dasep/exact/json_io.hpp>
#include <dasep/exact/linear_algebra.hpp>
#include <dasep/exact/sparse.hpp>

#include <random>

using namespace dasep;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly qi = LaurentPoly::q_pow(-1);

LaurentPoly random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 4), lo(-3, 3), c(-5, 5);
    std::map<int, BigRational> t;
    const int l = lo(rng);
    const int k = len(rng);
    for (int i = 0; i < k; ++i) t[l + i] = BigRational(c(rng), 1 + (c(rng) + 5) % 3);
    return LaurentPoly::from_terms(t);
}

RationalFunction random_ratfunc(std::mt19937_64& rng) {
    LaurentPoly d = random_laurent(rng);
    while (d.is_zero()) d = random_laurent(rng);
    return RationalFunction(random_laurent(rng), d);
}

// Independent oracle: inverse via cofactors, only for n <= 3.
Mat<RationalFunction> adjugate_inverse(const Mat<RationalFunction>& m) {
    const auto n = m.rows();
    auto minor_det = [&](Eigen::Index skip_r, Eigen::Index skip_c) {
        std::vector<Eigen::Index> rs, cs;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != skip_r) rs.push_back(i);
            if (i != skip_c) cs.push_back(i);
        }
        if (rs.empty()) return RationalFunction(1);
        if (rs.size() == 1) return m(rs[0], cs[0]);
        return m(rs[0], cs[0]) * m(rs[1], cs[1]) - m(rs[0], cs[1]) * m(rs[1], cs[0]);
    };
    RationalFunction det(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        RationalFunction t = m(0, j) * minor_det(0, j);
        det += (j % 2 == 0) ? t : -t;
    }
    Mat<RationalFunction> inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            RationalFunction c = minor_det(j, i);
            inv(i, j) = ((i + j) % 2 == 0 ? c : -c) / det;
        }
    return inv;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
    CHECK((q - qi) * (q + qi) == LaurentPoly::q_pow(2) - LaurentPoly::q_pow(-2));
    CHECK(q + LaurentPoly() == q);
    CHECK(pow(q - qi, 2) == LaurentPoly::q_pow(2) - LaurentPoly(2) + LaurentPoly::q_pow(-2));
    CHECK((q - q).is_zero());
    CHECK((q * qi).is_one());
    CHECK((LaurentPoly::q_pow(3) + LaurentPoly(2)).to_string() == "q^3 + 2");
}

TEST_CASE("laurent gcd and exact division") {
    const LaurentPoly a = (q - 1) * (q + 2) * LaurentPoly::q_pow(-3);
    const LaurentPoly b = (q - 1) * (q * q + 1);
    CHECK(gcd(a, b) == q - 1);
    CHECK(divide_exact(a, q - 1) == (q + 2) * LaurentPoly::q_pow(-3));
    CHECK(!divide_exact(b, q + 2).has_value());
}

TEST_CASE("rational function canonical form") {
    const RationalFunction r = RationalFunction(q - qi);
    const RationalFunction inv = RationalFunction(1) / r;
    CHECK(inv.den() == q * q - 1);
    CHECK(inv.num() == q);
    const RationalFunction red(q * q - 1, q - 1);
    CHECK(red == RationalFunction(q + 1));
    const RationalFunction a(LaurentPoly::q_pow(3) + 2, q - 5);
    CHECK(a * a.inverse() == RationalFunction(1));
    CHECK_THROWS_AS(RationalFunction(q, LaurentPoly()), DivisionByZero);
    CHECK_THROWS_AS(RationalFunction(0).inverse(), DivisionByZero);
    // den monic with positive leading coefficient, q-powers absorbed
    const RationalFunction b(LaurentPoly(3), LaurentPoly(-2) * LaurentPoly::q_pow(2) + LaurentPoly::q_pow(-1));
    CHECK(b.den().leading() == 1);
    CHECK(b.den().low() == 0);
}

TEST_CASE("evaluate_at") {
    const RationalFunction r(q - qi);
    CHECK(r.evaluate_at(BigRational(10)) == BigRational(99, 10));
    CHECK(RationalFunction(7).evaluate_at(BigRational(3, 4)) == 7);
    // canonical form cancels q - 1 before evaluation
    const RationalFunction red(q * q - 1, q - 1);
    CHECK(red.evaluate_at(BigRational(1)) == 2);
    CHECK_THROWS_AS(RationalFunction(LaurentPoly(1), q - 1).evaluate_at(BigRational(1)), PoleAtPoint);
}

TEST_CASE("ring axioms and evaluation homomorphism on random inputs") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const RationalFunction a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalFunction(0));
        const BigRational q0(3 + trial, 7);
        try {
            const BigRational fa = a.evaluate_at(q0), fb = b.evaluate_at(q0);
            CHECK((a * b).evaluate_at(q0) == fa * fb);
            CHECK((a + b).evaluate_at(q0) == fa + fb);
        } catch (const PoleAtPoint&) {
        }
        const LaurentPoly x = random_laurent(rng), y = random_laurent(rng), z = random_laurent(rng);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("int laurent and mod p") {
    const IntLaurent a = IntLaurent::monomial(2, -1) + IntLaurent(3);
    const IntLaurent b = IntLaurent::monomial(1, 1) - IntLaurent(1);
    CHECK((a * b).to_laurent() == a.to_laurent() * b.to_laurent());
    CHECK((a - a).is_zero());
    const ModP x(-5), y(7);
    CHECK((x * y).symmetric() == -35);
    CHECK((x / y) * y == x);
    CHECK_THROWS_AS(ModP(0).inverse(), DivisionByZero);
    CHECK(to_modp(BigRational(1, 3)) * ModP(3) == ModP(1));
}

TEST_CASE("qfield lifting agrees across scalar types") {
    const LaurentPoly p = LaurentPoly::q_pow(3) - LaurentPoly(BigRational(1, 2)) + LaurentPoly::q_pow(-2) * BigRational(4);
    const QField<BigRational> fq(BigRational(10));
    const QField<RationalFunction> fs = QField<RationalFunction>::symbolic();
    CHECK(fq.lift(p) == p.evaluate(BigRational(10)));
    CHECK(fs.lift(p).evaluate_at(BigRational(10)) == fq.lift(p));
    CHECK(fq.r() == BigRational(99, 10));
    const QField<ModP> fm(ModP(10));
    CHECK(fm.lift(p) == to_modp(p.evaluate(BigRational(10))));
}

TEST_CASE("ratfunc_matrix_solve") {
    SUBCASE("identity") {
        Mat<RationalFunction> m = Mat<RationalFunction>::Identity(3, 3);
        Vec<RationalFunction> b(3);
        b << RationalFunction(q), RationalFunction(2), RationalFunction(q - qi);
        CHECK(ratfunc_matrix_solve(m, b) == b);
    }
    SUBCASE("scalar inverse") {
        Mat<RationalFunction> m(1, 1);
        m(0, 0) = -RationalFunction(1) / RationalFunction(q - qi);
        Vec<RationalFunction> b(1);
        b(0) = RationalFunction(1);
        CHECK(ratfunc_matrix_solve(m, b)(0) == -RationalFunction(q - qi));
    }
    SUBCASE("two-letter pairing matrix against adjugate") {
        // <F_ab, E_cd> for the span {12, 21}, worked out by hand from the
        // recursive pairing: (1/r^2) [[1, 1/q], [1/q, 1]].
        const RationalFunction r2 = RationalFunction(q - qi) * RationalFunction(q - qi);
        Mat<RationalFunction> m(2, 2);
        m << RationalFunction(1) / r2, RationalFunction(qi) / r2, RationalFunction(qi) / r2, RationalFunction(1) / r2;
        Vec<RationalFunction> e1(2);
        e1 << RationalFunction(1), RationalFunction(0);
        const Vec<RationalFunction> x = ratfunc_matrix_solve(m, e1);
        const Mat<RationalFunction> inv = adjugate_inverse(m);
        CHECK(x(0) == inv(0, 0));
        CHECK(x(1) == inv(1, 0));
    }
    SUBCASE("random small systems against adjugate") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + trial % 3;
            Mat<RationalFunction> m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = random_ratfunc(rng);
            Vec<RationalFunction> b(n);
            for (int i = 0; i < n; ++i) b(i) = random_ratfunc(rng);
            if (determinant<RationalFunction>(m).is_zero()) {
                CHECK_THROWS_AS(ratfunc_matrix_solve(m, b), SingularMatrix);
                continue;
            }
            const Vec<RationalFunction> x = ratfunc_matrix_solve(m, b);
            const Mat<RationalFunction> inv = adjugate_inverse(m);
            for (int i = 0; i < n; ++i) {
                RationalFunction expect(0);
                for (int j = 0; j < n; ++j) expect += inv(i, j) * b(j);
                CHECK(x(i) == expect);
            }
            CHECK(solve<RationalFunction>(m, b) == x);
        }
    }
    SUBCASE("singular") {
        Mat<RationalFunction> m(2, 2);
        m << RationalFunction(q), RationalFunction(1), RationalFunction(q * q), RationalFunction(q);
        Vec<RationalFunction> b(2);
        b << RationalFunction(1), RationalFunction(0);
        CHECK_THROWS_AS(ratfunc_matrix_solve(m, b), SingularMatrix);
        CHECK(rank<RationalFunction>(m) == 1);
        const Mat<RationalFunction> ns = nullspace<RationalFunction>(m);
        REQUIRE(ns.cols() == 1);
        CHECK(m(0, 0) * ns(0, 0) + m(0, 1) * ns(1, 0) == RationalFunction(0));
    }
}

TEST_CASE("rational linear algebra") {
    Mat<BigRational> a(3, 3);
    a << 1, 2, 3, 4, 5, 6, 7, 8, 10;
    const Mat<BigRational> inv = inverse<BigRational>(a);
    CHECK((a * inv - Mat<BigRational>::Identity(3, 3)).isZero());
    CHECK(determinant<BigRational>(a) == -3);
    a(2, 2) = 9;
    CHECK(rank<BigRational>(a) == 2);
    CHECK_THROWS_AS(inverse<BigRational>(a), SingularMatrix);
}

TEST_CASE("sparse matrices") {
    SparseMatrix<BigRational> a(2, 2), b(2, 2);
    a.set(0, 1, 1);
    b.set(1, 0, 1);
    CHECK((a * b).get(0, 0) == 1);
    CHECK((a * b).nonzeros() == 1);
    CHECK(kron(a, b).get(1, 2) == 1);
    CHECK(SparseMatrix<BigRational>::from_dense(a.to_dense()) == a);
}

TEST_CASE("laurent interpolation mod p") {
    const LaurentPoly p = LaurentPoly::q_pow(7) * BigRational(3) - LaurentPoly::q_pow(-4) + LaurentPoly(BigRational(5, 2));
    std::vector<ModP> xs, ys;
    for (int k = 0; k < 21; ++k) {
        const ModP x(1000 + 37 * k);
        xs.push_back(x);
        ys.push_back(QField<ModP>(x).lift(p));
    }
    const auto c = interpolate_laurent_mod_p(-10, 10, xs, ys);
    const auto back = reconstruct_laurent(-10, c);
    REQUIRE(back.has_value());
    CHECK(*back == p);
}

TEST_CASE("json round trip") {
    const RationalFunction f(LaurentPoly::q_pow(-2) * BigRational(3, 4) + q, q * q + 1);
    const Json j = to_json(f);
    CHECK(ratfunc_from_json(j) == f);
    CHECK(to_json(LaurentPoly::q_pow(-1) - q).dump() == R"({"-1":"1","1":"-1"})");
    CHECK(parse_rational("-3/6") == BigRational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
