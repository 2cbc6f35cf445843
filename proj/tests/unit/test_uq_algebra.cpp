#include <doctest.h>

#include <dasep/errors.hpp>
#include <dasep/uq/pairing.hpp>
#include <dasep/uq/representation.hpp>

#include <random>

using namespace dasep;

namespace {

using RF = RationalFunction;

RF qp(int e) { return RF(LaurentPoly::q_pow(e)); }
RF r() { return qp(1) - qp(-1); }

// Independent oracle built only from the generator pairings, the counit,
// the coproduct and the two recursive rules
//   <y, x x'> = <Delta(y), x' (x) x>,   <y y', x> = <y (x) y', Delta(x)>.
struct Oracle {
    int n;

    static bool only_k(const Word& w) {
        for (const Letter& l : w)
            if (l.kind != Gen::K) return false;
        return true;
    }

    RF letters(const Letter& y, const Letter& x) const {
        if (y.kind == Gen::F && x.kind == Gen::E) return y.index == x.index ? RF(-1) / r() : RF(0);
        if (y.kind == Gen::K && x.kind == Gen::K) return qp(-y.power * x.power * root_inner(y.index, x.index, n));
        return RF(0);
    }

    RF operator()(const Word& y, const Word& x) const {
        if (x.empty()) return only_k(y) ? RF(1) : RF(0);
        if (y.empty()) return only_k(x) ? RF(1) : RF(0);
        if (x.size() == 1 && y.size() == 1) return letters(y[0], x[0]);
        if (x.size() >= 2) {
            const Word head{x[0]};
            const Word tail(x.begin() + 1, x.end());
            const auto dy = coproduct(AlgebraElement<RF>::of(y));
            RF total(0);
            for (const auto& [k, c] : dy.terms()) {
                const RF a = (*this)(k.first, tail);
                if (a.is_zero()) continue;
                total = total + c * a * (*this)(k.second, head);
            }
            return total;
        }
        const Word head{y[0]};
        const Word tail(y.begin() + 1, y.end());
        const auto dx = coproduct(AlgebraElement<RF>::of(x));
        RF total(0);
        for (const auto& [k, c] : dx.terms()) {
            const RF a = (*this)(head, k.first);
            if (a.is_zero()) continue;
            total = total + c * a * (*this)(tail, k.second);
        }
        return total;
    }
};

Word random_word(std::mt19937& rng, int n, Gen side, int len, bool with_k) {
    std::uniform_int_distribution<int> idx(1, n), coin(0, 3), pw(-2, 2);
    Word w;
    for (int i = 0; i < len; ++i) {
        if (with_k && coin(rng) == 0) {
            int p = pw(rng);
            if (p == 0) p = 1;
            w.push_back(Letter::K(idx(rng), p));
        } else {
            w.push_back(side == Gen::E ? Letter::E(idx(rng)) : Letter::F(idx(rng)));
        }
    }
    return w;
}

}  // namespace

TEST_CASE("coproduct of generators and products") {
    const auto d_e = coproduct(AlgebraElement<RF>::of({Letter::E(1)}));
    CHECK(d_e.size() == 2);
    CHECK(d_e.terms().count({Word{Letter::E(1)}, Word{}}) == 1);
    CHECK(d_e.terms().count({Word{Letter::K(1)}, Word{Letter::E(1)}}) == 1);
    const auto d_k = coproduct(AlgebraElement<RF>::of({Letter::K(1)}));
    CHECK(d_k.size() == 1);
    CHECK(d_k.terms().count({Word{Letter::K(1)}, Word{Letter::K(1)}}) == 1);
    const auto d_ff = coproduct(AlgebraElement<RF>::of(f_word({1, 2})));
    CHECK(d_ff.size() == 4);
    CHECK(d_ff.terms().count({Word{Letter::F(1)}, Word{Letter::K(1, -1), Letter::F(2)}}) == 1);
}

TEST_CASE("word text form") {
    CHECK(to_string(Word{Letter::E(3), Letter::K(2, -1)}) == "E3 K2^-1");
    CHECK(parse_letter("K2^-1") == Letter::K(2, -1));
    CHECK(parse_letter("F5") == Letter::F(5));
    CHECK_THROWS_AS(parse_letter("E2^3"), ParseError);
    CHECK_THROWS_AS(parse_letter("X1"), ParseError);
    CHECK_THROWS_AS(parse_letter("K1^0"), ParseError);
    const Word w{Letter::F(2), Letter::K(5, -1), Letter::E(4)};
    CHECK(word_from_json(word_to_json(w)) == w);
}

TEST_CASE("fundamental representation arrows") {
    const Representation rep(5);
    const auto col = [&](const Word& w, int k) {
        const auto m = rep.word(w);
        const int c = weight_coordinate(k, 5) - 1;
        std::vector<std::pair<int, std::int64_t>> out;
        for (int i = 0; i < m.rows(); ++i) {
            const IntLaurent v = m.get(i, c);
            if (!v.is_zero()) out.emplace_back(vector_at_coordinate(i + 1, 5), v.coeff(0));
        }
        return out;
    };
    using V = std::vector<std::pair<int, std::int64_t>>;
    CHECK(col({Letter::F(1)}, 1) == V{{2, 1}});
    CHECK(col({Letter::E(5)}, 6) == V{{4, 1}});
    CHECK(col({Letter::E(5)}, 7) == V{{5, -1}});
}

TEST_CASE("coproduct is a homomorphism in the tensor square") {
    std::mt19937 rng(11);
    const auto field = QField<RF>::symbolic();
    for (int n : {2, 3, 4}) {
        const Representation rep(n);
        for (int trial = 0; trial < 6; ++trial) {
            AlgebraElement<RF> x;
            for (int t = 0; t < 2; ++t) {
                Word w = random_word(rng, n, trial % 2 ? Gen::E : Gen::F, 3, true);
                if (t == 1) w.push_back(Letter::E(1 + trial % n));
                x.add(w, qp(t + 1) + RF(trial));
            }
            CHECK(rep.evaluate_tensor(coproduct(x), field) == rep.evaluate_coproduct(x, field));
        }
    }
}

TEST_CASE("coproduct respects the algebra relations") {
    // (rho (x) rho)(Delta) of [E_i, F_i] equals that of (K_i - K_i^{-1}) / r
    const auto field = QField<RF>::symbolic();
    for (int n : {2, 3, 4}) {
        const Representation rep(n);
        for (int i = 1; i <= n; ++i) {
            AlgebraElement<RF> lhs, rhs;
            lhs.add({Letter::E(i), Letter::F(i)}, RF(1));
            lhs.add({Letter::F(i), Letter::E(i)}, RF(-1));
            rhs.add({Letter::K(i)}, RF(1) / r());
            rhs.add({Letter::K(i, -1)}, RF(-1) / r());
            CHECK(rep.evaluate_coproduct(lhs, field) == rep.evaluate_coproduct(rhs, field));
        }
    }
}

TEST_CASE("generator pairings") {
    const auto field = QField<RF>::symbolic();
    PairingTable table(5);
    const auto one = [](Word w) { return AlgebraElement<RF>::of(std::move(w)); };
    CHECK(pairing(one({Letter::F(1)}), one({Letter::E(1)}), table, field) == RF(-1) / r());
    CHECK(pairing(one({Letter::F(1)}), one({Letter::E(2)}), table, field) == RF(0));
    CHECK(pairing(one({Letter::K(1)}), one({Letter::K(2)}), table, field) == qp(1));
    CHECK(pairing(one({Letter::K(1)}), one({Letter::K(1)}), table, field) == qp(-2));
    CHECK(pairing(one({}), one({}), table, field) == RF(1));
    CHECK_THROWS_AS(pairing(one({Letter::E(1)}), one({Letter::E(1)}), table, field), MixedBorelInput);
    CHECK_THROWS_AS(pairing(one({Letter::F(1)}), one({Letter::F(1)}), table, field), MixedBorelInput);
}

TEST_CASE("two-letter pairing by hand") {
    // <F1 F2, E2 E1> = <Delta(F1 F2), E1 (x) E2>. Of the four terms of Delta(F1 F2)
    // only F1 (x) K1^{-1} F2 survives: <F1, E1> <K1^{-1} (x) F2, Delta(E2)>
    // = (-1/r) q^{-1} (-1/r) = q^{-1} / r^2.
    const auto field = QField<RF>::symbolic();
    PairingTable table(3);
    const RF v = pairing(AlgebraElement<RF>::of(f_word({1, 2})), AlgebraElement<RF>::of(e_word({2, 1})), table, field);
    CHECK(v == qp(-1) / (r() * r()));
    CHECK(v == Oracle{3}(f_word({1, 2}), e_word({2, 1})));
    // <F1 F1, E1 E1> = <F1, E1> <K1^{-1} F1 + F1 K1^{-1}, E1> = (1 + q^2) / r^2
    PairingTable t2(2);
    CHECK(pairing(AlgebraElement<RF>::of(f_word({1, 1})), AlgebraElement<RF>::of(e_word({1, 1})), t2, field) ==
          (RF(1) + qp(2)) / (r() * r()));
    CHECK(Oracle{2}(f_word({1, 1}), e_word({1, 1})) == (RF(1) + qp(2)) / (r() * r()));
}

TEST_CASE("pairing agrees with the coproduct recursion oracle") {
    std::mt19937 rng(5);
    const auto field = QField<RF>::symbolic();
    for (int n : {2, 3, 4}) {
        PairingTable table(n);
        const Oracle oracle{n};
        for (int trial = 0; trial < 40; ++trial) {
            const int len = 1 + trial % 4;
            const Word y = random_word(rng, n, Gen::F, len, trial % 3 != 0);
            Word x = random_word(rng, n, Gen::E, len, trial % 3 != 0);
            // bias towards nonzero values by permuting the F indices into x
            if (trial % 2 == 0) {
                std::vector<int> ids;
                for (const Letter& l : y)
                    if (l.kind == Gen::F) ids.push_back(l.index);
                std::shuffle(ids.begin(), ids.end(), rng);
                std::size_t k = 0;
                for (Letter& l : x)
                    if (l.kind == Gen::E && k < ids.size()) l.index = ids[k++];
            }
            CAPTURE(to_string(y));
            CAPTURE(to_string(x));
            CHECK(pairing(AlgebraElement<RF>::of(y), AlgebraElement<RF>::of(x), table, field) == oracle(y, x));
        }
    }
}

TEST_CASE("pairing is bilinear") {
    std::mt19937 rng(17);
    const auto field = QField<RF>::symbolic();
    PairingTable table(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Word> ys, xs;
        for (int i = 0; i < 3; ++i) {
            ys.push_back(random_word(rng, 3, Gen::F, 3, true));
            xs.push_back(random_word(rng, 3, Gen::E, 3, true));
        }
        AlgebraElement<RF> y, x;
        std::vector<RF> a, b;
        for (int i = 0; i < 3; ++i) {
            a.push_back(qp(i) + RF(trial));
            b.push_back(qp(-i) - RF(2));
            y.add(ys[i], a.back());
            x.add(xs[i], b.back());
        }
        RF expect(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                expect = expect + a[i] * b[j] *
                                      pairing(AlgebraElement<RF>::of(ys[i]), AlgebraElement<RF>::of(xs[j]), table, field);
        CHECK(pairing(y, x, table, field) == expect);
        CHECK(pairing(y, x * AlgebraElement<RF>::one(), table, field) == pairing(y, x, table, field));
    }
}

TEST_CASE("pairing in other scalar fields agrees with the symbolic value") {
    PairingTable table(4);
    const auto sym = QField<RF>::symbolic();
    const QField<BigRational> rat(BigRational(3, 2));
    const QField<ModP> mp(ModP(123456789));
    const Word y = f_word({3, 4, 2, 3});
    const Word x = e_word({2, 3, 3, 4});
    const RF v = pairing(AlgebraElement<RF>::of(y), AlgebraElement<RF>::of(x), table, sym);
    CHECK(!v.is_zero());
    CHECK(pairing(AlgebraElement<BigRational>::of(y), AlgebraElement<BigRational>::of(x), table, rat) ==
          v.evaluate_at(BigRational(3, 2)));
    CHECK(pairing(AlgebraElement<ModP>::of(y), AlgebraElement<ModP>::of(x), table, mp) == mp.lift(v));
}

TEST_CASE("algebra element json") {
    AlgebraElement<RF> x;
    x.add({Letter::F(4), Letter::K(5, -1), Letter::E(4)}, r() * r());
    const Json j = to_json(x);
    CHECK(j.size() == 1);
    CHECK(j[0]["word"] == Json::array({"F4", "K5^-1", "E4"}));
}
