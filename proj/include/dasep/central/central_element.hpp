#pragma once

// The central element C = sum_{mu >= lambda} q^{(mu - lambda, mu)} q^{(-2rho, mu)}
// e*_{mu lambda} K_{-mu-lambda} f*_{lambda mu}.
//
// Everything that does not depend on q (paths, bases, integer pairing
// matrices) lives in a CentralPlan; instantiate() turns a plan into
// coefficients in a chosen scalar type.

#include <dasep/errors.hpp>
#include <dasep/exact/linear_algebra.hpp>
#include <dasep/uq/pairing.hpp>
#include <dasep/uq/representation.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace dasep {

using IndexWord = std::vector<int>;

/// e = e_sign * E_{e_letters} sends v_lambda to +v_mu; f = f_sign * F_{f_letters}
/// sends v_mu to +v_lambda. f_letters is e_letters reversed.
struct PathWords {
    IndexWord e_letters;
    IndexWord f_letters;
    int e_sign = 1;
    int f_sign = 1;

    Word e_word() const { return dasep::e_word(e_letters); }
    Word f_word() const { return dasep::f_word(f_letters); }
};

/// Which way a path crosses the fork at v_n / v_{n+1}.
enum class ForkRoute { through_n, through_n_plus_1 };

/// Walk from v_lambda up to v_mu. With through_n, E_n is tried before
/// E_1..E_{n-1} at each node; otherwise it is tried last.
/// nullopt when v_mu is not reachable (for example (L_n, -L_n)).
std::optional<PathWords> path_words(const WeightLabel& mu, const WeightLabel& lam, int n,
                                    FnSign fn_sign = FnSign::transpose, ForkRoute route = ForkRoute::through_n);

/// Distinct rearrangements: the input first, then the rest in lexicographic order.
std::vector<IndexWord> permutation_span(const IndexWord& w);
std::vector<Word> permutation_span(const Word& w);

/// Number of ways to write beta as a sum of positive roots of so(2n), i.e.
/// the dimension of the weight space U^+_beta.
std::int64_t kostant_partition(const LVector& beta, int n);

/// A basis of U^+_beta made of rearrangements of one word, with the integer
/// pairing cores P_ij = P(words[i], words[j]); the pairing matrix is
/// (-1/r)^k P.
struct DualBasis {
    std::vector<IndexWord> words;
    std::vector<std::vector<IntLaurent>> core;
    std::size_t span_size = 0;
};

/// Greedy selection along permutation_span order: a word is kept when the
/// enlarged principal block of P stays invertible. The rank test runs mod p
/// at a fixed q0, which is sufficient for invertibility over Q(q). Throws
/// SingularAfterExhaustion if the span runs out before the Kostant dimension.
DualBasis select_basis(const IndexWord& word, int n, PairingTable& exact);
/// Same, over an explicit candidate order whose first entry is the path word.
DualBasis select_basis_from(const std::vector<IndexWord>& candidates, int n, PairingTable& exact);

struct PairPlan {
    WeightLabel mu, lam;
    int coeff_exponent = 0;  // (mu - lambda, mu) + (-2rho, mu)
    CartanExponents k;       // K_{-mu-lambda}
    std::optional<PathWords> path;  // empty on the diagonal
    DualBasis e_basis, f_basis;

    bool diagonal() const { return !path.has_value(); }
};

struct CentralPlan {
    int n = 0;
    FnSign fn_sign = FnSign::transpose;
    std::vector<PairPlan> pairs;
};

/// All pairs mu >= lambda that contribute, in order of (pos mu, pos lambda).
CentralPlan plan_central(int n, FnSign fn_sign = FnSign::transpose, ForkRoute route = ForkRoute::through_n);

/// One summand coeff * e_star * K * f_star.
template <class S>
struct CentralTerm {
    S coeff;
    AlgebraElement<S> e_star;  // F-words
    Word k;
    AlgebraElement<S> f_star;  // E-words
};

/// x with a x = b (transpose = false) or a^T x = b, a lifted from integer cores.
template <class S>
Vec<S> solve_core(const std::vector<std::vector<IntLaurent>>& core, bool transpose, const QField<S>& field) {
    const auto m = static_cast<Eigen::Index>(core.size());
    Mat<S> a(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            const IntLaurent& v = core[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            (transpose ? a(j, i) : a(i, j)) = field.lift(v);
        }
    Vec<S> rhs = Vec<S>::Zero(m);
    rhs(0) = S(1);
    if constexpr (std::is_same_v<S, RationalFunction>) return ratfunc_matrix_solve(a, rhs);
    else return solve(a, rhs);
}

/// e* and f* for one pair: <e*, E_{u_j}> = e_sign delta_{1j}, <F_{u_i}, f*> = f_sign delta_{1i}.
template <class S>
std::pair<AlgebraElement<S>, AlgebraElement<S>> dual_elements(const PairPlan& p, const QField<S>& field) {
    if (p.diagonal()) return {AlgebraElement<S>::one(), AlgebraElement<S>::one()};
    const int len = static_cast<int>(p.path->e_letters.size());
    // M = (-1/r)^k P, so M^{-1} = (-r)^k P^{-1}
    S scale(1);
    for (int i = 0; i < len; ++i) scale = scale * (-field.r());
    AlgebraElement<S> e_star, f_star;
    const Vec<S> y = solve_core(p.e_basis.core, true, field);
    for (std::size_t i = 0; i < p.e_basis.words.size(); ++i)
        e_star.add(f_word(p.e_basis.words[i]), S(p.path->e_sign) * scale * y(static_cast<Eigen::Index>(i)));
    const Vec<S> z = solve_core(p.f_basis.core, false, field);
    for (std::size_t j = 0; j < p.f_basis.words.size(); ++j)
        f_star.add(e_word(p.f_basis.words[j]), S(p.path->f_sign) * scale * z(static_cast<Eigen::Index>(j)));
    return {std::move(e_star), std::move(f_star)};
}

template <class S>
CentralTerm<S> instantiate(const PairPlan& p, const QField<S>& field) {
    auto [e, f] = dual_elements(p, field);
    return {field.power(p.coeff_exponent), std::move(e), k_word(p.k), std::move(f)};
}

template <class S>
std::vector<CentralTerm<S>> instantiate(const CentralPlan& plan, const QField<S>& field) {
    std::vector<CentralTerm<S>> out;
    out.reserve(plan.pairs.size());
    for (const PairPlan& p : plan.pairs) out.push_back(instantiate(p, field));
    return out;
}

/// The central element as a single linear combination of words.
template <class S>
AlgebraElement<S> expanded(const std::vector<CentralTerm<S>>& terms) {
    AlgebraElement<S> c;
    for (const auto& t : terms) c += t.coeff * (t.e_star * AlgebraElement<S>::of(t.k) * t.f_star);
    return c;
}

/// rho(C), evaluated factor by factor.
template <class S>
SparseMatrix<S> represent(const std::vector<CentralTerm<S>>& terms, const Representation& rep, const QField<S>& field) {
    SparseMatrix<S> out(rep.dim(), rep.dim());
    for (const auto& t : terms) {
        const SparseMatrix<S> m =
            rep.evaluate(t.e_star, field) * lift(rep.word(t.k), field) * rep.evaluate(t.f_star, field);
        out.add_scaled(m, t.coeff);
    }
    return out;
}

/// (rho (x) rho)(Delta(C)), evaluated factor by factor.
template <class S>
SparseMatrix<S> represent_tensor(const std::vector<CentralTerm<S>>& terms, const Representation& rep,
                                 const QField<S>& field) {
    const int d = rep.dim() * rep.dim();
    SparseMatrix<S> out(d, d);
    for (const auto& t : terms) {
        const SparseMatrix<S> m = rep.evaluate_coproduct(t.e_star, field) * lift(rep.tensor_word(t.k), field) *
                                  rep.evaluate_coproduct(t.f_star, field);
        out.add_scaled(m, t.coeff);
    }
    return out;
}

/// The s with m = s * Id; throws NotScalar naming the first deviating entry.
template <class S>
S scalar_of(const SparseMatrix<S>& m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw NotScalar("matrix is not square");
    const S s = m.get(0, 0);
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            if (i != j || !(v == s))
                throw NotScalar("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " + scalar_to_string(v));
    for (int i = 0; i < m.rows(); ++i)
        if (!(m.get(i, i) == s)) throw NotScalar("diagonal entry " + std::to_string(i) + " differs");
    return s;
}

template <class S>
S verify_scalar_action(const AlgebraElement<S>& c, const Representation& rep, const QField<S>& field) {
    return scalar_of(rep.evaluate(c, field));
}

/// [tensor image of C, tensor image of g] = 0 for every generator g.
template <class S>
bool commutes_with_generators(const SparseMatrix<S>& tensor_c, const Representation& rep, const QField<S>& field) {
    for (int i = 1; i <= rep.n(); ++i)
        for (const Letter& g : {Letter::E(i), Letter::F(i), Letter::K(i)}) {
            const SparseMatrix<S> mg = lift(rep.tensor_letter(g), field);
            if (tensor_c * mg != mg * tensor_c) return false;
        }
    return true;
}

template <class S>
bool verify_centrality(const AlgebraElement<S>& c, const Representation& rep, const QField<S>& field) {
    return commutes_with_generators(rep.evaluate_coproduct(c, field), rep, field);
}

}  // namespace dasep
