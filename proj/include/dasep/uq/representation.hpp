#pragma once

// The fundamental representation rho on C^{2n} and (rho (x) rho) o Delta on
// C^{2n} (x) C^{2n}. Word matrices have integer Laurent entries and are
// independent of q; they are lifted into a scalar field on evaluation.

#include <dasep/exact/sparse.hpp>
#include <dasep/uq/word.hpp>

#include <map>
#include <memory>
#include <mutex>

namespace dasep {

using LaurentMatrix = SparseMatrix<IntLaurent>;

template <class S>
SparseMatrix<S> lift(const LaurentMatrix& m, const QField<S>& field) {
    return m.map([&](const IntLaurent& p) { return field.lift(p); });
}

class Representation {
public:
    explicit Representation(int n, FnSign fn_sign = FnSign::transpose);

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    FnSign fn_sign() const { return fn_sign_; }
    const FundamentalMatrices& matrices() const { return mats_; }

    /// rho(letter).
    LaurentMatrix letter(const Letter& l) const;
    /// rho(w), the product of letter matrices. Cached.
    LaurentMatrix word(const Word& w) const;
    /// (rho (x) rho)(Delta(letter)); the tensor index of e_a (x) e_b is a*2n + b.
    LaurentMatrix tensor_letter(const Letter& l) const;
    /// Cached.
    LaurentMatrix tensor_word(const Word& w) const;

    template <class S>
    SparseMatrix<S> evaluate(const AlgebraElement<S>& x, const QField<S>& field) const {
        SparseMatrix<S> out(dim(), dim());
        for (const auto& [w, c] : x.terms()) out.add_scaled(lift(word(w), field), c);
        return out;
    }

    /// sum c * rho(w1) (x) rho(w2).
    template <class S>
    SparseMatrix<S> evaluate_tensor(const TensorElement<S>& t, const QField<S>& field) const {
        SparseMatrix<S> out(dim() * dim(), dim() * dim());
        for (const auto& [k, c] : t.terms()) out.add_scaled(lift(kron(word(k.first), word(k.second)), field), c);
        return out;
    }

    /// (rho (x) rho)(Delta(x)) computed letter by letter.
    template <class S>
    SparseMatrix<S> evaluate_coproduct(const AlgebraElement<S>& x, const QField<S>& field) const {
        SparseMatrix<S> out(dim() * dim(), dim() * dim());
        for (const auto& [w, c] : x.terms()) out.add_scaled(lift(tensor_word(w), field), c);
        return out;
    }

private:
    int n_;
    FnSign fn_sign_;
    FundamentalMatrices mats_;

    struct Cache {
        std::mutex mutex;
        std::map<Word, LaurentMatrix> word, tensor;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace dasep
