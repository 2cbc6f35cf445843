#include <dasep/uq/representation.hpp>

#include <dasep/errors.hpp>

namespace dasep {

namespace {

LaurentMatrix from_integer_matrix(const Eigen::MatrixXi& m) {
    LaurentMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out.set(i, j, IntLaurent(m(i, j)));
    return out;
}

}  // namespace

Representation::Representation(int n, FnSign fn_sign) : n_(n), fn_sign_(fn_sign), mats_(fundamental_matrices(n, fn_sign)) {}

LaurentMatrix Representation::letter(const Letter& l) const {
    if (l.index < 1 || l.index > n_) throw InvalidParams("generator index out of range: " + l.to_string());
    switch (l.kind) {
        case Gen::E: return from_integer_matrix(mats_.E[static_cast<std::size_t>(l.index)]);
        case Gen::F: return from_integer_matrix(mats_.F[static_cast<std::size_t>(l.index)]);
        case Gen::K: break;
    }
    LaurentMatrix k(dim(), dim());
    const auto& h = mats_.H[static_cast<std::size_t>(l.index)];
    for (int a = 0; a < dim(); ++a) k.set(a, a, IntLaurent::monomial(1, l.power * h(a, a)));
    return k;
}

LaurentMatrix Representation::word(const Word& w) const {
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->word.find(w); it != cache_->word.end()) return it->second;
    }
    LaurentMatrix m = LaurentMatrix::identity(dim());
    for (const Letter& l : w) m = m * letter(l);
    std::lock_guard lock(cache_->mutex);
    return cache_->word.emplace(w, std::move(m)).first->second;
}

LaurentMatrix Representation::tensor_letter(const Letter& l) const {
    const LaurentMatrix id = LaurentMatrix::identity(dim());
    switch (l.kind) {
        case Gen::E: return kron(letter(l), id) + kron(letter(Letter::K(l.index)), letter(l));
        case Gen::F: return kron(id, letter(l)) + kron(letter(l), letter(Letter::K(l.index, -1)));
        case Gen::K: break;
    }
    return kron(letter(l), letter(l));
}

LaurentMatrix Representation::tensor_word(const Word& w) const {
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->tensor.find(w); it != cache_->tensor.end()) return it->second;
    }
    LaurentMatrix m = LaurentMatrix::identity(dim() * dim());
    for (const Letter& l : w) m = m * tensor_letter(l);
    std::lock_guard lock(cache_->mutex);
    return cache_->tensor.emplace(w, std::move(m)).first->second;
}

}  // namespace dasep
