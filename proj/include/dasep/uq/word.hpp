#pragma once

// Free words in the generators E_i, F_i, K_i^{+-p} of U_q(so(2n)), their
// linear combinations, and the coproduct.

#include <dasep/exact/json_io.hpp>
#include <dasep/exact/scalar.hpp>
#include <dasep/lie/lie_data.hpp>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dasep {

enum class Gen : unsigned char { E, F, K };

struct Letter {
    Gen kind = Gen::E;
    int index = 1;
    int power = 1;  // only meaningful for K; always 1 for E and F

    static Letter E(int i) { return {Gen::E, i, 1}; }
    static Letter F(int i) { return {Gen::F, i, 1}; }
    static Letter K(int i, int p = 1) { return {Gen::K, i, p}; }

    std::string to_string() const;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word e_word(const std::vector<int>& indices);
Word f_word(const std::vector<int>& indices);
/// One K letter per nonzero exponent, in index order.
Word k_word(const CartanExponents& c);
/// Indices of a word made of E letters only (or F letters only).
std::vector<int> letter_indices(const Word& w);

std::string to_string(const Word& w);
/// Parses "E3", "F5", "K2", "K2^-1". Throws ParseError.
Letter parse_letter(const std::string& s);

/// Finite linear combination of words. No stored zero coefficients.
template <class S>
class AlgebraElement {
public:
    using Terms = std::map<Word, S>;

    AlgebraElement() = default;
    static AlgebraElement one() { return of(Word{}); }
    static AlgebraElement of(Word w, S c = S(1)) {
        AlgebraElement x;
        x.add(std::move(w), std::move(c));
        return x;
    }

    void add(const Word& w, const S& c) {
        if (dasep::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second = it->second + c;
            if (dasep::is_zero(it->second)) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    friend AlgebraElement operator*(const S& c, const AlgebraElement& a) {
        AlgebraElement out;
        for (const auto& [w, x] : a.terms_) out.add(w, c * x);
        return out;
    }

    /// Product of free words: concatenation, bilinearly.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out.add(w, ca * cb);
            }
        return out;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

template <class S>
bool is_zero(const AlgebraElement<S>& x) {
    return x.is_zero();
}

/// Finite linear combination of pairs of words, read as w1 (x) w2.
template <class S>
class TensorElement {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, S>;

    void add(const Key& k, const S& c) {
        if (dasep::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (dasep::is_zero(it->second)) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        TensorElement out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Key k = ka;
                k.first.insert(k.first.end(), kb.first.begin(), kb.first.end());
                k.second.insert(k.second.end(), kb.second.begin(), kb.second.end());
                out.add(k, ca * cb);
            }
        return out;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Delta of one generator: E -> E(x)1 + K(x)E, F -> 1(x)F + F(x)K^{-1},
/// K^p -> K^p (x) K^p.
template <class S>
TensorElement<S> coproduct(const Letter& l) {
    TensorElement<S> t;
    switch (l.kind) {
        case Gen::E:
            t.add({{l}, {}}, S(1));
            t.add({{Letter::K(l.index)}, {l}}, S(1));
            break;
        case Gen::F:
            t.add({{}, {l}}, S(1));
            t.add({{l}, {Letter::K(l.index, -1)}}, S(1));
            break;
        case Gen::K:
            t.add({{l}, {l}}, S(1));
            break;
    }
    return t;
}

/// Delta extended multiplicatively and linearly, fully expanded.
template <class S>
TensorElement<S> coproduct(const AlgebraElement<S>& x) {
    TensorElement<S> out;
    for (const auto& [w, c] : x.terms()) {
        TensorElement<S> t;
        t.add({{}, {}}, S(1));
        for (const Letter& l : w) t = t * coproduct<S>(l);
        for (const auto& [k, v] : t.terms()) out.add(k, c * v);
    }
    return out;
}

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

template <class S>
Json to_json(const AlgebraElement<S>& x) {
    Json arr = Json::array();
    for (const auto& [w, c] : x.terms()) {
        Json t = Json::object();
        t["word"] = word_to_json(w);
        t["coeff"] = to_json(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace dasep
