#pragma once

// The Drinfeld-Jantzen pairing between U^{<=0} and U^{>=0}.
//
// For pure words F_a = F_{a_1}...F_{a_k} and E_b = E_{b_1}...E_{b_k},
//   <F_a, E_b> = (-1/r)^k P(a, b),   r = q - 1/q,
//   P(a, b) = sum over p with a_p = b_k of
//             q^{sum_{s>p} (alpha_{b_k}, alpha_{a_s})} P(a without p, b_1..b_{k-1}),
// and P(empty, empty) = 1. P is a Laurent polynomial with integer
// coefficients and is memoised. K letters are moved to the right first and
// then <Y K_mu, X K_nu> = q^{-(mu, nu)} <Y, X>.

#include <dasep/errors.hpp>
#include <dasep/uq/word.hpp>

#include <algorithm>
#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace dasep {

/// A word of one Borel half with its K letters moved to the right.
struct NormalWord {
    int q_exponent = 0;             // q-power collected while commuting
    std::vector<int> letters;       // indices of the E (or F) letters
    CartanExponents k;              // exponents of the trailing K_mu
};

/// side is Gen::F for the first argument of the pairing, Gen::E for the
/// second. Throws MixedBorelInput if the word has a letter from the other half.
NormalWord normal_order(const Word& w, Gen side, int n);

/// q-shift policies for the memo value type.
struct LaurentShift {
    IntLaurent operator()(const IntLaurent& v, int e) const { return v.shifted(e); }
};
struct ModPShift {
    QField<ModP> field;
    ModP operator()(const ModP& v, int e) const { return v * field.power(e); }
};

/// Memo for P(a, b). T is IntLaurent (exact, q-free) or ModP at a fixed q0.
template <class T, class Shift>
class BasicPairingTable {
public:
    explicit BasicPairingTable(int n, Shift shift = Shift()) : n_(n), inner_(cartan_matrix(n)), shift_(std::move(shift)) {
        if (n > 15) throw DimensionOverflow("pairing table supports n <= 15");
    }

    int n() const { return n_; }

    /// P(a, b) above; zero unless a and b are permutations of each other.
    T core(const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return T(0);
        if (a.size() > 16) throw DimensionOverflow("pairing words longer than 16 letters");
        std::vector<int> sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return T(0);
        return core_rec(a, static_cast<int>(b.size()), b);
    }

    std::size_t memo_size() const {
        std::shared_lock lock(mutex_);
        return memo_.size();
    }

private:
    struct Key {
        std::uint64_t a = 0, b = 0;
        int len = 0;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::uint64_t h = k.a * 0x9E3779B97F4A7C15ULL;
            h ^= k.b + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(k.len));
        }
    };

    static Key pack(const std::vector<int>& a, int blen, const std::vector<int>& b) {
        Key k;
        k.len = blen;
        for (int i = 0; i < blen; ++i) {
            k.a = (k.a << 4) | static_cast<std::uint64_t>(a[static_cast<std::size_t>(i)]);
            k.b = (k.b << 4) | static_cast<std::uint64_t>(b[static_cast<std::size_t>(i)]);
        }
        return k;
    }

    T core_rec(const std::vector<int>& a, int blen, const std::vector<int>& b) {
        if (blen == 0) return T(1);
        const Key key = pack(a, blen, b);
        {
            std::shared_lock lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        const int last = b[static_cast<std::size_t>(blen - 1)];
        T total(0);
        // scanning p from the right accumulates (alpha_last, alpha_{a_s}) over s > p
        int exponent = 0;
        std::vector<int> rest(static_cast<std::size_t>(blen - 1));
        for (int p = blen - 1; p >= 0; --p) {
            const int ap = a[static_cast<std::size_t>(p)];
            if (ap == last) {
                std::size_t k = 0;
                for (int s = 0; s < blen; ++s)
                    if (s != p) rest[k++] = a[static_cast<std::size_t>(s)];
                total = total + shift_(core_rec(rest, blen - 1, b), exponent);
            }
            exponent += inner_(last - 1, ap - 1);
        }
        std::unique_lock lock(mutex_);
        memo_.emplace(key, total);
        return total;
    }

    int n_;
    Eigen::MatrixXi inner_;
    Shift shift_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, T, KeyHash> memo_;
};

using PairingTable = BasicPairingTable<IntLaurent, LaurentShift>;
using ModPPairingTable = BasicPairingTable<ModP, ModPShift>;

/// (-1/r)^k in the field.
template <class S>
S pairing_prefactor(int k, const QField<S>& field) {
    S f(1);
    const S m = S(-1) / field.r();
    for (int i = 0; i < k; ++i) f = f * m;
    return f;
}

/// <F_a, E_b> for pure index words.
template <class S>
S pure_pairing(const std::vector<int>& a, const std::vector<int>& b, PairingTable& table, const QField<S>& field) {
    if (a.size() != b.size()) return S(0);
    const IntLaurent p = table.core(a, b);
    if (p.is_zero()) return S(0);
    return pairing_prefactor(static_cast<int>(a.size()), field) * field.lift(p);
}

/// Bilinear pairing <y, x>, y in U^{<=0}, x in U^{>=0}.
template <class S>
S pairing(const AlgebraElement<S>& y, const AlgebraElement<S>& x, PairingTable& table, const QField<S>& field) {
    const int n = table.n();
    const Eigen::MatrixXi inner = cartan_matrix(n);
    std::vector<std::pair<NormalWord, S>> ys, xs;
    for (const auto& [w, c] : y.terms()) ys.emplace_back(normal_order(w, Gen::F, n), c);
    for (const auto& [w, c] : x.terms()) xs.emplace_back(normal_order(w, Gen::E, n), c);
    S total(0);
    for (const auto& [ny, cy] : ys)
        for (const auto& [nx, cx] : xs) {
            if (ny.letters.size() != nx.letters.size()) continue;
            const S core = pure_pairing(ny.letters, nx.letters, table, field);
            if (is_zero(core)) continue;
            const int kk = ny.k.dot(inner * nx.k);
            total = total + cy * cx * field.power(ny.q_exponent + nx.q_exponent - kk) * core;
        }
    return total;
}

}  // namespace dasep
