#include <dasep/central/central_element.hpp>

#include <algorithm>
#include <map>

namespace dasep {

namespace {

// Fixed probe point for basis selection, so the chosen basis is reproducible.
const ModP kBasisProbe(982451653);

// (target label, coefficient) of letter matrix m applied to v_k, if nonzero.
std::optional<std::pair<int, int>> apply_to_vector(const Eigen::MatrixXi& m, int k, int n) {
    const int c = weight_coordinate(k, n) - 1;
    for (int row = 0; row < m.rows(); ++row)
        if (m(row, c) != 0) return std::make_pair(vector_at_coordinate(row + 1, n), m(row, c));
    return std::nullopt;
}

bool dfs(const FundamentalMatrices& mats, int n, const std::vector<int>& order, int k, int target, IndexWord& letters,
         int& sign) {
    if (k == target) return true;
    for (int i : order) {
        const auto step = apply_to_vector(mats.E[static_cast<std::size_t>(i)], k, n);
        if (!step || step->first < target) continue;
        letters.push_back(i);
        sign *= step->second;
        if (dfs(mats, n, order, step->first, target, letters, sign)) return true;
        sign *= step->second;
        letters.pop_back();
    }
    return false;
}

}  // namespace

std::optional<PathWords> path_words(const WeightLabel& mu, const WeightLabel& lam, int n, FnSign fn_sign,
                                    ForkRoute route) {
    check_rank(n);
    const int a = mu.position(n), b = lam.position(n);
    if (a > b) throw InvalidParams("path_words needs mu >= lambda");
    PathWords out;
    if (a == b) return out;
    const FundamentalMatrices mats = fundamental_matrices(n, fn_sign);
    IndexWord applied;
    int sign = 1;
    std::vector<int> order;
    for (int i = 1; i < n; ++i) order.push_back(i);
    if (route == ForkRoute::through_n) order.insert(order.begin(), n);
    else order.push_back(n);
    if (!dfs(mats, n, order, b, a, applied, sign)) return std::nullopt;
    out.e_letters.assign(applied.rbegin(), applied.rend());
    out.e_sign = sign;
    out.f_letters = applied;
    // sign of F_{f_letters} on v_mu, tracked through the chain of basis vectors
    int k = a, fsign = 1;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        const auto step = apply_to_vector(mats.F[static_cast<std::size_t>(*it)], k, n);
        if (!step) throw Error("path_words: F chain broke");
        fsign *= step->second;
        k = step->first;
    }
    if (k != b) throw Error("path_words: F chain missed v_lambda");
    out.f_sign = fsign;
    return out;
}

std::vector<IndexWord> permutation_span(const IndexWord& w) {
    std::vector<IndexWord> out{w};
    IndexWord p = w;
    std::sort(p.begin(), p.end());
    do {
        if (p != w) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Word> permutation_span(const Word& w) {
    if (w.empty()) return {w};
    const Gen kind = w.front().kind;
    for (const Letter& l : w)
        if (l.kind != kind || kind == Gen::K) throw InvalidParams("permutation_span needs a pure E or F word");
    std::vector<Word> out;
    for (const IndexWord& p : permutation_span(letter_indices(w))) out.push_back(kind == Gen::E ? e_word(p) : f_word(p));
    return out;
}

std::int64_t kostant_partition(const LVector& beta, int n) {
    std::vector<LVector> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int s : {-1, 1}) {
                LVector r = LVector::Zero(n);
                r(i) = 1;
                r(j) = s;
                roots.push_back(r);
            }
    const auto nonnegative = [n](const LVector& v) {
        try {
            return cartan_exponents(v, n).minCoeff() >= 0;
        } catch (const NotInRootLattice&) {
            return false;
        }
    };
    std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t> memo;
    const auto count = [&](auto&& self, std::size_t k, const LVector& rest) -> std::int64_t {
        if (rest.isZero()) return 1;
        if (k == roots.size()) return 0;
        const auto key = std::make_pair(k, std::vector<int>(rest.data(), rest.data() + rest.size()));
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::int64_t total = 0;
        for (LVector cur = rest; nonnegative(cur); cur -= roots[k]) total += self(self, k + 1, cur);
        memo.emplace(key, total);
        return total;
    };
    return nonnegative(beta) ? count(count, 0, beta) : 0;
}

DualBasis select_basis(const IndexWord& word, int n, PairingTable& exact) {
    return select_basis_from(permutation_span(word), n, exact);
}

DualBasis select_basis_from(const std::vector<IndexWord>& span, int n, PairingTable& exact) {
    if (span.empty()) throw InvalidParams("select_basis_from: empty candidate list");
    const IndexWord& word = span.front();
    DualBasis out;
    out.span_size = span.size();
    LVector beta = LVector::Zero(n);
    for (int i : word) beta += simple_root(i, n);
    const auto target = static_cast<std::size_t>(kostant_partition(beta, n));

    ModPPairingTable probe(n, ModPShift{QField<ModP>(kBasisProbe)});
    Mat<ModP> inv(0, 0);  // inverse of the selected principal block of P
    std::vector<const IndexWord*> chosen;
    for (const IndexWord& u : span) {
        if (chosen.size() == target) break;
        const auto m = static_cast<Eigen::Index>(chosen.size());
        Vec<ModP> col(m), row(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            col(i) = probe.core(*chosen[static_cast<std::size_t>(i)], u);
            row(i) = probe.core(u, *chosen[static_cast<std::size_t>(i)]);
        }
        const Vec<ModP> x = inv * col;
        const ModP s = probe.core(u, u) - row.dot(x);
        if (s == ModP(0)) continue;
        const ModP si = s.inverse();
        const Vec<ModP> yt = inv.transpose() * row;  // (row * inv)^T
        Mat<ModP> next(m + 1, m + 1);
        next.topLeftCorner(m, m) = inv + x * yt.transpose() * si;
        next.topRightCorner(m, 1) = -x * si;
        next.bottomLeftCorner(1, m) = -yt.transpose() * si;
        next(m, m) = si;
        inv = std::move(next);
        chosen.push_back(&u);
    }
    if (chosen.empty() || *chosen.front() != word)
        throw SingularAfterExhaustion("pairing of the path word with itself vanishes");
    if (chosen.size() != target)
        throw SingularAfterExhaustion("greedy basis stalled at " + std::to_string(chosen.size()) + " of " +
                                      std::to_string(target) + " words");
    for (const IndexWord* w : chosen) out.words.push_back(*w);
    out.core.assign(out.words.size(), std::vector<IntLaurent>(out.words.size()));
    for (std::size_t i = 0; i < out.words.size(); ++i)
        for (std::size_t j = 0; j < out.words.size(); ++j) out.core[i][j] = exact.core(out.words[i], out.words[j]);
    return out;
}

CentralPlan plan_central(int n, FnSign fn_sign, ForkRoute route) {
    check_rank(n);
    CentralPlan plan;
    plan.n = n;
    plan.fn_sign = fn_sign;
    PairingTable table(n);
    for (int a = 1; a <= 2 * n; ++a)
        for (int b = a; b <= 2 * n; ++b) {
            PairPlan p;
            p.mu = weight_of_vector(a, n);
            p.lam = weight_of_vector(b, n);
            if (a != b) {
                p.path = path_words(p.mu, p.lam, n, fn_sign, route);
                if (!p.path) continue;
                p.e_basis = select_basis(p.path->e_letters, n, table);
                p.f_basis = select_basis(p.path->f_letters, n, table);
            }
            p.coeff_exponent = mu_lambda_exponent(p.mu, p.lam, n) + rho_exponent(p.mu, n);
            p.k = cartan_exponents(LVector(-p.mu.vec(n) - p.lam.vec(n)), n);
            plan.pairs.push_back(std::move(p));
        }
    return plan;
}

}  // namespace dasep
