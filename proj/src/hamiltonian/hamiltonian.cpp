#include <dasep/hamiltonian/hamiltonian.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dasep {

std::vector<int> big_block_basis(int n) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i) idx.push_back(tensor_index(i, n + i, n));
    for (int i = 1; i <= n; ++i) idx.push_back(tensor_index(n + i, i, n));
    return idx;
}

int weight_rank(int a, int n) { return a <= n ? a : 3 * n + 1 - a; }

std::vector<int> orient_pair(const std::vector<int>& block, int n) {
    if (block.size() != 2) throw InvalidParams("expected a two-element block");
    const int first = block[0] / (2 * n) + 1, second = block[1] / (2 * n) + 1;
    if (weight_rank(first, n) < weight_rank(second, n)) return block;
    return {block[1], block[0]};
}

std::vector<int> block_sizes(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

std::vector<int> ground_support(int n, int delta) {
    check_params({n, delta});
    return {n - 2 - delta, n - 1 - delta, 2 * n - 2 - delta, 2 * n - 1 - delta};
}

Hamiltonian<RationalFunction> hamiltonian_by_interpolation(const CentralPlan& plan, InterpolationOptions opts) {
    if (opts.high < opts.low) throw InvalidParams("empty exponent window");
    const int fit = opts.high - opts.low + 1;
    const int total = fit + opts.extra_points;
    std::vector<ModP> xs;
    std::vector<SparseMatrix<ModP>> values;
    std::set<std::pair<int, int>> pattern;
    const Representation rep(plan.n, plan.fn_sign);
    for (int k = 0; k < total; ++k) {
        const ModP x(1000003 + 7919 * static_cast<std::int64_t>(k));
        const QField<ModP> field(x);
        values.push_back(represent_tensor(instantiate(plan, field), rep, field));
        for (int i = 0; i < values.back().rows(); ++i)
            for (const auto& [j, v] : values.back().row(i)) pattern.emplace(i, j);
        xs.push_back(x);
    }
    const int d = values.front().rows();
    const std::vector<ModP> fit_x(xs.begin(), xs.begin() + fit);
    const QField<RationalFunction> sym = QField<RationalFunction>::symbolic();
    SparseMatrix<RationalFunction> h(d, d);
    for (const auto& [i, j] : pattern) {
        std::vector<ModP> ys;
        for (int k = 0; k < fit; ++k) ys.push_back(values[static_cast<std::size_t>(k)].get(i, j));
        const auto coeffs = interpolate_laurent_mod_p(opts.low, opts.high, fit_x, ys);
        const auto poly = reconstruct_laurent(opts.low, coeffs);
        if (!poly) throw Error("entry (" + std::to_string(i) + "," + std::to_string(j) + ") failed rational reconstruction");
        for (int k = fit; k < total; ++k) {
            const QField<ModP> field(xs[static_cast<std::size_t>(k)]);
            if (field.lift(*poly) != values[static_cast<std::size_t>(k)].get(i, j))
                throw Error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not a Laurent polynomial in the exponent window");
        }
        if (!is_zero(*poly)) h.set(i, j, sym.lift(*poly));
    }
    return make_hamiltonian(plan.n, std::move(h));
}

}  // namespace dasep
