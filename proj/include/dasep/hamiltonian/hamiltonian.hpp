#pragma once

// H = (rho (x) rho)(Delta(C)) on C^{2n} (x) C^{2n}, H^ = H - Lambda Id, its
// communicating blocks, the ground states g_delta of the big block and the
// ground-state conjugation that turns H^ into the ASEP generator.

#include <dasep/asep/generator.hpp>
#include <dasep/central/central_element.hpp>
#include <dasep/exact/interpolation.hpp>

#include <vector>

namespace dasep {

/// Tensor index of e_a (x) e_b for 1-based coordinates a, b.
inline int tensor_index(int a, int b, int n) { return (a - 1) * 2 * n + (b - 1); }

/// Sorted tensor indices of the zero-weight sector: e_i (x) e_{n+i} for
/// i = 1..n, then e_{n+i} (x) e_i.
std::vector<int> big_block_basis(int n);

/// Connected components of the off-diagonal nonzero pattern, each sorted,
/// listed by smallest index.
template <class S>
std::vector<std::vector<int>> block_decomposition(const SparseMatrix<S>& m) {
    const int d = m.rows();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (const auto& [j, v] : m.row(i))
            if (i != j) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
    std::vector<int> comp(static_cast<std::size_t>(d), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < d; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> members, stack{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int v : adj[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = static_cast<int>(out.size());
                    stack.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

/// Position of coordinate a in the weight order L_1 > ... > L_n > -L_n > ... > -L_1,
/// where coordinate n + i carries -L_i.
int weight_rank(int a, int n);

/// Orders a two-element block {e_a (x) e_b, e_b (x) e_a} so the state whose
/// first factor has the higher weight comes first.
std::vector<int> orient_pair(const std::vector<int>& block, int n);

/// Sizes of the blocks, largest first.
std::vector<int> block_sizes(const std::vector<std::vector<int>>& blocks);

template <class S>
Mat<S> restrict(const SparseMatrix<S>& m, const std::vector<int>& idx) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    Mat<S> out(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            out(i, j) = m.get(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    return out;
}

template <class S>
struct Hamiltonian {
    int n = 0;
    SparseMatrix<S> H;
    S lambda;
    SparseMatrix<S> H_hat;  // H - lambda Id
};

/// Lambda is the H-eigenvalue of e_1 (x) e_1, which spans a 1x1 block.
template <class S>
Hamiltonian<S> make_hamiltonian(int n, SparseMatrix<S> h) {
    Hamiltonian<S> out;
    out.n = n;
    for (const auto& [j, v] : h.row(0))
        if (j != 0) throw Error("e_1 (x) e_1 is not an eigenvector of H");
    out.lambda = h.get(0, 0);
    out.H_hat = h;
    for (int i = 0; i < h.rows(); ++i) out.H_hat.add(i, i, -out.lambda);
    out.H = std::move(h);
    return out;
}

/// Evaluates the central element in the tensor square at one q.
template <class S>
Hamiltonian<S> build_hamiltonian(const CentralPlan& plan, const QField<S>& field) {
    const Representation rep(plan.n, plan.fn_sign);
    return make_hamiltonian(plan.n, represent_tensor(instantiate(plan, field), rep, field));
}

struct InterpolationOptions {
    int low = -48, high = 48;  // exponent window of every entry
    int extra_points = 6;      // held-out points that certify the window
};

/// Exact H over Q(q) from evaluations mod p at high - low + 1 points of
/// the window, lifted by rational reconstruction. Every entry must be a
/// Laurent polynomial in the window; the held-out points certify this.
Hamiltonian<RationalFunction> hamiltonian_by_interpolation(const CentralPlan& plan, InterpolationOptions opts = {});

/// Coefficients (-q^2, q, -1, q) on block positions n-2-delta, n-1-delta,
/// 2n-2-delta, 2n-1-delta (0-based).
template <class S>
Vec<S> ground_state(int n, int delta, const QField<S>& field) {
    check_params({n, delta});
    Vec<S> g = Vec<S>::Zero(2 * n);
    g(n - 2 - delta) = -field.power(2);
    g(n - 1 - delta) = field.q();
    g(2 * n - 2 - delta) = S(-1);
    g(2 * n - 1 - delta) = field.q();
    return g;
}

std::vector<int> ground_support(int n, int delta);

/// Scales a kernel vector with a staircase support so its third support
/// entry is -1; returns the matching delta. Throws InvalidParams otherwise.
template <class S>
std::pair<int, Vec<S>> canonicalize_ground_state(const Vec<S>& v, int n) {
    std::vector<int> support;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!is_zero(v(i))) support.push_back(static_cast<int>(i));
    for (int delta = 0; delta <= n - 2; ++delta)
        if (support == ground_support(n, delta)) {
            const S scale = S(-1) / v(support[2]);
            return {delta, Vec<S>(v * scale)};
        }
    throw InvalidParams("vector does not have a ground-state support");
}

/// g_0 .. g_{n-2}, after checking that the big block has an (n-1)-dimensional
/// kernel spanned by them. Throws WrongKernelDimension otherwise.
template <class S>
std::vector<Vec<S>> ground_states(const Hamiltonian<S>& h, const QField<S>& field) {
    const int n = h.n;
    const Mat<S> block = restrict(h.H_hat, big_block_basis(n));
    const Mat<S> kernel = nullspace(block);
    if (kernel.cols() != n - 1)
        throw WrongKernelDimension("big block kernel has dimension " + std::to_string(kernel.cols()) + ", expected " +
                                   std::to_string(n - 1));
    std::vector<Vec<S>> out;
    Mat<S> both(2 * n, kernel.cols() + n - 1);
    both.leftCols(kernel.cols()) = kernel;
    for (int delta = 0; delta <= n - 2; ++delta) {
        Vec<S> g = ground_state(n, delta, field);
        const Vec<S> image = block * g;
        for (Eigen::Index i = 0; i < image.size(); ++i)
            if (!is_zero(image(i))) throw WrongKernelDimension("g_" + std::to_string(delta) + " is not in the kernel");
        both.col(kernel.cols() + delta) = g;
        out.push_back(std::move(g));
    }
    if (rank(both) != n - 1) throw WrongKernelDimension("ground states do not span the kernel");
    return out;
}

/// Restriction to support(g) of G^{-1} block G, divided by r^2.
template <class S>
Mat<S> conjugate_prune(const Mat<S>& block, const Vec<S>& g, const QField<S>& field) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < g.size(); ++i)
        if (!is_zero(g(i))) support.push_back(i);
    const auto k = static_cast<Eigen::Index>(support.size());
    const S r2 = field.r() * field.r();
    Mat<S> out(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            const Eigen::Index a = support[static_cast<std::size_t>(i)], b = support[static_cast<std::size_t>(j)];
            out(i, j) = block(a, b) * g(b) / g(a) / r2;
        }
    return out;
}

/// The 4x4 matrix for delta, read off H^.
template <class S>
Mat<S> pruned_generator(const Hamiltonian<S>& h, int delta, const QField<S>& field) {
    const Mat<S> block = restrict(h.H_hat, big_block_basis(h.n));
    return conjugate_prune(block, ground_state(h.n, delta, field), field);
}

template <class S>
bool match_asep(const Mat<S>& pruned, int n, int delta, const QField<S>& field) {
    return pruned == block_l1(AsepParams{n, delta}, field);
}

/// diag(q,1)^{-1} block diag(q,1) = r^2 L_2.
template <class S>
bool match_two_by_two(const Mat<S>& block, int n, const QField<S>& field) {
    if (block.rows() != 2 || block.cols() != 2) return false;
    Mat<S> conj = block;
    conj(0, 1) = block(0, 1) / field.q();
    conj(1, 0) = block(1, 0) * field.q();
    const S r2 = field.r() * field.r();
    const Mat<S> target = block_l2(AsepParams{n, 0}, field);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            if (!(conj(i, j) == r2 * target(i, j))) return false;
    return true;
}

}  // namespace dasep
