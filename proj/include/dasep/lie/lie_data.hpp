#pragma once

// Static data of so(2n): roots, weights, Cartan matrix, and the fundamental
// representation on C^{2n}.

#include <dasep/exact/rational_function.hpp>

#include <Eigen/Core>

#include <string>
#include <vector>

namespace dasep {

/// Integer vector in the basis L_1..L_n.
using LVector = Eigen::VectorXi;
/// H = sum c_i H_i, K = prod K_i^{c_i}.
using CartanExponents = Eigen::VectorXi;

/// Sign of F_n in the fundamental representation. `transpose` takes
/// F_n = E_n^T, which satisfies [E_n, F_n] = H_n. `as_printed` uses
/// F_n = E_{2n-1,n} - E_{2n,n-1}, which equals -E_n^T; it reproduces the
/// printed sign of f-words through v_n but gives [E_n, F_n] = -H_n.
enum class FnSign { transpose, as_printed };

/// +-L_index.
struct WeightLabel {
    int index = 1;
    int sign = 1;

    /// Position in the order L_1 > ... > L_n > -L_n > ... > -L_1, which is
    /// also the k of the weight vector v_k.
    int position(int n) const { return sign > 0 ? index : 2 * n + 1 - index; }
    LVector vec(int n) const;
    WeightLabel operator-() const { return {index, -sign}; }
    std::string to_string() const;

    friend bool operator==(const WeightLabel& a, const WeightLabel& b) {
        return a.index == b.index && a.sign == b.sign;
    }
    friend bool operator!=(const WeightLabel& a, const WeightLabel& b) { return !(a == b); }
};

/// Throws InvalidParams unless n >= 2.
void check_rank(int n);

int cartan_entry(int i, int j, int n);
Eigen::MatrixXi cartan_matrix(int n);
/// alpha_i in the L-basis: L_i - L_{i+1}, or L_{n-1} + L_n for i = n.
LVector simple_root(int i, int n);
/// (alpha_i, alpha_j) as the dot product in the L-basis.
int root_inner(int i, int j, int n);

/// Coordinate (1-based) carrying v_k.
int weight_coordinate(int k, int n);
/// v_k as a unit vector of length 2n.
Eigen::VectorXi weight_vector(int k, int n);
WeightLabel weight_of_vector(int k, int n);
/// The k with weight_coordinate(k, n) = c.
int vector_at_coordinate(int c, int n);

/// Exponent of q^{(-2 rho, mu)}.
int rho_exponent(const WeightLabel& mu, int n);
/// Exponent of q^{(mu - lambda, mu)} for mu >= lambda.
int mu_lambda_exponent(const WeightLabel& mu, const WeightLabel& lam, int n);
RationalFunction rho_factor(const WeightLabel& mu, int n);
RationalFunction mu_lambda_factor(const WeightLabel& mu, const WeightLabel& lam, int n);

/// c with H_w = sum c_k H_k, from H_{-2L_i} = H_{n-1} - H_n - 2 sum_{j>=i} H_j
/// and linearity. Throws NotInRootLattice when c is not integral.
CartanExponents cartan_exponents(const LVector& w, int n);

/// The 2n x 2n integer matrices E_i, F_i, H_i (1-based index i).
struct FundamentalMatrices {
    int n = 0;
    std::vector<Eigen::MatrixXi> E, F, H;  // slot 0 unused
};

FundamentalMatrices fundamental_matrices(int n, FnSign fn_sign = FnSign::transpose);

/// Diagonal of H_w = sum c_i H_i, one entry per coordinate; K_w has
/// entries q^{diag}.
Eigen::VectorXi cartan_diagonal(const CartanExponents& c, const FundamentalMatrices& m);

}  // namespace dasep
