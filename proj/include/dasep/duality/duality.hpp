#pragma once

// q-Pochhammer symbols, terminating 2phi1 series, q-Krawtchouk polynomials
// and the orthogonal self-duality function of the two-species ASEP.

#include <dasep/asep/generator.hpp>

#include <cstdint>
#include <vector>

namespace dasep {

template <class S>
S q_pochhammer(const S& a, int k, const S& q) {
    if (k < 0) throw InvalidParams("Pochhammer length must be nonnegative");
    S acc(1), qi(1);
    for (int i = 0; i < k; ++i) {
        acc = acc * (S(1) - a * qi);
        qi = qi * q;
    }
    return acc;
}

/// Sum of the series up to the first vanishing numerator factor (1 - a q^k)
/// or (1 - b q^k). A vanishing denominator factor met first, or no
/// termination by term max_k, throws NonTerminating. When both vanish at the
/// same k the numerator wins.
template <class S>
S q_hypergeometric_2phi1(const S& a, const S& b, const S& c, const S& q, const S& z, int max_k) {
    S sum(1), term(1), qk(1);
    for (int k = 0;; ++k) {
        const S num = (S(1) - a * qk) * (S(1) - b * qk);
        if (is_zero(num)) return sum;
        const S den = (S(1) - c * qk) * (S(1) - qk * q);
        if (is_zero(den)) throw NonTerminating("denominator vanishes at k = " + std::to_string(k + 1));
        if (k + 1 > max_k) throw NonTerminating("series does not terminate within " + std::to_string(max_k) + " terms");
        term = term * num * z / den;
        sum = sum + term;
        qk = qk * q;
    }
}

/// K_degree(x_exp; p, c; q) with x_exp = q^{-x}.
template <class S>
S q_krawtchouk(const S& x_exp, int degree, const S& p, int c, const S& q) {
    if (degree < 0) throw InvalidParams("degree must be nonnegative");
    const QField<S> field(q);
    return q_hypergeometric_2phi1(x_exp, field.power(-degree), field.power(-c), q, p * field.power(degree + 1),
                                  degree);
}

/// Occupation of species 1 or 2 at a site state.
inline int occupation(int state, int species) { return species == 1 ? (state & 1) : ((state >> 1) & 1); }

/// Species-i particles strictly left of 0-based site x.
int height_left(const Configuration& c, int species, int x);
/// Species-i particles strictly right of 0-based site x.
int height_right(const Configuration& c, int species, int x);

template <class S>
struct DualityParams {
    S q;
    S alpha1;
    S alpha2;
};

/// Product over sites of K_{eta^x}(q^{-2 xi^x}, p^x, 1, q^2) for one species,
/// p^x = q^{-2(N^-_{x-1}(xi) - N^+_{x+1}(eta)) + 2x - 2} / alpha.
template <class S>
S species_duality(const Configuration& eta, const Configuration& xi, int species, const S& alpha,
                  const QField<S>& field) {
    if (eta.size() != xi.size()) throw InvalidParams("configurations differ in length");
    const S q2 = field.power(2);
    S acc(1);
    for (int x = 0; x < static_cast<int>(eta.size()); ++x) {
        const int deg = occupation(eta[static_cast<std::size_t>(x)], species);
        if (deg == 0) continue;
        const int arg = occupation(xi[static_cast<std::size_t>(x)], species);
        // 1-based site is x + 1, so 2(x+1) - 2 = 2x
        const int e = -2 * (height_left(xi, species, x) - height_right(eta, species, x)) + 2 * x;
        acc = acc * q_krawtchouk(field.power(-2 * arg), deg, field.power(e) / alpha, 1, q2);
    }
    return acc;
}

template <class S>
S duality_value(const Configuration& eta, const Configuration& xi, const DualityParams<S>& p) {
    const QField<S> field(p.q);
    return species_duality(eta, xi, 1, p.alpha1, field) * species_duality(eta, xi, 2, p.alpha2, field);
}

/// D on the lexicographic basis of multi_site_generator.
template <class S>
Mat<S> duality_matrix(const DualityParams<S>& p, int sites) {
    std::int64_t states = 1;
    for (int x = 0; x < sites; ++x) states *= 4;
    if (states > (1 << 12)) throw DimensionOverflow("duality matrix too large");
    const auto d = static_cast<Eigen::Index>(states);
    Mat<S> m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const Configuration eta = config_at(i, sites);
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = duality_value(eta, config_at(j, sites), p);
    }
    return m;
}

/// Two-site D on local_basis() order.
template <class S>
Mat<S> local_duality_matrix(const DualityParams<S>& p) {
    const auto& basis = local_basis();
    Mat<S> m(16, 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            const auto [a, b] = basis[static_cast<std::size_t>(i)];
            const auto [c, d] = basis[static_cast<std::size_t>(j)];
            m(i, j) = duality_value(Configuration{a, b}, Configuration{c, d}, p);
        }
    return m;
}

/// L D - D L^T for the L-site generator with parameters (q, n, 0).
template <class S>
Mat<S> duality_residual(const DualityParams<S>& p, int n, int sites) {
    const QField<S> field(p.q);
    const Mat<S> gen = multi_site_generator(AsepParams{n, 0}, sites, field).to_dense();
    const Mat<S> d = duality_matrix(p, sites);
    return gen * d - d * gen.transpose();
}

struct DualityPoint {
    BigRational q, alpha1, alpha2;
    bool zero_residual = false;
    BigRational max_residual;  // largest |entry| of L D - D L^T
};

struct DualityReport {
    int n = 0, sites = 0;
    std::uint64_t seed = 0;
    std::vector<DualityPoint> points;
    bool all_zero() const;
};

/// Deterministic rational sample points: q > 0, q != 1, alpha_i != 0 and
/// alpha_i != q^j for |j| <= 8.
std::vector<DualityParams<BigRational>> sample_duality_points(int count, std::uint64_t seed);

/// Exact residuals at sampled points; never throws on a nonzero residual.
DualityReport check_duality(int n, int sites, int points, std::uint64_t seed);

/// check_duality, throwing DualityViolated at the first nonzero residual.
DualityReport verify_duality(int n, int sites, int points, std::uint64_t seed);

}  // namespace dasep
