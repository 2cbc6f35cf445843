#include <dasep/duality/duality.hpp>

#include <random>

namespace dasep {

int height_left(const Configuration& c, int species, int x) {
    int s = 0;
    for (int y = 0; y < x; ++y) s += occupation(c[static_cast<std::size_t>(y)], species);
    return s;
}

int height_right(const Configuration& c, int species, int x) {
    int s = 0;
    for (int y = x + 1; y < static_cast<int>(c.size()); ++y) s += occupation(c[static_cast<std::size_t>(y)], species);
    return s;
}

bool DualityReport::all_zero() const {
    for (const auto& p : points)
        if (!p.zero_residual) return false;
    return true;
}

std::vector<DualityParams<BigRational>> sample_duality_points(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 19), den(1, 11), sign(0, 1);
    const auto draw = [&] { return BigRational(num(rng), den(rng)); };
    std::vector<DualityParams<BigRational>> out;
    while (static_cast<int>(out.size()) < count) {
        const BigRational q = draw();
        if (q == BigRational(1)) continue;
        const QField<BigRational> field(q);
        const auto generic = [&](const BigRational& a) {
            for (int j = -8; j <= 8; ++j)
                if (a == field.power(j)) return false;
            return true;
        };
        BigRational a1 = draw(), a2 = draw();
        if (sign(rng)) a1 = -a1;
        if (sign(rng)) a2 = -a2;
        if (!generic(a1) || !generic(a2)) continue;
        out.push_back({q, a1, a2});
    }
    return out;
}

DualityReport check_duality(int n, int sites, int points, std::uint64_t seed) {
    check_params({n, 0});
    if (sites < 2) throw InvalidParams("need at least two sites");
    DualityReport rep;
    rep.n = n;
    rep.sites = sites;
    rep.seed = seed;
    for (const auto& p : sample_duality_points(points, seed)) {
        const Mat<BigRational> res = duality_residual(p, n, sites);
        DualityPoint pt{p.q, p.alpha1, p.alpha2, true, BigRational(0)};
        for (Eigen::Index i = 0; i < res.rows(); ++i)
            for (Eigen::Index j = 0; j < res.cols(); ++j) {
                const BigRational a = abs(res(i, j));
                if (a > pt.max_residual) pt.max_residual = a;
            }
        pt.zero_residual = pt.max_residual == BigRational(0);
        rep.points.push_back(std::move(pt));
    }
    return rep;
}

DualityReport verify_duality(int n, int sites, int points, std::uint64_t seed) {
    DualityReport rep = check_duality(n, sites, points, seed);
    for (const auto& p : rep.points)
        if (!p.zero_residual)
            throw DualityViolated("residual " + p.max_residual.str() + " at q = " + p.q.str() +
                                  ", alpha1 = " + p.alpha1.str() + ", alpha2 = " + p.alpha2.str());
    return rep;
}

}  // namespace dasep
