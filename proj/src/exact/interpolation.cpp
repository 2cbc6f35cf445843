#include <dasep/exact/interpolation.hpp>

#include <dasep/errors.hpp>

namespace dasep {

std::vector<ModP> interpolate_laurent_mod_p(int low, int high, const std::vector<ModP>& xs, const std::vector<ModP>& ys) {
    const std::size_t m = static_cast<std::size_t>(high - low + 1);
    if (xs.size() != m || ys.size() != m) throw InvalidParams("interpolation needs one point per coefficient");
    // Strip q^low, then Newton's divided differences for an ordinary polynomial.
    std::vector<ModP> d(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (xs[k].is_zero()) throw InvalidParams("interpolation point must be nonzero");
        d[k] = low >= 0 ? ys[k] / xs[k].pow(static_cast<std::uint64_t>(low)) : ys[k] * xs[k].pow(static_cast<std::uint64_t>(-low));
    }
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t k = m - 1; k >= j; --k) {
            const ModP den = xs[k] - xs[k - j];
            if (den.is_zero()) throw InvalidParams("interpolation points must be distinct");
            d[k] = (d[k] - d[k - 1]) / den;
        }
    // Expand the Newton form into monomial coefficients.
    std::vector<ModP> c(m, ModP(0));
    for (std::size_t j = m; j-- > 0;) {
        // c <- c * (x - xs[j]) + d[j]
        for (std::size_t k = m - 1; k > 0; --k) c[k] = c[k - 1] - c[k] * xs[j];
        c[0] = d[j] - c[0] * xs[j];
    }
    return c;
}

std::optional<BigRational> rational_reconstruct(ModP v) {
    // Extended Euclid on (p, v) until the remainder drops below the bound.
    const std::int64_t bound = std::int64_t{1} << 30;
    __int128 r0 = static_cast<__int128>(ModP::P), r1 = static_cast<__int128>(v.value());
    __int128 t0 = 0, t1 = 1;
    while (r1 >= bound) {
        const __int128 qt = r0 / r1;
        const __int128 r2 = r0 - qt * r1;
        const __int128 t2 = t0 - qt * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    __int128 a = r1, b = t1;
    if (b < 0) {
        a = -a;
        b = -b;
    }
    if (b >= bound) return std::nullopt;
    const BigRational x(BigInt(static_cast<long long>(a)), BigInt(static_cast<long long>(b)));
    return x;
}

std::optional<LaurentPoly> reconstruct_laurent(int low, const std::vector<ModP>& coeffs) {
    std::vector<BigRational> c;
    c.reserve(coeffs.size());
    for (ModP v : coeffs) {
        auto x = rational_reconstruct(v);
        if (!x) return std::nullopt;
        c.push_back(*x);
    }
    return LaurentPoly::from_dense(low, std::move(c));
}

}  // namespace dasep
