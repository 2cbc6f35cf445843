#include <dasep/asep/generator.hpp>

#include <algorithm>
#include <limits>

namespace dasep {

void check_params(const AsepParams& p) {
    if (p.n < 2) throw InvalidParams("n must be at least 2");
    if (p.delta < 0 || p.delta > p.n - 2)
        throw InvalidParams("delta must lie in 0.." + std::to_string(p.n - 2) + ", got " + std::to_string(p.delta));
}

const std::array<std::pair<int, int>, 16>& local_basis() {
    static const std::array<std::pair<int, int>, 16> basis{{{3, 0},
                                                            {2, 1},
                                                            {0, 3},
                                                            {1, 2},
                                                            {1, 0},
                                                            {0, 1},
                                                            {2, 0},
                                                            {0, 2},
                                                            {3, 1},
                                                            {1, 3},
                                                            {3, 2},
                                                            {2, 3},
                                                            {0, 0},
                                                            {1, 1},
                                                            {2, 2},
                                                            {3, 3}}};
    return basis;
}

int local_index(int a, int b) {
    static const auto table = [] {
        std::array<int, 16> t{};
        const auto& basis = local_basis();
        for (int k = 0; k < 16; ++k) t[static_cast<std::size_t>(basis[static_cast<std::size_t>(k)].first * 4 +
                                                                basis[static_cast<std::size_t>(k)].second)] = k;
        return t;
    }();
    if (a < 0 || a > 3 || b < 0 || b > 3) throw InvalidParams("site state out of range");
    return table[static_cast<std::size_t>(a * 4 + b)];
}

std::int64_t config_index(const Configuration& c) {
    std::int64_t k = 0;
    for (int v : c) {
        if (v < 0 || v > 3) throw InvalidParams("site state out of range");
        k = k * 4 + v;
    }
    return k;
}

Configuration config_at(std::int64_t index, int sites) {
    Configuration c(static_cast<std::size_t>(sites));
    for (int x = sites - 1; x >= 0; --x) {
        c[static_cast<std::size_t>(x)] = static_cast<int>(index % 4);
        index /= 4;
    }
    return c;
}

std::pair<int, int> species_counts(const Configuration& c) {
    int a = 0, b = 0;
    for (int v : c) {
        a += v & 1;
        b += (v >> 1) & 1;
    }
    return {a, b};
}

std::vector<PositivityReport> rate_positivity_scan(const AsepParams& p, const std::vector<double>& qs) {
    std::vector<PositivityReport> out;
    for (double q : qs) {
        if (!(q > 0)) throw InvalidParams("q must be positive");
        const Mat<double> m = local_generator(p, QField<double>(q));
        PositivityReport rep;
        rep.q = q;
        rep.min_rate = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) {
                if (i == j) continue;
                if (m(i, j) != 0) rep.min_rate = std::min(rep.min_rate, m(i, j));
                if (m(i, j) < 0) rep.violations.emplace_back(i, j);
            }
        out.push_back(rep);
    }
    return out;
}

}  // namespace dasep
