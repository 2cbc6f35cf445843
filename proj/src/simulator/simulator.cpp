#include <dasep/simulator/simulator.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <thread>

namespace dasep {

namespace {

// calls f(k) for k in [0, count), split over at most `threads` workers
template <class F>
void parallel_for(int count, int threads, F f) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int k = 0; k < count; ++k) f(k);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (int k = w; k < count; k += threads) f(k);
        });
    for (auto& t : pool) t.join();
}

struct MeanSe {
    double mean = 0, se = 0;
};

MeanSe mean_se(const std::vector<double>& v) {
    // Welford; a constant sample gives its value back exactly
    MeanSe out;
    double m2 = 0;
    std::size_t k = 0;
    for (double x : v) {
        ++k;
        const double dx = x - out.mean;
        out.mean += dx / static_cast<double>(k);
        m2 += dx * (x - out.mean);
    }
    if (k >= 2) out.se = std::sqrt(m2 / static_cast<double>(k - 1) / static_cast<double>(k));
    return out;
}

}  // namespace

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

Simulator::Simulator(const AsepParams& params, double q, int sites) : sites_(sites) {
    if (!(q > 0) || q == 1.0) throw InvalidParams("q must be positive and different from 1");
    generator_ = multi_site_generator(params, sites, QField<double>(q));
    const int d = generator_.rows();
    exit_.assign(static_cast<std::size_t>(d), 0.0);
    cumulative_.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        double acc = 0;
        for (const auto& [j, v] : generator_.row(i)) {
            if (j == i) continue;
            if (v < 0) throw NegativeRate("negative rate " + std::to_string(v) + " at q = " + std::to_string(q));
            if (v == 0) continue;
            acc += v;
            cumulative_[static_cast<std::size_t>(i)].emplace_back(j, acc);
        }
        exit_[static_cast<std::size_t>(i)] = acc;
    }
}

std::int64_t Simulator::jump(std::int64_t s, Rng& rng) const {
    const auto& cum = cumulative_[static_cast<std::size_t>(s)];
    const double u = std::uniform_real_distribution<double>(0.0, exit_[static_cast<std::size_t>(s)])(rng);
    const auto it = std::upper_bound(cum.begin(), cum.end(), u,
                                     [](double x, const std::pair<std::int64_t, double>& e) { return x < e.second; });
    return it == cum.end() ? cum.back().first : it->first;
}

std::int64_t Simulator::state_at(std::int64_t s, double t, Rng& rng) const {
    double now = 0;
    for (;;) {
        const double rate = exit_[static_cast<std::size_t>(s)];
        if (rate == 0) return s;
        now += std::exponential_distribution<double>(rate)(rng);
        if (now > t) return s;
        s = jump(s, rng);
    }
}

TrajectorySample Simulator::run(const Configuration& initial, double t_max, Rng& rng) const {
    if (!(t_max > 0)) throw InvalidParams("t_max must be positive");
    if (static_cast<int>(initial.size()) != sites_) throw InvalidParams("initial configuration has the wrong length");
    TrajectorySample out;
    std::int64_t s = config_index(initial);
    out.times.push_back(0);
    out.states.push_back(initial);
    double now = 0;
    for (;;) {
        const double rate = exit_[static_cast<std::size_t>(s)];
        if (rate == 0) break;
        now += std::exponential_distribution<double>(rate)(rng);
        if (now > t_max) break;
        s = jump(s, rng);
        out.times.push_back(now);
        out.states.push_back(config_at(s, sites_));
    }
    out.final_state = config_at(s, sites_);
    return out;
}

TrajectorySample gillespie_run(const TrajectoryConfig& cfg) {
    const Simulator sim(cfg.params, cfg.q, cfg.sites);
    Rng rng = make_stream(cfg.seed, 0);
    return sim.run(cfg.initial, cfg.t_max, rng);
}

Mat<double> matrix_exponential(const Mat<double>& m, double t) {
    const Eigen::MatrixXd scaled = m * t;
    return scaled.exp();
}

Mat<double> estimate_transition_matrix(const Simulator& sim, double t, int trials, std::uint64_t seed, int threads) {
    if (trials < 1) throw InvalidParams("need at least one trial");
    const int d = sim.states();
    Mat<double> out = Mat<double>::Zero(d, d);
    parallel_for(d, threads, [&](int s) {
        std::vector<int> counts(static_cast<std::size_t>(d), 0);
        for (int k = 0; k < trials; ++k) {
            Rng rng = make_stream(seed, static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(trials) +
                                            static_cast<std::uint64_t>(k));
            ++counts[static_cast<std::size_t>(sim.state_at(s, t, rng))];
        }
        for (int j = 0; j < d; ++j) out(s, j) = counts[static_cast<std::size_t>(j)] / static_cast<double>(trials);
    });
    return out;
}

RateEstimate estimate_jump_rate(const Simulator& sim, std::int64_t from, std::int64_t to, int periods,
                                std::uint64_t seed) {
    RateEstimate est;
    const double rate = sim.exit_rate(from);
    if (rate == 0) return est;
    Rng rng = make_stream(seed, 0);
    std::exponential_distribution<double> hold(rate);
    for (int k = 0; k < periods; ++k) {
        est.holding_time += hold(rng);
        if (sim.jump(from, rng) == to) ++est.jumps;
    }
    est.rate = static_cast<double>(est.jumps) / est.holding_time;
    est.std_error = std::sqrt(static_cast<double>(std::max<std::int64_t>(est.jumps, 1))) / est.holding_time;
    return est;
}

DualityMcReport duality_expectation_check(int n, const DualityParams<BigRational>& p, const Configuration& eta0,
                                          const Configuration& xi0, double t, int trials, std::uint64_t seed,
                                          int threads) {
    if (eta0.size() != xi0.size()) throw InvalidParams("configurations differ in length");
    if (trials < 1) throw InvalidParams("need at least one trial");
    const int sites = static_cast<int>(eta0.size());
    const Simulator sim({n, 0}, p.q.convert_to<double>(), sites);
    const std::int64_t e0 = config_index(eta0), x0 = config_index(xi0);
    const int d = sim.states();
    // D(eta, xi0) and D(eta0, xi) for every configuration, exactly
    std::vector<double> d_row(static_cast<std::size_t>(d)), d_col(static_cast<std::size_t>(d));
    for (int s = 0; s < d; ++s) {
        d_row[static_cast<std::size_t>(s)] = duality_value(config_at(s, sites), xi0, p).convert_to<double>();
        d_col[static_cast<std::size_t>(s)] = duality_value(eta0, config_at(s, sites), p).convert_to<double>();
    }
    std::vector<double> lhs(static_cast<std::size_t>(trials)), rhs(static_cast<std::size_t>(trials));
    parallel_for(trials, threads, [&](int k) {
        Rng a = make_stream(seed, 2 * static_cast<std::uint64_t>(k));
        Rng b = make_stream(seed, 2 * static_cast<std::uint64_t>(k) + 1);
        lhs[static_cast<std::size_t>(k)] = d_row[static_cast<std::size_t>(sim.state_at(e0, t, a))];
        rhs[static_cast<std::size_t>(k)] = d_col[static_cast<std::size_t>(sim.state_at(x0, t, b))];
    });
    DualityMcReport rep;
    rep.t = t;
    rep.trials = trials;
    const MeanSe l = mean_se(lhs), r = mean_se(rhs);
    rep.lhs = l.mean;
    rep.lhs_se = l.se;
    rep.rhs = r.mean;
    rep.rhs_se = r.se;
    if (d <= 256) {
        const Mat<double> e = matrix_exponential(sim.generator().to_dense(), t);
        for (int s = 0; s < d; ++s) {
            rep.exact_lhs += e(e0, s) * d_row[static_cast<std::size_t>(s)];
            rep.exact_rhs += e(x0, s) * d_col[static_cast<std::size_t>(s)];
        }
    }
    const double tol = 4 * std::sqrt(l.se * l.se + r.se * r.se);
    rep.agree = std::abs(l.mean - r.mean) <= tol || l.mean == r.mean;
    return rep;
}

}  // namespace dasep
