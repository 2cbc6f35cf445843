#pragma once

// Continuous-time simulation of the L-site generator at a numeric q, plus
// Monte Carlo checks of transition probabilities and of self-duality.
// This is the only module that works in floating point.

#include <dasep/duality/duality.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace dasep {

using Rng = std::mt19937_64;

/// Independent stream number `stream` of the run seeded by `seed`.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

struct TrajectoryConfig {
    AsepParams params;
    double q = 2.0;
    int sites = 2;
    double t_max = 1.0;
    std::uint64_t seed = 0;
    Configuration initial;
};

struct TrajectorySample {
    std::vector<double> times;  // times[0] = 0
    std::vector<Configuration> states;
    Configuration final_state;
};

/// Jump chain of the L-site generator: exponential holding times with rate
/// -L[s,s], next state proportional to the off-diagonal rates.
class Simulator {
public:
    /// Throws NegativeRate if an off-diagonal rate is negative at q.
    Simulator(const AsepParams& params, double q, int sites);

    int sites() const { return sites_; }
    int states() const { return generator_.rows(); }
    const SparseMatrix<double>& generator() const { return generator_; }
    double exit_rate(std::int64_t s) const { return exit_[static_cast<std::size_t>(s)]; }

    /// Next state from s; s must have a positive exit rate.
    std::int64_t jump(std::int64_t s, Rng& rng) const;
    std::int64_t state_at(std::int64_t s, double t, Rng& rng) const;
    TrajectorySample run(const Configuration& initial, double t_max, Rng& rng) const;

private:
    int sites_;
    SparseMatrix<double> generator_;
    std::vector<double> exit_;
    std::vector<std::vector<std::pair<std::int64_t, double>>> cumulative_;
};

TrajectorySample gillespie_run(const TrajectoryConfig& cfg);

/// exp(t M) by scaling and squaring.
Mat<double> matrix_exponential(const Mat<double>& m, double t);

/// Row s: empirical distribution at time t of the chain started in s,
/// over `trials` runs per row. Rows and columns in lexicographic order.
Mat<double> estimate_transition_matrix(const Simulator& sim, double t, int trials, std::uint64_t seed,
                                       int threads = 1);

struct RateEstimate {
    double rate = 0;
    double std_error = 0;
    std::int64_t jumps = 0;
    double holding_time = 0;
};

/// Jumps from -> to per unit holding time in `from`, over `periods`
/// holding periods started in `from`.
RateEstimate estimate_jump_rate(const Simulator& sim, std::int64_t from, std::int64_t to, int periods,
                                std::uint64_t seed);

struct DualityMcReport {
    double t = 0;
    int trials = 0;
    double lhs = 0, lhs_se = 0;      // E[D(eta_t, xi_0)]
    double rhs = 0, rhs_se = 0;      // E[D(eta_0, xi_t)]
    double exact_lhs = 0, exact_rhs = 0;  // from exp(tL) when the chain is small
    bool agree = false;              // |lhs - rhs| <= 4 combined standard errors
};

/// delta must be 0. D is evaluated exactly at the rational parameters and
/// then rounded.
DualityMcReport duality_expectation_check(int n, const DualityParams<BigRational>& p, const Configuration& eta0,
                                          const Configuration& xi0, double t, int trials, std::uint64_t seed,
                                          int threads = 1);

}  // namespace dasep
