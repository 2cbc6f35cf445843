#include <dasep/cli/commands.hpp>

#include <dasep/exact/json_io.hpp>
#include <dasep/hamiltonian/hamiltonian.hpp>
#include <dasep/simulator/simulator.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace dasep::cli {

namespace {

// a failed check; maps to exit code 1
struct CheckFailed {};

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool timing = false;
    int threads = 1;
};

Json config_json(const Configuration& c) { return Json(std::vector<int>(c.begin(), c.end())); }

Configuration parse_config(const std::string& csv, int sites) {
    Configuration c;
    std::stringstream in(csv);
    for (std::string tok; std::getline(in, tok, ',');) {
        if (tok.size() != 1 || tok[0] < '0' || tok[0] > '3') throw InvalidParams("site states are 0..3, got '" + tok + "'");
        c.push_back(tok[0] - '0');
    }
    if (static_cast<int>(c.size()) != sites)
        throw InvalidParams("configuration has " + std::to_string(c.size()) + " sites, expected " + std::to_string(sites));
    return c;
}

// q may be a rational or, for simulation only, a decimal
double parse_real(const std::string& s) {
    try {
        return parse_rational(s).convert_to<double>();
    } catch (const ParseError&) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw ParseError("not a number: " + s);
        return v;
    }
}

FnSign parse_fn_sign(const std::string& s) {
    if (s == "transpose") return FnSign::transpose;
    if (s == "as_printed") return FnSign::as_printed;
    throw InvalidParams("fn-sign must be transpose or as_printed");
}

Json manifest(const CLI::App& sub, const std::string& out_path) {
    Json params = Json::object();
    for (const CLI::Option* opt : sub.get_options()) {
        const std::string name = opt->get_single_name();
        if (name.empty() || name == "help") continue;
        if (opt->count() > 0) {
            const auto& r = opt->results();
            params[name] = r.empty() ? Json(true) : Json(r.back());
        } else if (!opt->get_default_str().empty()) {
            params[name] = opt->get_default_str();
        }
    }
    Json m;
    m["command"] = sub.get_name();
    m["parameters"] = params;
    m["version"] = kVersion;
    m["output"] = out_path.empty() ? "-" : out_path;
    return m;
}

void emit(const Context& ctx, const CLI::App& sub, const std::string& out_path, Json body,
          std::chrono::steady_clock::time_point start) {
    Json doc;
    doc["schema"] = kSchema;
    doc["manifest"] = manifest(sub, out_path);
    if (ctx.timing)
        doc["manifest"]["duration_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& [k, v] : body.items()) doc[k] = v;
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        ctx.out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw InvalidParams("cannot write " + out_path);
        f << text;
    }
}

template <class S>
Json vec_json(const Vec<S>& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
    return a;
}

// ---------------------------------------------------------------- central

template <class S>
Json central_body(int n, FnSign sign, const QField<S>& field, bool centrality, bool& ok) {
    const CentralPlan plan = plan_central(n, sign);
    const auto terms = instantiate(plan, field);
    const Representation rep(n, sign);
    Json body;
    body["n"] = n;
    body["pairs"] = plan.pairs.size();
    body["element"] = to_json(expanded(terms));
    try {
        body["scalar"] = to_json(scalar_of(represent(terms, rep, field)));
    } catch (const NotScalar& e) {
        body["scalar"] = nullptr;
        body["scalar_error"] = e.what();
        ok = false;
    }
    if (centrality) {
        const bool c = commutes_with_generators(represent_tensor(terms, rep, field), rep, field);
        body["central"] = c;
        ok = ok && c;
    }
    return body;
}

// ------------------------------------------------------------ hamiltonian

template <class S>
Json hamiltonian_body(const Hamiltonian<S>& h, const QField<S>& field, std::optional<int> only_delta, bool& ok) {
    const int n = h.n;
    Json body;
    body["n"] = n;
    body["lambda"] = to_json(h.lambda);
    const auto blocks = block_decomposition(h.H_hat);
    body["block_sizes"] = block_sizes(blocks);
    const Mat<S> big = restrict(h.H_hat, big_block_basis(n));
    body["big_block_rank"] = rank(big);
    bool ones_zero = true, twos_match = true;
    for (const auto& b : blocks) {
        if (b.size() == 1) ones_zero = ones_zero && is_zero(h.H_hat.get(b[0], b[0]));
        if (b.size() == 2) twos_match = twos_match && match_two_by_two(restrict(h.H_hat, orient_pair(b, n)), n, field);
    }
    body["one_by_one_blocks_zero"] = ones_zero;
    body["two_by_two_blocks_match"] = twos_match;
    ok = ok && ones_zero && twos_match;
    try {
        const auto gs = ground_states(h, field);
        Json g = Json::array();
        for (const auto& v : gs) g.push_back(vec_json(v));
        body["ground_states"] = g;
    } catch (const WrongKernelDimension& e) {
        body["ground_states"] = nullptr;
        body["kernel_error"] = e.what();
        ok = false;
        return body;
    }
    Json pruned = Json::array();
    for (int d = 0; d <= n - 2; ++d) {
        if (only_delta && *only_delta != d) continue;
        const Mat<S> l = pruned_generator(h, d, field);
        const bool m = match_asep(l, n, d, field);
        ok = ok && m;
        pruned.push_back({{"delta", d}, {"matrix", matrix_to_json(l)}, {"matches_generator", m}});
    }
    body["pruned"] = pruned;
    return body;
}

// ------------------------------------------------------------- generator

template <class S>
Json generator_body(const AsepParams& p, int sites, const QField<S>& field) {
    const SparseMatrix<S> g = multi_site_generator(p, sites, field);
    Json basis = Json::array();
    for (int s = 0; s < g.rows(); ++s) basis.push_back(config_json(config_at(s, sites)));
    Json triplets = Json::array();
    for (int i = 0; i < g.rows(); ++i)
        for (const auto& [j, v] : g.row(i)) triplets.push_back(Json::array({i, j, to_json(v)}));
    Json body;
    body["n"] = p.n;
    body["delta"] = p.delta;
    body["sites"] = sites;
    body["dim"] = g.rows();
    body["basis"] = basis;
    body["entries"] = triplets;
    return body;
}

Json duality_report_json(const DualityReport& rep) {
    Json pts = Json::array();
    for (const auto& p : rep.points)
        pts.push_back({{"q", to_json(p.q)},
                       {"alpha1", to_json(p.alpha1)},
                       {"alpha2", to_json(p.alpha2)},
                       {"max_residual", to_json(p.max_residual)},
                       {"zero_residual", p.zero_residual}});
    return {{"n", rep.n}, {"sites", rep.sites}, {"seed", rep.seed}, {"points", pts}, {"all_zero", rep.all_zero()}};
}

Json mc_json(const DualityMcReport& r) {
    return {{"t", r.t},         {"trials", r.trials}, {"lhs", r.lhs},
            {"lhs_se", r.lhs_se}, {"rhs", r.rhs},     {"rhs_se", r.rhs_se},
            {"exact_lhs", r.exact_lhs}, {"exact_rhs", r.exact_rhs}, {"agree", r.agree}};
}

// ------------------------------------------------------------ verify-all

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Check> verify_all(int n, int points, std::uint64_t seed) {
    std::vector<Check> checks;
    const auto add = [&](std::string name, const std::function<std::pair<bool, std::string>()>& f) {
        try {
            auto [pass, detail] = f();
            checks.push_back({std::move(name), pass, std::move(detail)});
        } catch (const std::exception& e) {
            checks.push_back({std::move(name), false, e.what()});
        }
    };
    const CentralPlan plan = plan_central(n);
    const Representation rep(n);
    const bool symbolic = n <= 4;
    add("scalar action", [&]() -> std::pair<bool, std::string> {
        if (symbolic) {
            const auto f = QField<RationalFunction>::symbolic();
            const auto s = scalar_of(represent(instantiate(plan, f), rep, f));
            return {true, scalar_to_string(s)};
        }
        std::string detail;
        for (const auto& qv : {BigRational(10), BigRational(7, 3), BigRational(22, 7)}) {
            const QField<BigRational> f(qv);
            detail += to_string(scalar_of(represent(instantiate(plan, f), rep, f))) + " ";
        }
        return {true, detail};
    });
    add("centrality", [&]() -> std::pair<bool, std::string> {
        if (symbolic) {
            const auto f = QField<RationalFunction>::symbolic();
            return {commutes_with_generators(represent_tensor(instantiate(plan, f), rep, f), rep, f), "symbolic"};
        }
        for (const auto& qv : {BigRational(10), BigRational(7, 3), BigRational(22, 7)}) {
            const QField<BigRational> f(qv);
            if (!commutes_with_generators(represent_tensor(instantiate(plan, f), rep, f), rep, f))
                return {false, "q = " + to_string(qv)};
        }
        return {true, "3 rational points"};
    });
    add("hamiltonian", [&]() -> std::pair<bool, std::string> {
        const auto f = QField<RationalFunction>::symbolic();
        const Hamiltonian<RationalFunction> h = symbolic ? build_hamiltonian(plan, f) : hamiltonian_by_interpolation(plan);
        bool ok = true;
        const Json body = hamiltonian_body(h, f, std::nullopt, ok);
        const auto sizes = block_sizes(block_decomposition(h.H_hat));
        ok = ok && sizes.front() == 2 * n &&
             std::count(sizes.begin(), sizes.end(), 2) == 2 * n * (n - 1) &&
             std::count(sizes.begin(), sizes.end(), 1) == 2 * n;
        return {ok, "lambda = " + scalar_to_string(h.lambda)};
    });
    add("duality L=2", [&]() -> std::pair<bool, std::string> {
        const DualityReport r = check_duality(n, 2, points, seed);
        return {r.all_zero(), std::to_string(r.points.size()) + " points"};
    });
    add("duality L=3", [&]() -> std::pair<bool, std::string> {
        const DualityReport r = check_duality(n, 3, points, seed);
        return {r.all_zero(), std::to_string(r.points.size()) + " points"};
    });
    return checks;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};
    CLI::App app{"Type D ASEP from the quantum group of so(2n)", "dasep"};
    app.require_subcommand(1);
    app.add_flag("--timing", ctx.timing, "record wall-clock duration in the manifest");
    app.add_option("--threads", ctx.threads, "worker cap")->check(CLI::PositiveNumber)->default_val(1);

    std::string out_path;
    int n = 3, delta = 0, sites = 2, points = 5, trials = 1000;
    std::optional<int> delta_opt;
    std::optional<std::string> q_text;
    std::string mode = "symbolic", fn_sign = "transpose", qs = "2", alpha1 = "3", alpha2 = "5", initial, eta, xi;
    std::uint64_t seed = 1;
    double tmax = 1.0, t = 0.5;
    bool centrality = false;

    const auto add_out = [&](CLI::App* s) { s->add_option("--out", out_path, "output file (stdout if omitted)"); };

    CLI::App* central = app.add_subcommand("central", "central element and its scalar");
    central->add_option("--n", n, "rank")->required()->check(CLI::Range(2, 15));
    central->add_option("--mode", mode, "symbolic or numeric")->check(CLI::IsMember({"symbolic", "numeric"}))->default_str("symbolic");
    central->add_option("--q", q_text, "rational q for numeric mode (default 10)");
    central->add_option("--fn-sign", fn_sign, "transpose or as_printed")->default_str("transpose");
    central->add_flag("--centrality", centrality, "also check centrality in the tensor square");
    add_out(central);

    CLI::App* hamiltonian = app.add_subcommand("hamiltonian", "quantum Hamiltonian, blocks and ground states");
    hamiltonian->add_option("--n", n, "rank")->required()->check(CLI::Range(2, 8));
    hamiltonian->add_option("--delta", delta_opt, "only this delta");
    hamiltonian->add_option("--q", q_text, "rational q (symbolic if omitted)");
    add_out(hamiltonian);

    CLI::App* generator = app.add_subcommand("generator", "L-site ASEP generator");
    generator->add_option("--n", n, "rank")->required();
    generator->add_option("--delta", delta, "delta")->required();
    generator->add_option("--sites", sites, "number of sites")->required();
    generator->add_option("--q", q_text, "rational q (symbolic if omitted)");
    add_out(generator);

    CLI::App* duality = app.add_subcommand("duality-check", "exact check of L D = D L^T at sampled points");
    duality->add_option("--n", n, "rank")->required();
    duality->add_option("--sites", sites, "number of sites")->default_val(2);
    duality->add_option("--points", points, "number of sample points")->default_val(5);
    duality->add_option("--seed", seed, "sampling seed")->default_val(1);
    add_out(duality);

    CLI::App* simulate = app.add_subcommand("simulate", "Gillespie trajectories");
    simulate->add_option("--n", n, "rank")->required();
    simulate->add_option("--delta", delta, "delta")->default_val(0);
    simulate->add_option("--sites", sites, "number of sites")->required();
    simulate->add_option("--q", qs, "q (rational or decimal)")->required();
    simulate->add_option("--tmax", tmax, "time horizon")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--trials", trials, "number of trajectories")->default_val(1)->check(CLI::Range(1, 100000));
    simulate->add_option("--seed", seed, "seed")->default_val(1);
    simulate->add_option("--initial", initial, "comma-separated site states")->required();
    add_out(simulate);

    CLI::App* mc = app.add_subcommand("duality-mc", "Monte Carlo check of self-duality");
    mc->add_option("--n", n, "rank")->required();
    mc->add_option("--sites", sites, "number of sites")->default_val(2);
    mc->add_option("--q", qs, "rational q")->default_val("2");
    mc->add_option("--alpha1", alpha1, "rational alpha_1")->default_val("3");
    mc->add_option("--alpha2", alpha2, "rational alpha_2")->default_val("5");
    mc->add_option("--t", t, "time")->default_val(0.5)->check(CLI::NonNegativeNumber);
    mc->add_option("--trials", trials, "trials per side")->default_val(10000)->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed, "seed")->default_val(1);
    mc->add_option("--eta", eta, "initial eta, comma-separated")->required();
    mc->add_option("--xi", xi, "initial xi, comma-separated")->required();
    add_out(mc);

    CLI::App* all = app.add_subcommand("verify-all", "run every pipeline check for one n");
    all->add_option("--n", n, "rank")->required()->check(CLI::Range(2, 5));
    all->add_option("--points", points, "duality sample points")->default_val(5);
    all->add_option("--seed", seed, "duality sampling seed")->default_val(1);
    add_out(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        bool ok = true;
        if (central->parsed()) {
            const FnSign sign = parse_fn_sign(fn_sign);
            Json body;
            if (mode == "numeric") {
                const QField<BigRational> f(parse_rational(q_text.value_or("10")));
                body = central_body(n, sign, f, centrality, ok);
                body["q"] = to_json(f.q());
            } else {
                body = central_body(n, sign, QField<RationalFunction>::symbolic(), centrality, ok);
            }
            body["mode"] = mode;
            emit(ctx, *central, out_path, body, start);
        } else if (hamiltonian->parsed()) {
            const CentralPlan plan = plan_central(n);
            Json body;
            if (q_text) {
                const QField<BigRational> f(parse_rational(*q_text));
                body = hamiltonian_body(build_hamiltonian(plan, f), f, delta_opt, ok);
                body["q"] = to_json(f.q());
            } else {
                const auto f = QField<RationalFunction>::symbolic();
                body = hamiltonian_body(n <= 4 ? build_hamiltonian(plan, f) : hamiltonian_by_interpolation(plan), f,
                                        delta_opt, ok);
            }
            emit(ctx, *hamiltonian, out_path, body, start);
        } else if (generator->parsed()) {
            const AsepParams p{n, delta};
            const Json body = q_text ? generator_body(p, sites, QField<BigRational>(parse_rational(*q_text)))
                                     : generator_body(p, sites, QField<RationalFunction>::symbolic());
            emit(ctx, *generator, out_path, body, start);
        } else if (duality->parsed()) {
            const DualityReport r = check_duality(n, sites, points, seed);
            ok = r.all_zero();
            emit(ctx, *duality, out_path, duality_report_json(r), start);
        } else if (simulate->parsed()) {
            const Configuration init = parse_config(initial, sites);
            const Simulator sim({n, delta}, parse_real(qs), sites);
            Json trajs = Json::array();
            for (int k = 0; k < trials; ++k) {
                Rng rng = make_stream(seed, static_cast<std::uint64_t>(k));
                const TrajectorySample s = sim.run(init, tmax, rng);
                Json states = Json::array();
                for (const auto& c : s.states) states.push_back(config_json(c));
                trajs.push_back({{"times", s.times}, {"states", states}, {"final", config_json(s.final_state)}});
            }
            emit(ctx, *simulate, out_path, {{"trajectories", trajs}}, start);
        } else if (mc->parsed()) {
            const DualityParams<BigRational> p{parse_rational(qs), parse_rational(alpha1), parse_rational(alpha2)};
            const DualityMcReport r = duality_expectation_check(n, p, parse_config(eta, sites), parse_config(xi, sites),
                                                                t, trials, seed, ctx.threads);
            ok = r.agree;
            emit(ctx, *mc, out_path, {{"report", mc_json(r)}}, start);
        } else if (all->parsed()) {
            const auto checks = verify_all(n, points, seed);
            Json arr = Json::array();
            for (const auto& c : checks) {
                arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                ok = ok && c.pass;
            }
            emit(ctx, *all, out_path, {{"n", n}, {"checks", arr}, {"all_pass", ok}}, start);
        }
        return ok ? 0 : 1;
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace dasep::cli
