/*
 Copyright 2026 The pendroa Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

// Command implementations for the pendroa tool. Kept in a header so the test
// suite can drive run_cli() in-process.

#ifndef PENDROA_TOOLS_PENDROA_CLI_HPP
#define PENDROA_TOOLS_PENDROA_CLI_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pendroa/pendroa.hpp"

namespace pendroa::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericFailure = 3 };

/// Flags shared by every command. Unset optionals fall back to the config
/// file, then to the preset.
struct GlobalOptions {
    std::optional<std::string> preset;
    std::optional<std::string> config_path;
    std::optional<double> mass, length, gravity, damping;
    std::optional<double> limit;
    std::optional<double> q0, q1, r;
    std::size_t trials = 20000;
    std::uint64_t seed = 0;
    std::string out_dir = "out";
    double dt = IntegrationConfig{}.dt;
    double t_final = IntegrationConfig{}.t_final;
    std::size_t lyap_samples = 500;
    unsigned threads = 1;
};

/// Fully resolved run configuration.
struct Setup {
    std::string preset;
    PendulumParams params;
    CostWeights weights;
    double limit_fraction = 0.5;
    TorqueLimit limit{1.0};
    IntegrationConfig integration;
};

inline Setup resolve(const GlobalOptions& o) {
    ConfigValues cfg;
    if (o.config_path) cfg = load_config(*o.config_path);
    ConfigValues flags;
    flags.preset = o.preset;
    flags.mass = o.mass;
    flags.length = o.length;
    flags.gravity = o.gravity;
    flags.damping = o.damping;
    flags.torque_limit_fraction = o.limit;
    flags.q0 = o.q0;
    flags.q1 = o.q1;
    flags.r = o.r;
    cfg.merge(flags);

    Setup s;
    s.preset = cfg.preset.value_or("normal");
    s.params = cfg.params();
    s.weights = cfg.weights();
    s.limit_fraction = cfg.limit_fraction();
    s.limit = TorqueLimit::fraction_of_gravity(s.params, s.limit_fraction);
    s.integration.dt = o.dt;
    s.integration.t_final = o.t_final;
    s.integration.validate();
    return s;
}

inline json to_json(const Setup& s) {
    return json{{"preset", s.preset},
                {"mass", s.params.mass},
                {"length", s.params.length},
                {"gravity", s.params.gravity},
                {"damping", s.params.damping},
                {"inertia", s.params.inertia()},
                {"gravity_torque_max", s.params.gravity_torque_max()},
                {"limit_fraction", s.limit_fraction},
                {"u_bar", s.limit.value()},
                {"q0", s.weights.q0},
                {"q1", s.weights.q1},
                {"r", s.weights.r},
                {"dt", s.integration.dt},
                {"t_final", s.integration.t_final},
                {"convergence_tol", s.integration.convergence_tol}};
}

inline json to_json(const LqrSolution& sol, const ClosedLoopSpectrum& spec) {
    return json{{"K", {sol.K.k0, sol.K.k1}},
                {"S", {sol.S(0, 0), sol.S(0, 1), sol.S(1, 1)}},
                {"riccati_residual", sol.riccati_residual},
                {"kappa0", spec.kappa0},
                {"kappa1", spec.kappa1},
                {"discriminant", spec.discriminant_d}};
}

inline json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

/// Collects emitted files and timings, then writes <command>_manifest.json.
class Manifest {
public:
    Manifest(std::string command, const GlobalOptions& opts, const Setup& setup)
        : command_(std::move(command)), out_dir_(opts.out_dir) {
        record_["command"] = command_;
        record_["tool_version"] = kVersion;
        record_["config"] = to_json(setup);
        record_["seeds"] = json::array();
        record_["artifacts"] = json::array();
        record_["timings_s"] = json::object();
    }

    void seed(std::uint64_t s) { record_["seeds"].push_back(s); }
    void timing(const std::string& name, double seconds) { record_["timings_s"][name] = seconds; }
    void set(const std::string& key, json value) { record_[key] = std::move(value); }

    /// Opens a file for writing in the output directory and registers it.
    std::ofstream open(const std::string& name) {
        std::filesystem::create_directories(out_dir_);
        const auto path = std::filesystem::path(out_dir_) / name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write '" + path.string() + "'");
        record_["artifacts"].push_back(path.string());
        return f;
    }

    void write_json(const std::string& name, const json& value) {
        auto f = open(name);
        f << value.dump(2) << '\n';
    }

    std::string finish() {
        std::filesystem::create_directories(out_dir_);
        const auto path = std::filesystem::path(out_dir_) / (command_ + "_manifest.json");
        std::ofstream f(path, std::ios::binary);
        f << record_.dump(2) << '\n';
        return path.string();
    }

private:
    std::string command_;
    std::string out_dir_;
    json record_;
};

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline json summary_json(const TrialBatch& batch) {
    const RegionSummary s = region_summary(batch);
    json counts = json::object();
    json fractions = json::object();
    json overlaps = json::object();
    for (std::size_t i = 0; i < kRegionCount; ++i) {
        const auto ri = static_cast<Region>(i);
        counts[std::string(kRegionNames[i])] = s.count(ri);
        fractions[std::string(kRegionNames[i])] = s.fraction(ri);
        for (std::size_t j = i + 1; j < kRegionCount; ++j)
            overlaps[std::string(kRegionNames[i]) + "&" + std::string(kRegionNames[j])] =
                s.both(ri, static_cast<Region>(j));
    }
    json out{{"trials", s.n_trials},
             {"seed", batch.seed},
             {"domain",
              {{"theta", {batch.domain.theta_min, batch.domain.theta_max}},
               {"omega", {batch.domain.omega_min, batch.domain.omega_max}}}},
             {"counts", counts},
             {"fractions", fractions},
             {"overlaps", overlaps},
             {"false_positives",
              {{"S_analytic", s.false_positives(Region::Analytic)},
               {"S_unbound", s.false_positives(Region::Unbound)},
               {"S_lyapunov", s.false_positives(Region::Lyapunov)}}}};
    if (s.count(Region::Lyapunov) > 0)
        out["relative_area"] = relative_area(batch);
    else
        out["relative_area"] = nullptr;
    return out;
}

inline BatchOptions batch_options(const GlobalOptions& o, const Setup& s) {
    if (o.trials == 0) throw std::invalid_argument("--trials must be >= 1");
    BatchOptions b;
    b.n_trials = o.trials;
    b.seed = o.seed;
    b.integration = s.integration;
    b.threads = o.threads;
    return b;
}

/// roa: both oracles, one Monte-Carlo batch, per-sample CSV + summary JSON.
inline int cmd_roa(const GlobalOptions& o, std::ostream& out) {
    const Setup s = resolve(o);
    const BatchOptions bopt = batch_options(o, s);
    Manifest m("roa", o, s);
    m.seed(o.seed);

    auto t0 = Clock::now();
    const LqrSolution sol = solve_lqr(s.params, s.weights);
    const AnalyticOracle analytic(s.params, sol.K, s.limit);
    const double t_analytic = seconds_since(t0);

    t0 = Clock::now();
    const LqrSolution sol_l = solve_lqr(s.params, s.weights);
    const LyapunovOracle lyap = build_lyapunov_oracle(sol_l, s.params, s.limit, o.lyap_samples, bopt.domain, o.seed);
    const double t_lyap = seconds_since(t0);

    t0 = Clock::now();
    const TrialBatch batch = run_batch(s.params, sol.K, s.limit, analytic, &lyap, bopt);
    const double t_batch = seconds_since(t0);

    {
        auto f = m.open("roa_samples.csv");
        write_batch_csv(batch, f);
    }
    json summary = summary_json(batch);
    summary["config"] = to_json(s);
    summary["lqr"] = to_json(sol, analytic.spectrum());
    summary["lyapunov"] = {{"rho", lyap.rho()},
                           {"ellipse_area", lyap.ellipse_area()},
                           {"samples", lyap.sample_count()},
                           {"seed", lyap.seed()}};
    summary["timings_s"] = {{"analytic_construction", t_analytic},
                            {"lyapunov_construction", t_lyap},
                            {"batch", t_batch}};
    m.write_json("roa_summary.json", summary);
    m.timing("analytic_construction", t_analytic);
    m.timing("lyapunov_construction", t_lyap);
    m.timing("batch", t_batch);
    m.finish();
    out << summary.dump(2) << '\n';
    return kOk;
}

/// roa analytic: single-state query, or CSV batch (theta,omega) -> verdicts.
inline int cmd_roa_analytic(const GlobalOptions& o, std::optional<double> theta, std::optional<double> omega,
                            const std::optional<std::string>& input, const std::optional<std::string>& output,
                            std::ostream& out) {
    const Setup s = resolve(o);
    const AnalyticOracle oracle = AnalyticOracle::build(s.params, s.weights, s.limit);

    auto verdict = [&](State x) {
        const AnalyticDiagnostics d = oracle.diagnose(x);
        return json{{"theta", x.theta},
                    {"omega", x.omega},
                    {"in_analytic", d.in_analytic},
                    {"in_unbound", d.in_unbound},
                    {"heuristic", d.heuristic},
                    {"initial_torque", d.initial_torque},
                    {"t_star", optional_json(d.t_star)},
                    {"extremum_torque", optional_json(d.extremum_torque)},
                    {"u_bar", s.limit.value()}};
    };

    if (!input) {
        if (!theta || !omega) throw std::invalid_argument("roa analytic needs --theta and --omega, or --input");
        out << verdict({*theta, *omega}).dump(2) << '\n';
        return kOk;
    }

    std::ifstream in(*input);
    if (!in) throw std::invalid_argument("cannot open '" + *input + "'");
    Manifest m("roa_analytic", o, s);
    m.set("input", *input);
    auto f = m.open(output.value_or("analytic_verdicts.csv"));
    CsvWriter csv(f);
    csv.header({"theta", "omega", "in_analytic", "in_unbound", "heuristic", "initial_torque", "t_star",
                "extremum_torque"});
    std::string line;
    std::size_t lineno = 0, rows = 0, members = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto cells = split_csv_line(line);
        if (cells.size() < 2) throw std::invalid_argument("input line " + std::to_string(lineno) + ": need theta,omega");
        State x;
        try {
            x = {parse_double(cells[0]), parse_double(cells[1])};
        } catch (const std::invalid_argument&) {
            if (lineno == 1) continue; // header row
            throw std::invalid_argument("input line " + std::to_string(lineno) + ": not numeric");
        }
        const AnalyticDiagnostics d = oracle.diagnose(x);
        csv.field(x.theta).field(x.omega).field(d.in_analytic).field(d.in_unbound).field(d.heuristic);
        csv.field(d.initial_torque);
        if (d.t_star) csv.field(*d.t_star); else csv.empty();
        if (d.extremum_torque) csv.field(*d.extremum_torque); else csv.empty();
        csv.end_row();
        ++rows;
        members += d.in_analytic ? 1 : 0;
    }
    f.close();
    m.set("rows", rows);
    m.finish();
    out << json{{"rows", rows}, {"in_analytic", members}}.dump(2) << '\n';
    return kOk;
}

/// roa lyapunov: builds the sampled sublevel-set oracle and prints its record.
inline int cmd_roa_lyapunov(const GlobalOptions& o, std::ostream& out) {
    const Setup s = resolve(o);
    const auto t0 = Clock::now();
    const LqrSolution sol = solve_lqr(s.params, s.weights);
    const LyapunovOracle lyap = build_lyapunov_oracle(sol, s.params, s.limit, o.lyap_samples, {}, o.seed);
    const double t = seconds_since(t0);
    json rec{{"rho", lyap.rho()},
             {"S", {lyap.s_matrix()(0, 0), lyap.s_matrix()(0, 1), lyap.s_matrix()(1, 1)}},
             {"ellipse_area", lyap.ellipse_area()},
             {"samples", lyap.sample_count()},
             {"seed", lyap.seed()},
             {"config", to_json(s)},
             {"construction_s", t}};
    out << rec.dump(2) << '\n';
    return kOk;
}

struct TimingStats {
    double mean = 0.0;
    double min = 0.0;
    double stddev = 0.0;
    std::size_t repetitions = 0;
    std::size_t batch = 1; ///< constructions per timed repetition
};

/// Times @p build: one discarded warm-up, then @p reps timed repetitions of
/// `batch` constructions each, `batch` chosen so a repetition spans >= 1 ms.
template <class F>
TimingStats time_construction(F&& build, std::size_t reps) {
    TimingStats st;
    st.repetitions = reps;
    auto t0 = Clock::now();
    build();
    const double warm = seconds_since(t0);
    st.batch = warm >= 1e-3 ? 1 : static_cast<std::size_t>(std::ceil(1e-3 / std::max(warm, 1e-9)));
    std::vector<double> samples;
    for (std::size_t r = 0; r < reps; ++r) {
        t0 = Clock::now();
        for (std::size_t i = 0; i < st.batch; ++i) build();
        samples.push_back(seconds_since(t0) / static_cast<double>(st.batch));
    }
    double sum = 0.0;
    st.min = samples.front();
    for (double v : samples) {
        sum += v;
        st.min = std::min(st.min, v);
    }
    st.mean = sum / static_cast<double>(reps);
    double var = 0.0;
    for (double v : samples) var += (v - st.mean) * (v - st.mean);
    st.stddev = reps > 1 ? std::sqrt(var / static_cast<double>(reps - 1)) : 0.0;
    return st;
}

inline json to_json(const TimingStats& t) {
    return json{{"mean_s", t.mean}, {"min_s", t.min}, {"stddev_s", t.stddev},
                {"repetitions", t.repetitions}, {"constructions_per_repetition", t.batch}};
}

struct BenchResult {
    TimingStats analytic;
    TimingStats lyapunov;
    [[nodiscard]] double ratio() const { return lyapunov.mean / analytic.mean; }
};

/// Construction time of each oracle from scratch (LQR solve included).
inline BenchResult run_bench(const Setup& s, std::size_t lyap_samples, std::uint64_t seed, std::size_t reps) {
    if (reps == 0) throw std::invalid_argument("--repetitions must be >= 1");
    volatile double sink = 0.0;
    BenchResult b;
    b.analytic = time_construction(
        [&] {
            const AnalyticOracle o = AnalyticOracle::build(s.params, s.weights, s.limit);
            sink = sink + o.spectrum().kappa0;
        },
        reps);
    b.lyapunov = time_construction(
        [&] {
            const LqrSolution sol = solve_lqr(s.params, s.weights);
            const LyapunovOracle o = build_lyapunov_oracle(sol, s.params, s.limit, lyap_samples, {}, seed);
            sink = sink + o.rho();
        },
        reps);
    return b;
}

inline int cmd_bench(const GlobalOptions& o, std::size_t reps, std::ostream& out) {
    const Setup s = resolve(o);
    const BenchResult b = run_bench(s, o.lyap_samples, o.seed, reps);
    Manifest m("bench", o, s);
    m.seed(o.seed);
    json rep{{"analytic", to_json(b.analytic)},
             {"lyapunov", to_json(b.lyapunov)},
             {"lyapunov_samples", o.lyap_samples},
             {"ratio_lyapunov_over_analytic", b.ratio()}};
    m.write_json("bench_report.json", rep);
    m.timing("analytic_mean", b.analytic.mean);
    m.timing("lyapunov_mean", b.lyapunov.mean);
    m.finish();
    out << rep.dump(2) << '\n';
    return kOk;
}

inline int cmd_simulate(const GlobalOptions& o, State x0, std::ostream& out) {
    const Setup s = resolve(o);
    const LqrSolution sol = solve_lqr(s.params, s.weights);
    Manifest m("simulate", o, s);
    const auto t0 = Clock::now();
    const TrajectoryRecord rec = simulate(s.params, sol.K, s.limit, x0, s.integration);
    m.timing("simulate", seconds_since(t0));
    {
        auto f = m.open("trajectory.csv");
        rec.write_csv(f);
    }
    json res{{"theta0", x0.theta},
             {"omega0", x0.omega},
             {"converged", rec.converged},
             {"torque_limited", rec.torque_limited},
             {"diverged", rec.diverged},
             {"final", {rec.states.back().theta, rec.states.back().omega}},
             {"steps", rec.applied.size()}};
    m.set("result", res);
    m.finish();
    out << res.dump(2) << '\n';
    return kOk;
}

inline int cmd_swingup(const GlobalOptions& o, double c, State x0, std::ostream& out) {
    const Setup s = resolve(o);
    const SwingupConfig cfg(c, AnalyticOracle::build(s.params, s.weights, s.limit));
    Manifest m("swingup", o, s);
    m.set("c", c);
    const auto t0 = Clock::now();
    const SwingupRecord rec = run_swingup(cfg, x0, s.integration);
    m.timing("simulate", seconds_since(t0));
    {
        auto f = m.open("swingup.csv");
        rec.write_csv(f);
    }
    const State xf = wrap(rec.trajectory.states.back());
    std::optional<State> switch_state;
    if (rec.switch_time) {
        const auto idx = static_cast<std::size_t>(std::llround(*rec.switch_time / s.integration.dt));
        switch_state = rec.trajectory.states.at(idx);
    }
    json res{{"theta0", x0.theta},
             {"omega0", x0.omega},
             {"c", c},
             {"switch_time", optional_json(rec.switch_time)},
             {"switch_state", switch_state ? json{switch_state->theta, switch_state->omega} : json(nullptr)},
             {"final_wrapped", {xf.theta, xf.omega}},
             {"converged", rec.trajectory.converged},
             {"post_switch_peak_torque", rec.post_switch_peak},
             {"u_bar", s.limit.value()}};
    m.set("result", res);
    m.finish();
    out << res.dump(2) << '\n';
    return kOk;
}

/// heuristic: four-region CSV (S, S_tilde, S_analytic, S_unbound).
inline int cmd_heuristic(const GlobalOptions& o, std::ostream& out) {
    const Setup s = resolve(o);
    const BatchOptions bopt = batch_options(o, s);
    const LqrSolution sol = solve_lqr(s.params, s.weights);
    const AnalyticOracle analytic(s.params, sol.K, s.limit);
    Manifest m("heuristic", o, s);
    m.seed(o.seed);
    const auto t0 = Clock::now();
    const TrialBatch batch = run_batch(s.params, sol.K, s.limit, analytic, nullptr, bopt);
    m.timing("batch", seconds_since(t0));
    {
        auto f = m.open("heuristic_samples.csv");
        CsvWriter csv(f);
        csv.header({"theta0", "omega0", "in_s", "in_s_tilde", "in_analytic", "in_unbound"});
        for (const RegionSample& r : batch.results) {
            csv.field(r.x0.theta).field(r.x0.omega).field(r.in_s).field(r.in_s_tilde);
            csv.field(r.in_analytic).field(r.in_unbound);
            csv.end_row();
        }
    }
    const RegionSummary sum = region_summary(batch);
    json res{{"trials", sum.n_trials},
             {"seed", o.seed},
             {"S", sum.count(Region::S)},
             {"S_tilde", sum.count(Region::STilde)},
             {"S_analytic", sum.count(Region::Analytic)},
             {"S_unbound", sum.count(Region::Unbound)},
             {"unbound_not_converged", sum.false_positives(Region::Unbound)},
             {"analytic_not_converged", sum.false_positives(Region::Analytic)}};
    m.write_json("heuristic_summary.json", res);
    m.finish();
    out << res.dump(2) << '\n';
    return kOk;
}

/**
 * Parses @p args (argv without the program name) and runs the command.
 * Returns the process exit code; messages go to @p out / @p err.
 */
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"Region-of-attraction estimates for a torque-limited LQR pendulum", "pendroa"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--preset", g.preset, "Parameter preset: normal, long, short")
        ->check(CLI::IsMember({"normal", "long", "short"}));
    app.add_option("--config", g.config_path, "Key-value config file");
    app.add_option("--mass", g.mass, "Mass [kg]");
    app.add_option("--length", g.length, "Pivot to center of mass [m]");
    app.add_option("--gravity", g.gravity, "Gravity [m/s^2]");
    app.add_option("--damping", g.damping, "Viscous damping [N m s/rad]");
    app.add_option("--limit", g.limit, "Torque limit as a fraction of m g l (0.5, 0.25, 0.125)");
    app.add_option("--q0", g.q0, "LQR state weight on theta");
    app.add_option("--q1", g.q1, "LQR state weight on omega");
    app.add_option("--r", g.r, "LQR input weight");
    app.add_option("--trials", g.trials, "Monte-Carlo trials")->capture_default_str();
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--out-dir", g.out_dir, "Output directory")->capture_default_str();
    app.add_option("--dt", g.dt, "Integration step [s]")->capture_default_str();
    app.add_option("--t-final", g.t_final, "Integration horizon [s]")->capture_default_str();
    app.add_option("--lyap-samples", g.lyap_samples, "Lyapunov oracle samples")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads for batches (0 = all cores)")->capture_default_str();

    auto* roa = app.add_subcommand("roa", "Compare analytic and Lyapunov estimates against simulation");
    roa->require_subcommand(0, 1);
    std::optional<double> q_theta, q_omega;
    std::optional<std::string> q_input, q_output;
    auto* roa_analytic = roa->add_subcommand("analytic", "Query the analytic oracle");
    roa_analytic->add_option("--theta", q_theta, "Angle [rad], 0 = upright");
    roa_analytic->add_option("--omega", q_omega, "Angular velocity [rad/s]");
    roa_analytic->add_option("--input", q_input, "CSV of theta,omega rows (batch mode)");
    roa_analytic->add_option("--output", q_output, "Verdict CSV name inside --out-dir");
    auto* roa_lyap = roa->add_subcommand("lyapunov", "Build the Lyapunov sampling oracle");
    roa_lyap->add_option("--samples", g.lyap_samples, "Samples (alias of --lyap-samples)");

    std::size_t reps = 10;
    auto* bench = app.add_subcommand("bench", "Time oracle construction");
    bench->add_option("--repetitions", reps, "Timed repetitions per oracle")->capture_default_str();

    double c = 1.0;
    double sw_theta = std::numbers::pi - 0.01, sw_omega = 0.0;
    auto* swing = app.add_subcommand("swingup", "Energy-shaping swing-up with analytic-ROA hand-over");
    swing->add_option("--c", c, "Energy-shaping gain")->capture_default_str();
    swing->add_option("--limit-fraction", g.limit, "Alias of --limit");
    swing->add_option("--theta0", sw_theta, "Initial angle [rad]")->capture_default_str();
    swing->add_option("--omega0", sw_omega, "Initial velocity [rad/s]")->capture_default_str();

    double sim_theta = 0.0, sim_omega = 0.0;
    auto* sim = app.add_subcommand("simulate", "Integrate the saturated LQR loop from one state");
    sim->add_option("--theta0", sim_theta, "Initial angle [rad]")->capture_default_str();
    sim->add_option("--omega0", sim_omega, "Initial velocity [rad/s]")->capture_default_str();

    auto* heur = app.add_subcommand("heuristic", "Four-region data for the linearization heuristic");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (*roa) {
            if (*roa_analytic) return cmd_roa_analytic(g, q_theta, q_omega, q_input, q_output, out);
            if (*roa_lyap) return cmd_roa_lyapunov(g, out);
            return cmd_roa(g, out);
        }
        if (*bench) return cmd_bench(g, reps, out);
        if (*swing) return cmd_swingup(g, c, {sw_theta, sw_omega}, out);
        if (*sim) return cmd_simulate(g, {sim_theta, sim_omega}, out);
        if (*heur) return cmd_heuristic(g, out);
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const std::domain_error& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}

} // namespace pendroa::cli

#endif // PENDROA_TOOLS_PENDROA_CLI_HPP
