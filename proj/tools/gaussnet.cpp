/*
 * Copyright 2026 The gaussnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// gaussnet command-line driver.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussnet/chart.hpp"
#include "gaussnet/experiments.hpp"
#include "gaussnet/json_io.hpp"
#include "gaussnet/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gaussnet;

namespace {

constexpr const char* kVersion = "gaussnet " GAUSSNET_VERSION;

/// Everything a command may need, resolved from defaults, then the config
/// file, then flags.
struct RunConfig {
    GaussianInt alpha{3, 4};
    std::uint64_t seed = 42;
    int jobs = 0;
    std::string out = "out";
    bool out_given = false;
    DistanceMode distance = DistanceMode::Plain;
    FaultSpec faults;
    int resample_every = 50;
    bool curriculum = false;
    PpoConfig ppo;
    PpoConfig scenario = scenario_ppo_config();
    SweepConfig sweep;
    QuadrantConfig quadrant;
};

void apply_file(RunConfig& rc, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("config file " + path + ": " + e.what());
    }
    if (j.contains("k") && j.contains("alpha")) throw std::runtime_error("config sets both k and alpha");
    if (j.contains("k")) rc.alpha = NetworkModulus::from_k(j.at("k").get<int>()).alpha();
    if (j.contains("alpha")) rc.alpha = parse_gaussian(j.at("alpha").get<std::string>());
    rc.seed = j.value("seed", rc.seed);
    rc.jobs = j.value("jobs", rc.jobs);
    if (j.contains("out")) {
        rc.out = j.at("out").get<std::string>();
        rc.out_given = true;
    }
    if (j.contains("distance")) rc.distance = parse_distance_mode(j.at("distance").get<std::string>());
    if (j.contains("faults")) j.at("faults").get_to(rc.faults);
    rc.resample_every = j.value("resample_every", rc.resample_every);
    rc.curriculum = j.value("curriculum", rc.curriculum);
    if (j.contains("ppo")) j.at("ppo").get_to(rc.ppo);
    if (j.contains("scenario_ppo")) j.at("scenario_ppo").get_to(rc.scenario);
    if (j.contains("sweep")) j.at("sweep").get_to(rc.sweep);
    if (j.contains("quadrant")) j.at("quadrant").get_to(rc.quadrant);
}

/// Creates the output directory, records the resolved config and version and
/// keeps a `.incomplete` marker until finish() is called.
class OutputDir {
public:
    OutputDir(const std::string& path, const json& resolved) : dir_(path) {
        fs::create_directories(dir_);
        std::ofstream(dir_ / ".incomplete") << "started\n";
        std::ofstream(dir_ / "config.json") << resolved.dump(2) << '\n';
        std::ofstream(dir_ / "VERSION") << kVersion << '\n';
    }

    void write(const std::string& name, const std::function<void(std::ostream&)>& body) const {
        std::ofstream out(dir_ / name);
        if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
        body(out);
        if (!out) throw std::runtime_error("write failed: " + (dir_ / name).string());
    }

    void finish() const { fs::remove(dir_ / ".incomplete"); }
    fs::path path() const { return dir_; }

private:
    fs::path dir_;
};

json base_json(const std::string& command, const RunConfig& rc) {
    return {{"command", command},
            {"version", kVersion},
            {"alpha", to_string(rc.alpha)},
            {"seed", rc.seed},
            {"jobs", rc.jobs},
            {"out", rc.out}};
}

ExecOptions exec_options(const RunConfig& rc) { return {rc.jobs, &std::cerr}; }

ChartSeries series(std::string name, std::vector<double> x, std::vector<double> y, std::vector<double> err = {}) {
    return {std::move(name), std::move(x), std::move(y), std::move(err)};
}

int cmd_topology(const RunConfig& rc) {
    const auto t = build_topology(NetworkModulus(rc.alpha));
    if (!rc.out_given) {
        write_topology_csv(std::cout, t);
        return 0;
    }
    json j = base_json("topology", rc);
    OutputDir dir(rc.out, j);
    dir.write("topology.csv", [&](std::ostream& o) { write_topology_csv(o, t); });
    dir.finish();
    return 0;
}

int cmd_train(RunConfig rc) {
    const auto t = build_topology(NetworkModulus(rc.alpha));
    rc.ppo.seed = derive_seed(rc.seed, "train-policy");
    rc.faults.seed = derive_seed(rc.seed, "train-faults");
    rc.ppo.validate();
    rc.faults.validate();

    json j = base_json("train", rc);
    j["ppo"] = rc.ppo;
    j["faults"] = rc.faults;
    j["resample_every"] = rc.resample_every;
    j["curriculum"] = rc.curriculum;
    OutputDir dir(rc.out, j);

    PairSamplerOptions opts;
    opts.fault_spec = rc.faults;
    opts.resample_every = rc.resample_every;
    std::vector<Topology> curriculum;
    EpisodeSampler sampler;
    if (rc.curriculum) {
        for (int k = 2; k <= 9; ++k) curriculum.push_back(build_topology(NetworkModulus::from_k(k)));
        std::vector<const Topology*> ptrs;
        for (const auto& c : curriculum) ptrs.push_back(&c);
        sampler = make_curriculum_sampler(ptrs, opts);
    } else {
        sampler = make_pair_sampler(t, opts);
    }
    const auto report = train(t, rc.ppo, sampler);

    dir.write("policy.json", [&](std::ostream& o) { save_policy(o, {report.params, rc.ppo, rc.alpha, rc.seed}); });
    dir.write("rewards.csv", [&](std::ostream& o) { write_reward_csv(o, report); });
    std::vector<double> ep(report.returns.size());
    for (std::size_t i = 0; i < ep.size(); ++i) ep[i] = static_cast<double>(i + 1);
    LineChart chart{"Training reward", "Episode", "Episode return", {}};
    chart.series.push_back(series("return", ep, report.returns));
    chart.series.push_back(series("20-episode average", ep, report.smoothed_returns));
    dir.write("rewards.svg", [&](std::ostream& o) { write_svg(o, chart); });

    json summary = {{"episodes", report.returns.size()}, {"wall_seconds", report.wall_seconds}};
    if (report.smoothed_returns.size() >= 250) {
        const auto c = summarize_convergence(report.smoothed_returns);
        summary["head_mean"] = c.head_mean;
        summary["tail_mean"] = c.tail_mean;
        summary["at_episode_250"] = c.at_checkpoint;
        summary["first_reach_90pct"] = c.first_reach;
    }
    dir.write("summary.json", [&](std::ostream& o) { o << summary.dump(2) << '\n'; });
    dir.finish();
    std::cerr << "trained " << report.returns.size() << " episodes in " << format_number(report.wall_seconds)
              << " s -> " << (dir.path() / "policy.json").string() << '\n';
    return 0;
}

struct RouteArgs {
    std::string policy = "greedy";
    int src = 0;
    int dst = 3;
    bool dst_given = false;
    std::string fault_file;
    std::string policy_file;
};

int cmd_route(RunConfig rc, const RouteArgs& args) {
    const auto t = build_topology(NetworkModulus(rc.alpha));
    const int dst = args.dst_given ? args.dst : t.index_of({3, 0});
    FaultSet faults;
    if (!args.fault_file.empty()) {
        std::ifstream in(args.fault_file);
        if (!in) throw std::runtime_error("cannot open fault file " + args.fault_file);
        faults = read_fault_csv(in, t.n_nodes());
    } else {
        rc.faults.seed = derive_seed(rc.seed, "route-faults");
        faults = inject_faults(t, rc.faults, std::vector<int>{args.src, dst});
    }
    RouteResult route;
    if (args.policy == "greedy") {
        route = route_greedy(t, args.src, dst, faults, rc.distance);
    } else if (args.policy == "rl") {
        if (args.policy_file.empty()) throw std::runtime_error("--policy rl needs --policy-file");
        std::ifstream in(args.policy_file);
        if (!in) throw std::runtime_error("cannot open policy file " + args.policy_file);
        const auto file = load_policy(in);
        if (file.alpha != rc.alpha)
            throw std::runtime_error("policy was trained on " + to_string(file.alpha) + ", not " + to_string(rc.alpha));
        route = route_rl(t, file.params, args.src, dst, faults);
    } else {
        throw std::runtime_error("unknown policy '" + args.policy + "' (greedy or rl)");
    }
    write_route_trace(std::cout, t, route);
    if (rc.out_given) {
        json j = base_json("route", rc);
        j["policy"] = args.policy;
        j["src"] = args.src;
        j["dst"] = dst;
        j["distance"] = std::string(to_string(rc.distance));
        j["faults"] = faults.nodes();
        OutputDir dir(rc.out, j);
        dir.write("route.csv", [&](std::ostream& o) { write_route_trace(o, t, route); });
        dir.write("faults.csv", [&](std::ostream& o) { write_fault_csv(o, faults); });
        dir.finish();
    }
    return 0;
}

int cmd_demo(const RunConfig& rc, int src, std::optional<int> dst_arg) {
    const auto t = build_topology(NetworkModulus(rc.alpha));
    const int dst = dst_arg ? *dst_arg : t.index_of({3, 0});
    json j = base_json("demo", rc);
    j["src"] = src;
    j["dst"] = dst;
    j["scenario_ppo"] = rc.scenario;
    OutputDir dir(rc.out, j);

    const auto report = detour_demo(t, src, dst, rc.scenario, rc.seed, exec_options(rc));
    dir.write("detour.csv", [&](std::ostream& o) { write_detour_csv(o, report); });
    std::ostringstream text;
    text << "src " << src << " " << to_string(t.coord(src)) << " -> dst " << dst << " " << to_string(t.coord(dst))
         << "\n";
    text << "fault-free: bfs " << report.baseline_bfs << " greedy " << report.baseline_greedy.hops << " rl "
         << report.baseline_rl.hops << "\n";
    const auto wins = report.rl_wins();
    text << wins.size() << " single-fault placement(s) where rl beats greedy\n";
    for (const auto* row : wins) {
        text << "\nfault at node " << row->fault_node << " " << to_string(row->fault_coord) << ": bfs "
             << row->bfs_hops.value_or(-1) << " greedy " << row->greedy.hops << " rl " << row->rl.hops << "\n";
        text << "greedy trace:\n";
        write_route_trace(text, t, row->greedy);
        text << "rl trace:\n";
        write_route_trace(text, t, row->rl);
    }
    dir.write("report.txt", [&](std::ostream& o) { o << text.str(); });
    std::cout << text.str();
    dir.finish();
    return 0;
}

int cmd_sweep_pdr(RunConfig rc) {
    rc.sweep.alpha = rc.alpha;
    rc.sweep.master_seed = rc.seed;
    rc.sweep.validate();
    json j = base_json("sweep-pdr", rc);
    j["sweep"] = rc.sweep;
    OutputDir dir(rc.out, j);

    const auto sweep = run_pdr_sweep(rc.sweep, exec_options(rc));
    dir.write("pdr_raw.csv", [&](std::ostream& o) { write_pdr_raw_csv(o, sweep.trials); });
    dir.write("pdr_aggregate.csv", [&](std::ostream& o) { write_pdr_aggregate_csv(o, sweep.records); });
    dir.write("trials.csv", [&](std::ostream& o) { write_trial_log_csv(o, sweep.trials); });

    LineChart pdr{"Packet delivery ratio", "Fault density", "PDR", {}, 0.0, 1.05};
    LineChart score{"Fault adaptive score", "Fault density", "PDR(d) / PDR(0)", {}, 0.0, 1.05};
    for (auto kind : {PolicyKind::Greedy, PolicyKind::Rl}) {
        std::vector<double> x, y, e, sx, sy;
        for (const auto& m : sweep.records) {
            if (m.policy != kind) continue;
            x.push_back(m.density);
            y.push_back(m.pdr_mean);
            e.push_back(m.pdr_stderr);
            if (m.adaptive_score) {
                sx.push_back(m.density);
                sy.push_back(*m.adaptive_score);
            }
        }
        const std::string name = kind == PolicyKind::Rl ? "RL (PPO)" : "Greedy";
        pdr.series.push_back(series(name, x, y, e));
        score.series.push_back(series(name, sx, sy));
    }
    dir.write("pdr.svg", [&](std::ostream& o) { write_svg(o, pdr); });
    dir.write("adaptive_score.svg", [&](std::ostream& o) { write_svg(o, score); });
    write_pdr_aggregate_csv(std::cout, sweep.records);
    dir.finish();
    return 0;
}

int cmd_sweep_throughput(RunConfig rc) {
    rc.sweep.alpha = rc.alpha;
    rc.sweep.master_seed = rc.seed;
    rc.sweep.validate();
    json j = base_json("sweep-throughput", rc);
    j["sweep"] = rc.sweep;
    OutputDir dir(rc.out, j);

    const auto sweep = run_throughput_sweep(rc.sweep, exec_options(rc));
    dir.write("throughput.csv", [&](std::ostream& o) { write_throughput_csv(o, sweep.records); });
    dir.write("pdr_raw.csv", [&](std::ostream& o) { write_pdr_raw_csv(o, sweep.trials); });
    dir.write("trials.csv", [&](std::ostream& o) { write_trial_log_csv(o, sweep.trials); });
    json summary = {{"beta", sweep.beta}, {"beta_calibrated", sweep.calibrated}, {"density", rc.sweep.throughput_density}};
    dir.write("summary.json", [&](std::ostream& o) { o << summary.dump(2) << '\n'; });

    LineChart chart{"Normalized throughput (beta " + format_number(sweep.beta) + ")", "Network load",
                    "Normalized throughput", {}, 0.0, 1.0};
    for (auto kind : {PolicyKind::Greedy, PolicyKind::Rl}) {
        std::vector<double> x, y, e;
        for (const auto& r : sweep.records) {
            if (r.policy != kind) continue;
            x.push_back(r.load);
            y.push_back(r.mean);
            e.push_back(r.stderr_);
        }
        chart.series.push_back(series(kind == PolicyKind::Rl ? "RL (PPO)" : "Greedy", x, y, e));
    }
    dir.write("throughput.svg", [&](std::ostream& o) { write_svg(o, chart); });
    std::cout << "beta " << format_number(sweep.beta) << (sweep.calibrated ? " (calibrated)" : "") << '\n';
    write_throughput_csv(std::cout, sweep.records);
    dir.finish();
    return 0;
}

int cmd_quadrant(RunConfig rc) {
    rc.quadrant.alpha = rc.alpha;
    rc.quadrant.master_seed = rc.seed;
    rc.quadrant.validate();
    json j = base_json("quadrant", rc);
    j["quadrant"] = rc.quadrant;
    OutputDir dir(rc.out, j);

    const auto records = quadrant_study(rc.quadrant, exec_options(rc));
    dir.write("quadrant.csv", [&](std::ostream& o) { write_quadrant_csv(o, records); });
    LineChart chart{"First-quadrant average distance", "Faults in quadrant I", "Average hops (delivered)", {}};
    for (auto kind : {PolicyKind::Greedy, PolicyKind::Rl, PolicyKind::Bfs}) {
        std::vector<double> x, y;
        for (const auto& r : records) {
            if (r.policy != kind) continue;
            x.push_back(r.fault_count);
            y.push_back(r.avg_hops);
        }
        const char* name = kind == PolicyKind::Rl ? "RL (PPO)" : kind == PolicyKind::Greedy ? "Greedy" : "BFS optimum";
        chart.series.push_back(series(name, x, y));
    }
    dir.write("quadrant.svg", [&](std::ostream& o) { write_svg(o, chart); });
    write_quadrant_csv(std::cout, records);
    dir.finish();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fault-tolerant routing on Gaussian integer interconnection networks: greedy vs PPO."};
    app.footer(
        "Settings resolve as built-in defaults, then --config FILE (JSON), then command-line flags.\n"
        "Every output directory receives config.json (the resolved settings) and VERSION.");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    int k = 3;
    std::string alpha_text, config_path, out_dir;
    std::uint64_t seed = 42;
    int jobs = 0;
    auto* k_opt = app.add_option("--k", k, "Network alpha = k + (k+1)i");
    auto* alpha_opt = app.add_option("--alpha", alpha_text, "Network modulus a+bi")->excludes(k_opt);
    auto* seed_opt = app.add_option("--seed", seed, "Master seed (default 42)");
    auto* out_opt = app.add_option("--out", out_dir, "Output directory (default ./out)");
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    auto* jobs_opt = app.add_option("--jobs", jobs, "Worker threads, 0 = all cores");

    auto* topology = app.add_subcommand("topology", "Dump the node table as CSV");

    auto* train_cmd = app.add_subcommand("train", "Train a PPO routing policy");
    int episodes = 0, resample = 0;
    double density = 0.0, lr = 0.0;
    std::string fault_mode;
    bool eps_greedy = false, curriculum = false;
    auto* ep_opt = train_cmd->add_option("--episodes", episodes, "Training episodes");
    auto* dens_opt = train_cmd->add_option("--density", density, "Fault density during training");
    auto* mode_opt = train_cmd->add_option("--fault-mode", fault_mode, "uniform or clustered");
    auto* res_opt = train_cmd->add_option("--resample-every", resample, "Episodes between fault resamples (0 = fixed)");
    auto* lr_opt = train_cmd->add_option("--learning-rate", lr, "Optimizer step size");
    auto* eps_opt = train_cmd->add_flag("--epsilon-greedy", eps_greedy, "Enable the decaying epsilon-greedy overlay");
    auto* cur_opt = train_cmd->add_flag("--curriculum", curriculum, "Cycle k = 2..9 networks between episodes");

    auto* route_cmd = app.add_subcommand("route", "Route one packet and print its hop trace");
    RouteArgs route_args;
    std::string distance;
    double route_density = 0.0;
    route_cmd->add_option("--policy", route_args.policy, "greedy or rl")->check(CLI::IsMember({"greedy", "rl"}));
    route_cmd->add_option("--src", route_args.src, "Source node index");
    auto* rdst_opt = route_cmd->add_option("--dst", route_args.dst, "Destination node index (default: node of 3)");
    route_cmd->add_option("--faults", route_args.fault_file, "Fault CSV")->check(CLI::ExistingFile);
    auto* rdens_opt = route_cmd->add_option("--density", route_density, "Random fault density when no fault file");
    route_cmd->add_option("--policy-file", route_args.policy_file, "Trained policy (for --policy rl)");
    auto* dist_opt = route_cmd->add_option("--distance", distance, "plain or modular greedy metric");

    auto* demo_cmd = app.add_subcommand("demo", "Single-fault detour scan, greedy vs RL");
    int demo_src = 0, demo_dst = 0, demo_episodes = 0;
    demo_cmd->add_option("--src", demo_src, "Source node index");
    auto* ddst_opt = demo_cmd->add_option("--dst", demo_dst, "Destination node index (default: node of 3)");
    auto* dep_opt = demo_cmd->add_option("--episodes", demo_episodes, "Training episodes per placement");

    auto* pdr_cmd = app.add_subcommand("sweep-pdr", "PDR and adaptive score vs fault density");
    auto* tp_cmd = app.add_subcommand("sweep-throughput", "Normalized throughput vs network load");
    std::string densities, loads;
    int trials = 0, packets = 0, train_episodes = 0;
    double beta = 0.0, tp_density = 0.0;
    auto* dlist_opt = pdr_cmd->add_option("--densities", densities, "lo:hi:step or comma list");
    std::vector<CLI::Option*> trial_opts, packet_opts, tep_opts, smode_opts;
    for (auto* cmd : {pdr_cmd, tp_cmd}) {
        trial_opts.push_back(cmd->add_option("--trials", trials, "Trials per density"));
        packet_opts.push_back(cmd->add_option("--packets", packets, "Packets per trial"));
        tep_opts.push_back(cmd->add_option("--train-episodes", train_episodes, "PPO episodes per trial"));
        smode_opts.push_back(cmd->add_option("--fault-mode", fault_mode, "uniform or clustered"));
    }
    auto* loads_opt = tp_cmd->add_option("--loads", loads, "lo:hi:step or comma list");
    auto* beta_opt = tp_cmd->add_option("--beta", beta, "Throughput decay (default: calibrated)");
    auto* tpd_opt = tp_cmd->add_option("--density", tp_density, "Fault density (default 0.2)");

    auto* quad_cmd = app.add_subcommand("quadrant", "First-quadrant average distance study");
    std::vector<int> fault_counts;
    int quad_trials = 0, quad_episodes = 0;
    auto* fc_opt = quad_cmd->add_option("--fault-counts", fault_counts, "Fault counts, e.g. 1 2 3")->delimiter(',');
    auto* qt_opt = quad_cmd->add_option("--trials", quad_trials, "Trials per fault count");
    auto* qep_opt = quad_cmd->add_option("--episodes", quad_episodes, "Training episodes per configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    auto given = [](const std::vector<CLI::Option*>& opts) {
        for (auto* o : opts)
            if (o->count()) return true;
        return false;
    };

    try {
        RunConfig rc;
        if (!config_path.empty()) apply_file(rc, config_path);
        if (k_opt->count()) rc.alpha = NetworkModulus::from_k(k).alpha();
        if (alpha_opt->count()) rc.alpha = parse_gaussian(alpha_text);
        NetworkModulus{rc.alpha};
        if (seed_opt->count()) rc.seed = seed;
        if (jobs_opt->count()) rc.jobs = jobs;
        if (out_opt->count()) {
            rc.out = out_dir;
            rc.out_given = true;
        }

        if (topology->parsed()) return cmd_topology(rc);

        if (train_cmd->parsed()) {
            if (ep_opt->count()) rc.ppo.episodes = episodes;
            if (dens_opt->count()) rc.faults.density = density;
            if (mode_opt->count()) rc.faults.mode = parse_fault_mode(fault_mode);
            if (res_opt->count()) rc.resample_every = resample;
            if (lr_opt->count()) rc.ppo.learning_rate = lr;
            if (eps_opt->count()) rc.ppo.epsilon_greedy.enabled = eps_greedy;
            if (cur_opt->count()) rc.curriculum = curriculum;
            return cmd_train(rc);
        }
        if (route_cmd->parsed()) {
            route_args.dst_given = rdst_opt->count() > 0;
            if (rdens_opt->count()) rc.faults.density = route_density;
            if (dist_opt->count()) rc.distance = parse_distance_mode(distance);
            return cmd_route(rc, route_args);
        }
        if (demo_cmd->parsed()) {
            if (dep_opt->count()) rc.scenario.episodes = demo_episodes;
            return cmd_demo(rc, demo_src, ddst_opt->count() ? std::optional<int>(demo_dst) : std::nullopt);
        }
        if (pdr_cmd->parsed() || tp_cmd->parsed()) {
            if (dlist_opt->count()) rc.sweep.densities = parse_range(densities);
            if (given(trial_opts)) rc.sweep.trials_per_density = trials;
            if (given(packet_opts)) rc.sweep.packets_per_trial = packets;
            if (given(tep_opts)) rc.sweep.train_episodes = train_episodes;
            if (given(smode_opts)) rc.sweep.fault_mode = parse_fault_mode(fault_mode);
            if (loads_opt->count()) rc.sweep.loads = parse_range(loads);
            if (beta_opt->count()) rc.sweep.beta = beta;
            if (tpd_opt->count()) rc.sweep.throughput_density = tp_density;
            return pdr_cmd->parsed() ? cmd_sweep_pdr(rc) : cmd_sweep_throughput(rc);
        }
        if (quad_cmd->parsed()) {
            if (fc_opt->count()) rc.quadrant.fault_counts = fault_counts;
            if (qt_opt->count()) rc.quadrant.trials = quad_trials;
            if (qep_opt->count()) rc.quadrant.ppo.episodes = quad_episodes;
            return cmd_quadrant(rc);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
