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


#include "gaussnet/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gaussnet/errors.hpp"
#include "gaussnet/parallel.hpp"
#include "gaussnet/rng.hpp"

namespace gaussnet {

namespace {

void fail(const std::string& what) { throw std::invalid_argument(what); }

class LogSink {
public:
    explicit LogSink(std::ostream* out) : out_(out) {}
    void line(const std::string& text) {
        if (!out_) return;
        std::lock_guard lock(mu_);
        *out_ << text << '\n' << std::flush;
    }

private:
    std::ostream* out_;
    std::mutex mu_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t density_key(std::uint64_t master, double density) {
    return derive_seed(master, "density", static_cast<std::uint64_t>(std::llround(density * 1e6)));
}

std::vector<int> first_quadrant(const Topology& t) {
    std::vector<int> q;
    for (int v = 0; v < t.n_nodes(); ++v)
        if (quadrant_of(v, t) == Quadrant::Q1) q.push_back(v);
    return q;
}

}  // namespace

std::string_view to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::Greedy: return "greedy";
        case PolicyKind::Rl: return "rl";
        case PolicyKind::Bfs: return "bfs";
    }
    return "?";
}

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    std::ostringstream os;
    os.precision(6);
    os << value;
    return os.str();
}

std::vector<double> parse_range(std::string_view text) {
    auto number = [&](std::string_view s) {
        const std::string str(s);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(str, &used);
        } catch (const std::exception&) {
            fail("bad number '" + str + "' in '" + std::string(text) + "'");
        }
        if (used != str.size()) fail("bad number '" + str + "' in '" + std::string(text) + "'");
        return v;
    };
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        const auto a = text.find(':');
        const auto b = text.find(':', a + 1);
        if (b == std::string_view::npos) fail("range must be lo:hi:step, got '" + std::string(text) + "'");
        const double lo = number(text.substr(0, a));
        const double hi = number(text.substr(a + 1, b - a - 1));
        const double step = number(text.substr(b + 1));
        if (!(step > 0.0) || hi < lo) fail("empty range '" + std::string(text) + "'");
        const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (long i = 0; i < n; ++i) out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e10) / 1e10);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(number(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double mean_of(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double stderr_of(std::span<const double> values) {
    const auto n = values.size();
    if (n < 2) return 0.0;
    const double m = mean_of(values);
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
}

double EvalResult::mean_hops() const {
    if (hops.empty()) return 0.0;
    return std::accumulate(hops.begin(), hops.end(), 0.0) / static_cast<double>(hops.size());
}

EvalResult evaluate_policy(const Router& router, std::span<const std::pair<int, int>> pairs) {
    EvalResult r;
    r.n_packets = static_cast<int>(pairs.size());
    for (const auto& [src, dst] : pairs) {
        const auto route = router(src, dst);
        if (route.delivered()) r.hops.push_back(route.hops);
    }
    r.n_delivered = static_cast<int>(r.hops.size());
    r.pdr = r.n_packets == 0 ? 0.0 : static_cast<double>(r.n_delivered) / r.n_packets;
    return r;
}

std::vector<std::pair<int, int>> sample_pairs(const FaultSet& faults, int count, Rng& rng) {
    std::vector<int> live;
    for (int v = 0; v < faults.n_nodes(); ++v)
        if (!faults.contains(v)) live.push_back(v);
    std::vector<std::pair<int, int>> pairs;
    if (live.size() < 2) return pairs;
    const int n = static_cast<int>(live.size());
    pairs.reserve(static_cast<std::size_t>(std::max(0, count)));
    for (int k = 0; k < count; ++k) {
        const int i = rng.index(n);
        int j = rng.index(n - 1);
        if (j >= i) ++j;
        pairs.emplace_back(live[static_cast<std::size_t>(i)], live[static_cast<std::size_t>(j)]);
    }
    return pairs;
}

std::shared_ptr<const PolicyParams> PolicyCache::get_or_train(const std::vector<int>& key, const Trainer& trainer) {
    std::shared_ptr<Entry> entry;
    {
        std::lock_guard lock(mu_);
        auto& slot = entries_[key];
        if (!slot) slot = std::make_shared<Entry>();
        entry = slot;
    }
    std::call_once(entry->once, [&] {
        try {
            entry->params = std::make_shared<const PolicyParams>(trainer());
        } catch (...) {
            entry->error = std::current_exception();
        }
    });
    if (entry->error) std::rethrow_exception(entry->error);
    return entry->params;
}

std::size_t PolicyCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

std::uint64_t key_hash(std::span<const int> key) {
    std::uint64_t h = label_hash("layout");
    for (int v : key) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
    return h;
}

void SweepConfig::validate() const {
    NetworkModulus{alpha};
    if (densities.empty()) fail("densities must not be empty");
    for (double d : densities)
        if (!(d >= 0.0 && d <= 0.5)) fail("densities must lie in [0, 0.5]");
    for (double l : loads)
        if (!(l > 0.0 && l <= 1.0)) fail("loads must lie in (0, 1]");
    if (trials_per_density < 1) fail("trials_per_density must be positive");
    if (packets_per_trial < 1) fail("packets_per_trial must be positive");
    if (beta && !(*beta > 0.0)) fail("beta must be positive");
    if (!(throughput_density >= 0.0 && throughput_density <= 0.5)) fail("throughput density must lie in [0, 0.5]");
    if (train_episodes < 0) fail("train_episodes must be non-negative");
    ppo.validate();
}

std::vector<TrialResult> run_trials(const Topology& t, const SweepConfig& cfg, double density,
                                    const ExecOptions& exec, PolicyCache* cache) {
    cfg.validate();
    PolicyCache local;
    if (!cache) cache = &local;
    LogSink log(exec.log);
    const auto key = density_key(cfg.master_seed, density);
    std::vector<TrialResult> out(static_cast<std::size_t>(cfg.trials_per_density));

    parallel_for(out.size(), exec.jobs, [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        const int trial = static_cast<int>(i);
        TrialResult r;
        r.density = density;
        r.trial = trial;
        try {
            FaultSpec spec;
            spec.mode = cfg.fault_mode;
            spec.density = density;
            spec.seed = r.fault_seed = derive_seed(key, "faults", i);
            auto faults = std::make_shared<const FaultSet>(inject_faults(t, spec));
            r.faults = faults->nodes();

            r.pair_seed = derive_seed(key, "pairs", i);
            Rng pair_rng(r.pair_seed);
            const auto pairs = sample_pairs(*faults, cfg.packets_per_trial, pair_rng);
            int reachable = 0;
            for (const auto& [s, d] : pairs) reachable += bfs_distance(t, s, d, *faults).has_value();
            r.reachable_fraction = pairs.empty() ? 0.0 : static_cast<double>(reachable) / static_cast<double>(pairs.size());

            r.greedy = evaluate_policy([&](int s, int d) { return route_greedy(t, s, d, *faults); }, pairs);

            const auto policy = cache->get_or_train(r.faults, [&] {
                PpoConfig c = cfg.ppo;
                c.episodes = cfg.train_episodes;
                c.seed = derive_seed(cfg.master_seed, "policy", key_hash(r.faults));
                PairSamplerOptions opts;
                opts.fault_spec = spec;
                opts.resample_every = 0;
                opts.fixed = faults;
                return train(t, c, make_pair_sampler(t, opts)).params;
            });
            r.rl = evaluate_policy([&](int s, int d) { return route_rl(t, *policy, s, d, *faults); }, pairs);
        } catch (const std::exception& e) {
            throw std::runtime_error("density " + format_number(density) + " trial " + std::to_string(trial) + ": " +
                                     e.what());
        }
        log.line("density " + format_number(density) + " trial " + std::to_string(trial + 1) + "/" +
                 std::to_string(cfg.trials_per_density) + " greedy " + format_number(r.greedy.pdr) + " rl " +
                 format_number(r.rl.pdr) + " (" + format_number(seconds_since(start)) + " s)");
        out[i] = std::move(r);
    });
    return out;
}

std::optional<double> adaptive_score(double pdr_at_density, double pdr_at_zero) {
    if (!(pdr_at_zero > 0.0)) return std::nullopt;
    return std::clamp(pdr_at_density / pdr_at_zero, 0.0, 1.05);
}

std::vector<MetricsRecord> aggregate_pdr(std::span<const TrialResult> trials) {
    std::vector<double> densities;
    for (const auto& r : trials)
        if (std::find(densities.begin(), densities.end(), r.density) == densities.end()) densities.push_back(r.density);

    std::vector<MetricsRecord> out;
    for (double d : densities) {
        for (auto kind : {PolicyKind::Greedy, PolicyKind::Rl}) {
            std::vector<double> pdrs, reach;
            double hop_sum = 0.0;
            long hop_count = 0;
            for (const auto& r : trials) {
                if (r.density != d) continue;
                const auto& e = r.result(kind);
                pdrs.push_back(e.pdr);
                reach.push_back(r.reachable_fraction);
                hop_sum += std::accumulate(e.hops.begin(), e.hops.end(), 0.0);
                hop_count += static_cast<long>(e.hops.size());
            }
            MetricsRecord m;
            m.density = d;
            m.policy = kind;
            m.pdr_mean = mean_of(pdrs);
            m.pdr_stderr = stderr_of(pdrs);
            m.mean_hops_delivered = hop_count ? hop_sum / static_cast<double>(hop_count) : 0.0;
            m.reachable_fraction = mean_of(reach);
            m.trials = static_cast<int>(pdrs.size());
            out.push_back(m);
        }
    }
    for (auto& m : out) {
        for (const auto& z : out)
            if (z.density == 0.0 && z.policy == m.policy) m.adaptive_score = adaptive_score(m.pdr_mean, z.pdr_mean);
    }
    return out;
}

PdrSweep run_pdr_sweep(const SweepConfig& cfg, const ExecOptions& exec) {
    cfg.validate();
    const auto t = build_topology(NetworkModulus(cfg.alpha));
    PolicyCache cache;
    PdrSweep sweep;
    for (double d : cfg.densities) {
        auto trials = run_trials(t, cfg, d, exec, &cache);
        std::move(trials.begin(), trials.end(), std::back_inserter(sweep.trials));
    }
    sweep.records = aggregate_pdr(sweep.trials);
    return sweep;
}

double normalized_throughput(std::span<const int> delivered_hops, int total_packets, double load, double beta) {
    if (!(load > 0.0 && load <= 1.0)) throw ContractError("load must lie in (0, 1]");
    if (!(beta > 0.0)) throw ContractError("beta must be positive");
    if (total_packets <= 0) return 0.0;
    double sum = 0.0;
    for (int h : delivered_hops) sum += std::exp(-beta * load * h);
    return sum / total_packets;
}

double calibrate_beta(std::span<const TrialResult> trials, const BetaAnchors& anchors) {
    if (trials.empty()) throw ContractError("calibration needs at least one trial");
    auto mean_tp = [&](PolicyKind kind, double beta) {
        double s = 0.0;
        for (const auto& r : trials) {
            const auto& e = r.result(kind);
            s += normalized_throughput(e.hops, e.n_packets, anchors.load, beta);
        }
        return s / static_cast<double>(trials.size());
    };
    auto loss = [&](double beta) {
        const double g = mean_tp(PolicyKind::Greedy, beta) - anchors.greedy;
        const double r = mean_tp(PolicyKind::Rl, beta) - anchors.rl;
        return g * g + r * r;
    };
    // coarse scan, then golden-section refinement around the best grid point
    const double step = 0.01;
    double best = step, best_loss = loss(step);
    for (double b = 2 * step; b <= 50.0; b += step) {
        const double l = loss(b);
        if (l < best_loss) best = b, best_loss = l;
    }
    double lo = std::max(1e-6, best - step), hi = best + step;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = loss(x1), f2 = loss(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            hi = x2, x2 = x1, f2 = f1;
            x1 = hi - phi * (hi - lo), f1 = loss(x1);
        } else {
            lo = x1, x1 = x2, f1 = f2;
            x2 = lo + phi * (hi - lo), f2 = loss(x2);
        }
    }
    return (lo + hi) / 2.0;
}

std::vector<ThroughputRecord> throughput_records(std::span<const TrialResult> trials, std::span<const double> loads,
                                                 double beta) {
    std::vector<ThroughputRecord> out;
    for (double load : loads) {
        for (auto kind : {PolicyKind::Greedy, PolicyKind::Rl}) {
            std::vector<double> values;
            for (const auto& r : trials) {
                const auto& e = r.result(kind);
                values.push_back(normalized_throughput(e.hops, e.n_packets, load, beta));
            }
            out.push_back({load, kind, mean_of(values), stderr_of(values)});
        }
    }
    return out;
}

ThroughputSweep run_throughput_sweep(const SweepConfig& cfg, const ExecOptions& exec) {
    cfg.validate();
    const auto t = build_topology(NetworkModulus(cfg.alpha));
    ThroughputSweep sweep;
    sweep.trials = run_trials(t, cfg, cfg.throughput_density, exec);
    sweep.calibrated = !cfg.beta.has_value();
    sweep.beta = cfg.beta ? *cfg.beta : calibrate_beta(sweep.trials);
    sweep.records = throughput_records(sweep.trials, cfg.loads, sweep.beta);
    return sweep;
}

PpoConfig sweep_ppo_config() {
    PpoConfig c;
    c.entropy_coef = 0.1;
    return c;
}

PpoConfig scenario_ppo_config() {
    PpoConfig c;
    c.episodes = 1000;
    c.entropy_coef = 0.3;
    return c;
}

void QuadrantConfig::validate() const {
    const auto t = build_topology(NetworkModulus(alpha));
    const int q1 = static_cast<int>(first_quadrant(t).size());
    if (trials < 1) fail("trials must be positive");
    for (int f : fault_counts)
        if (f < 0 || f > q1 - 1)
            fail("fault count " + std::to_string(f) + " is infeasible: at most " + std::to_string(q1 - 1) +
                 " first-quadrant nodes besides the destination");
    ppo.validate();
}

std::vector<QuadrantRecord> quadrant_study(const QuadrantConfig& cfg, const ExecOptions& exec) {
    cfg.validate();
    const auto t = build_topology(NetworkModulus(cfg.alpha));
    const auto q1 = first_quadrant(t);
    const int src = 0;
    PolicyCache cache;
    LogSink log(exec.log);

    struct PacketOutcome {
        int greedy = -1, rl = -1, bfs = -1;
    };
    std::vector<QuadrantRecord> out;
    for (int f : cfg.fault_counts) {
        const auto start = std::chrono::steady_clock::now();
        const auto stream = derive_seed(cfg.master_seed, "quadrant-faults", static_cast<std::uint64_t>(f));
        std::vector<std::vector<PacketOutcome>> per_trial(static_cast<std::size_t>(cfg.trials));
        parallel_for(per_trial.size(), exec.jobs, [&](std::size_t i) {
            Rng rng(derive_seed(stream, "trial", i));
            for (int dst : q1) {
                std::vector<int> pool;
                for (int v : q1)
                    if (v != dst && v != src) pool.push_back(v);
                for (int k = 0; k < f; ++k) {
                    const int j = k + rng.index(static_cast<int>(pool.size()) - k);
                    std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
                }
                std::vector<int> nodes(pool.begin(), pool.begin() + f);
                auto faults = std::make_shared<const FaultSet>(t.n_nodes(), nodes);

                PacketOutcome o;
                o.bfs = bfs_distance(t, src, dst, *faults).value_or(-1);
                o.greedy = route_greedy(t, src, dst, *faults).hops;
                std::vector<int> key{dst};
                key.insert(key.end(), faults->nodes().begin(), faults->nodes().end());
                const auto policy = cache.get_or_train(key, [&] {
                    PpoConfig c = cfg.ppo;
                    c.seed = derive_seed(cfg.master_seed, "quadrant-policy", key_hash(key));
                    return train(t, c, make_fixed_sampler(t, faults, src, dst)).params;
                });
                o.rl = route_rl(t, *policy, src, dst, *faults).hops;
                per_trial[i].push_back(o);
            }
        });

        for (auto kind : {PolicyKind::Greedy, PolicyKind::Rl, PolicyKind::Bfs}) {
            long delivered = 0, packets = 0;
            double hop_sum = 0.0;
            for (const auto& trial : per_trial) {
                for (const auto& o : trial) {
                    const int h = kind == PolicyKind::Greedy ? o.greedy : kind == PolicyKind::Rl ? o.rl : o.bfs;
                    ++packets;
                    if (h >= 0) ++delivered, hop_sum += h;
                }
            }
            QuadrantRecord rec;
            rec.fault_count = f;
            rec.policy = kind;
            rec.avg_hops = delivered ? hop_sum / static_cast<double>(delivered) : 0.0;
            rec.delivery_rate = packets ? static_cast<double>(delivered) / static_cast<double>(packets) : 0.0;
            rec.trials = cfg.trials;
            rec.packets = static_cast<int>(packets);
            out.push_back(rec);
        }
        const auto& g = out[out.size() - 3];
        const auto& r = out[out.size() - 2];
        log.line("faults " + std::to_string(f) + ": greedy " + format_number(g.avg_hops) + " rl " +
                 format_number(r.avg_hops) + " (" + std::to_string(cache.size()) + " policies, " +
                 format_number(seconds_since(start)) + " s)");
    }
    return out;
}

std::vector<const DetourRow*> DetourReport::rl_wins() const {
    std::vector<const DetourRow*> wins;
    for (const auto& row : rows) {
        if (!row.rl.delivered()) continue;
        if (!row.greedy.delivered() || row.greedy.hops > row.rl.hops) wins.push_back(&row);
    }
    return wins;
}

DetourReport detour_demo(const Topology& t, int src, int dst, const PpoConfig& ppo, std::uint64_t master_seed,
                         const ExecOptions& exec) {
    if (!t.contains(src) || !t.contains(dst) || src == dst) throw ContractError("detour demo needs distinct endpoints");
    ppo.validate();
    auto train_for = [&](std::shared_ptr<const FaultSet> faults) {
        PpoConfig c = ppo;
        c.seed = derive_seed(master_seed, "detour-policy", key_hash(faults->nodes()));
        return train(t, c, make_fixed_sampler(t, faults, src, dst)).params;
    };

    DetourReport report;
    report.src = src;
    report.dst = dst;
    std::vector<int> placements;
    for (int v = 0; v < t.n_nodes(); ++v)
        if (v != src && v != dst) placements.push_back(v);
    report.rows.resize(placements.size());

    // index 0 is the fault-free baseline, the rest are placements
    parallel_for(placements.size() + 1, exec.jobs, [&](std::size_t i) {
        if (i == 0) {
            auto none = std::make_shared<const FaultSet>(FaultSet::none(t.n_nodes()));
            report.baseline_bfs = bfs_distance(t, src, dst, *none).value_or(-1);
            report.baseline_greedy = route_greedy(t, src, dst, *none);
            const auto params = train_for(none);
            report.baseline_rl = route_rl(t, params, src, dst, *none);
            return;
        }
        const int v = placements[i - 1];
        auto faults = std::make_shared<const FaultSet>(t.n_nodes(), std::vector<int>{v});
        DetourRow row;
        row.fault_node = v;
        row.fault_coord = t.coord(v);
        row.bfs_hops = bfs_distance(t, src, dst, *faults);
        row.greedy = route_greedy(t, src, dst, *faults);
        const auto params = train_for(faults);
        row.rl = route_rl(t, params, src, dst, *faults);
        report.rows[i - 1] = std::move(row);
    });
    return report;
}

ConvergenceSummary summarize_convergence(std::span<const double> smoothed, int checkpoint) {
    const auto n = static_cast<int>(smoothed.size());
    if (n < 100 || checkpoint < 1 || checkpoint > n)
        throw ContractError("convergence summary needs at least 100 episodes and a checkpoint inside the run");
    ConvergenceSummary s;
    s.head_mean = mean_of(smoothed.subspan(0, 50));
    s.tail_mean = mean_of(smoothed.subspan(static_cast<std::size_t>(n - 50)));
    s.at_checkpoint = smoothed[static_cast<std::size_t>(checkpoint - 1)];
    // only full smoothing windows count
    for (int i = kSmoothingWindow - 1; i < n; ++i) {
        if (smoothed[static_cast<std::size_t>(i)] >= 0.9 * s.tail_mean) {
            s.first_reach = i + 1;
            break;
        }
    }
    s.rising = s.tail_mean > s.head_mean;
    s.early = s.tail_mean > 0.0 && s.first_reach > 0 && s.first_reach <= checkpoint;
    return s;
}

void write_pdr_raw_csv(std::ostream& out, std::span<const TrialResult> trials) {
    out << "density,policy,trial,pdr,mean_hops,n_delivered,n_packets\n";
    for (const auto& r : trials) {
        for (auto kind : {PolicyKind::Greedy, PolicyKind::Rl}) {
            const auto& e = r.result(kind);
            out << format_number(r.density) << ',' << to_string(kind) << ',' << r.trial << ',' << format_number(e.pdr)
                << ',' << format_number(e.mean_hops()) << ',' << e.n_delivered << ',' << e.n_packets << '\n';
        }
    }
}

void write_pdr_aggregate_csv(std::ostream& out, std::span<const MetricsRecord> records) {
    out << "density,policy,pdr_mean,pdr_stderr,adaptive_score\n";
    for (const auto& m : records) {
        out << format_number(m.density) << ',' << to_string(m.policy) << ',' << format_number(m.pdr_mean) << ','
            << format_number(m.pdr_stderr) << ',';
        if (m.adaptive_score) out << format_number(*m.adaptive_score);
        out << '\n';
    }
}

void write_trial_log_csv(std::ostream& out, std::span<const TrialResult> trials) {
    out << "density,trial,fault_seed,pair_seed,reachable_fraction,faults\n";
    for (const auto& r : trials) {
        out << format_number(r.density) << ',' << r.trial << ',' << r.fault_seed << ',' << r.pair_seed << ','
            << format_number(r.reachable_fraction) << ',';
        for (std::size_t i = 0; i < r.faults.size(); ++i) out << (i ? " " : "") << r.faults[i];
        out << '\n';
    }
}

void write_throughput_csv(std::ostream& out, std::span<const ThroughputRecord> records) {
    out << "load,policy,throughput_mean,throughput_stderr\n";
    for (const auto& r : records)
        out << format_number(r.load) << ',' << to_string(r.policy) << ',' << format_number(r.mean) << ','
            << format_number(r.stderr_) << '\n';
}

void write_quadrant_csv(std::ostream& out, std::span<const QuadrantRecord> records) {
    out << "fault_count,policy,avg_hops,delivery_rate,trials\n";
    for (const auto& r : records)
        out << r.fault_count << ',' << to_string(r.policy) << ',' << format_number(r.avg_hops) << ','
            << format_number(r.delivery_rate) << ',' << r.trials << '\n';
}

void write_detour_csv(std::ostream& out, const DetourReport& report) {
    out << "fault_node,re,im,bfs_hops,greedy_hops,rl_hops\n";
    out << "-1,,," << report.baseline_bfs << ',' << report.baseline_greedy.hops << ',' << report.baseline_rl.hops
        << '\n';
    for (const auto& row : report.rows)
        out << row.fault_node << ',' << row.fault_coord.re << ',' << row.fault_coord.im << ','
            << row.bfs_hops.value_or(-1) << ',' << row.greedy.hops << ',' << row.rl.hops << '\n';
}

void write_reward_csv(std::ostream& out, const TrainingReport& report) {
    out << "episode,return,smoothed_return\n";
    for (std::size_t i = 0; i < report.returns.size(); ++i)
        out << i + 1 << ',' << format_number(report.returns[i]) << ',' << format_number(report.smoothed_returns[i])
            << '\n';
}

}  // namespace gaussnet
