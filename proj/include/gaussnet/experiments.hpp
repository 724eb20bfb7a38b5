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


#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussnet/faults.hpp"
#include "gaussnet/ppo.hpp"
#include "gaussnet/routing.hpp"
#include "gaussnet/topology.hpp"

namespace gaussnet {

enum class PolicyKind { Greedy, Rl, Bfs };
std::string_view to_string(PolicyKind kind);

/// Plain "%g" with 6 significant digits, the number format of every CSV.
std::string format_number(double value);

/// Inclusive arithmetic range lo:hi:step, e.g. "0:0.4:0.05" -> 9 values.
/// A single number or a comma-separated list is also accepted.
std::vector<double> parse_range(std::string_view text);

/// Mean and sample standard deviation / sqrt(n) (0 for n < 2).
double mean_of(std::span<const double> values);
double stderr_of(std::span<const double> values);

using Router = std::function<RouteResult(int src, int dst)>;

struct EvalResult {
    double pdr = 0.0;
    std::vector<int> hops;  ///< delivered packets only
    int n_delivered = 0;
    int n_packets = 0;

    double mean_hops() const;
};

/// Routes every pair and counts deliveries. An empty pair list gives pdr 0.
EvalResult evaluate_policy(const Router& router, std::span<const std::pair<int, int>> pairs);

/// `count` ordered pairs drawn uniformly among the live nodes with src != dst.
std::vector<std::pair<int, int>> sample_pairs(const FaultSet& faults, int count, Rng& rng);

/// Shares trained policies between trials whose fault layout (and endpoint
/// key) coincide. Thread safe; concurrent requests for one key train once.
class PolicyCache {
public:
    using Trainer = std::function<PolicyParams()>;
    std::shared_ptr<const PolicyParams> get_or_train(const std::vector<int>& key, const Trainer& trainer);
    std::size_t size() const;

private:
    struct Entry {
        std::once_flag once;
        std::shared_ptr<const PolicyParams> params;
        std::exception_ptr error;
    };
    mutable std::mutex mu_;
    std::map<std::vector<int>, std::shared_ptr<Entry>> entries_;
};

/// Hash of a node list, used to derive per-layout training seeds.
std::uint64_t key_hash(std::span<const int> key);

/// Training settings for sweep trials: entropy_coef 0.1 (see
/// scenario_ppo_config for the reason).
PpoConfig sweep_ppo_config();

struct SweepConfig {
    GaussianInt alpha{3, 4};
    std::vector<double> densities{0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40};
    int trials_per_density = 20;
    int packets_per_trial = 200;
    std::vector<double> loads{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    /// Throughput decay; calibrated from the run when absent.
    std::optional<double> beta;
    double throughput_density = 0.2;
    std::uint64_t master_seed = 42;
    /// Training settings for the per-trial agents; `episodes` is replaced
    /// by train_episodes and `seed` is derived per fault layout.
    PpoConfig ppo = sweep_ppo_config();
    int train_episodes = 3000;
    FaultMode fault_mode = FaultMode::Uniform;

    void validate() const;
};

/// One (fault set, pair list) draw evaluated with both routers.
struct TrialResult {
    double density = 0.0;
    int trial = 0;
    std::uint64_t fault_seed = 0;
    std::uint64_t pair_seed = 0;
    std::vector<int> faults;
    double reachable_fraction = 0.0;
    EvalResult greedy;
    EvalResult rl;

    const EvalResult& result(PolicyKind kind) const { return kind == PolicyKind::Rl ? rl : greedy; }
};

struct ExecOptions {
    int jobs = 0;                 ///< 0 = hardware concurrency
    std::ostream* log = nullptr;  ///< progress lines, serialized
};

/// trials_per_density trials at one density. Seeds depend only on the master
/// seed, the density value and the trial index.
std::vector<TrialResult> run_trials(const Topology& t, const SweepConfig& cfg, double density,
                                    const ExecOptions& exec = {}, PolicyCache* cache = nullptr);

struct MetricsRecord {
    double density = 0.0;
    PolicyKind policy = PolicyKind::Greedy;
    double pdr_mean = 0.0;
    double pdr_stderr = 0.0;
    std::optional<double> adaptive_score;
    double mean_hops_delivered = 0.0;
    double reachable_fraction = 0.0;
    int trials = 0;
};

struct PdrSweep {
    std::vector<TrialResult> trials;
    std::vector<MetricsRecord> records;  ///< per density: greedy then rl
};

PdrSweep run_pdr_sweep(const SweepConfig& cfg, const ExecOptions& exec = {});

/// Folds trial results into per-(density, policy) records.
std::vector<MetricsRecord> aggregate_pdr(std::span<const TrialResult> trials);

/// pdr_at_density / pdr_at_zero clamped to [0, 1.05]; absent when
/// pdr_at_zero is 0.
std::optional<double> adaptive_score(double pdr_at_density, double pdr_at_zero);

/// (1 / total) * sum over delivered packets of exp(-beta * load * hops).
double normalized_throughput(std::span<const int> delivered_hops, int total_packets, double load, double beta);

struct BetaAnchors {
    double load = 0.1;
    double greedy = 0.64;
    double rl = 0.72;
};

/// Beta minimizing the squared distance of the mean greedy and RL
/// throughput at anchors.load to the two anchor values.
double calibrate_beta(std::span<const TrialResult> trials, const BetaAnchors& anchors = {});

struct ThroughputRecord {
    double load = 0.0;
    PolicyKind policy = PolicyKind::Greedy;
    double mean = 0.0;
    double stderr_ = 0.0;
};

std::vector<ThroughputRecord> throughput_records(std::span<const TrialResult> trials, std::span<const double> loads,
                                                 double beta);

struct ThroughputSweep {
    double beta = 0.0;
    bool calibrated = false;
    std::vector<TrialResult> trials;
    std::vector<ThroughputRecord> records;  ///< per load: greedy then rl
};

ThroughputSweep run_throughput_sweep(const SweepConfig& cfg, const ExecOptions& exec = {});

/// Training settings for single-pair scenarios (quadrant study, detour
/// demo): 1000 episodes and entropy_coef 0.3. With the weaker bonus the
/// policy often settles on the first delivering route instead of the
/// shortest one.
PpoConfig scenario_ppo_config();

struct QuadrantConfig {
    GaussianInt alpha{3, 4};
    std::vector<int> fault_counts{1, 2, 3};
    int trials = 200;
    std::uint64_t master_seed = 42;
    PpoConfig ppo = scenario_ppo_config();  ///< seed derived per (destination, fault layout)

    void validate() const;
};

struct QuadrantRecord {
    int fault_count = 0;
    PolicyKind policy = PolicyKind::Greedy;
    double avg_hops = 0.0;
    double delivery_rate = 0.0;
    int trials = 0;
    int packets = 0;
};

/// Source node 0, every first-quadrant node as destination. Each trial puts
/// `f` faults uniformly on the first-quadrant nodes other than the current
/// destination. Averages are over delivered packets; the BFS rows give the
/// optimum for reference.
std::vector<QuadrantRecord> quadrant_study(const QuadrantConfig& cfg, const ExecOptions& exec = {});

struct DetourRow {
    int fault_node = 0;
    GaussianInt fault_coord{};
    std::optional<int> bfs_hops;
    RouteResult greedy;
    RouteResult rl;
};

struct DetourReport {
    int src = 0;
    int dst = 0;
    int baseline_bfs = 0;
    RouteResult baseline_greedy;
    RouteResult baseline_rl;
    std::vector<DetourRow> rows;  ///< one per single-fault placement

    /// Placements where greedy takes more hops than RL (failures count as
    /// infinitely long).
    std::vector<const DetourRow*> rl_wins() const;
};

/// Exhaustive single-fault scan between src and dst. RL policies are trained
/// per placement on the fixed pair.
DetourReport detour_demo(const Topology& t, int src, int dst, const PpoConfig& ppo, std::uint64_t master_seed,
                         const ExecOptions& exec = {});

/// Summary of a training curve used for the convergence check.
struct ConvergenceSummary {
    double head_mean = 0.0;     ///< mean smoothed return over episodes 1..50
    double tail_mean = 0.0;     ///< mean smoothed return over the last 50 episodes
    double at_checkpoint = 0.0; ///< smoothed return at the checkpoint episode
    int first_reach = -1;       ///< first full-window episode (1-based) with smoothed >= 0.9 * tail_mean, -1 if never
    bool rising = false;        ///< tail_mean > head_mean
    bool early = false;         ///< tail_mean > 0 and 0 < first_reach <= checkpoint
};

ConvergenceSummary summarize_convergence(std::span<const double> smoothed, int checkpoint = 250);

// CSV writers; numbers use format_number.
void write_pdr_raw_csv(std::ostream& out, std::span<const TrialResult> trials);
void write_pdr_aggregate_csv(std::ostream& out, std::span<const MetricsRecord> records);
/// density,trial,fault_seed,pair_seed,reachable_fraction,faults (space separated)
void write_trial_log_csv(std::ostream& out, std::span<const TrialResult> trials);
void write_throughput_csv(std::ostream& out, std::span<const ThroughputRecord> records);
void write_quadrant_csv(std::ostream& out, std::span<const QuadrantRecord> records);
/// fault_node,re,im,bfs_hops,greedy_hops,rl_hops (-1 = not delivered / unreachable)
void write_detour_csv(std::ostream& out, const DetourReport& report);
void write_reward_csv(std::ostream& out, const TrainingReport& report);

}  // namespace gaussnet
