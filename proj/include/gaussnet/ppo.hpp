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

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussnet/faults.hpp"
#include "gaussnet/mlp.hpp"
#include "gaussnet/routing.hpp"
#include "gaussnet/routing_env.hpp"

namespace gaussnet {

class Rng;

using ActionProbs = std::array<double, kNumActions>;

/// Actor (8 -> 64 -> 64 -> 4 logits) and critic (8 -> 64 -> 64 -> 1).
struct PolicyParams {
    Mlp actor;
    Mlp critic;

    /// Freshly initialized networks; the actor's output layer is scaled down
    /// so the initial policy is close to uniform.
    static PolicyParams create(std::uint64_t seed, int hidden = 64, double input_gain = 1.0);

    bool all_finite() const;

    friend bool operator==(const PolicyParams&, const PolicyParams&) = default;
};

struct EpsilonGreedy {
    bool enabled = false;
    double start = 1.0;
    double decay = 0.995;
    double floor = 0.05;

    /// Exploration rate used during the given (0-based) episode.
    double at(int episode) const;
};

struct PpoConfig {
    double gamma = 0.95;
    double gae_lambda = 0.92;
    double clip_epsilon = 0.2;
    int episodes = 500;
    int episodes_per_update = 20;
    int update_epochs = 10;
    int minibatch_size = 128;
    double learning_rate = 1e-3;
    double entropy_coef = 0.01;
    double value_coef = 0.5;
    double max_grad_norm = 0.5;  ///< global L2 clip per network; <= 0 disables
    double reward_scale = 0.01;  ///< rewards are multiplied by this before advantage estimation
    int hidden = 64;
    double input_gain = 12.0;  ///< init scale of the first layer of both networks
    bool anneal_learning_rate = false;  ///< linear decay to zero over the run
    EpsilonGreedy epsilon_greedy;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument for out-of-range fields.
    void validate() const;
};

struct Transition {
    Observation observation{};
    int action = 0;
    double log_prob = 0.0;
    double reward = 0.0;
    double value_estimate = 0.0;
    bool terminal_flag = false;
};

struct Trajectory {
    std::vector<Transition> steps;
    /// 0 when the episode terminated, otherwise V(successor state).
    double bootstrap_value = 0.0;
};

/// Softmax over the actor's logits. Throws NumericError on NaN/Inf.
ActionProbs policy_forward(const PolicyParams& params, const Observation& obs);

/// Critic estimate V(s).
double value_forward(const PolicyParams& params, const Observation& obs);

ActionProbs softmax(std::span<const double> logits);

/// Lowest index among the maximal probabilities.
int argmax_action(const ActionProbs& probs);

struct GaeResult {
    std::vector<double> advantages;
    std::vector<double> returns;
};

/// delta_t = r_t + gamma V(s_{t+1}) - V(s_t) with V(s_T) = bootstrap_value;
/// A_t = sum_l (gamma lambda)^l delta_{t+l}; returns_t = A_t + V(s_t).
GaeResult compute_gae(std::span<const Transition> trajectory, double gamma, double lambda, double bootstrap_value);

/// Per-sample clipped surrogate min(r A, clip(r, 1-eps, 1+eps) A).
double clipped_objective(double ratio, double advantage, double clip_epsilon);

/// Rescales to zero mean and unit (population) variance; batches with fewer
/// than two entries or zero spread are left centred only.
void normalize_advantages(std::vector<double>& advantages);

/// One training sample after advantage estimation.
struct Sample {
    Observation observation{};
    int action = 0;
    double old_log_prob = 0.0;
    double advantage = 0.0;
    double target_return = 0.0;
};

/// Runs compute_gae on every trajectory with rewards multiplied by
/// reward_scale (critic values are already in scaled units) and flattens.
std::vector<Sample> build_batch(std::span<const Trajectory> trajectories, double gamma, double lambda,
                                double reward_scale = 1.0);

struct LossTerms {
    double policy_loss = 0.0;  ///< -mean clipped objective
    double value_loss = 0.0;   ///< mean (R - V)^2
    double entropy = 0.0;      ///< mean policy entropy
    double total = 0.0;        ///< policy_loss + value_coef * value_loss - entropy_coef * entropy
    double approx_kl = 0.0;
    double clip_fraction = 0.0;
};

/// Total loss over a minibatch and, when the gradient spans are non-empty,
/// its exact gradient with respect to the actor and critic parameters
/// (overwritten, not accumulated).
LossTerms ppo_loss(const PolicyParams& params, std::span<const Sample> minibatch, const PpoConfig& config,
                   std::span<double> actor_grad = {}, std::span<double> critic_grad = {});

/// First/second-moment adaptive optimizer over a flat parameter vector.
class Adam {
public:
    Adam() = default;
    explicit Adam(std::size_t n, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);
    void step(std::span<double> params, std::span<const double> grad, double learning_rate);

private:
    std::vector<double> m_, v_;
    double beta1_ = 0.9, beta2_ = 0.999, eps_ = 1e-8;
    long t_ = 0;
};

struct UpdateDiagnostics {
    double policy_loss = 0.0;
    double value_loss = 0.0;
    double entropy = 0.0;
    double approx_kl = 0.0;
    double clip_fraction = 0.0;
    int minibatches = 0;
};

/// Holds the parameters and optimizer state across successive updates.
class PpoLearner {
public:
    PpoLearner(PolicyParams params, const PpoConfig& config);

    /// Normalizes advantages, then runs update_epochs passes over shuffled
    /// minibatches. A non-finite loss restores the parameters held before
    /// the call and throws NumericError.
    UpdateDiagnostics update(std::vector<Sample> batch, Rng& rng, double learning_rate);
    UpdateDiagnostics update(std::vector<Sample> batch, Rng& rng) { return update(std::move(batch), rng, config_.learning_rate); }

    const PolicyParams& params() const { return params_; }

private:
    PolicyParams params_;
    PpoConfig config_;
    Adam actor_opt_;
    Adam critic_opt_;
};

/// What one training episode routes.
struct EpisodeSetup {
    const Topology* topology = nullptr;
    std::shared_ptr<const FaultSet> faults;
    int src = 0;
    int dst = 0;
};

/// Called once per episode with a dedicated random stream.
using EpisodeSampler = std::function<EpisodeSetup(Rng& rng, int episode)>;

/// Uniform (src, dst) pairs among live nodes. With resample_every > 0 a fresh
/// fault set is drawn from fault_spec every that many episodes (seeds derived
/// from fault_spec.seed); with 0 the fault set `fixed` is used throughout.
/// When reachable_only is set, pairs with no fault-free path are redrawn.
struct PairSamplerOptions {
    FaultSpec fault_spec;
    int resample_every = 50;
    bool reachable_only = true;
    std::shared_ptr<const FaultSet> fixed;
};
EpisodeSampler make_pair_sampler(const Topology& t, PairSamplerOptions options);

/// Cycles through the given topologies between episodes, one pair sampler
/// per topology.
EpisodeSampler make_curriculum_sampler(std::vector<const Topology*> topologies, PairSamplerOptions options);

/// Always the same endpoints and fault set.
EpisodeSampler make_fixed_sampler(const Topology& t, std::shared_ptr<const FaultSet> faults, int src, int dst);

/// Fixed destination and fault set; each episode starts at a uniformly drawn
/// live node that can reach dst.
EpisodeSampler make_destination_sampler(const Topology& t, std::shared_ptr<const FaultSet> faults, int dst);

struct TrainingReport {
    std::vector<double> returns;
    std::vector<double> smoothed_returns;  ///< trailing mean over 20 episodes
    PolicyParams params;
    double wall_seconds = 0.0;
};

inline constexpr int kSmoothingWindow = 20;

std::vector<double> moving_average(std::span<const double> values, int window);

/// On-policy PPO training. Deterministic given config.seed. Numeric failures
/// are rethrown as NumericError naming the episode.
TrainingReport train(const Topology& t, const PpoConfig& config, const EpisodeSampler& sampler,
                     std::optional<PolicyParams> initial = std::nullopt);

/// Deterministic inference: follows the argmax action until dst (Success), a
/// faulty node (Stuck) or 2N steps (MaxHopsExceeded). Paths may revisit nodes.
RouteResult route_rl(const Topology& t, const PolicyParams& params, int src, int dst, const FaultSet& faults);

/// Versioned JSON document with layer shapes, row-major weights, the
/// training config, modulus and master seed.
struct PolicyFile {
    PolicyParams params;
    PpoConfig config;
    GaussianInt alpha{};
    std::uint64_t master_seed = 0;
};

inline constexpr int kPolicyFormatVersion = 1;

void save_policy(std::ostream& out, const PolicyFile& file);
PolicyFile load_policy(std::istream& in);

}  // namespace gaussnet
