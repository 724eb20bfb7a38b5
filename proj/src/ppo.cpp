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

#include "gaussnet/ppo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gaussnet/errors.hpp"
#include "gaussnet/json_io.hpp"
#include "gaussnet/rng.hpp"

namespace gaussnet {

namespace {

bool finite_all(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// log-softmax with max subtraction
std::array<double, kNumActions> log_softmax(std::span<const double> logits) {
    const double mx = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (double z : logits) sum += std::exp(z - mx);
    const double lse = mx + std::log(sum);
    std::array<double, kNumActions> out{};
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = logits[j] - lse;
    return out;
}

void clip_grad_norm(std::span<double> grad, double max_norm) {
    if (max_norm <= 0.0) return;
    double sq = 0.0;
    for (double g : grad) sq += g * g;
    const double norm = std::sqrt(sq);
    if (norm > max_norm) {
        const double scale = max_norm / norm;
        for (double& g : grad) g *= scale;
    }
}

}  // namespace

PolicyParams PolicyParams::create(std::uint64_t seed, int hidden, double input_gain) {
    Rng rng(derive_seed(seed, "policy-init"));
    PolicyParams p{Mlp({kObservationSize, hidden, hidden, kNumActions}), Mlp({kObservationSize, hidden, hidden, 1})};
    p.actor.initialize(rng, 0.01, input_gain);
    p.critic.initialize(rng, 1.0, input_gain);
    return p;
}

bool PolicyParams::all_finite() const { return finite_all(actor.params()) && finite_all(critic.params()); }

double EpsilonGreedy::at(int episode) const {
    if (!enabled) return 0.0;
    return std::max(floor, start * std::pow(decay, episode));
}

void PpoConfig::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("invalid PPO config: " + what); };
    if (!(gamma > 0.0 && gamma <= 1.0)) fail("gamma must lie in (0, 1]");
    if (!(gae_lambda > 0.0 && gae_lambda <= 1.0)) fail("gae_lambda must lie in (0, 1]");
    if (!(clip_epsilon > 0.0 && clip_epsilon < 1.0)) fail("clip_epsilon must lie in (0, 1)");
    if (episodes < 0) fail("episodes must be non-negative");
    if (episodes_per_update < 1) fail("episodes_per_update must be positive");
    if (update_epochs < 1) fail("update_epochs must be positive");
    if (minibatch_size < 1) fail("minibatch_size must be positive");
    if (!(learning_rate > 0.0)) fail("learning_rate must be positive");
    if (hidden < 1) fail("hidden must be positive");
    if (!(reward_scale > 0.0)) fail("reward_scale must be positive");
    if (!(input_gain > 0.0)) fail("input_gain must be positive");
    if (epsilon_greedy.enabled &&
        !(epsilon_greedy.start >= 0.0 && epsilon_greedy.start <= 1.0 && epsilon_greedy.decay > 0.0 &&
          epsilon_greedy.decay <= 1.0 && epsilon_greedy.floor >= 0.0 && epsilon_greedy.floor <= 1.0)) {
        fail("epsilon_greedy parameters out of range");
    }
}

ActionProbs softmax(std::span<const double> logits) {
    const auto logp = log_softmax(logits);
    ActionProbs p{};
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::exp(logp[j]);
    return p;
}

ActionProbs policy_forward(const PolicyParams& params, const Observation& obs) {
    const auto logits = params.actor.forward(obs);
    if (!finite_all(logits)) throw NumericError("policy network produced non-finite logits");
    return softmax(logits);
}

double value_forward(const PolicyParams& params, const Observation& obs) {
    const double v = params.critic.forward(obs)[0];
    if (!std::isfinite(v)) throw NumericError("value network produced a non-finite estimate");
    return v;
}

int argmax_action(const ActionProbs& probs) {
    int best = 0;
    for (int a = 1; a < kNumActions; ++a) {
        if (probs[static_cast<std::size_t>(a)] > probs[static_cast<std::size_t>(best)]) best = a;
    }
    return best;
}

GaeResult compute_gae(std::span<const Transition> trajectory, double gamma, double lambda, double bootstrap_value) {
    const std::size_t n = trajectory.size();
    GaeResult out{std::vector<double>(n), std::vector<double>(n)};
    double running = 0.0;
    for (std::size_t k = n; k-- > 0;) {
        const double next_value = (k + 1 == n) ? bootstrap_value : trajectory[k + 1].value_estimate;
        const double delta = trajectory[k].reward + gamma * next_value - trajectory[k].value_estimate;
        running = delta + gamma * lambda * running;
        out.advantages[k] = running;
        out.returns[k] = running + trajectory[k].value_estimate;
    }
    return out;
}

double clipped_objective(double ratio, double advantage, double clip_epsilon) {
    const double clipped = std::clamp(ratio, 1.0 - clip_epsilon, 1.0 + clip_epsilon);
    return std::min(ratio * advantage, clipped * advantage);
}

void normalize_advantages(std::vector<double>& advantages) {
    if (advantages.size() < 2) return;
    const double n = static_cast<double>(advantages.size());
    const double mean = std::accumulate(advantages.begin(), advantages.end(), 0.0) / n;
    double var = 0.0;
    for (double a : advantages) var += (a - mean) * (a - mean);
    var /= n;
    const double sd = std::sqrt(var);
    for (double& a : advantages) a = sd > 1e-12 ? (a - mean) / sd : a - mean;
}

std::vector<Sample> build_batch(std::span<const Trajectory> trajectories, double gamma, double lambda,
                                double reward_scale) {
    std::vector<Sample> batch;
    std::vector<Transition> scaled;
    for (const auto& traj : trajectories) {
        if (traj.steps.empty()) continue;
        scaled = traj.steps;
        for (auto& s : scaled) s.reward *= reward_scale;
        const auto gae = compute_gae(scaled, gamma, lambda, traj.bootstrap_value);
        for (std::size_t k = 0; k < traj.steps.size(); ++k) {
            const auto& s = traj.steps[k];
            batch.push_back({s.observation, s.action, s.log_prob, gae.advantages[k], gae.returns[k]});
        }
    }
    return batch;
}

LossTerms ppo_loss(const PolicyParams& params, std::span<const Sample> minibatch, const PpoConfig& config,
                   std::span<double> actor_grad, std::span<double> critic_grad) {
    LossTerms terms;
    if (minibatch.empty()) return terms;
    const bool want_grad = !actor_grad.empty() && !critic_grad.empty();
    if (want_grad) {
        std::fill(actor_grad.begin(), actor_grad.end(), 0.0);
        std::fill(critic_grad.begin(), critic_grad.end(), 0.0);
    }
    const double inv_n = 1.0 / static_cast<double>(minibatch.size());
    const double eps = config.clip_epsilon;
    Mlp::Cache actor_cache, critic_cache;

    for (const auto& s : minibatch) {
        const auto logits = params.actor.forward(s.observation, want_grad ? &actor_cache : nullptr);
        const auto logp = log_softmax(logits);
        const auto a = static_cast<std::size_t>(s.action);
        const double ratio = std::exp(logp[a] - s.old_log_prob);
        const double unclipped = ratio * s.advantage;
        const double clipped = std::clamp(ratio, 1.0 - eps, 1.0 + eps) * s.advantage;
        const bool unclipped_active = unclipped <= clipped;
        const double objective = unclipped_active ? unclipped : clipped;

        double entropy = 0.0;
        std::array<double, kNumActions> p{};
        for (std::size_t j = 0; j < p.size(); ++j) {
            p[j] = std::exp(logp[j]);
            entropy -= p[j] * logp[j];
        }

        const double v = params.critic.forward(s.observation, want_grad ? &critic_cache : nullptr)[0];
        const double v_err = v - s.target_return;

        terms.policy_loss -= objective * inv_n;
        terms.value_loss += v_err * v_err * inv_n;
        terms.entropy += entropy * inv_n;
        terms.approx_kl += (s.old_log_prob - logp[a]) * inv_n;
        if (std::abs(ratio - 1.0) > eps) terms.clip_fraction += inv_n;

        if (want_grad) {
            const double d_obj_d_logp = unclipped_active ? unclipped : 0.0;
            std::array<double, kNumActions> d_logits{};
            for (std::size_t j = 0; j < d_logits.size(); ++j) {
                const double d_logp_a = (j == a ? 1.0 : 0.0) - p[j];
                const double d_entropy = -p[j] * (logp[j] + entropy);
                d_logits[j] = inv_n * (-d_obj_d_logp * d_logp_a - config.entropy_coef * d_entropy);
            }
            params.actor.backward(actor_cache, d_logits, actor_grad);
            const double d_v = inv_n * config.value_coef * 2.0 * v_err;
            params.critic.backward(critic_cache, std::span<const double>(&d_v, 1), critic_grad);
        }
    }
    terms.total = terms.policy_loss + config.value_coef * terms.value_loss - config.entropy_coef * terms.entropy;
    return terms;
}

Adam::Adam(std::size_t n, double beta1, double beta2, double eps)
    : m_(n, 0.0), v_(n, 0.0), beta1_(beta1), beta2_(beta2), eps_(eps) {}

void Adam::step(std::span<double> params, std::span<const double> grad, double learning_rate) {
    ++t_;
    const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    for (std::size_t k = 0; k < params.size(); ++k) {
        m_[k] = beta1_ * m_[k] + (1.0 - beta1_) * grad[k];
        v_[k] = beta2_ * v_[k] + (1.0 - beta2_) * grad[k] * grad[k];
        params[k] -= learning_rate * (m_[k] / c1) / (std::sqrt(v_[k] / c2) + eps_);
    }
}

PpoLearner::PpoLearner(PolicyParams params, const PpoConfig& config)
    : params_(std::move(params)),
      config_(config),
      actor_opt_(params_.actor.param_count()),
      critic_opt_(params_.critic.param_count()) {}

UpdateDiagnostics PpoLearner::update(std::vector<Sample> batch, Rng& rng, double learning_rate) {
    UpdateDiagnostics diag;
    if (batch.empty()) return diag;

    std::vector<double> adv(batch.size());
    for (std::size_t k = 0; k < batch.size(); ++k) adv[k] = batch[k].advantage;
    normalize_advantages(adv);
    for (std::size_t k = 0; k < batch.size(); ++k) batch[k].advantage = adv[k];

    const PolicyParams snapshot = params_;
    std::vector<double> actor_grad(params_.actor.param_count());
    std::vector<double> critic_grad(params_.critic.param_count());
    std::vector<std::size_t> order(batch.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto mb = std::min(batch.size(), static_cast<std::size_t>(config_.minibatch_size));
    std::vector<Sample> minibatch;

    for (int epoch = 0; epoch < config_.update_epochs; ++epoch) {
        for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
        for (std::size_t start = 0; start < order.size(); start += mb) {
            const auto stop = std::min(order.size(), start + mb);
            minibatch.clear();
            for (std::size_t k = start; k < stop; ++k) minibatch.push_back(batch[order[k]]);

            const auto terms = ppo_loss(params_, minibatch, config_, actor_grad, critic_grad);
            if (!std::isfinite(terms.total) || !finite_all(actor_grad) || !finite_all(critic_grad)) {
                params_ = snapshot;
                throw NumericError("non-finite PPO loss; update aborted");
            }
            clip_grad_norm(actor_grad, config_.max_grad_norm);
            clip_grad_norm(critic_grad, config_.max_grad_norm);
            actor_opt_.step(params_.actor.params(), actor_grad, learning_rate);
            critic_opt_.step(params_.critic.params(), critic_grad, learning_rate);

            diag.policy_loss += terms.policy_loss;
            diag.value_loss += terms.value_loss;
            diag.entropy += terms.entropy;
            diag.approx_kl += terms.approx_kl;
            diag.clip_fraction += terms.clip_fraction;
            ++diag.minibatches;
        }
    }
    if (!params_.all_finite()) {
        params_ = snapshot;
        throw NumericError("non-finite parameters after PPO update; update aborted");
    }
    const double inv = 1.0 / diag.minibatches;
    diag.policy_loss *= inv;
    diag.value_loss *= inv;
    diag.entropy *= inv;
    diag.approx_kl *= inv;
    diag.clip_fraction *= inv;
    return diag;
}

namespace {

std::pair<int, int> draw_pair(const Topology& t, const FaultSet& faults, bool reachable_only, Rng& rng) {
    std::vector<int> live;
    for (int v = 0; v < t.n_nodes(); ++v) {
        if (!faults.contains(v)) live.push_back(v);
    }
    if (live.size() < 2) throw std::invalid_argument("fewer than two live nodes to route between");
    constexpr int kMaxRedraws = 1000;
    std::pair<int, int> pair{};
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const int i = rng.index(static_cast<int>(live.size()));
        int j = rng.index(static_cast<int>(live.size()) - 1);
        if (j >= i) ++j;
        pair = {live[static_cast<std::size_t>(i)], live[static_cast<std::size_t>(j)]};
        if (!reachable_only || bfs_distance(t, pair.first, pair.second, faults)) break;
    }
    return pair;
}

}  // namespace

EpisodeSampler make_pair_sampler(const Topology& t, PairSamplerOptions options) {
    struct State {
        std::shared_ptr<const FaultSet> faults;
        int block = -1;
    };
    auto state = std::make_shared<State>();
    state->faults = options.fixed ? options.fixed : std::make_shared<const FaultSet>(FaultSet::none(t.n_nodes()));
    return [&t, options, state](Rng& rng, int episode) {
        if (options.resample_every > 0) {
            const int block = episode / options.resample_every;
            if (block != state->block) {
                FaultSpec spec = options.fault_spec;
                spec.seed = derive_seed(options.fault_spec.seed, "training-faults", static_cast<std::uint64_t>(block));
                state->faults = std::make_shared<const FaultSet>(inject_faults(t, spec));
                state->block = block;
            }
        }
        const auto [src, dst] = draw_pair(t, *state->faults, options.reachable_only, rng);
        return EpisodeSetup{&t, state->faults, src, dst};
    };
}

EpisodeSampler make_curriculum_sampler(std::vector<const Topology*> topologies, PairSamplerOptions options) {
    if (topologies.empty()) throw std::invalid_argument("curriculum needs at least one topology");
    std::vector<EpisodeSampler> per_topology;
    for (const auto* t : topologies) per_topology.push_back(make_pair_sampler(*t, options));
    return [per_topology](Rng& rng, int episode) {
        return per_topology[static_cast<std::size_t>(episode) % per_topology.size()](rng, episode);
    };
}

EpisodeSampler make_fixed_sampler(const Topology& t, std::shared_ptr<const FaultSet> faults, int src, int dst) {
    return [&t, faults, src, dst](Rng&, int) { return EpisodeSetup{&t, faults, src, dst}; };
}

EpisodeSampler make_destination_sampler(const Topology& t, std::shared_ptr<const FaultSet> faults, int dst) {
    if (!t.contains(dst) || faults->contains(dst)) throw ContractError("destination must be a live node");
    const auto dist = bfs_all(t, dst, *faults);
    std::vector<int> starts;
    for (int v = 0; v < t.n_nodes(); ++v) {
        if (v != dst && dist[static_cast<std::size_t>(v)] > 0) starts.push_back(v);
    }
    if (starts.empty()) throw std::invalid_argument("no live node can reach the destination");
    return [&t, faults, dst, starts](Rng& rng, int) {
        return EpisodeSetup{&t, faults, starts[static_cast<std::size_t>(rng.index(static_cast<int>(starts.size())))], dst};
    };
}

std::vector<double> moving_average(std::span<const double> values, int window) {
    std::vector<double> out(values.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        sum += values[k];
        if (k >= static_cast<std::size_t>(window)) sum -= values[k - static_cast<std::size_t>(window)];
        out[k] = sum / static_cast<double>(std::min<std::size_t>(k + 1, static_cast<std::size_t>(window)));
    }
    return out;
}

TrainingReport train(const Topology& t, const PpoConfig& config, const EpisodeSampler& sampler,
                     std::optional<PolicyParams> initial) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();
    PpoLearner learner(initial ? std::move(*initial) : PolicyParams::create(config.seed, config.hidden, config.input_gain),
                       config);
    Rng rollout_rng(derive_seed(config.seed, "ppo-rollout"));
    Rng sampler_rng(derive_seed(config.seed, "episode-sampler"));
    Rng update_rng(derive_seed(config.seed, "ppo-minibatch"));

    TrainingReport report;
    report.returns.reserve(static_cast<std::size_t>(config.episodes));
    std::vector<Trajectory> pending;

    for (int episode = 0; episode < config.episodes; ++episode) {
        try {
            const auto setup = sampler(sampler_rng, episode);
            const Topology& topo = setup.topology ? *setup.topology : t;
            RoutingEnv env(topo, *setup.faults);
            auto obs = env.reset(setup.src, setup.dst);
            const double epsilon = config.epsilon_greedy.at(episode);
            const auto& params = learner.params();

            Trajectory traj;
            double episode_return = 0.0;
            while (true) {
                const auto probs = policy_forward(params, obs);
                int action;
                if (epsilon > 0.0 && rollout_rng.uniform01() < epsilon) {
                    action = rollout_rng.index(kNumActions);
                } else {
                    const double u = rollout_rng.uniform01();
                    double acc = 0.0;
                    action = kNumActions - 1;
                    for (int j = 0; j < kNumActions; ++j) {
                        acc += probs[static_cast<std::size_t>(j)];
                        if (u < acc) {
                            action = j;
                            break;
                        }
                    }
                }
                // behaviour probability of the mixture actually sampled from
                const double behaviour = (1.0 - epsilon) * probs[static_cast<std::size_t>(action)] + epsilon / kNumActions;
                Transition tr{obs, action, std::log(behaviour), 0.0, value_forward(params, obs), false};
                const auto out = env.step(action);
                tr.reward = out.reward;
                tr.terminal_flag = out.terminated;
                traj.steps.push_back(tr);
                episode_return += out.reward;
                obs = out.observation;
                if (out.terminated) break;
                if (out.truncated) {
                    traj.bootstrap_value = value_forward(params, obs);
                    break;
                }
            }
            report.returns.push_back(episode_return);
            pending.push_back(std::move(traj));

            const bool last = episode + 1 == config.episodes;
            if (static_cast<int>(pending.size()) >= config.episodes_per_update || last) {
                const double lr = config.anneal_learning_rate
                                      ? config.learning_rate * (1.0 - static_cast<double>(episode) / config.episodes)
                                      : config.learning_rate;
                learner.update(build_batch(pending, config.gamma, config.gae_lambda, config.reward_scale), update_rng,
                               lr);
                pending.clear();
            }
        } catch (const NumericError& e) {
            throw NumericError("training aborted at episode " + std::to_string(episode) + ": " + e.what());
        }
    }
    report.smoothed_returns = moving_average(report.returns, kSmoothingWindow);
    report.params = learner.params();
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

RouteResult route_rl(const Topology& t, const PolicyParams& params, int src, int dst, const FaultSet& faults) {
    if (!t.contains(src) || !t.contains(dst)) throw ContractError("route endpoint out of range");
    if (faults.contains(src) || faults.contains(dst)) throw ContractError("route endpoint is faulty");
    RouteResult result;
    result.path.push_back(src);
    if (src == dst) {
        result.status = RouteStatus::Success;
        result.hops = 0;
        return result;
    }
    RoutingEnv env(t, faults);
    auto obs = env.reset(src, dst);
    while (true) {
        const auto out = env.step(argmax_action(policy_forward(params, obs)));
        if (out.hit_fault) {
            result.status = RouteStatus::Stuck;
            return result;
        }
        result.path.push_back(env.current());
        if (out.reached_dst) {
            result.status = RouteStatus::Success;
            result.hops = env.steps_taken();
            return result;
        }
        if (out.truncated) {
            result.status = RouteStatus::MaxHopsExceeded;
            return result;
        }
        obs = out.observation;
    }
}

namespace {

nlohmann::json mlp_to_json(const Mlp& net) {
    nlohmann::json layers = nlohmann::json::array();
    for (int l = 0; l < net.n_layers(); ++l) {
        const auto rows = net.sizes()[static_cast<std::size_t>(l) + 1];
        const auto cols = net.sizes()[static_cast<std::size_t>(l)];
        const auto* w = net.params().data() + net.weight_offset(l);
        const auto* b = net.params().data() + net.bias_offset(l);
        layers.push_back({{"rows", rows},
                          {"cols", cols},
                          {"weight", std::vector<double>(w, w + static_cast<std::ptrdiff_t>(rows) * cols)},
                          {"bias", std::vector<double>(b, b + rows)}});
    }
    return {{"sizes", net.sizes()}, {"layers", layers}};
}

Mlp mlp_from_json(const nlohmann::json& j) {
    Mlp net(j.at("sizes").get<std::vector<int>>());
    const auto& layers = j.at("layers");
    if (static_cast<int>(layers.size()) != net.n_layers()) throw std::runtime_error("policy file: layer count mismatch");
    for (int l = 0; l < net.n_layers(); ++l) {
        const auto& layer = layers.at(static_cast<std::size_t>(l));
        const auto w = layer.at("weight").get<std::vector<double>>();
        const auto b = layer.at("bias").get<std::vector<double>>();
        const auto rows = static_cast<std::size_t>(net.sizes()[static_cast<std::size_t>(l) + 1]);
        const auto cols = static_cast<std::size_t>(net.sizes()[static_cast<std::size_t>(l)]);
        if (w.size() != rows * cols || b.size() != rows) throw std::runtime_error("policy file: layer shape mismatch");
        std::copy(w.begin(), w.end(), net.params().begin() + static_cast<std::ptrdiff_t>(net.weight_offset(l)));
        std::copy(b.begin(), b.end(), net.params().begin() + static_cast<std::ptrdiff_t>(net.bias_offset(l)));
    }
    return net;
}

}  // namespace

void save_policy(std::ostream& out, const PolicyFile& file) {
    nlohmann::json j;
    j["format"] = "gaussnet-policy";
    j["version"] = kPolicyFormatVersion;
    j["alpha"] = {{"re", file.alpha.re}, {"im", file.alpha.im}};
    j["master_seed"] = file.master_seed;
    j["config"] = file.config;
    j["actor"] = mlp_to_json(file.params.actor);
    j["critic"] = mlp_to_json(file.params.critic);
    out << j.dump(1) << '\n';
}

PolicyFile load_policy(std::istream& in) {
    const auto j = nlohmann::json::parse(in);
    if (j.value("format", "") != "gaussnet-policy") throw std::runtime_error("not a gaussnet policy file");
    const int version = j.at("version").get<int>();
    if (version != kPolicyFormatVersion) {
        throw std::runtime_error("unsupported policy file version " + std::to_string(version));
    }
    PolicyFile file;
    file.alpha = {j.at("alpha").at("re").get<std::int64_t>(), j.at("alpha").at("im").get<std::int64_t>()};
    file.master_seed = j.at("master_seed").get<std::uint64_t>();
    file.config = j.at("config").get<PpoConfig>();
    file.params.actor = mlp_from_json(j.at("actor"));
    file.params.critic = mlp_from_json(j.at("critic"));
    if (file.params.actor.sizes().front() != kObservationSize || file.params.actor.sizes().back() != kNumActions ||
        file.params.critic.sizes().front() != kObservationSize || file.params.critic.sizes().back() != 1) {
        throw std::runtime_error("policy file: network shape does not match the routing task");
    }
    return file;
}

}  // namespace gaussnet
