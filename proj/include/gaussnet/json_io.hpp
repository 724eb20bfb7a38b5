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

// JSON mappings for configuration records. Missing keys keep their defaults,
// so partial config files are accepted.

#include <json.hpp>

#include "gaussnet/experiments.hpp"
#include "gaussnet/faults.hpp"
#include "gaussnet/ppo.hpp"

namespace gaussnet {

inline void to_json(nlohmann::json& j, const EpsilonGreedy& e) {
    j = {{"enabled", e.enabled}, {"start", e.start}, {"decay", e.decay}, {"floor", e.floor}};
}

inline void from_json(const nlohmann::json& j, EpsilonGreedy& e) {
    e.enabled = j.value("enabled", e.enabled);
    e.start = j.value("start", e.start);
    e.decay = j.value("decay", e.decay);
    e.floor = j.value("floor", e.floor);
}

inline void to_json(nlohmann::json& j, const PpoConfig& c) {
    j = {{"gamma", c.gamma},
         {"gae_lambda", c.gae_lambda},
         {"clip_epsilon", c.clip_epsilon},
         {"episodes", c.episodes},
         {"episodes_per_update", c.episodes_per_update},
         {"update_epochs", c.update_epochs},
         {"minibatch_size", c.minibatch_size},
         {"learning_rate", c.learning_rate},
         {"entropy_coef", c.entropy_coef},
         {"value_coef", c.value_coef},
         {"max_grad_norm", c.max_grad_norm},
         {"reward_scale", c.reward_scale},
         {"hidden", c.hidden},
         {"input_gain", c.input_gain},
         {"anneal_learning_rate", c.anneal_learning_rate},
         {"epsilon_greedy", c.epsilon_greedy},
         {"seed", c.seed}};
}

inline void from_json(const nlohmann::json& j, PpoConfig& c) {
    c.gamma = j.value("gamma", c.gamma);
    c.gae_lambda = j.value("gae_lambda", c.gae_lambda);
    c.clip_epsilon = j.value("clip_epsilon", c.clip_epsilon);
    c.episodes = j.value("episodes", c.episodes);
    c.episodes_per_update = j.value("episodes_per_update", c.episodes_per_update);
    c.update_epochs = j.value("update_epochs", c.update_epochs);
    c.minibatch_size = j.value("minibatch_size", c.minibatch_size);
    c.learning_rate = j.value("learning_rate", c.learning_rate);
    c.entropy_coef = j.value("entropy_coef", c.entropy_coef);
    c.value_coef = j.value("value_coef", c.value_coef);
    c.max_grad_norm = j.value("max_grad_norm", c.max_grad_norm);
    c.reward_scale = j.value("reward_scale", c.reward_scale);
    c.hidden = j.value("hidden", c.hidden);
    c.input_gain = j.value("input_gain", c.input_gain);
    c.anneal_learning_rate = j.value("anneal_learning_rate", c.anneal_learning_rate);
    if (j.contains("epsilon_greedy")) j.at("epsilon_greedy").get_to(c.epsilon_greedy);
    c.seed = j.value("seed", c.seed);
}

inline void to_json(nlohmann::json& j, const FaultSpec& s) {
    j = {{"mode", std::string(to_string(s.mode))},
         {"density", s.density},
         {"seed", s.seed},
         {"cluster_sigma", s.cluster_sigma},
         {"num_clusters", s.num_clusters}};
}

inline void from_json(const nlohmann::json& j, FaultSpec& s) {
    if (j.contains("mode")) s.mode = parse_fault_mode(j.at("mode").get<std::string>());
    s.density = j.value("density", s.density);
    s.seed = j.value("seed", s.seed);
    s.cluster_sigma = j.value("cluster_sigma", s.cluster_sigma);
    s.num_clusters = j.value("num_clusters", s.num_clusters);
}

inline void to_json(nlohmann::json& j, const SweepConfig& c) {
    j = {{"alpha", to_string(c.alpha)},
         {"densities", c.densities},
         {"trials_per_density", c.trials_per_density},
         {"packets_per_trial", c.packets_per_trial},
         {"loads", c.loads},
         {"beta", c.beta ? nlohmann::json(*c.beta) : nlohmann::json(nullptr)},
         {"throughput_density", c.throughput_density},
         {"master_seed", c.master_seed},
         {"ppo", c.ppo},
         {"train_episodes", c.train_episodes},
         {"fault_mode", std::string(to_string(c.fault_mode))}};
}

inline void from_json(const nlohmann::json& j, SweepConfig& c) {
    if (j.contains("alpha")) c.alpha = parse_gaussian(j.at("alpha").get<std::string>());
    c.densities = j.value("densities", c.densities);
    c.trials_per_density = j.value("trials_per_density", c.trials_per_density);
    c.packets_per_trial = j.value("packets_per_trial", c.packets_per_trial);
    c.loads = j.value("loads", c.loads);
    if (j.contains("beta")) {
        if (j.at("beta").is_null())
            c.beta.reset();
        else
            c.beta = j.at("beta").get<double>();
    }
    c.throughput_density = j.value("throughput_density", c.throughput_density);
    c.master_seed = j.value("master_seed", c.master_seed);
    if (j.contains("ppo")) j.at("ppo").get_to(c.ppo);
    c.train_episodes = j.value("train_episodes", c.train_episodes);
    if (j.contains("fault_mode")) c.fault_mode = parse_fault_mode(j.at("fault_mode").get<std::string>());
}

inline void to_json(nlohmann::json& j, const QuadrantConfig& c) {
    j = {{"alpha", to_string(c.alpha)},
         {"fault_counts", c.fault_counts},
         {"trials", c.trials},
         {"master_seed", c.master_seed},
         {"ppo", c.ppo}};
}

inline void from_json(const nlohmann::json& j, QuadrantConfig& c) {
    if (j.contains("alpha")) c.alpha = parse_gaussian(j.at("alpha").get<std::string>());
    c.fault_counts = j.value("fault_counts", c.fault_counts);
    c.trials = j.value("trials", c.trials);
    c.master_seed = j.value("master_seed", c.master_seed);
    if (j.contains("ppo")) j.at("ppo").get_to(c.ppo);
}

}  // namespace gaussnet
