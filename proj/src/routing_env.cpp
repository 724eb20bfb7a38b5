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

#include "gaussnet/routing_env.hpp"

#include "gaussnet/errors.hpp"

namespace gaussnet {

Observation make_observation(const Topology& t, int current, int dst, const FaultSet& faults) {
    const double scale = t.coord_scale();
    const auto c = t.coord(current);
    const auto d = t.coord(dst);
    const auto& nb = t.neighbors(current);
    return {static_cast<double>(c.re) / scale,
            static_cast<double>(c.im) / scale,
            static_cast<double>(d.re) / scale,
            static_cast<double>(d.im) / scale,
            faults.contains(nb[0]) ? 1.0 : 0.0,
            faults.contains(nb[1]) ? 1.0 : 0.0,
            faults.contains(nb[2]) ? 1.0 : 0.0,
            faults.contains(nb[3]) ? 1.0 : 0.0};
}

RoutingEnv::RoutingEnv(const Topology& t, const FaultSet& faults)
    : topology_(&t), faults_(&faults), max_steps_(2 * t.n_nodes()) {}

Observation RoutingEnv::reset(int src, int dst) {
    if (!topology_->contains(src) || !topology_->contains(dst)) throw ContractError("episode endpoint out of range");
    if (src == dst) throw ContractError("episode requires src != dst");
    if (faults_->contains(src) || faults_->contains(dst)) throw ContractError("episode endpoint is faulty");
    current_ = src;
    dst_ = dst;
    steps_taken_ = 0;
    active_ = true;
    return make_observation(*topology_, current_, dst_, *faults_);
}

StepOutcome RoutingEnv::step(int action) {
    if (!active_) throw ContractError("step called on a finished episode");
    if (action < 0 || action >= kNumActions) throw ContractError("action out of range");

    StepOutcome out;
    const int next = topology_->neighbors(current_)[static_cast<std::size_t>(action)];
    ++steps_taken_;
    if (next == dst_) {
        current_ = next;
        out.reward = kRewardDelivered;
        out.terminated = true;
        out.reached_dst = true;
    } else if (faults_->contains(next)) {
        out.reward = kRewardFault;
        out.terminated = true;
        out.hit_fault = true;
    } else {
        current_ = next;
        out.reward = kRewardHop;
        out.truncated = steps_taken_ >= max_steps_;
    }
    active_ = !(out.terminated || out.truncated);
    out.observation = make_observation(*topology_, current_, dst_, *faults_);
    return out;
}

}  // namespace gaussnet
