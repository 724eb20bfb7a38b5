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

#include "gaussnet/faults.hpp"
#include "gaussnet/topology.hpp"

namespace gaussnet {

inline constexpr int kObservationSize = 8;
inline constexpr int kNumActions = 4;

inline constexpr double kRewardDelivered = 100.0;
inline constexpr double kRewardFault = -50.0;
inline constexpr double kRewardHop = -1.0;

/// [cx, cy, dx, dy, f_up, f_down, f_right, f_left]; coordinates are scaled
/// by Topology::coord_scale() into [-1, 1], flags are 0 or 1.
using Observation = std::array<double, kObservationSize>;

/// Pure function of (topology, current, dst, faults).
Observation make_observation(const Topology& t, int current, int dst, const FaultSet& faults);

struct StepOutcome {
    Observation observation{};
    double reward = 0.0;
    bool terminated = false;
    bool truncated = false;
    bool reached_dst = false;
    bool hit_fault = false;
};

/// One routing episode. Actions 0..3 move +i, -i, +1, -1. Entering dst pays
/// +100 and ends the episode; entering a faulty node pays -50 and ends the
/// episode with the agent left in place; every other move costs 1. The
/// episode is truncated after 2N steps.
///
/// Holds references to the topology and fault set, which must outlive it.
class RoutingEnv {
public:
    RoutingEnv(const Topology& t, const FaultSet& faults);

    /// Throws ContractError when src == dst or an endpoint is faulty.
    Observation reset(int src, int dst);

    /// Throws ContractError when the episode is not active.
    StepOutcome step(int action);

    int current() const { return current_; }
    int dst() const { return dst_; }
    int steps_taken() const { return steps_taken_; }
    int max_steps() const { return max_steps_; }
    bool active() const { return active_; }
    const Topology& topology() const { return *topology_; }
    const FaultSet& faults() const { return *faults_; }

private:
    const Topology* topology_;
    const FaultSet* faults_;
    int current_ = 0;
    int dst_ = 0;
    int steps_taken_ = 0;
    int max_steps_;
    bool active_ = false;
};

}  // namespace gaussnet
