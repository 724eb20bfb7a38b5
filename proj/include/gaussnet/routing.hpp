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

#include <iosfwd>
#include <string_view>
#include <vector>

#include "gaussnet/topology.hpp"

namespace gaussnet {

class FaultSet;

enum class RouteStatus { Success, Stuck, MaxHopsExceeded };

std::string_view to_string(RouteStatus status);

/// Outcome of routing one packet. hops is -1 unless status is Success.
struct RouteResult {
    std::vector<int> path;
    RouteStatus status = RouteStatus::Stuck;
    int hops = -1;

    bool delivered() const { return status == RouteStatus::Success; }
};

/// Greedy adaptive routing. Each hop moves to the non-faulty, unvisited
/// neighbor closest to dst (smallest node index on ties). The packet is
/// dropped when no such neighbor exists or after 2N hops.
RouteResult route_greedy(const Topology& t, int src, int dst, const FaultSet& faults,
                         DistanceMode mode = DistanceMode::Plain);

/// Prints `step,node_index,re,im` rows followed by a status line.
void write_route_trace(std::ostream& out, const Topology& t, const RouteResult& r);

}  // namespace gaussnet
