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

#include <limits>
#include <ostream>

#include "gaussnet/errors.hpp"
#include "gaussnet/faults.hpp"
#include "gaussnet/routing.hpp"

namespace gaussnet {

std::string_view to_string(RouteStatus status) {
    switch (status) {
        case RouteStatus::Success: return "success";
        case RouteStatus::Stuck: return "stuck";
        case RouteStatus::MaxHopsExceeded: return "max_hops_exceeded";
    }
    return "?";
}

RouteResult route_greedy(const Topology& t, int src, int dst, const FaultSet& faults, DistanceMode mode) {
    if (!t.contains(src) || !t.contains(dst)) throw ContractError("route endpoint out of range");
    if (faults.contains(src) || faults.contains(dst)) throw ContractError("route endpoint is faulty");

    RouteResult result;
    result.path.push_back(src);
    std::vector<bool> visited(static_cast<std::size_t>(t.n_nodes()), false);
    visited[static_cast<std::size_t>(src)] = true;
    const int max_hops = 2 * t.n_nodes();

    int current = src;
    int hops = 0;
    while (current != dst && hops < max_hops) {
        int best = -1;
        auto best_d = std::numeric_limits<std::int64_t>::max();
        for (int n : t.neighbors(current)) {
            if (faults.contains(n) || visited[static_cast<std::size_t>(n)]) continue;
            const auto d = euclid_dist2(n, dst, t, mode);
            if (d < best_d || (d == best_d && n < best)) {
                best = n;
                best_d = d;
            }
        }
        if (best < 0) {
            result.status = RouteStatus::Stuck;
            return result;
        }
        current = best;
        result.path.push_back(current);
        visited[static_cast<std::size_t>(current)] = true;
        ++hops;
    }
    if (current == dst) {
        result.status = RouteStatus::Success;
        result.hops = hops;
    } else {
        result.status = RouteStatus::MaxHopsExceeded;
    }
    return result;
}

void write_route_trace(std::ostream& out, const Topology& t, const RouteResult& r) {
    out << "step,node_index,re,im\n";
    for (std::size_t k = 0; k < r.path.size(); ++k) {
        const auto z = t.coord(r.path[k]);
        out << k << ',' << r.path[k] << ',' << z.re << ',' << z.im << '\n';
    }
    out << "# status=" << to_string(r.status) << " hops=" << r.hops << '\n';
}

}  // namespace gaussnet
