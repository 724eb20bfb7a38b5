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

#include <doctest.h>

#include <set>
#include <sstream>
#include <vector>

#include "gaussnet/errors.hpp"
#include "gaussnet/faults.hpp"
#include "gaussnet/rng.hpp"
#include "gaussnet/routing.hpp"

using namespace gaussnet;

namespace {

const Topology& net25() {
    static const Topology t = build_topology(NetworkModulus::from_k(3));
    return t;
}

bool adjacent(const Topology& t, int a, int b) {
    for (int n : t.neighbors(a)) {
        if (n == b) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("trivial and fault-free routes") {
    const auto& t = net25();
    const auto none = FaultSet::none(25);

    const auto self = route_greedy(t, 4, 4, none);
    CHECK(self.status == RouteStatus::Success);
    CHECK(self.hops == 0);
    CHECK(self.path == std::vector<int>{4});

    const auto r = route_greedy(t, 0, t.index_of({3, 0}), none);
    CHECK(r.status == RouteStatus::Success);
    CHECK(r.hops == 3);
    CHECK(r.path == std::vector<int>{0, 1, 2, 3});
    CHECK(bfs_distance(t, 0, 3, none) == 3);
}

TEST_CASE("single-fault detour costs five hops") {
    const auto& t = net25();
    const int dst = t.index_of({3, 0});
    std::vector<int> five_hop_faults;
    for (int f = 1; f < 25; ++f) {
        if (f == dst) continue;
        const FaultSet faults(25, {f});
        const auto r = route_greedy(t, 0, dst, faults);
        REQUIRE(r.delivered());
        REQUIRE(r.hops >= *bfs_distance(t, 0, dst, faults));
        if (r.hops == 5) five_hop_faults.push_back(f);
    }
    // blocking +1 or +2 forces the detour through i
    CHECK(five_hop_faults == std::vector<int>{1, 2});
    // +i and -i tie on distance; the lower index (-i, node 7) wins
    const auto r = route_greedy(t, 0, dst, FaultSet(25, {1}));
    CHECK(r.path[1] == t.index_of({0, -1}));
    CHECK(r.path[1] == 7);
}

TEST_CASE("stuck when every neighbour is faulty") {
    const auto& t = net25();
    const auto& nb = t.neighbors(0);
    const FaultSet faults(25, {nb.begin(), nb.end()});
    const auto r = route_greedy(t, 0, 12, faults);
    CHECK(r.status == RouteStatus::Stuck);
    CHECK(r.hops == -1);
    CHECK(r.path == std::vector<int>{0});
}

TEST_CASE("faulty endpoints violate the contract") {
    const auto& t = net25();
    const FaultSet faults(25, {5});
    CHECK_THROWS_AS(route_greedy(t, 5, 0, faults), ContractError);
    CHECK_THROWS_AS(route_greedy(t, 0, 5, faults), ContractError);
}

TEST_CASE("property: route invariants over random fault sets") {
    for (int k : {2, 3, 5}) {
        const auto t = build_topology(NetworkModulus::from_k(k));
        const int n = t.n_nodes();
        Rng rng(static_cast<std::uint64_t>(k));
        for (int trial = 0; trial < 400; ++trial) {
            FaultSpec spec;
            spec.density = 0.05 * rng.index(9);
            spec.seed = rng.next_u64();
            const int src = rng.index(n);
            const int dst = rng.index(n);
            const std::vector<int> ends{src, dst};
            const auto faults = inject_uniform(t, spec, ends);
            for (auto mode : {DistanceMode::Plain, DistanceMode::Modular}) {
                const auto r = route_greedy(t, src, dst, faults, mode);
                REQUIRE(r.path.front() == src);
                REQUIRE(std::set<int>(r.path.begin(), r.path.end()).size() == r.path.size());
                for (std::size_t i = 0; i < r.path.size(); ++i) {
                    REQUIRE_FALSE(faults.contains(r.path[i]));
                    if (i > 0) REQUIRE(adjacent(t, r.path[i - 1], r.path[i]));
                }
                const auto shortest = bfs_distance(t, src, dst, faults);
                if (r.delivered()) {
                    REQUIRE(r.path.back() == dst);
                    REQUIRE(r.hops == static_cast<int>(r.path.size()) - 1);
                    REQUIRE(r.hops >= *shortest);
                } else {
                    REQUIRE(r.hops == -1);
                }
                if (r.status == RouteStatus::Stuck) {
                    // head of the path has no live, unvisited neighbour
                    const std::set<int> visited(r.path.begin(), r.path.end());
                    for (int nb : t.neighbors(r.path.back())) {
                        REQUIRE((faults.contains(nb) || visited.count(nb) == 1));
                    }
                }
                // determinism
                const auto again = route_greedy(t, src, dst, faults, mode);
                REQUIRE(again.path == r.path);
                REQUIRE(again.status == r.status);
            }
        }
    }
}

TEST_CASE("route trace format") {
    const auto& t = net25();
    std::ostringstream out;
    write_route_trace(out, t, route_greedy(t, 0, 3, FaultSet::none(25)));
    CHECK(out.str() == "step,node_index,re,im\n0,0,0,0\n1,1,1,0\n2,2,2,0\n3,3,3,0\n# status=success hops=3\n");
}
