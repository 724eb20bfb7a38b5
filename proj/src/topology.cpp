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

#include "gaussnet/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gaussnet/errors.hpp"
#include "gaussnet/faults.hpp"

namespace gaussnet {

std::string_view to_string(Quadrant q) {
    switch (q) {
        case Quadrant::Q1: return "Q1";
        case Quadrant::Q2: return "Q2";
        case Quadrant::Q3: return "Q3";
        case Quadrant::Q4: return "Q4";
        case Quadrant::Origin: return "Origin";
    }
    return "?";
}

Quadrant classify_quadrant(GaussianInt z) {
    const auto x = z.re;
    const auto y = z.im;
    if (x == 0 && y == 0) return Quadrant::Origin;
    if (x >= 0 && y > 0) return Quadrant::Q1;
    if (x < 0 && y >= 0) return Quadrant::Q2;
    if (x <= 0 && y < 0) return Quadrant::Q3;
    return Quadrant::Q4;
}

std::string_view to_string(DistanceMode mode) { return mode == DistanceMode::Plain ? "plain" : "modular"; }

DistanceMode parse_distance_mode(std::string_view text) {
    if (text == "plain") return DistanceMode::Plain;
    if (text == "modular") return DistanceMode::Modular;
    throw std::invalid_argument("unknown distance mode '" + std::string(text) + "'");
}

Topology::Topology(const NetworkModulus& modulus) : modulus_(modulus) {
    const auto n = static_cast<std::size_t>(modulus.n_nodes());
    coords_.resize(n);
    adjacency_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        coords_[j] = canonical_residue(GaussianInt{static_cast<std::int64_t>(j), 0}, modulus_);
        const auto mag = std::max(std::llabs(coords_[j].re), std::llabs(coords_[j].im));
        coord_scale_ = std::max(coord_scale_, static_cast<int>(mag));
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t d = 0; d < 4; ++d) {
            adjacency_[j][d] = node_index(canonical_residue(coords_[j] + kDirectionVectors[d], modulus_), modulus_);
        }
    }
}

Topology build_topology(const NetworkModulus& modulus) { return Topology(modulus); }

Quadrant quadrant_of(int node, const Topology& t) { return classify_quadrant(t.coord(node)); }

std::vector<int> bfs_all(const Topology& t, int src, const FaultSet& faults) {
    if (!t.contains(src)) throw ContractError("bfs source out of range");
    std::vector<int> dist(static_cast<std::size_t>(t.n_nodes()), -1);
    if (faults.contains(src)) return dist;
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : t.neighbors(u)) {
            auto& dv = dist[static_cast<std::size_t>(v)];
            if (dv >= 0 || faults.contains(v)) continue;
            dv = dist[static_cast<std::size_t>(u)] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

std::optional<int> bfs_distance(const Topology& t, int src, int dst, const FaultSet& faults) {
    if (!t.contains(src) || !t.contains(dst)) throw ContractError("bfs endpoint out of range");
    if (faults.contains(src) || faults.contains(dst)) throw ContractError("bfs endpoint is faulty");
    const int d = bfs_all(t, src, faults)[static_cast<std::size_t>(dst)];
    if (d < 0) return std::nullopt;
    return d;
}

std::int64_t euclid_dist2(int a, int b, const Topology& t, DistanceMode mode) {
    const GaussianInt diff = t.coord(a) - t.coord(b);
    if (mode == DistanceMode::Plain) return norm(diff);
    return norm(canonical_residue(diff, t.modulus()));
}

void write_topology_csv(std::ostream& out, const Topology& t) {
    out << "node_index,re,im,n_up,n_down,n_right,n_left,quadrant\n";
    for (int j = 0; j < t.n_nodes(); ++j) {
        const auto z = t.coord(j);
        const auto& nb = t.neighbors(j);
        out << j << ',' << z.re << ',' << z.im << ',' << nb[0] << ',' << nb[1] << ',' << nb[2] << ',' << nb[3]
            << ',' << to_string(quadrant_of(j, t)) << '\n';
    }
}

}  // namespace gaussnet
