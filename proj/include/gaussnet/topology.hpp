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
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "gaussnet/gaussian.hpp"

namespace gaussnet {

class FaultSet;

/// Direction slots in adjacency order.
enum class Direction : int { Up = 0, Down = 1, Right = 2, Left = 3 };

inline constexpr std::array<GaussianInt, 4> kDirectionVectors{
    GaussianInt{0, 1}, GaussianInt{0, -1}, GaussianInt{1, 0}, GaussianInt{-1, 0}};

enum class Quadrant { Q1, Q2, Q3, Q4, Origin };

std::string_view to_string(Quadrant q);

/// Classifies a centered coordinate by the signs of its components.
Quadrant classify_quadrant(GaussianInt z);

enum class DistanceMode {
    Plain,    ///< |a - b|^2 on centered coordinates, blind to wrap-around
    Modular,  ///< |residue(a - b)|^2, aware of wrap-around
};

std::string_view to_string(DistanceMode mode);
DistanceMode parse_distance_mode(std::string_view text);

/// Immutable degree-4 graph over Z[i]/(alpha). Node 0 is the zero residue;
/// node j is the residue class of the integer j.
class Topology {
public:
    explicit Topology(const NetworkModulus& modulus);

    const NetworkModulus& modulus() const { return modulus_; }
    int n_nodes() const { return static_cast<int>(coords_.size()); }

    /// Neighbors in direction order (+i, -i, +1, -1).
    const std::array<int, 4>& neighbors(int node) const { return adjacency_.at(static_cast<std::size_t>(node)); }
    int neighbor(int node, Direction d) const { return neighbors(node)[static_cast<std::size_t>(d)]; }

    /// Centered canonical representative of a node.
    GaussianInt coord(int node) const { return coords_.at(static_cast<std::size_t>(node)); }

    /// max(|re|, |im|) over all centered coordinates.
    int coord_scale() const { return coord_scale_; }

    int index_of(GaussianInt z) const { return node_index(z, modulus_); }

    bool contains(int node) const { return node >= 0 && node < n_nodes(); }

private:
    NetworkModulus modulus_;
    std::vector<std::array<int, 4>> adjacency_;
    std::vector<GaussianInt> coords_;
    int coord_scale_ = 1;
};

/// Validates the modulus (throws std::invalid_argument) and builds the graph.
Topology build_topology(const NetworkModulus& modulus);

Quadrant quadrant_of(int node, const Topology& t);

/// Minimum fault-free hop count from src to dst, or nullopt when dst is cut
/// off. Throws ContractError when an endpoint is faulty.
std::optional<int> bfs_distance(const Topology& t, int src, int dst, const FaultSet& faults);

/// Hop distances from src to every node avoiding faults; -1 for unreachable
/// or faulty nodes.
std::vector<int> bfs_all(const Topology& t, int src, const FaultSet& faults);

std::int64_t euclid_dist2(int a, int b, const Topology& t, DistanceMode mode);

/// CSV dump: node_index,re,im,n_up,n_down,n_right,n_left,quadrant
void write_topology_csv(std::ostream& out, const Topology& t);

}  // namespace gaussnet
