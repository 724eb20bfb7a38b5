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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace gaussnet {

class Topology;

enum class FaultMode { Uniform, Clustered };

std::string_view to_string(FaultMode mode);
FaultMode parse_fault_mode(std::string_view text);

struct FaultSpec {
    FaultMode mode = FaultMode::Uniform;
    double density = 0.0;  ///< fraction of nodes in [0, 0.5]
    std::uint64_t seed = 0;
    double cluster_sigma = 1.0;  ///< hop-distance units, Clustered only
    int num_clusters = 1;        ///< Clustered only

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// floor(density * n) with a small guard against products like 0.15 * 20
/// landing just below an integer.
int fault_count(double density, int n_nodes);

/// Immutable set of failed node indices together with the spec that
/// generated it.
class FaultSet {
public:
    FaultSet() = default;
    FaultSet(int n_nodes, std::vector<int> nodes, FaultSpec spec = {});

    /// No faults on an n-node network.
    static FaultSet none(int n_nodes) { return FaultSet(n_nodes, {}); }

    bool contains(int node) const {
        return node >= 0 && static_cast<std::size_t>(node) < mask_.size() && mask_[static_cast<std::size_t>(node)];
    }
    /// Sorted ascending.
    const std::vector<int>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    int n_nodes() const { return static_cast<int>(mask_.size()); }
    const FaultSpec& spec() const { return spec_; }

    friend bool operator==(const FaultSet& a, const FaultSet& b) { return a.nodes_ == b.nodes_ && a.mask_.size() == b.mask_.size(); }

private:
    std::vector<int> nodes_;
    std::vector<bool> mask_;
    FaultSpec spec_;
};

/// Samples floor(density * N) distinct nodes uniformly without replacement
/// from the nodes outside `excluded`. Throws std::invalid_argument when the
/// count cannot be met.
FaultSet inject_uniform(const Topology& t, const FaultSpec& spec, std::span<const int> excluded = {});

/// Picks num_clusters seed nodes uniformly, then draws the remaining faults
/// without replacement with weight exp(-d^2 / (2 sigma^2)), d being the
/// fault-free hop distance to the nearest seed.
FaultSet inject_clustered(const Topology& t, const FaultSpec& spec, std::span<const int> excluded = {});

/// Dispatches on spec.mode.
FaultSet inject_faults(const Topology& t, const FaultSpec& spec, std::span<const int> excluded = {});

/// `# key=value` provenance comments followed by a node_index column.
void write_fault_csv(std::ostream& out, const FaultSet& faults);
FaultSet read_fault_csv(std::istream& in, int n_nodes);

}  // namespace gaussnet
