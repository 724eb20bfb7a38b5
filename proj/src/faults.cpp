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

#include "gaussnet/faults.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gaussnet/rng.hpp"
#include "gaussnet/topology.hpp"

namespace gaussnet {

std::string_view to_string(FaultMode mode) { return mode == FaultMode::Uniform ? "uniform" : "clustered"; }

FaultMode parse_fault_mode(std::string_view text) {
    if (text == "uniform") return FaultMode::Uniform;
    if (text == "clustered") return FaultMode::Clustered;
    throw std::invalid_argument("unknown fault mode '" + std::string(text) + "'");
}

void FaultSpec::validate() const {
    if (!(density >= 0.0 && density <= 0.5)) {
        throw std::invalid_argument("fault density must lie in [0, 0.5], got " + std::to_string(density));
    }
    if (mode == FaultMode::Clustered) {
        if (!(cluster_sigma > 0.0)) throw std::invalid_argument("cluster sigma must be positive");
        if (num_clusters < 1) throw std::invalid_argument("num_clusters must be positive");
    }
}

int fault_count(double density, int n_nodes) {
    return static_cast<int>(std::floor(density * n_nodes + 1e-9));
}

FaultSet::FaultSet(int n_nodes, std::vector<int> nodes, FaultSpec spec)
    : nodes_(std::move(nodes)), mask_(static_cast<std::size_t>(n_nodes), false), spec_(spec) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    for (int v : nodes_) {
        if (v < 0 || v >= n_nodes) throw std::invalid_argument("fault node " + std::to_string(v) + " out of range");
        mask_[static_cast<std::size_t>(v)] = true;
    }
}

namespace {

std::vector<int> eligible_nodes(const Topology& t, std::span<const int> excluded) {
    std::vector<bool> skip(static_cast<std::size_t>(t.n_nodes()), false);
    for (int v : excluded) {
        if (t.contains(v)) skip[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> out;
    for (int v = 0; v < t.n_nodes(); ++v) {
        if (!skip[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

int checked_count(const Topology& t, const FaultSpec& spec, std::size_t n_eligible) {
    spec.validate();
    const int count = fault_count(spec.density, t.n_nodes());
    if (static_cast<std::size_t>(count) > n_eligible) {
        throw std::invalid_argument("cannot place " + std::to_string(count) + " faults on " +
                                    std::to_string(n_eligible) + " eligible nodes");
    }
    return count;
}

}  // namespace

FaultSet inject_uniform(const Topology& t, const FaultSpec& spec, std::span<const int> excluded) {
    auto pool = eligible_nodes(t, excluded);
    const int count = checked_count(t, spec, pool.size());
    Rng rng(spec.seed);
    // partial Fisher-Yates
    for (int i = 0; i < count; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.below(pool.size() - static_cast<std::size_t>(i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(count));
    return FaultSet(t.n_nodes(), std::move(pool), spec);
}

FaultSet inject_clustered(const Topology& t, const FaultSpec& spec, std::span<const int> excluded) {
    auto pool = eligible_nodes(t, excluded);
    const int count = checked_count(t, spec, pool.size());
    Rng rng(spec.seed);

    std::vector<int> chosen;
    const int n_seeds = std::min(count, spec.num_clusters);
    for (int i = 0; i < n_seeds; ++i) {
        const auto j = rng.below(pool.size());
        chosen.push_back(pool[j]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
    if (static_cast<int>(chosen.size()) == count) return FaultSet(t.n_nodes(), std::move(chosen), spec);

    // Hop distance to the nearest seed on the intact graph.
    std::vector<int> nearest(static_cast<std::size_t>(t.n_nodes()), -1);
    const auto intact = FaultSet::none(t.n_nodes());
    for (int seed_node : chosen) {
        const auto d = bfs_all(t, seed_node, intact);
        for (std::size_t v = 0; v < d.size(); ++v) {
            if (d[v] >= 0 && (nearest[v] < 0 || d[v] < nearest[v])) nearest[v] = d[v];
        }
    }
    const double two_sigma2 = 2.0 * spec.cluster_sigma * spec.cluster_sigma;
    std::vector<double> weight(pool.size());
    for (std::size_t k = 0; k < pool.size(); ++k) {
        const double d = nearest[static_cast<std::size_t>(pool[k])];
        weight[k] = std::exp(-d * d / two_sigma2);
    }

    while (static_cast<int>(chosen.size()) < count) {
        double total = 0.0;
        for (double w : weight) total += w;
        std::size_t pick = pool.size() - 1;
        if (total > 0.0) {
            double u = rng.uniform01() * total;
            for (std::size_t k = 0; k < pool.size(); ++k) {
                if (u < weight[k]) {
                    pick = k;
                    break;
                }
                u -= weight[k];
            }
        } else {
            // every remaining weight underflowed; fall back to uniform
            pick = rng.below(pool.size());
        }
        chosen.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        weight.erase(weight.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return FaultSet(t.n_nodes(), std::move(chosen), spec);
}

FaultSet inject_faults(const Topology& t, const FaultSpec& spec, std::span<const int> excluded) {
    return spec.mode == FaultMode::Uniform ? inject_uniform(t, spec, excluded) : inject_clustered(t, spec, excluded);
}

void write_fault_csv(std::ostream& out, const FaultSet& faults) {
    const auto& s = faults.spec();
    out << "# mode=" << to_string(s.mode) << '\n'
        << "# density=" << s.density << '\n'
        << "# seed=" << s.seed << '\n'
        << "# cluster_sigma=" << s.cluster_sigma << '\n'
        << "# num_clusters=" << s.num_clusters << '\n'
        << "# n_nodes=" << faults.n_nodes() << '\n'
        << "node_index\n";
    for (int v : faults.nodes()) out << v << '\n';
}

FaultSet read_fault_csv(std::istream& in, int n_nodes) {
    FaultSpec spec;
    std::vector<int> nodes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "node_index") continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto key = line.substr(1, eq - 1);
            key.erase(0, key.find_first_not_of(' '));
            const auto value = line.substr(eq + 1);
            if (key == "mode") spec.mode = parse_fault_mode(value);
            else if (key == "density") spec.density = std::stod(value);
            else if (key == "seed") spec.seed = std::stoull(value);
            else if (key == "cluster_sigma") spec.cluster_sigma = std::stod(value);
            else if (key == "num_clusters") spec.num_clusters = std::stoi(value);
            continue;
        }
        nodes.push_back(std::stoi(line));
    }
    return FaultSet(n_nodes, std::move(nodes), spec);
}

}  // namespace gaussnet
