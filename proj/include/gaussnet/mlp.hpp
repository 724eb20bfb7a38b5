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

#include <cstddef>
#include <span>
#include <vector>

namespace gaussnet {

class Rng;

/// Fully connected network with tanh hidden layers and an identity output
/// layer. All weights live in one flat buffer: for each layer a row-major
/// (out x in) weight matrix followed by its bias vector.
class Mlp {
public:
    Mlp() = default;
    /// sizes = {in, hidden..., out}; parameters start at zero.
    explicit Mlp(std::vector<int> sizes);

    /// Glorot-uniform weights; the first layer is scaled by input_gain and
    /// the last by output_gain.
    void initialize(Rng& rng, double output_gain, double input_gain = 1.0);

    /// Activations of every layer, input first.
    struct Cache {
        std::vector<std::vector<double>> activations;
    };

    std::vector<double> forward(std::span<const double> input, Cache* cache = nullptr) const;

    /// Accumulates d(loss)/d(params) into grad (same length as params())
    /// given d(loss)/d(output) for the pass recorded in cache.
    void backward(const Cache& cache, std::span<const double> grad_output, std::span<double> grad) const;

    const std::vector<int>& sizes() const { return sizes_; }
    int n_layers() const { return static_cast<int>(sizes_.size()) - 1; }
    std::size_t weight_offset(int layer) const { return offsets_[static_cast<std::size_t>(layer)]; }
    std::size_t bias_offset(int layer) const;
    /// Parameter count of one layer (weights + bias).
    std::size_t layer_size(int layer) const;

    std::vector<double>& params() { return params_; }
    const std::vector<double>& params() const { return params_; }
    std::size_t param_count() const { return params_.size(); }

    /// Zeroes the last layer so the output is identically zero.
    void zero_output_layer();

    friend bool operator==(const Mlp&, const Mlp&) = default;

private:
    std::vector<int> sizes_;
    std::vector<std::size_t> offsets_;
    std::vector<double> params_;
};

}  // namespace gaussnet
