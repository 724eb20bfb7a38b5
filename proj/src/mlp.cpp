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

#include "gaussnet/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gaussnet/rng.hpp"

namespace gaussnet {

Mlp::Mlp(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.size() < 2) throw std::invalid_argument("network needs at least an input and an output size");
    std::size_t total = 0;
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
        if (sizes_[l] < 1 || sizes_[l + 1] < 1) throw std::invalid_argument("layer sizes must be positive");
        offsets_.push_back(total);
        total += static_cast<std::size_t>(sizes_[l]) * static_cast<std::size_t>(sizes_[l + 1]) +
                 static_cast<std::size_t>(sizes_[l + 1]);
    }
    params_.assign(total, 0.0);
}

std::size_t Mlp::bias_offset(int layer) const {
    const auto l = static_cast<std::size_t>(layer);
    return offsets_[l] + static_cast<std::size_t>(sizes_[l]) * static_cast<std::size_t>(sizes_[l + 1]);
}

std::size_t Mlp::layer_size(int layer) const {
    const auto l = static_cast<std::size_t>(layer);
    return static_cast<std::size_t>(sizes_[l] + 1) * static_cast<std::size_t>(sizes_[l + 1]);
}

void Mlp::initialize(Rng& rng, double output_gain, double input_gain) {
    for (int l = 0; l < n_layers(); ++l) {
        const int fan_in = sizes_[static_cast<std::size_t>(l)];
        const int fan_out = sizes_[static_cast<std::size_t>(l) + 1];
        double gain = 1.0;
        if (l == 0) gain *= input_gain;
        if (l == n_layers() - 1) gain *= output_gain;
        const double limit = gain * std::sqrt(6.0 / (fan_in + fan_out));
        auto* w = params_.data() + weight_offset(l);
        for (int k = 0; k < fan_in * fan_out; ++k) w[k] = rng.uniform(-limit, limit);
        std::fill_n(params_.data() + bias_offset(l), fan_out, 0.0);
    }
}

void Mlp::zero_output_layer() {
    const int last = n_layers() - 1;
    std::fill_n(params_.data() + weight_offset(last), layer_size(last), 0.0);
}

std::vector<double> Mlp::forward(std::span<const double> input, Cache* cache) const {
    if (static_cast<int>(input.size()) != sizes_.front()) throw std::invalid_argument("network input size mismatch");
    std::vector<double> x(input.begin(), input.end());
    if (cache) {
        cache->activations.clear();
        cache->activations.push_back(x);
    }
    for (int l = 0; l < n_layers(); ++l) {
        const auto in = static_cast<std::size_t>(sizes_[static_cast<std::size_t>(l)]);
        const auto out = static_cast<std::size_t>(sizes_[static_cast<std::size_t>(l) + 1]);
        const double* w = params_.data() + weight_offset(l);
        const double* b = params_.data() + bias_offset(l);
        const bool hidden = l + 1 < n_layers();
        std::vector<double> y(out);
        for (std::size_t r = 0; r < out; ++r) {
            double acc = b[r];
            const double* row = w + r * in;
            for (std::size_t c = 0; c < in; ++c) acc += row[c] * x[c];
            y[r] = hidden ? std::tanh(acc) : acc;
        }
        x = std::move(y);
        if (cache) cache->activations.push_back(x);
    }
    return x;
}

void Mlp::backward(const Cache& cache, std::span<const double> grad_output, std::span<double> grad) const {
    std::vector<double> delta(grad_output.begin(), grad_output.end());
    for (int l = n_layers() - 1; l >= 0; --l) {
        const auto in = static_cast<std::size_t>(sizes_[static_cast<std::size_t>(l)]);
        const auto out = static_cast<std::size_t>(sizes_[static_cast<std::size_t>(l) + 1]);
        const auto& x = cache.activations[static_cast<std::size_t>(l)];
        const double* w = params_.data() + weight_offset(l);
        double* gw = grad.data() + weight_offset(l);
        double* gb = grad.data() + bias_offset(l);

        // tanh'(a) = 1 - tanh(a)^2 on hidden layers
        if (l + 1 < n_layers()) {
            const auto& y = cache.activations[static_cast<std::size_t>(l) + 1];
            for (std::size_t r = 0; r < out; ++r) delta[r] *= 1.0 - y[r] * y[r];
        }
        std::vector<double> prev(in, 0.0);
        for (std::size_t r = 0; r < out; ++r) {
            const double d = delta[r];
            gb[r] += d;
            const double* row = w + r * in;
            double* grow = gw + r * in;
            for (std::size_t c = 0; c < in; ++c) {
                grow[c] += d * x[c];
                prev[c] += d * row[c];
            }
        }
        delta = std::move(prev);
    }
}

}  // namespace gaussnet
