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
#include <string>
#include <string_view>

namespace gaussnet {

/// A Gaussian integer re + im*i.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
    friend constexpr GaussianInt operator-(GaussianInt a) { return {-a.re, -a.im}; }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr bool operator==(GaussianInt, GaussianInt) = default;
};

constexpr GaussianInt conj(GaussianInt z) { return {z.re, -z.im}; }
constexpr std::int64_t norm(GaussianInt z) { return z.re * z.re + z.im * z.im; }

inline constexpr GaussianInt kUnitI{0, 1};

std::string to_string(GaussianInt z);

/// Parses "a+bi", "a-bi", "a", "bi", "-i" and friends. Throws
/// std::invalid_argument on malformed input.
GaussianInt parse_gaussian(std::string_view text);

/// Validated modulus alpha = a + bi with a, b >= 1, gcd(a, b) = 1 and
/// norm >= 5. Under these conditions Z[i]/(alpha) is cyclic of order
/// N = a^2 + b^2 and the residue x + yi maps to x + y*iso_root (mod N).
class NetworkModulus {
public:
    /// Throws std::invalid_argument for unsupported moduli.
    explicit NetworkModulus(GaussianInt alpha);

    /// alpha = k + (k+1)i.
    static NetworkModulus from_k(int k);

    GaussianInt alpha() const { return alpha_; }
    std::int64_t n_nodes() const { return n_nodes_; }
    /// s with s^2 = -1 (mod N) and a + b*s = 0 (mod N).
    std::int64_t iso_root() const { return iso_root_; }

    friend bool operator==(const NetworkModulus&, const NetworkModulus&) = default;

private:
    GaussianInt alpha_;
    std::int64_t n_nodes_;
    std::int64_t iso_root_;
};

/// Centered representative of z modulo alpha: q = round(z * conj(alpha) / N)
/// componentwise (ties toward negative infinity), result z - q*alpha.
GaussianInt canonical_residue(GaussianInt z, const NetworkModulus& m);

/// Dense index in [0, N) of the residue class of z.
int node_index(GaussianInt z, const NetworkModulus& m);

/// Nearest integer to num/den (den > 0), ties toward negative infinity.
std::int64_t round_half_down(std::int64_t num, std::int64_t den);

}  // namespace gaussnet
