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

#include "gaussnet/gaussian.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gaussnet {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of x modulo m via extended Euclid; requires gcd(x, m) = 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
    std::int64_t old_r = mod_floor(x, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::invalid_argument("value is not invertible modulo N");
    return mod_floor(old_s, m);
}

}  // namespace

std::int64_t round_half_down(std::int64_t num, std::int64_t den) {
    // ceil(num/den - 1/2) == floor((2*num + den - 1) / (2*den))
    return floor_div(2 * num + den - 1, 2 * den);
}

std::string to_string(GaussianInt z) {
    if (z.im == 0) return std::to_string(z.re);
    std::string out;
    if (z.re != 0) out = std::to_string(z.re);
    if (z.im < 0) {
        out += '-';
    } else if (z.re != 0) {
        out += '+';
    }
    const std::int64_t mag = z.im < 0 ? -z.im : z.im;
    if (mag != 1) out += std::to_string(mag);
    out += 'i';
    return out;
}

GaussianInt parse_gaussian(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty Gaussian integer");

    GaussianInt z{};
    std::size_t pos = 0;
    bool saw_term = false;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (saw_term) {
            throw std::invalid_argument("malformed Gaussian integer: " + s);
        }
        const std::size_t digits_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        const bool has_digits = pos > digits_begin;
        const std::int64_t mag = has_digits ? std::stoll(s.substr(digits_begin, pos - digits_begin)) : 1;
        if (pos < s.size() && s[pos] == 'i') {
            z.im += sign * mag;
            ++pos;
        } else if (has_digits) {
            z.re += sign * mag;
        } else {
            throw std::invalid_argument("malformed Gaussian integer: " + s);
        }
        saw_term = true;
    }
    return z;
}

NetworkModulus::NetworkModulus(GaussianInt alpha) : alpha_(alpha), n_nodes_(0), iso_root_(0) {
    if (alpha.re < 1 || alpha.im < 1) {
        throw std::invalid_argument("modulus " + to_string(alpha) + " must have positive real and imaginary parts");
    }
    if (std::gcd(alpha.re, alpha.im) != 1) {
        throw std::invalid_argument("modulus " + to_string(alpha) + " has gcd(a, b) != 1");
    }
    n_nodes_ = norm(alpha);
    if (n_nodes_ < 5) {
        throw std::invalid_argument("modulus " + to_string(alpha) + " has norm below 5");
    }
    // a + b*s = 0 (mod N)  =>  s = -a * b^-1
    iso_root_ = mod_floor(-alpha.re * mod_inverse(alpha.im, n_nodes_), n_nodes_);
}

NetworkModulus NetworkModulus::from_k(int k) { return NetworkModulus(GaussianInt{k, k + 1}); }

GaussianInt canonical_residue(GaussianInt z, const NetworkModulus& m) {
    const GaussianInt scaled = z * conj(m.alpha());
    const GaussianInt q{round_half_down(scaled.re, m.n_nodes()), round_half_down(scaled.im, m.n_nodes())};
    return z - q * m.alpha();
}

int node_index(GaussianInt z, const NetworkModulus& m) {
    const std::int64_t n = m.n_nodes();
    return static_cast<int>(mod_floor(mod_floor(z.re, n) + mod_floor(z.im, n) * m.iso_root(), n));
}

}  // namespace gaussnet
