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
#include <stdexcept>
#include <utility>

#include "gaussnet/gaussian.hpp"

using namespace gaussnet;

TEST_CASE("gaussian integer arithmetic") {
    const GaussianInt a{3, 4}, b{1, -1};
    CHECK(a * b == GaussianInt{7, 1});
    CHECK(a + b == GaussianInt{4, 3});
    CHECK(a - b == GaussianInt{2, 5});
    CHECK(conj(a) == GaussianInt{3, -4});
    CHECK(norm(a) == 25);
    CHECK(norm(GaussianInt{}) == 0);
    CHECK(a * conj(a) == GaussianInt{25, 0});
}

TEST_CASE("round half down") {
    CHECK(round_half_down(6, 10) == 1);
    CHECK(round_half_down(5, 10) == 0);    // tie -> toward -inf
    CHECK(round_half_down(-5, 10) == -1);  // tie -> toward -inf
    CHECK(round_half_down(-6, 10) == -1);
    CHECK(round_half_down(-4, 10) == 0);
    CHECK(round_half_down(15, 10) == 1);
    CHECK(round_half_down(25, 10) == 2);
}

TEST_CASE("parse and print") {
    CHECK(parse_gaussian("3+4i") == GaussianInt{3, 4});
    CHECK(parse_gaussian("2-3i") == GaussianInt{2, -3});
    CHECK(parse_gaussian(" -i ") == GaussianInt{0, -1});
    CHECK(parse_gaussian("7") == GaussianInt{7, 0});
    CHECK(parse_gaussian("i+2") == GaussianInt{2, 1});
    CHECK_THROWS_AS(parse_gaussian("3+4j"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian(""), std::invalid_argument);
    CHECK(to_string(GaussianInt{3, 4}) == "3+4i");
    CHECK(to_string(GaussianInt{-2, -1}) == "-2-i");
    CHECK(to_string(GaussianInt{0, 2}) == "2i");
}

TEST_CASE("modulus validation") {
    CHECK_NOTHROW(NetworkModulus(GaussianInt{3, 4}));
    CHECK_THROWS_AS(NetworkModulus(GaussianInt{2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkModulus(GaussianInt{1, 1}), std::invalid_argument);  // norm 2
    CHECK_THROWS_AS(NetworkModulus(GaussianInt{0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkModulus(GaussianInt{3, -4}), std::invalid_argument);
    CHECK(NetworkModulus::from_k(3).alpha() == GaussianInt{3, 4});
}

TEST_CASE("iso root matches brute force for every k in [2, 9]") {
    for (int k = 2; k <= 9; ++k) {
        const auto m = NetworkModulus::from_k(k);
        const auto n = m.n_nodes();
        std::int64_t brute = -1;
        for (std::int64_t s = 0; s < n; ++s) {
            if ((m.alpha().re + m.alpha().im * s) % n == 0) {
                brute = s;
                break;
            }
        }
        CHECK(m.iso_root() == brute);
        CHECK((m.iso_root() * m.iso_root() + 1) % n == 0);
    }
}

TEST_CASE("canonical residue for alpha = 3+4i") {
    const NetworkModulus m(GaussianInt{3, 4});
    CHECK(canonical_residue(GaussianInt{0, 0}, m) == GaussianInt{0, 0});

    const auto r = canonical_residue(GaussianInt{5, 0}, m);
    CHECK(r == GaussianInt{-2, -1});
    // 5 - (-2 - i) = (3 + 4i)(1 - i)
    CHECK(GaussianInt{5, 0} - r == m.alpha() * GaussianInt{1, -1});
    CHECK(canonical_residue(r, m) == r);
}

TEST_CASE("node index examples") {
    const NetworkModulus m(GaussianInt{3, 4});
    CHECK(node_index(GaussianInt{0, 0}, m) == 0);
    CHECK(node_index(GaussianInt{0, 1}, m) == 18);
    CHECK(node_index(GaussianInt{1, 0}, m) == 1);
    CHECK(node_index(m.alpha(), m) == 0);
}

TEST_CASE("residue completeness and index bijection for k in [2, 9]") {
    for (int k = 2; k <= 9; ++k) {
        const auto m = NetworkModulus::from_k(k);
        const auto n = m.n_nodes();
        std::set<std::pair<std::int64_t, std::int64_t>> residues;
        std::set<int> indices;
        const std::int64_t box = 2 * (k + 1);
        for (std::int64_t x = -box; x <= box; ++x) {
            for (std::int64_t y = -box; y <= box; ++y) {
                const GaussianInt z{x, y};
                const auto r = canonical_residue(z, m);
                // z - r is a multiple of alpha: (z - r) * conj(alpha) divisible by N componentwise
                const auto q = (z - r) * conj(m.alpha());
                REQUIRE(q.re % n == 0);
                REQUIRE(q.im % n == 0);
                REQUIRE(canonical_residue(r, m) == r);
                REQUIRE(node_index(z, m) == node_index(r, m));
                residues.insert({r.re, r.im});
                indices.insert(node_index(r, m));
            }
        }
        CHECK(static_cast<std::int64_t>(residues.size()) == n);
        CHECK(static_cast<std::int64_t>(indices.size()) == n);
    }
}

TEST_CASE("index invariant under translation by multiples of alpha") {
    const auto m = NetworkModulus::from_k(4);
    const GaussianInt z{2, -3};
    for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
            CHECK(node_index(z + m.alpha() * GaussianInt{a, b}, m) == node_index(z, m));
        }
    }
}
