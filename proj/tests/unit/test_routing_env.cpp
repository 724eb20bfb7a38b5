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

#include "gaussnet/errors.hpp"
#include "gaussnet/rng.hpp"
#include "gaussnet/routing_env.hpp"

using namespace gaussnet;

namespace {

const Topology& net25() {
    static const Topology t = build_topology(NetworkModulus::from_k(3));
    return t;
}

}  // namespace

TEST_CASE("reset produces scaled coordinates and clear flags") {
    const auto& t = net25();
    const auto none = FaultSet::none(25);
    RoutingEnv env(t, none);
    const int dst = t.index_of({1, 1});
    const auto obs = env.reset(0, dst);
    CHECK(obs == Observation{0.0, 0.0, 1.0 / 3, 1.0 / 3, 0, 0, 0, 0});
    CHECK(env.steps_taken() == 0);
    CHECK(env.current() == 0);
    CHECK(env.max_steps() == 50);
    CHECK(env.reset(0, dst) == obs);
}

TEST_CASE("reset preconditions") {
    const auto& t = net25();
    const FaultSet faults(25, {5});
    RoutingEnv env(t, faults);
    CHECK_THROWS_AS(env.reset(3, 3), ContractError);
    CHECK_THROWS_AS(env.reset(5, 3), ContractError);
    CHECK_THROWS_AS(env.reset(3, 5), ContractError);
    CHECK_THROWS_AS(env.step(0), ContractError);
}

TEST_CASE("reward cases") {
    const auto& t = net25();
    const int dst = 1;           // +1 from the origin
    const FaultSet faults(25, {18});  // +i from the origin
    RoutingEnv env(t, faults);

    SUBCASE("into destination") {
        env.reset(0, dst);
        const auto out = env.step(2);
        CHECK(out.reward == 100.0);
        CHECK(out.terminated);
        CHECK(out.reached_dst);
        CHECK_FALSE(out.hit_fault);
        CHECK_FALSE(env.active());
        CHECK_THROWS_AS(env.step(0), ContractError);
    }
    SUBCASE("into a fault") {
        const auto obs = env.reset(0, dst);
        CHECK(obs[4] == 1.0);
        const auto out = env.step(0);
        CHECK(out.reward == -50.0);
        CHECK(out.terminated);
        CHECK(out.hit_fault);
        CHECK_FALSE(out.reached_dst);
        CHECK(env.current() == 0);
        CHECK(out.observation == obs);
    }
    SUBCASE("ordinary hop") {
        env.reset(0, dst);
        const auto out = env.step(1);
        CHECK(out.reward == -1.0);
        CHECK_FALSE(out.terminated);
        CHECK_FALSE(out.truncated);
        CHECK(env.current() == 7);
        CHECK(env.active());
    }
}

TEST_CASE("property: reward partition, truncation and return bound") {
    const auto& t = net25();
    Rng rng(17);
    for (int episode = 0; episode < 300; ++episode) {
        FaultSpec spec;
        spec.density = 0.05 * rng.index(9);
        spec.seed = rng.next_u64();
        const int src = rng.index(25);
        int dst = rng.index(24);
        if (dst >= src) ++dst;
        const std::vector<int> ends{src, dst};
        const auto faults = inject_uniform(t, spec, ends);
        RoutingEnv env(t, faults);
        auto obs = env.reset(src, dst);
        double total = 0.0;
        while (true) {
            for (int k = 0; k < 4; ++k) REQUIRE((obs[k] >= -1.0 && obs[k] <= 1.0));
            for (int k = 4; k < 8; ++k) REQUIRE((obs[k] == 0.0 || obs[k] == 1.0));
            REQUIRE(obs == make_observation(t, env.current(), dst, faults));
            const auto out = env.step(rng.index(4));
            REQUIRE((out.reward == 100.0 || out.reward == -50.0 || out.reward == -1.0));
            if (out.terminated) REQUIRE(out.reached_dst != out.hit_fault);
            if (out.truncated) REQUIRE(env.steps_taken() == env.max_steps());
            REQUIRE_FALSE(faults.contains(env.current()));
            total += out.reward;
            obs = out.observation;
            if (out.terminated || out.truncated) break;
        }
        REQUIRE(total >= -50.0 - (2 * 25 - 1));
        REQUIRE(total <= 100.0);
    }
}
