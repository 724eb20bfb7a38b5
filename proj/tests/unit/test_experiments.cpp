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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gaussnet/chart.hpp"
#include "gaussnet/errors.hpp"
#include "gaussnet/experiments.hpp"
#include "gaussnet/parallel.hpp"
#include "gaussnet/rng.hpp"

using namespace gaussnet;

namespace {

const Topology& net25() {
    static const Topology t = build_topology(NetworkModulus::from_k(3));
    return t;
}

TrialResult fake_trial(double density, int trial, std::vector<int> greedy_hops, std::vector<int> rl_hops,
                       int packets) {
    TrialResult r;
    r.density = density;
    r.trial = trial;
    auto fill = [&](EvalResult& e, std::vector<int> hops) {
        e.hops = std::move(hops);
        e.n_delivered = static_cast<int>(e.hops.size());
        e.n_packets = packets;
        e.pdr = static_cast<double>(e.n_delivered) / packets;
    };
    fill(r.greedy, std::move(greedy_hops));
    fill(r.rl, std::move(rl_hops));
    return r;
}

SweepConfig tiny_sweep() {
    SweepConfig c;
    c.alpha = {2, 3};
    c.densities = {0.0, 0.2};
    c.trials_per_density = 3;
    c.packets_per_trial = 25;
    c.train_episodes = 40;
    c.master_seed = 9;
    return c;
}

}  // namespace

TEST_CASE("number formatting uses six significant digits") {
    CHECK(format_number(0.123456789) == "0.123457");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(123456789.0) == "1.23457e+08");
    CHECK(format_number(0.05) == "0.05");
}

TEST_CASE("range parsing") {
    const auto d = parse_range("0:0.4:0.05");
    REQUIRE(d.size() == 9);
    CHECK(d.front() == 0.0);
    CHECK(d[3] == 0.15);
    CHECK(d.back() == 0.4);
    CHECK(parse_range("0.1:0.9:0.1").size() == 9);
    CHECK(parse_range("0.3") == std::vector<double>{0.3});
    CHECK(parse_range("0,0.25,0.4") == std::vector<double>{0.0, 0.25, 0.4});
    CHECK_THROWS_AS(parse_range("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("1:0:0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("x"), std::invalid_argument);
}

TEST_CASE("mean and standard error") {
    const std::vector<double> v{1.0, 2.0, 4.0, 5.0};
    CHECK(mean_of(v) == 3.0);
    // sample variance (4 + 1 + 1 + 4) / 3
    CHECK(stderr_of(v) == doctest::Approx(std::sqrt(10.0 / 3.0) / 2.0).epsilon(1e-14));
    CHECK(stderr_of(std::vector<double>{7.0}) == 0.0);
    CHECK(mean_of(std::vector<double>{}) == 0.0);
}

TEST_CASE("pair sampling avoids faults and self pairs") {
    const auto& t = net25();
    const FaultSet faults(25, {1, 5, 9, 13});
    Rng rng(3);
    const auto pairs = sample_pairs(faults, 500, rng);
    REQUIRE(pairs.size() == 500);
    for (const auto& [s, d] : pairs) {
        CHECK(s != d);
        CHECK(!faults.contains(s));
        CHECK(!faults.contains(d));
        CHECK(t.contains(s));
    }
    Rng again(3);
    CHECK(sample_pairs(faults, 500, again) == pairs);
}

TEST_CASE("evaluate_policy") {
    const auto& t = net25();
    const auto none = FaultSet::none(25);
    auto greedy = [&](const FaultSet& f) { return [&t, &f](int s, int d) { return route_greedy(t, s, d, f); }; };

    SUBCASE("fault-free greedy delivers every packet") {
        Rng rng(1);
        const auto pairs = sample_pairs(none, 200, rng);
        const auto r = evaluate_policy(greedy(none), pairs);
        CHECK(r.pdr == 1.0);
        CHECK(r.n_delivered == 200);
        CHECK(r.hops.size() == 200);
    }
    SUBCASE("enclosed destination gives pdr 0") {
        const int dst = 12;
        const auto& nb = t.neighbors(dst);
        const FaultSet walls(25, {nb.begin(), nb.end()});
        std::vector<std::pair<int, int>> pairs;
        for (int s = 0; s < 25; ++s)
            if (s != dst && !walls.contains(s)) pairs.emplace_back(s, dst);
        const auto r = evaluate_policy(greedy(walls), pairs);
        CHECK(r.pdr == 0.0);
        CHECK(r.hops.empty());
        CHECK(r.n_packets == static_cast<int>(pairs.size()));
    }
    SUBCASE("pdr does not depend on pair order") {
        const FaultSet faults(25, {1, 2, 8, 17, 20});
        Rng rng(5);
        auto pairs = sample_pairs(faults, 150, rng);
        const auto a = evaluate_policy(greedy(faults), pairs);
        std::reverse(pairs.begin(), pairs.end());
        Rng shuffle(6);
        for (std::size_t i = pairs.size() - 1; i > 0; --i)
            std::swap(pairs[i], pairs[static_cast<std::size_t>(shuffle.below(i + 1))]);
        const auto b = evaluate_policy(greedy(faults), pairs);
        CHECK(a.pdr == b.pdr);
        CHECK(a.mean_hops() == doctest::Approx(b.mean_hops()).epsilon(1e-14));
    }
    SUBCASE("empty pair list") {
        CHECK(evaluate_policy(greedy(none), {}).pdr == 0.0);
    }
}

TEST_CASE("adaptive score") {
    CHECK(*adaptive_score(0.8, 0.8) == 1.0);
    CHECK(*adaptive_score(0.95, 1.0) == doctest::Approx(0.95));
    CHECK(*adaptive_score(0.3, 0.6) == *adaptive_score(0.6, 1.2));
    CHECK(*adaptive_score(1.0, 0.5) == 1.05);
    CHECK(!adaptive_score(0.5, 0.0).has_value());
}

TEST_CASE("normalized throughput") {
    CHECK(normalized_throughput({}, 100, 0.5, 1.8) == 0.0);
    const std::vector<int> hops{2, 3, 3, 4};
    // 4 of 10 delivered
    const double expected = (std::exp(-1.8 * 0.1 * 2) + 2 * std::exp(-1.8 * 0.1 * 3) + std::exp(-1.8 * 0.1 * 4)) / 10;
    CHECK(normalized_throughput(hops, 10, 0.1, 1.8) == doctest::Approx(expected).epsilon(1e-14));
    // load -> 0 recovers the pdr, and it never exceeds it
    CHECK(normalized_throughput(hops, 10, 1e-12, 1.8) == doctest::Approx(0.4).epsilon(1e-9));
    for (double load = 0.1; load <= 1.0; load += 0.1) CHECK(normalized_throughput(hops, 10, load, 1.8) <= 0.4);
    CHECK(std::exp(-1.8 * 0.1 * 2.5) == doctest::Approx(0.637).epsilon(1e-3));
    CHECK_THROWS_AS(normalized_throughput(hops, 10, 0.0, 1.8), ContractError);
    CHECK_THROWS_AS(normalized_throughput(hops, 10, 0.5, 0.0), ContractError);
}

TEST_CASE("beta calibration") {
    SUBCASE("equal hop counts: both curves coincide at the anchor midpoint") {
        // T(beta) = exp(-0.2 beta) for both, so the least-squares optimum is T = 0.68
        std::vector<TrialResult> trials{fake_trial(0.2, 0, {2, 2}, {2, 2}, 2)};
        const double beta = calibrate_beta(trials);
        CHECK(beta == doctest::Approx(-std::log(0.68) / 0.2).epsilon(1e-6));
    }
    SUBCASE("matches a brute-force minimizer") {
        std::vector<TrialResult> trials{fake_trial(0.2, 0, {2, 3, 4}, {2, 2, 3, 3}, 5),
                                        fake_trial(0.2, 1, {1, 3}, {2, 2, 2, 4, 1}, 5)};
        auto loss = [&](double b) {
            double g = 0, r = 0;
            for (const auto& t : trials) {
                g += normalized_throughput(t.greedy.hops, 5, 0.1, b) / 2;
                r += normalized_throughput(t.rl.hops, 5, 0.1, b) / 2;
            }
            return (g - 0.64) * (g - 0.64) + (r - 0.72) * (r - 0.72);
        };
        double best = 0, best_loss = 1e9;
        for (double b = 0.0001; b < 10; b += 0.0001) {
            if (loss(b) < best_loss) best_loss = loss(b), best = b;
        }
        CHECK(calibrate_beta(trials) == doctest::Approx(best).epsilon(1e-3));
    }
}

TEST_CASE("throughput records are monotone in load and bounded by pdr") {
    std::vector<TrialResult> trials{fake_trial(0.2, 0, {2, 3, 5}, {2, 2, 3, 4}, 5),
                                    fake_trial(0.2, 1, {1, 4}, {2, 3, 3}, 5)};
    const std::vector<double> loads{0.1, 0.3, 0.5, 0.9};
    const auto recs = throughput_records(trials, loads, 1.5);
    REQUIRE(recs.size() == 8);
    for (auto kind : {PolicyKind::Greedy, PolicyKind::Rl}) {
        double prev = 2.0;
        for (const auto& r : recs) {
            if (r.policy != kind) continue;
            CHECK(r.mean <= prev);
            prev = r.mean;
            const double pdr = (trials[0].result(kind).pdr + trials[1].result(kind).pdr) / 2;
            CHECK(r.mean <= pdr);
        }
    }
}

TEST_CASE("aggregation folds trials per density and policy") {
    std::vector<TrialResult> trials{fake_trial(0.0, 0, {1, 2, 3, 4}, {1, 2, 3, 4}, 4),
                                    fake_trial(0.0, 1, {1, 2, 3}, {1, 2, 3, 4}, 4),
                                    fake_trial(0.3, 0, {2}, {2, 2, 2}, 4), fake_trial(0.3, 1, {3, 3}, {3, 3}, 4)};
    const auto recs = aggregate_pdr(trials);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].density == 0.0);
    CHECK(recs[0].policy == PolicyKind::Greedy);
    CHECK(recs[0].pdr_mean == doctest::Approx(0.875));
    CHECK(recs[0].pdr_stderr == doctest::Approx(stderr_of(std::vector<double>{1.0, 0.75})));
    CHECK(recs[1].pdr_mean == 1.0);
    CHECK(recs[1].pdr_stderr == 0.0);
    CHECK(recs[2].pdr_mean == doctest::Approx(0.375));
    CHECK(*recs[2].adaptive_score == doctest::Approx(0.375 / 0.875));
    CHECK(*recs[3].adaptive_score == doctest::Approx(0.625));
    // hop mean over delivered packets only: (2 + 3 + 3) / 3
    CHECK(recs[2].mean_hops_delivered == doctest::Approx(8.0 / 3.0));

    std::vector<TrialResult> no_zero{fake_trial(0.1, 0, {1}, {1}, 2)};
    CHECK(!aggregate_pdr(no_zero)[0].adaptive_score.has_value());
}

TEST_CASE("sweep config validation") {
    SweepConfig c;
    CHECK_NOTHROW(c.validate());
    c.densities = {0.6};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.loads = {0.0};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.alpha = {2, 4};
    CHECK_THROWS(c.validate());
    c = {};
    c.beta = -1.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("trials are reproducible and thread-count independent") {
    const auto cfg = tiny_sweep();
    const auto a = run_pdr_sweep(cfg, {1, nullptr});
    const auto b = run_pdr_sweep(cfg, {3, nullptr});
    std::ostringstream ra, rb, la, lb, ga, gb;
    write_pdr_raw_csv(ra, a.trials);
    write_pdr_raw_csv(rb, b.trials);
    write_trial_log_csv(la, a.trials);
    write_trial_log_csv(lb, b.trials);
    write_pdr_aggregate_csv(ga, a.records);
    write_pdr_aggregate_csv(gb, b.records);
    CHECK(ra.str() == rb.str());
    CHECK(la.str() == lb.str());
    CHECK(ga.str() == gb.str());
    REQUIRE(a.trials.size() == 6);
    REQUIRE(a.records.size() == 4);

    const auto t = build_topology(NetworkModulus(cfg.alpha));
    for (const auto& r : a.trials) {
        // the logged seeds regenerate the logged faults and pairs
        FaultSpec spec;
        spec.density = r.density;
        spec.seed = r.fault_seed;
        CHECK(inject_faults(t, spec).nodes() == r.faults);
        CHECK(r.greedy.n_packets == cfg.packets_per_trial);
        CHECK(r.rl.n_packets == cfg.packets_per_trial);
        CHECK(r.reachable_fraction >= r.greedy.pdr);
        CHECK(r.reachable_fraction >= r.rl.pdr);
    }
    // density 0 greedy is perfect
    CHECK(a.records[0].pdr_mean == 1.0);
    CHECK(*a.records[0].adaptive_score == 1.0);

    // adding trials leaves earlier trials untouched
    auto more = cfg;
    more.trials_per_density = 4;
    more.densities = {0.2};
    const auto c = run_trials(t, more, 0.2);
    for (int i = 0; i < 3; ++i) {
        CHECK(c[static_cast<std::size_t>(i)].faults == a.trials[static_cast<std::size_t>(3 + i)].faults);
        CHECK(c[static_cast<std::size_t>(i)].greedy.hops == a.trials[static_cast<std::size_t>(3 + i)].greedy.hops);
    }
}

TEST_CASE("throughput sweep reuses the sweep's trial streams") {
    auto cfg = tiny_sweep();
    cfg.throughput_density = 0.2;
    const auto tp = run_throughput_sweep(cfg);
    const auto pdr = run_pdr_sweep(cfg);
    CHECK(tp.calibrated);
    CHECK(tp.beta > 0.0);
    REQUIRE(tp.trials.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(tp.trials[i].faults == pdr.trials[3 + i].faults);
    CHECK(tp.records.size() == 2 * cfg.loads.size());

    cfg.beta = 2.0;
    const auto fixed = run_throughput_sweep(cfg);
    CHECK(!fixed.calibrated);
    CHECK(fixed.beta == 2.0);
}

TEST_CASE("quadrant study") {
    SUBCASE("infeasible fault counts are rejected") {
        QuadrantConfig c;
        c.fault_counts = {6};
        CHECK_THROWS_AS(c.validate(), std::invalid_argument);
        c.fault_counts = {5};
        CHECK_NOTHROW(c.validate());
        c.fault_counts = {-1};
        CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    }
    SUBCASE("no faults: greedy and rl match the bfs average over the first quadrant") {
        const auto& t = net25();
        const auto none = FaultSet::none(25);
        double bfs_sum = 0.0;
        int q1 = 0;
        for (int v = 0; v < 25; ++v) {
            if (quadrant_of(v, t) != Quadrant::Q1) continue;
            bfs_sum += *bfs_distance(t, 0, v, none);
            ++q1;
        }
        REQUIRE(q1 == 6);
        QuadrantConfig c;
        c.fault_counts = {0};
        c.trials = 2;
        const auto recs = quadrant_study(c);
        REQUIRE(recs.size() == 3);
        for (const auto& r : recs) {
            CHECK(r.avg_hops == doctest::Approx(bfs_sum / q1));
            CHECK(r.delivery_rate == 1.0);
            CHECK(r.packets == 12);
        }
    }
}

TEST_CASE("detour demo structure on a small network") {
    const auto t = build_topology(NetworkModulus({2, 3}));
    PpoConfig ppo = scenario_ppo_config();
    ppo.episodes = 100;
    const auto rep = detour_demo(t, 0, 2, ppo, 1, {2, nullptr});
    CHECK(rep.rows.size() == 11);
    CHECK(rep.baseline_bfs == *bfs_distance(t, 0, 2, FaultSet::none(13)));
    for (const auto& row : rep.rows) {
        CHECK(row.fault_node != 0);
        CHECK(row.fault_node != 2);
        if (row.rl.delivered()) CHECK(row.rl.hops >= *row.bfs_hops);
        if (row.greedy.delivered()) CHECK(row.greedy.hops >= *row.bfs_hops);
    }
    for (const auto* w : rep.rl_wins()) CHECK(w->rl.delivered());
    std::ostringstream os;
    write_detour_csv(os, rep);
    CHECK(os.str().rfind("fault_node,re,im,bfs_hops,greedy_hops,rl_hops\n", 0) == 0);
    CHECK_THROWS_AS(detour_demo(t, 3, 3, ppo, 1), ContractError);
}

TEST_CASE("convergence summary") {
    std::vector<double> s(500);
    for (int i = 0; i < 500; ++i) s[static_cast<std::size_t>(i)] = i < 100 ? i : 100.0;
    auto c = summarize_convergence(s);
    CHECK(c.head_mean == doctest::Approx(24.5));
    CHECK(c.tail_mean == 100.0);
    CHECK(c.first_reach == 91);
    CHECK(c.rising);
    CHECK(c.early);

    for (int i = 0; i < 500; ++i) s[static_cast<std::size_t>(i)] = i < 300 ? 10.0 : 50.0;
    c = summarize_convergence(s);
    CHECK(c.first_reach == 301);
    CHECK(!c.early);
    // a lucky first episode inside a partial window does not count
    s.assign(500, 40.0);
    s[0] = 99.0;
    for (int i = 400; i < 500; ++i) s[static_cast<std::size_t>(i)] = 60.0;
    CHECK(summarize_convergence(s).first_reach == 401);
    CHECK_THROWS_AS(summarize_convergence(std::vector<double>(50, 1.0)), ContractError);
}

TEST_CASE("policy cache trains once per key") {
    PolicyCache cache;
    std::atomic<int> calls{0};
    std::vector<std::shared_ptr<const PolicyParams>> got(16);
    parallel_for(16, 4, [&](std::size_t i) {
        got[i] = cache.get_or_train({static_cast<int>(i % 2)}, [&] {
            ++calls;
            return PolicyParams::create(i % 2, 4);
        });
    });
    CHECK(calls == 2);
    CHECK(cache.size() == 2);
    for (std::size_t i = 2; i < 16; ++i) CHECK(got[i].get() == got[i % 2].get());

    CHECK_THROWS_AS(cache.get_or_train({7}, []() -> PolicyParams { throw NumericError("boom"); }), NumericError);
    CHECK_THROWS_AS(cache.get_or_train({7}, [] { return PolicyParams::create(1, 4); }), NumericError);
}

TEST_CASE("parallel_for covers every index and reports the first failure") {
    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

    try {
        parallel_for(10, 1, [](std::size_t i) {
            if (i >= 3) throw std::runtime_error("index " + std::to_string(i));
        });
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "index 3");
    }
    CHECK(resolve_jobs(3) == 3);
    CHECK(resolve_jobs(0) >= 1);
}

TEST_CASE("csv headers") {
    std::ostringstream a, b, c, d;
    write_pdr_raw_csv(a, {});
    write_pdr_aggregate_csv(b, {});
    write_throughput_csv(c, {});
    write_quadrant_csv(d, {});
    CHECK(a.str() == "density,policy,trial,pdr,mean_hops,n_delivered,n_packets\n");
    CHECK(b.str() == "density,policy,pdr_mean,pdr_stderr,adaptive_score\n");
    CHECK(c.str() == "load,policy,throughput_mean,throughput_stderr\n");
    CHECK(d.str() == "fault_count,policy,avg_hops,delivery_rate,trials\n");

    std::vector<MetricsRecord> recs(1);
    recs[0].density = 0.1;
    recs[0].policy = PolicyKind::Rl;
    recs[0].pdr_mean = 2.0 / 3.0;
    std::ostringstream e;
    write_pdr_aggregate_csv(e, recs);
    CHECK(e.str().substr(e.str().find('\n') + 1) == "0.1,rl,0.666667,0,\n");
}

TEST_CASE("svg chart") {
    const auto ticks = nice_ticks(0.0, 1.0);
    REQUIRE(ticks.size() >= 3);
    CHECK(ticks.front() == 0.0);
    CHECK(ticks.back() == doctest::Approx(1.0));
    LineChart chart{"PDR <vs> density", "Fault density", "PDR", {}};
    chart.series.push_back({"Greedy", {0.0, 0.2, 0.4}, {1.0, 0.9, 0.7}, {0.0, 0.01, 0.02}});
    chart.series.push_back({"RL & co", {0.0, 0.2, 0.4}, {1.0, 0.97, 0.93}, {}});
    std::ostringstream os;
    write_svg(os, chart);
    const auto svg = os.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("PDR &lt;vs&gt; density") != std::string::npos);
    CHECK(svg.find("RL &amp; co") != std::string::npos);
}
