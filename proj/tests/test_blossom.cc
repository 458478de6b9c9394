// Copyright 2026 LSSC Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lssc/blossom.h"

#include <random>

#include "doctest.h"
#include "oracles/brute_match.h"

using namespace lssc;
using lssc_tests::brute_force_mwpm;
using lssc_tests::kNoMatching;

TEST_CASE("blossom: tiny hand instances") {
    {
        MatchingResult r = min_weight_perfect_matching(2, {{0, 1, 5}});
        REQUIRE(r.feasible);
        CHECK(r.weight == 5);
        CHECK(r.mate[0] == 1);
        CHECK(verify_matching_certificate(2, {{0, 1, 5}}, r));
    }
    {
        // Path 0-1-2-3: must take the outer edges.
        std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 0}, {2, 3, 1}};
        MatchingResult r = min_weight_perfect_matching(4, edges);
        REQUIRE(r.feasible);
        CHECK(r.weight == 2);
        CHECK(verify_matching_certificate(4, edges, r));
    }
    {
        // Triangle with a pendant: forces a blossom shrink.
        std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}};
        MatchingResult r = min_weight_perfect_matching(4, edges);
        REQUIRE(r.feasible);
        CHECK(r.weight == 2);
        CHECK(r.mate[3] == 0);
        CHECK(r.mate[1] == 2);
        CHECK(verify_matching_certificate(4, edges, r));
    }
    {
        // Odd vertex count.
        MatchingResult r = min_weight_perfect_matching(3, {{0, 1, 1}, {1, 2, 1}});
        CHECK(!r.feasible);
    }
    {
        // Disconnected odd components.
        MatchingResult r = min_weight_perfect_matching(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
        CHECK(!r.feasible);
    }
}

TEST_CASE("blossom: random instances match the exhaustive oracle") {
    std::mt19937_64 rng(12345);
    int n_checked = 0;
    for (int trial = 0; trial < 600; trial++) {
        int n = 2 * (1 + (int)(rng() % 6));  // 2..12
        double density = 0.25 + 0.7 * (double)(rng() % 100) / 100.0;
        std::vector<WeightedEdge> edges;
        for (int u = 0; u < n; u++) {
            for (int v = u + 1; v < n; v++) {
                if ((double)(rng() % 1000) / 1000.0 < density) {
                    edges.push_back({u, v, (int64_t)(rng() % 1000)});
                }
            }
        }
        int64_t expected = brute_force_mwpm(n, edges);
        MatchingResult r = min_weight_perfect_matching(n, edges);
        if (expected >= kNoMatching) {
            CHECK(!r.feasible);
            continue;
        }
        REQUIRE(r.feasible);
        CHECK(r.weight == expected);
        CHECK(verify_matching_certificate(n, edges, r));
        n_checked++;
    }
    CHECK(n_checked > 300);
}

TEST_CASE("blossom: structured instances with many zero edges (boundary twins)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; trial++) {
        int m = 1 + (int)(rng() % 5);  // defects
        int n = 2 * m;                 // defect + twin per defect
        std::vector<WeightedEdge> edges;
        for (int i = 0; i < m; i++) {
            for (int j = i + 1; j < m; j++) {
                edges.push_back({i, j, (int64_t)(rng() % 500)});
            }
        }
        for (int i = 0; i < m; i++) {
            edges.push_back({i, m + i, (int64_t)(rng() % 500)});
        }
        for (int i = 0; i < m; i++) {
            for (int j = i + 1; j < m; j++) {
                edges.push_back({m + i, m + j, 0});
            }
        }
        int64_t expected = brute_force_mwpm(n, edges);
        MatchingResult r = min_weight_perfect_matching(n, edges);
        REQUIRE(r.feasible);
        CHECK(r.weight == expected);
        CHECK(verify_matching_certificate(n, edges, r));
    }
}

TEST_CASE("blossom: larger random instances carry valid certificates") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 12; trial++) {
        int n = 100 + 2 * (int)(rng() % 80);
        std::vector<WeightedEdge> edges;
        // Ring + chords keeps it feasible and blossom-rich.
        for (int v = 0; v < n; v++) {
            edges.push_back({v, (v + 1) % n, (int64_t)(rng() % 2000)});
        }
        for (int extra = 0; extra < 6 * n; extra++) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u != v) {
                edges.push_back({std::min(u, v), std::max(u, v), (int64_t)(rng() % 2000)});
            }
        }
        MatchingResult r = min_weight_perfect_matching(n, edges);
        REQUIRE(r.feasible);
        CHECK(verify_matching_certificate(n, edges, r));
    }
}
