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

#ifndef LSSC_BLOSSOM_H
#define LSSC_BLOSSOM_H

#include <array>
#include <cstdint>
#include <vector>

namespace lssc {

/// Input edge: {u, v, weight}, weight >= 0.
using WeightedEdge = std::array<int64_t, 3>;

struct MatchingResult {
    bool feasible = false;
    int64_t weight = 0;  // total matched weight (input scale)
    std::vector<int> mate;
    std::vector<int> mate_edge;

    // Optimality certificate (doubled scale): vertex duals plus surviving
    // blossoms with their duals and member lists.
    std::vector<int64_t> dual2;
    std::vector<std::pair<int64_t, std::vector<int>>> blossoms2;
};

/// Exact minimum-weight perfect matching via Edmonds' blossom algorithm
/// (primal-dual, single alternating tree, lazy event queues). Exactness is
/// checkable per instance with verify_matching_certificate.
MatchingResult min_weight_perfect_matching(int n, const std::vector<WeightedEdge> &edges);

/// LP-duality proof that a result is optimal: dual feasibility on every
/// edge, tightness of matched edges, full matchings inside paid blossoms,
/// and primal weight == dual objective.
bool verify_matching_certificate(int n, const std::vector<WeightedEdge> &edges, const MatchingResult &result);

}  // namespace lssc

#endif
