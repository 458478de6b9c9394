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

#include "lssc/checks.h"

#include <algorithm>
#include <climits>
#include <queue>
#include <set>
#include <sstream>

#include "doctest.h"

using namespace lssc;

namespace {

// Expands a product of plaquette (or star) rows straight from the local
// parity check matrix; independent route for the builders' supports.
BitVec expand_sites(const CheckSet &local, const std::vector<int> &sites) {
    BitVec out((size_t)(2 * local.L * local.L));
    for (int s : sites) {
        out.xor_with(local.checks[(size_t)s].support);
    }
    return out;
}

std::multiset<std::vector<uint32_t>> support_multiset(const CheckSet &set) {
    std::multiset<std::vector<uint32_t>> out;
    for (const Check &c : set.checks) {
        out.insert(c.support.set_bits());
    }
    return out;
}

bool commutes_with_all(const BitVec &op, const CheckSet &set) {
    for (const Check &c : set.checks) {
        if (op.dot(c.support)) {
            return false;
        }
    }
    return true;
}

// Shortest cycle with odd crossing count through a cut, via a double cover
// of the lattice graph. Used as the homology oracle for logical weights.
int shortest_odd_cycle(int L, bool horizontal_cut) {
    TorusLattice lat(L);
    int n_vertices = L * L;
    auto vid = [&](int site, int sheet) { return site * 2 + sheet; };
    // adjacency: vertex (r,c) connects via H(r,c) to (r,c+1) and via V(r,c)
    // to (r+1,c). The cut lies between column L-1 and 0 (or row L-1 and 0).
    std::vector<std::vector<std::pair<int, int>>> adj(2 * n_vertices);
    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) {
            int a = lat.site(r, c);
            int b_h = lat.site(r, c + 1);
            int b_v = lat.site(r + 1, c);
            bool h_crosses = !horizontal_cut && (c == L - 1);
            bool v_crosses = horizontal_cut && (r == L - 1);
            for (int sheet = 0; sheet < 2; sheet++) {
                adj[vid(a, sheet)].push_back({vid(b_h, sheet ^ (h_crosses ? 1 : 0)), 1});
                adj[vid(b_h, sheet ^ (h_crosses ? 1 : 0))].push_back({vid(a, sheet), 1});
                adj[vid(a, sheet)].push_back({vid(b_v, sheet ^ (v_crosses ? 1 : 0)), 1});
                adj[vid(b_v, sheet ^ (v_crosses ? 1 : 0))].push_back({vid(a, sheet), 1});
            }
        }
    }
    int best = INT_MAX;
    for (int s = 0; s < n_vertices; s++) {
        std::vector<int> dist(2 * n_vertices, INT_MAX);
        std::queue<int> q;
        dist[vid(s, 0)] = 0;
        q.push(vid(s, 0));
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [y, w] : adj[x]) {
                if (dist[y] == INT_MAX) {
                    dist[y] = dist[x] + w;
                    q.push(y);
                }
            }
        }
        best = std::min(best, dist[vid(s, 1)]);
    }
    return best;
}

}  // namespace

TEST_CASE("local checks: explicit supports at L=4") {
    TorusLattice lat(4);
    auto [hz, hx] = build_local_checks(4);
    REQUIRE(hz.checks.size() == 16);
    REQUIRE(hx.checks.size() == 16);
    // Plaquette (0,0): top H(0,0), bottom H(1,0), left V(0,0), right V(0,1).
    auto bits = hz.checks[0].support.set_bits();
    CHECK(bits == std::vector<uint32_t>{(uint32_t)lat.h(0, 0), (uint32_t)lat.h(1, 0), (uint32_t)lat.v(0, 0),
                                        (uint32_t)lat.v(0, 1)});
    // Star (0,0): H(0,0), H(0,3), V(0,0), V(3,0).
    auto sbits = hx.checks[0].support.set_bits();
    std::vector<uint32_t> expected{(uint32_t)lat.h(0, 0), (uint32_t)lat.h(0, 3), (uint32_t)lat.v(0, 0),
                                   (uint32_t)lat.v(3, 0)};
    std::sort(expected.begin(), expected.end());
    CHECK(sbits == expected);
}

TEST_CASE("local checks: counts, weights, commutation, rank") {
    for (int L : {2, 3, 4, 6}) {
        auto [hz, hx] = build_local_checks(L);
        CHECK((int)hz.checks.size() == L * L);
        CHECK((int)hx.checks.size() == L * L);
        for (const Check &c : hz.checks) {
            CHECK(c.support.popcount() == 4);
        }
        BinaryMatrix prod = hz.matrix().mul(hx.matrix().transposed());
        for (auto &row : prod.row) {
            CHECK(!row.any());
        }
        CHECK(hz.matrix().rank() == (size_t)(L * L - 1));
        CHECK(hx.matrix().rank() == (size_t)(L * L - 1));
    }
    CHECK_THROWS_AS(build_local_checks(1), std::invalid_argument);
}

TEST_CASE("single-shot checks: counts and expansion oracle") {
    CHECK((int)build_single_shot_checks(4).checks.size() == 15);
    CHECK((int)build_single_shot_checks(2).checks.size() == 3);
    CHECK_THROWS_AS(build_single_shot_checks(1), std::invalid_argument);

    // Every check must equal the GF(2) sum of its defining plaquette rows.
    int L = 4;
    CheckSet local = build_local_checks(L, Pauli::Z);
    CheckSet ss = build_single_shot_checks(L);
    TorusLattice lat(L);
    size_t idx = 0;
    for (int i = 0; i < L; i++) {
        CHECK(ss.checks[idx++].support == expand_sites(local, {lat.site(0, i)}));
    }
    for (int i = 2; i < L; i++) {
        for (int j = 0; j < L; j++) {
            std::vector<int> sites;
            for (int k = i; k < L; k++) {
                sites.push_back(lat.site(k, j));
            }
            CHECK(ss.checks[idx++].support == expand_sites(local, sites));
        }
    }
    for (int i = 0; i < L - 1; i++) {
        std::vector<int> sites;
        for (int m = 0; m <= i; m++) {
            for (int n = 0; n < L; n++) {
                sites.push_back(lat.site(n, m));
            }
        }
        CHECK(ss.checks[idx++].support == expand_sites(local, sites));
    }
    CHECK(idx == ss.checks.size());
}

TEST_CASE("variable-width checks: counts and collapses") {
    CHECK((int)build_variable_width_checks(8, 4, square_patch_origins(8, 4, 0, 0)).checks.size() == 64);
    CHECK_THROWS_AS(build_variable_width_checks(6, 4, Origins{}), std::invalid_argument);

    // l = 1 returns the local check set.
    for (int L : {2, 4}) {
        CheckSet vw1 = build_variable_width_checks(L, 1, square_patch_origins(L, 1, 0, 0));
        CheckSet local = build_local_checks(L, Pauli::Z);
        CHECK(support_multiset(vw1) == support_multiset(local));
    }

    // l = L equals the single-shot set after identity removal.
    for (int L : {2, 4, 6}) {
        CheckSet vwL = build_variable_width_checks(L, L, square_patch_origins(L, L, 0, 0));
        CheckSet ss = build_single_shot_checks(L);
        CHECK(vwL.n_removed == 1);
        CHECK((int)vwL.checks.size() == L * L - 1);
        CHECK(support_multiset(vwL) == support_multiset(ss));
    }
}

TEST_CASE("fixed-width checks: counts, families, weights") {
    // l = 2: no bottom-boundary checks.
    CheckSet fw2 = build_fixed_width_checks(4, 2, strip_origins(4, 2, 0));
    CHECK((int)fw2.checks.size() == 16);
    for (const Check &c : fw2.checks) {
        CHECK(c.family != CheckFamily::BottomFW);
    }

    // l = 1 collapses to local checks.
    CheckSet fw1 = build_fixed_width_checks(4, 1, strip_origins(4, 1, 0));
    CHECK(support_multiset(fw1) == support_multiset(build_local_checks(4, Pauli::Z)));

    // L=6, l=3: 12 strips x 3 checks, max weight 3*4-2*2 = 8.
    CheckSet fw3 = build_fixed_width_checks(6, 3, strip_origins(6, 3, 0));
    CHECK((int)fw3.checks.size() == 36);
    size_t max_w = 0;
    for (const Check &c : fw3.checks) {
        max_w = std::max(max_w, c.support.popcount());
    }
    CHECK(max_w == 8);
}

TEST_CASE("all families share the local stabilizer span and commute with duals") {
    for (int L : {4, 6}) {
        BinaryMatrix local_z = build_local_checks(L, Pauli::Z).matrix();
        size_t local_rank = local_z.rank();
        std::vector<CheckSet> families_z = {
            build_single_shot_checks(L),
            build_variable_width_checks(L, 2, square_patch_origins(L, 2, 0, 0)),
            build_fixed_width_checks(L, 2, strip_origins(L, 2, 0)),
        };
        if (L % 3 == 0) {
            families_z.push_back(build_fixed_width_checks(L, 3, strip_origins(L, 3, 0)));
        }
        CheckSet local_x = build_local_checks(L, Pauli::X);
        for (const CheckSet &fam : families_z) {
            BinaryMatrix m = fam.matrix();
            CHECK(m.rank() == local_rank);
            // Stacked rank unchanged => same row span.
            BinaryMatrix stacked(m.rows + local_z.rows, m.cols);
            for (size_t i = 0; i < m.rows; i++) {
                stacked.row[i] = m.row[i];
            }
            for (size_t i = 0; i < local_z.rows; i++) {
                stacked.row[m.rows + i] = local_z.row[i];
            }
            CHECK(stacked.rank() == local_rank);
            // H_Z * H_X^T == 0 against the dual local set.
            BinaryMatrix prod = m.mul(local_x.matrix().transposed());
            for (auto &row : prod.row) {
                CHECK(!row.any());
            }
        }
    }
}

TEST_CASE("mapped qubits lie in support and are unique within a patch") {
    for (int L : {4, 6, 8}) {
        std::vector<CheckSet> sets;
        sets.push_back(build_single_shot_checks(L));
        for (int l : {2, 3, 4}) {
            if (L % l) {
                continue;
            }
            for (Pauli p : {Pauli::Z, Pauli::X}) {
                sets.push_back(build_variable_width_checks(L, l, square_patch_origins(L, l, 0, 0), p));
                sets.push_back(build_fixed_width_checks(L, l, strip_origins(L, l, 0), p));
            }
        }
        for (const CheckSet &set : sets) {
            for (size_t i = 0; i < set.checks.size(); i++) {
                const Check &c = set.checks[i];
                if (c.mapped_qubit == kTimeEdge) {
                    continue;
                }
                CHECK(c.support.get((size_t)c.mapped_qubit));
                for (size_t j = 0; j < set.checks.size(); j++) {
                    if (j == i || set.checks[j].u != c.u || set.checks[j].v != c.v) {
                        continue;
                    }
                    CHECK(!set.checks[j].support.get((size_t)c.mapped_qubit));
                }
            }
        }
    }
}

TEST_CASE("logical operators") {
    for (int L : {2, 4, 6}) {
        LogicalOperators ops = logical_operators(L);
        CHECK(ops.z1.popcount() == (size_t)L);
        CHECK(ops.z2.popcount() == (size_t)L);
        auto [hz, hx] = build_local_checks(L);
        // Z loops commute with stars, X loops with plaquettes.
        CHECK(commutes_with_all(ops.z1, hx));
        CHECK(commutes_with_all(ops.z2, hx));
        CHECK(commutes_with_all(ops.x1, hz));
        CHECK(commutes_with_all(ops.x2, hz));
        // Pairing: anticommute exactly with the partner logical.
        CHECK(ops.z1.dot(ops.x1));
        CHECK(!ops.z1.dot(ops.x2));
        CHECK(ops.z2.dot(ops.x2));
        CHECK(!ops.z2.dot(ops.x1));
    }
}

TEST_CASE("minimum logical weight over cosets equals L") {
    for (int L : {4, 6}) {
        int hcut = shortest_odd_cycle(L, true);
        int vcut = shortest_odd_cycle(L, false);
        CHECK(std::min(hcut, vcut) == L);
    }
}

TEST_CASE("check set serialization round trip") {
    CheckSet fw = build_fixed_width_checks(6, 3, strip_origins(6, 3, 0));
    std::ostringstream out;
    save_checks(out, fw);
    std::istringstream in(out.str());
    CheckSet loaded = load_checks(in);
    REQUIRE(loaded.checks.size() == fw.checks.size());
    CHECK(loaded.L == fw.L);
    CHECK(loaded.l == fw.l);
    CHECK(loaded.kind == fw.kind);
    CHECK(loaded.n_removed == fw.n_removed);
    for (size_t i = 0; i < fw.checks.size(); i++) {
        CHECK(loaded.checks[i].support == fw.checks[i].support);
        CHECK(loaded.checks[i].family == fw.checks[i].family);
        CHECK(loaded.checks[i].mapped_qubit == fw.checks[i].mapped_qubit);
        CHECK(loaded.checks[i].u == fw.checks[i].u);
        CHECK(loaded.checks[i].v == fw.checks[i].v);
    }
    // Byte-exact second save.
    std::ostringstream out2;
    save_checks(out2, loaded);
    CHECK(out.str() == out2.str());
}
