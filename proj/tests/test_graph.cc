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

#include "lssc/compile.h"

#include <random>
#include <set>
#include <sstream>

#include "doctest.h"

using namespace lssc;

namespace {

int count_kind(const DecodingGraph &g, EdgeKind kind) {
    int n = 0;
    for (const GraphEdge &e : g.edges) {
        n += g.edge_kind(e) == kind;
    }
    return n;
}

// Straight-line re-evaluation of the detector definition, independent of
// DetectorConverter's incremental path.
BitVec detector_oracle(const Schedule &sched, const std::vector<BitVec> &records, const BitVec &final_data) {
    int n_sites = sched.L * sched.L;
    int R = (int)records.size();
    std::vector<BitVec> m;
    for (int t = 0; t < R; t++) {
        const CheckSet &set = sched.round_set(t);
        const BinaryMatrix &u = sched.round_u(t);
        BitVec mt((size_t)n_sites);
        for (int s = 0; s < n_sites; s++) {
            bool bit = false;
            for (size_t j = 0; j < set.checks.size(); j++) {
                bit ^= u.get((size_t)s, j) && records[(size_t)t].get(j);
            }
            mt.set((size_t)s, bit);
        }
        m.push_back(mt);
    }
    BinaryMatrix local = build_local_checks(sched.L, Pauli::Z).matrix();
    BitVec out((size_t)((R + 1) * n_sites));
    for (int t = 0; t <= R; t++) {
        for (int s = 0; s < n_sites; s++) {
            bool bit;
            if (t == 0) {
                bit = m[0].get((size_t)s);
            } else if (t < R) {
                bit = m[(size_t)t].get((size_t)s) ^ m[(size_t)t - 1].get((size_t)s);
            } else {
                bit = local.row[(size_t)s].dot(final_data) ^ m[(size_t)R - 1].get((size_t)s);
            }
            out.set((size_t)(t * n_sites + s), bit);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("merge_parallel_edges") {
    CHECK(merge_parallel_edges(0, 0.3) == doctest::Approx(0.3));
    CHECK(merge_parallel_edges(0.1, 0.2) == doctest::Approx(0.26));
    // Associative and commutative.
    double a = merge_parallel_edges(merge_parallel_edges(0.05, 0.1), 0.2);
    double b = merge_parallel_edges(0.05, merge_parallel_edges(0.2, 0.1));
    CHECK(a == doctest::Approx(b));
}

TEST_CASE("local-check graph has a time edge at every detector") {
    Schedule sched = make_schedule(4, 1, FamilyKind::Local, Scheme::Aligned, 2);
    CompiledGraph cg = compile_phenomenological_graph(sched, 2, 0.01, 0.01);
    const DecodingGraph &g = cg.graph;
    CHECK(g.n_layers == 3);
    CHECK(cg.diagnostics.empty());
    CHECK(count_kind(g, EdgeKind::Space) == 64);
    CHECK(count_kind(g, EdgeKind::Time) == 32);
    CHECK(count_kind(g, EdgeKind::SpaceTime) == 0);
    std::set<std::pair<int, int>> time_edges;  // (site, transition)
    for (const GraphEdge &e : g.edges) {
        if (g.edge_kind(e) == EdgeKind::Time) {
            time_edges.insert({g.det_site(e.a), std::min(g.det_layer(e.a), g.det_layer(e.b))});
        }
    }
    for (int s = 0; s < 16; s++) {
        CHECK(time_edges.count({s, 0}));
        CHECK(time_edges.count({s, 1}));
    }
}

TEST_CASE("FW l=2 offset graph matches hand enumeration at L=4, R=2") {
    Schedule sched = make_schedule(4, 2, FamilyKind::FixedWidth, Scheme::Offset, 2);
    CompiledGraph cg = compile_phenomenological_graph(sched, 2, 0.01, 0.01);
    const DecodingGraph &g = cg.graph;
    CHECK(cg.diagnostics.empty());
    CHECK(g.aux_coords.empty());
    // 32 data edges in layers 0 and 1, 8 T~ pieces in the readout layer,
    // 8 time edges per transition.
    CHECK(count_kind(g, EdgeKind::Space) == 32 + 32 + 8);
    CHECK(count_kind(g, EdgeKind::Time) == 16);
    CHECK((int)g.edges.size() == 88);

    // Time-edge rows alternate between layers (offset alignment).
    TorusLattice lat(4);
    std::set<int> rows_t0, rows_t1;
    for (const GraphEdge &e : g.edges) {
        if (g.edge_kind(e) != EdgeKind::Time) {
            continue;
        }
        int t = std::min(g.det_layer(e.a), g.det_layer(e.b));
        (t == 0 ? rows_t0 : rows_t1).insert(lat.site_row(g.det_site(e.a)));
    }
    CHECK(rows_t0 == std::set<int>{1, 3});
    CHECK(rows_t1 == std::set<int>{0, 2});

    // Aligned scheme: same rows in every transition.
    Schedule ali = make_schedule(4, 2, FamilyKind::FixedWidth, Scheme::Aligned, 2);
    CompiledGraph cga = compile_phenomenological_graph(ali, 2, 0.01, 0.01);
    std::set<int> rows_a0, rows_a1;
    for (const GraphEdge &e : cga.graph.edges) {
        if (cga.graph.edge_kind(e) != EdgeKind::Time) {
            continue;
        }
        int t = std::min(cga.graph.det_layer(e.a), cga.graph.det_layer(e.b));
        (t == 0 ? rows_a0 : rows_a1).insert(lat.site_row(cga.graph.det_site(e.a)));
    }
    CHECK(rows_a0 == rows_a1);
}

TEST_CASE("decomposition soundness on phenomenological graphs") {
    for (auto [L, l, fam] : std::vector<std::tuple<int, int, FamilyKind>>{
             {4, 2, FamilyKind::FixedWidth}, {6, 3, FamilyKind::FixedWidth}, {4, 2, FamilyKind::VariableWidth},
             {8, 4, FamilyKind::VariableWidth}, {4, 4, FamilyKind::SingleShot}}) {
        Schedule sched = make_schedule(L, l, fam, Scheme::Offset, 2);
        CompiledGraph cg = compile_phenomenological_graph(sched, 3, 0.01, 0.007, DecompKind::SpaceFirst, true);
        REQUIRE(cg.diagnostics.empty());
        REQUIRE(cg.decomposition.size() == cg.hyperedges.size());
        for (size_t i = 0; i < cg.hyperedges.size(); i++) {
            std::map<uint32_t, int> incidence;
            uint8_t logical = 0;
            for (const SubEdge &s : cg.decomposition[i]) {
                incidence[s.a]++;
                if (s.b != kBoundaryVertex) {
                    incidence[s.b]++;
                }
                logical ^= s.logical;
            }
            std::vector<uint32_t> odd;
            for (auto &[v, cnt] : incidence) {
                if (cnt & 1) {
                    odd.push_back(v);
                }
            }
            CHECK(odd == cg.hyperedges[i].dets);
            CHECK(logical == cg.hyperedges[i].logical);
        }
        // Locality invariant on every emitted edge.
        for (const GraphEdge &e : cg.graph.edges) {
            CHECK(edge_is_local(cg.graph, e));
        }
        // Space-edge-first graphs only cross layers at allowed sites.
        for (const GraphEdge &e : cg.graph.edges) {
            EdgeKind k = cg.graph.edge_kind(e);
            if (k == EdgeKind::Time || k == EdgeKind::SpaceTime) {
                int t = std::min(cg.graph.det_layer(e.a), cg.graph.det_layer(e.b));
                int sa = cg.graph.det_site(e.a);
                const auto &allowed = cg.graph.allowed_sites[(size_t)t];
                CHECK(std::binary_search(allowed.begin(), allowed.end(), sa));
            }
        }
    }
}

TEST_CASE("BFS time distance matches the closed forms") {
    // Local checks: d_t = W.
    Schedule loc = make_schedule(4, 1, FamilyKind::Local, Scheme::Aligned, 6);
    for (int W : {2, 3, 4}) {
        CHECK(measured_time_distance(loc, W) == W);
    }
    // FW l=2 offset at W=2: the Fig. 3(c) value 3.
    Schedule fw2 = make_schedule(4, 2, FamilyKind::FixedWidth, Scheme::Offset, 6);
    CHECK(measured_time_distance(fw2, 2) == 3);
    // Aligned FW: back to W.
    Schedule fw2a = make_schedule(4, 2, FamilyKind::FixedWidth, Scheme::Aligned, 6);
    CHECK(measured_time_distance(fw2a, 2) == 2);
    CHECK(measured_time_distance(fw2a, 3) == 3);
    // FW l=4 offset, L=8.
    Schedule fw4 = make_schedule(8, 4, FamilyKind::FixedWidth, Scheme::Offset, 6);
    for (int W : {2, 3, 4}) {
        CHECK(measured_time_distance(fw4, W) == predicted_time_distance(W, 4, FamilyKind::FixedWidth));
    }
    // VW l=2 offset, L=6.
    Schedule vw2 = make_schedule(6, 2, FamilyKind::VariableWidth, Scheme::Offset, 6);
    for (int W : {2, 3}) {
        CHECK(measured_time_distance(vw2, W) == predicted_time_distance(W, 2, FamilyKind::VariableWidth));
    }
    // VW with l = L: no time edges, boundary unreachable.
    Schedule vwL = make_schedule(4, 4, FamilyKind::VariableWidth, Scheme::Offset, 6);
    CHECK(measured_time_distance(vwL, 2) == -1);
}

TEST_CASE("detector conversion: zero records, F~ flip signature, dense oracle") {
    Schedule sched = make_schedule(6, 3, FamilyKind::FixedWidth, Scheme::Offset, 3);
    int n_sites = 36;
    std::vector<BitVec> records;
    for (int t = 0; t < 3; t++) {
        records.emplace_back(sched.round_set(t).checks.size());
    }
    BitVec final_data((size_t)72);

    BitVec d0 = detectors_from_records(sched, records, final_data);
    CHECK(!d0.any());

    // Flip the F~ check of strip (0,2) at round 1 (parity 1: origins rows 1,4).
    const CheckSet &set1 = sched.round_set(1);
    size_t idx = SIZE_MAX;
    for (size_t j = 0; j < set1.checks.size(); j++) {
        if (set1.checks[j].family == CheckFamily::FullFW && set1.checks[j].u == 1 && set1.checks[j].v == 2) {
            idx = j;
        }
    }
    REQUIRE(idx != SIZE_MAX);
    records[1].set(idx, true);
    BitVec d1 = detectors_from_records(sched, records, final_data);
    TorusLattice lat(6);
    std::vector<uint32_t> expected{(uint32_t)(1 * n_sites + lat.site(2, 2)), (uint32_t)(2 * n_sites + lat.site(2, 2))};
    CHECK(d1.set_bits() == expected);

    // Random records match the dense oracle.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; trial++) {
        std::vector<BitVec> rec;
        for (int t = 0; t < 3; t++) {
            BitVec r(sched.round_set(t).checks.size());
            for (size_t j = 0; j < r.size(); j++) {
                r.set(j, rng() & 1);
            }
            rec.push_back(r);
        }
        BitVec fd((size_t)72);
        for (size_t q = 0; q < 72; q++) {
            fd.set(q, rng() & 1);
        }
        CHECK(detectors_from_records(sched, rec, fd) == detector_oracle(sched, rec, fd));
    }

    // Record length mismatch.
    records[0] = BitVec(3);
    CHECK_THROWS_AS(detectors_from_records(sched, records, final_data), std::invalid_argument);
}

TEST_CASE("DEM round trip") {
    Schedule sched = make_schedule(4, 2, FamilyKind::FixedWidth, Scheme::Offset, 2);
    CompiledGraph cg = compile_phenomenological_graph(sched, 2, 0.013, 0.008);
    std::ostringstream out;
    save_dem(out, cg.graph, 2);
    std::istringstream in(out.str());
    int n_obs = 0;
    DecodingGraph loaded = load_dem(in, &n_obs);
    CHECK(n_obs == 2);
    CHECK(loaded.L == cg.graph.L);
    CHECK(loaded.n_layers == cg.graph.n_layers);
    REQUIRE(loaded.edges.size() == cg.graph.edges.size());
    for (size_t i = 0; i < loaded.edges.size(); i++) {
        CHECK(loaded.edges[i].a == cg.graph.edges[i].a);
        CHECK(loaded.edges[i].b == cg.graph.edges[i].b);
        CHECK(loaded.edges[i].p == doctest::Approx(cg.graph.edges[i].p).epsilon(1e-9));
        CHECK(loaded.edges[i].logical == cg.graph.edges[i].logical);
    }
    std::ostringstream out2;
    save_dem(out2, loaded, 2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("time-first decomposition of a measurement hyperedge gives two time edges") {
    Schedule sched = make_schedule(4, 2, FamilyKind::FixedWidth, Scheme::Offset, 2);
    int n_layers = 3;
    auto mechs = phenom_mechanisms(sched, 2, 0.0, 0.01);  // measurement errors only
    auto allowed = allowed_sites_table(sched, n_layers);
    CompiledGraph tf = compile_graph(mechs, 4, n_layers, DecompKind::TimeFirst, allowed, Pauli::Z, true);
    CHECK(tf.diagnostics.empty());
    for (size_t i = 0; i < tf.hyperedges.size(); i++) {
        if (tf.hyperedges[i].dets.size() == 4) {
            REQUIRE(tf.decomposition[i].size() == 2);
            for (const SubEdge &s : tf.decomposition[i]) {
                CHECK(tf.graph.det_site(s.a) == tf.graph.det_site(s.b));
            }
        } else {
            // Weight-1 columns pass through as plain time edges.
            CHECK(tf.hyperedges[i].dets.size() == 2);
            CHECK(tf.decomposition[i].size() == 1);
        }
    }
    // Time-first keeps the time distance at W.
    auto mechs_full = phenom_mechanisms(sched, 6, 0.01, 0.01);
    CompiledGraph tf_full = compile_graph(mechs_full, 4, 7, DecompKind::TimeFirst, allowed_sites_table(sched, 7));
    CHECK(time_distance_bfs(tf_full.graph, 0, 3) == 3);
}
