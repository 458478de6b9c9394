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

#include <algorithm>
#include <map>

namespace lssc {

namespace {

// Geometry + logical-mask context for one graph build.
struct MaskContext {
    TorusLattice lat;
    LogicalOperators ops;
    Pauli pauli;
    std::map<std::pair<int, int>, int> pair_qubit;  // adjacent site pair -> shared data qubit

    MaskContext(int L, Pauli p) : lat(L), ops(logical_operators(L)), pauli(p) {
        for (int q = 0; q < lat.n_qubits(); q++) {
            auto sites = p == Pauli::Z ? lat.qubit_plaquettes(q) : lat.qubit_stars(q);
            auto key = std::minmax(sites[0], sites[1]);
            auto it = pair_qubit.find(key);
            if (it == pair_qubit.end()) {
                pair_qubit.emplace(key, q);
            }
        }
    }

    uint8_t qubit_mask(int q) const {
        const BitVec &l1 = pauli == Pauli::Z ? ops.z1 : ops.x1;
        const BitVec &l2 = pauli == Pauli::Z ? ops.z2 : ops.x2;
        return (uint8_t)((l1.get((size_t)q) ? 1 : 0) | (l2.get((size_t)q) ? 2 : 0));
    }

    int shared_qubit(int sa, int sb) const {
        auto it = pair_qubit.find(std::minmax(sa, sb));
        return it == pair_qubit.end() ? -1 : it->second;
    }

    bool local(int sa, int sb) const {
        int dr = lat.cyc_dist(lat.site_row(sa), lat.site_row(sb));
        int dc = lat.cyc_dist(lat.site_col(sa), lat.site_col(sb));
        return dr <= 1 && dc <= 1 && (dr + dc) > 0;
    }
};

struct PendingEdge {
    uint32_t a, b;
    bool is_time = false;  // vertical pair at one site (mask stays 0)
};

class Decomposer {
  public:
    Decomposer(int L, int n_layers, DecompKind kind, const std::vector<std::vector<int>> &allowed, Pauli pauli,
               bool keep_audit, CompiledGraph *out)
        : builder_(L, n_layers),
          ctx_(L, pauli),
          kind_(kind),
          allowed_(allowed),
          keep_audit_(keep_audit),
          out_(out),
          n_layers_(n_layers),
          L_(L) {
    }

    void run(std::vector<ErrorMechanism> mechs) {
        out_->hyperedges = std::move(mechs);
        for (const ErrorMechanism &m : out_->hyperedges) {
            pending_.clear();
            std::string reason = decompose(m);
            if (!reason.empty()) {
                out_->diagnostics.push_back({m, reason});
                if (keep_audit_) {
                    out_->decomposition.emplace_back();
                }
                continue;
            }
            commit(m);
        }
        out_->graph = builder_.take();
        out_->graph.allowed_sites = allowed_;
    }

  private:
    bool allowed_at(int site, int t) const {
        if (t < 0 || t >= (int)allowed_.size()) {
            return false;
        }
        const auto &v = allowed_[(size_t)t];
        return std::binary_search(v.begin(), v.end(), site);
    }

    int site_of(uint32_t id) const {
        return builder_.graph().det_site(id);
    }

    void emit(uint32_t a, uint32_t b, bool is_time = false) {
        pending_.push_back({a, b, is_time});
    }

    // ---- joint checks on the pending edge list ----
    bool pending_all_local() const {
        const DecodingGraph &g = builder_.graph();
        for (const PendingEdge &e : pending_) {
            if (e.b == kBoundaryVertex || e.is_time) {
                continue;
            }
            int sa = g.det_site(e.a), sb = g.det_site(e.b);
            if (sa != sb && !ctx_.local(sa, sb)) {
                return false;
            }
        }
        return true;
    }

    // Decompose one mechanism into pending_; returns a diagnostic reason on
    // failure (pending_ is then discarded).
    std::string decompose(const ErrorMechanism &m) {
        size_t n = m.dets.size();
        if (n == 0) {
            return m.logical ? "undetectable mechanism with nonzero logical action" : "";
        }
        if (n == 1) {
            emit(m.dets[0], kBoundaryVertex);
            return "";
        }
        const DecodingGraph &g = builder_.graph();
        int t_lo = g.det_layer(m.dets[0]), t_hi = t_lo;
        for (uint32_t d : m.dets) {
            t_lo = std::min(t_lo, g.det_layer(d));
            t_hi = std::max(t_hi, g.det_layer(d));
        }
        if (t_hi - t_lo > 1) {
            return "detectors span more than two layers";
        }
        std::vector<int> lower, upper;  // sites per layer
        for (uint32_t d : m.dets) {
            (g.det_layer(d) == t_lo ? lower : upper).push_back(g.det_site(d));
        }
        if (t_lo == t_hi) {
            return decompose_single_layer(m, t_lo, lower);
        }
        // Aligned site pairs across the two layers.
        std::vector<int> aligned;
        std::vector<int> rest_lo, rest_hi;
        for (int s : lower) {
            if (std::find(upper.begin(), upper.end(), s) != upper.end()) {
                aligned.push_back(s);
            } else {
                rest_lo.push_back(s);
            }
        }
        for (int s : upper) {
            if (std::find(lower.begin(), lower.end(), s) == lower.end()) {
                rest_hi.push_back(s);
            }
        }
        if (kind_ == DecompKind::TimeFirst) {
            return decompose_time_first(m, t_lo, aligned, rest_lo, rest_hi);
        }
        return decompose_space_first(m, t_lo, aligned, rest_lo, rest_hi);
    }

    std::string decompose_single_layer(const ErrorMechanism &m, int t, std::vector<int> &sites) {
        const DecodingGraph &g = builder_.graph();
        (void)g;
        if (sites.size() == 2) {
            emit(det(sites[0], t), det(sites[1], t));
            return pending_all_local() ? "" : "nonlocal space edge";
        }
        if (sites.size() == 4) {
            // Try every pairing into two local space edges.
            static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
            for (auto &pr : pairings) {
                if (ctx_.local(sites[pr[0]], sites[pr[1]]) && ctx_.local(sites[pr[2]], sites[pr[3]])) {
                    emit(det(sites[pr[0]], t), det(sites[pr[1]], t));
                    emit(det(sites[pr[2]], t), det(sites[pr[3]], t));
                    return "";
                }
            }
            return "same-layer degree-4 with no local pairing";
        }
        return "unsupported same-layer degree";
    }

    std::string decompose_time_first(const ErrorMechanism &m, int t, const std::vector<int> &aligned,
                                     const std::vector<int> &rest_lo, const std::vector<int> &rest_hi) {
        for (int s : aligned) {
            emit(det(s, t), det(s, t + 1), true);
        }
        size_t residual = rest_lo.size() + rest_hi.size();
        if (residual == 0) {
            return "";
        }
        if (residual == 1) {
            int s = rest_lo.empty() ? rest_hi[0] : rest_lo[0];
            int tt = rest_lo.empty() ? t + 1 : t;
            emit(det(s, tt), kBoundaryVertex);
            return "";
        }
        if (residual == 2) {
            uint32_t a = rest_lo.empty() ? det(rest_hi[0], t + 1) : det(rest_lo[0], t);
            uint32_t b;
            if (rest_lo.size() == 2) {
                b = det(rest_lo[1], t);
            } else if (rest_hi.size() == 2) {
                a = det(rest_hi[0], t + 1);
                b = det(rest_hi[1], t + 1);
            } else {
                b = det(rest_hi[0], t + 1);
            }
            emit(a, b);
            return pending_all_local() ? "" : "nonlocal residual edge";
        }
        return "more than two residual detectors after time pairing";
    }

    std::string decompose_space_first(const ErrorMechanism &m, int t, const std::vector<int> &aligned,
                                      const std::vector<int> &rest_lo, const std::vector<int> &rest_hi) {
        size_t n = m.dets.size();
        size_t n_pairs = aligned.size();

        if (n == 2) {
            if (n_pairs == 1) {
                return add_vertical(aligned[0], t);
            }
            // Space-time edge: allowed directly only between allowed sites in
            // the same row; otherwise anchor an auxiliary detector at the
            // allowed endpoint's projection.
            int s_lo = rest_lo[0], s_hi = rest_hi[0];
            if (allowed_at(s_lo, t) && allowed_at(s_hi, t) &&
                ctx_.lat.site_row(s_lo) == ctx_.lat.site_row(s_hi)) {
                emit(det(s_lo, t), det(s_hi, t + 1));
                return pending_all_local() ? "" : "nonlocal space-time edge";
            }
            if (allowed_at(s_lo, t)) {
                uint32_t a = builder_.aux_vertex(s_lo, t + 1);
                emit(det(s_lo, t), a, true);
                emit(a, det(s_hi, t + 1));
                return pending_all_local() ? "" : "nonlocal edge after aux projection";
            }
            if (allowed_at(s_hi, t)) {
                uint32_t a = builder_.aux_vertex(s_hi, t);
                emit(a, det(s_hi, t + 1), true);
                emit(det(s_lo, t), a);
                return pending_all_local() ? "" : "nonlocal edge after aux projection";
            }
            return "space-time edge with no allowed endpoint";
        }

        if (n == 4 && n_pairs == 2) {
            // Measurement-error hyperedge: two data errors at consecutive
            // rounds on the mapped qubit.
            emit(det(aligned[0], t), det(aligned[1], t));
            emit(det(aligned[0], t + 1), det(aligned[1], t + 1));
            return pending_all_local() ? "" : "degree-4 aligned pair is nonlocal";
        }

        if (n == 4 && n_pairs == 1) {
            int p = aligned[0];
            if (rest_lo.size() == 2 || rest_hi.size() == 2) {
                int tt = rest_lo.size() == 2 ? t : t + 1;
                const std::vector<int> &rest = rest_lo.size() == 2 ? rest_lo : rest_hi;
                if (allowed_at(p, t)) {
                    emit(det(p, t), det(p, t + 1), true);
                    emit(det(rest[0], tt), det(rest[1], tt));
                    return pending_all_local() ? "" : "nonlocal remaining pair";
                }
                // Pair not at an allowed position: route the time edge
                // through an auxiliary pair at the nearest allowed site in
                // the same column.
                int s_aux = nearest_allowed_in_column(p, t);
                if (s_aux < 0) {
                    return "no adjacent allowed site for auxiliary time edge";
                }
                uint32_t a0 = builder_.aux_vertex(s_aux, t);
                uint32_t a1 = builder_.aux_vertex(s_aux, t + 1);
                emit(a0, a1, true);
                emit(a0, det(p, t));
                emit(a1, det(p, t + 1));
                emit(det(rest[0], tt), det(rest[1], tt));
                return pending_all_local() ? "" : "nonlocal edge after aux pair";
            }
            // Remaining detectors on different layers.
            int s_lo = rest_lo[0], s_hi = rest_hi[0];
            if (ctx_.local(p, s_lo) && ctx_.local(p, s_hi)) {
                emit(det(p, t), det(s_lo, t));
                emit(det(p, t + 1), det(s_hi, t + 1));
                return "";
            }
            if (ctx_.local(s_hi, p) && ctx_.local(s_hi, s_lo)) {
                uint32_t a = builder_.aux_vertex(s_hi, t);
                emit(a, det(p, t));
                emit(a, det(s_lo, t));
                emit(det(p, t + 1), det(s_hi, t + 1));
                return "";
            }
            if (ctx_.local(s_lo, p) && ctx_.local(s_lo, s_hi)) {
                uint32_t a = builder_.aux_vertex(s_lo, t + 1);
                emit(a, det(p, t + 1));
                emit(a, det(s_hi, t + 1));
                emit(det(p, t), det(s_lo, t));
                return "";
            }
            return "degree-4 with one pair: no local decomposition";
        }

        if (n == 6 && n_pairs == 2) {
            int p1 = aligned[0], p2 = aligned[1];
            bool rest_same_layer = rest_lo.size() == 2 || rest_hi.size() == 2;
            if (allowed_at(p1, t) && allowed_at(p2, t) && rest_same_layer) {
                int tt = rest_lo.size() == 2 ? t : t + 1;
                const std::vector<int> &rest = rest_lo.size() == 2 ? rest_lo : rest_hi;
                emit(det(p1, t), det(p1, t + 1), true);
                emit(det(p2, t), det(p2, t + 1), true);
                emit(det(rest[0], tt), det(rest[1], tt));
                return pending_all_local() ? "" : "nonlocal remaining pair";
            }
            if (ctx_.local(p1, p2) && rest_same_layer) {
                int tt = rest_lo.size() == 2 ? t : t + 1;
                const std::vector<int> &rest = rest_lo.size() == 2 ? rest_lo : rest_hi;
                emit(det(p1, t), det(p2, t));
                emit(det(p1, t + 1), det(p2, t + 1));
                emit(det(rest[0], tt), det(rest[1], tt));
                return pending_all_local() ? "" : "nonlocal remaining pair";
            }
            if (rest_same_layer) {
                // Pairs are mutually nonlocal: chain the lone layer through
                // two auxiliary projections of the remaining detectors.
                bool rest_up = rest_hi.size() == 2;
                const std::vector<int> &rest = rest_up ? rest_hi : rest_lo;
                int t_rest = rest_up ? t + 1 : t;
                int t_lone = rest_up ? t : t + 1;
                // Crowded layer: p1, p2, rest[0], rest[1]; pair them locally.
                static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                int sites4[4] = {p1, p2, rest[0], rest[1]};
                bool paired = false;
                for (auto &pr : pairings) {
                    if (ctx_.local(sites4[pr[0]], sites4[pr[1]]) && ctx_.local(sites4[pr[2]], sites4[pr[3]])) {
                        emit(det(sites4[pr[0]], t_rest), det(sites4[pr[1]], t_rest));
                        emit(det(sites4[pr[2]], t_rest), det(sites4[pr[3]], t_rest));
                        paired = true;
                        break;
                    }
                }
                if (!paired) {
                    return "degree-6: crowded layer admits no local pairing";
                }
                // Lone layer: chain p1 - aux(rest[i]) - aux(rest[j]) - p2.
                for (int swap = 0; swap < 2; swap++) {
                    int ra = rest[swap], rb = rest[1 - swap];
                    if (ctx_.local(p1, ra) && ctx_.local(ra, rb) && ctx_.local(rb, p2)) {
                        uint32_t a1 = builder_.aux_vertex(ra, t_lone);
                        uint32_t a2 = builder_.aux_vertex(rb, t_lone);
                        emit(det(p1, t_lone), a1);
                        emit(a1, a2);
                        emit(a2, det(p2, t_lone));
                        return "";
                    }
                }
                return "degree-6: no local auxiliary chain";
            }
            return "degree-6 with split remaining detectors";
        }

        if (n == 6 && n_pairs == 3) {
            for (int s : aligned) {
                if (!allowed_at(s, t)) {
                    return "degree-6 triple pair at disallowed position";
                }
            }
            for (int s : aligned) {
                emit(det(s, t), det(s, t + 1), true);
            }
            return "";
        }

        return "unsupported hyperedge shape";
    }

    // Pure vertical pair: a time edge when allowed, otherwise detoured
    // through an auxiliary pair in the nearest allowed row.
    std::string add_vertical(int s, int t) {
        if (allowed_at(s, t)) {
            emit(det(s, t), det(s, t + 1), true);
            return "";
        }
        int s_aux = nearest_allowed_in_column(s, t);
        if (s_aux < 0) {
            return "time edge at disallowed position with no adjacent allowed site";
        }
        uint32_t a0 = builder_.aux_vertex(s_aux, t);
        uint32_t a1 = builder_.aux_vertex(s_aux, t + 1);
        emit(a0, a1, true);
        emit(a0, det(s, t));
        emit(a1, det(s, t + 1));
        return "";
    }

    // Allowed site in the same column at cyclic row distance 1; prefers the
    // row above. Returns -1 if none.
    int nearest_allowed_in_column(int s, int t) const {
        int r = ctx_.lat.site_row(s), c = ctx_.lat.site_col(s);
        for (int dr : {-1, 1}) {
            int cand = ctx_.lat.site(r + dr, c);
            if (allowed_at(cand, t)) {
                return cand;
            }
        }
        return -1;
    }

    uint32_t det(int site, int t) const {
        return builder_.graph().det_id(site, t);
    }

    // Assign logical masks (data-qubit semantics, residue folded into the
    // first space edge) and push the pending edges into the graph.
    void commit(const ErrorMechanism &m) {
        const DecodingGraph &g = builder_.graph();
        std::vector<SubEdge> subs;
        subs.reserve(pending_.size());
        uint8_t acc = 0;
        int first_space = -1;
        for (const PendingEdge &e : pending_) {
            SubEdge s{e.a, e.b, 0};
            if (e.b == kBoundaryVertex) {
                s.logical = m.logical;
            } else if (!e.is_time) {
                int sa = g.det_site(e.a), sb = g.det_site(e.b);
                int q = sa == sb ? -1 : ctx_.shared_qubit(sa, sb);
                if (q >= 0) {
                    s.logical = ctx_.qubit_mask(q);
                }
                if (first_space < 0) {
                    first_space = (int)subs.size();
                }
            }
            acc ^= s.logical;
            subs.push_back(s);
        }
        uint8_t diff = acc ^ m.logical;
        if (diff) {
            int idx = first_space >= 0 ? first_space : 0;
            subs[(size_t)idx].logical ^= diff;
        }
        for (const SubEdge &s : subs) {
            builder_.add_edge(s.a, s.b, m.p, s.logical);
        }
        if (keep_audit_) {
            out_->decomposition.push_back(std::move(subs));
        }
    }

    GraphBuilder builder_;
    MaskContext ctx_;
    DecompKind kind_;
    const std::vector<std::vector<int>> &allowed_;
    bool keep_audit_;
    CompiledGraph *out_;
    int n_layers_;
    int L_;
    std::vector<PendingEdge> pending_;
};

}  // namespace of anonymous

std::vector<std::vector<int>> allowed_sites_table(const Schedule &sched, int n_layers, Pauli pauli) {
    std::vector<std::vector<int>> table;
    std::vector<int> per_parity[2];
    for (int parity = 0; parity < 2; parity++) {
        per_parity[parity] = allowed_time_sites(sched, parity, pauli);
    }
    for (int t = 0; t + 1 < n_layers; t++) {
        table.push_back(per_parity[sched.parity(t)]);
    }
    return table;
}

std::vector<ErrorMechanism> phenom_mechanisms(const Schedule &sched, int R, double p_data, double q_meas,
                                              Pauli pauli) {
    if (R < 1) {
        throw std::invalid_argument("phenom_mechanisms: R must be >= 1");
    }
    int L = sched.L;
    TorusLattice lat(L);
    MaskContext ctx(L, pauli);
    std::map<std::pair<std::vector<uint32_t>, uint8_t>, size_t> index;
    std::vector<ErrorMechanism> mechs;

    auto det_id = [&](int site, int t) { return (uint32_t)(t * L * L + site); };
    auto push = [&](std::vector<uint32_t> dets, double p, uint8_t logical, int origin) {
        std::sort(dets.begin(), dets.end());
        auto key = std::make_pair(dets, logical);
        auto it = index.find(key);
        if (it != index.end()) {
            mechs[it->second].p = merge_parallel_edges(mechs[it->second].p, p);
            return;
        }
        ErrorMechanism m;
        m.p = p;
        m.dets = std::move(dets);
        m.logical = logical;
        m.origin_instruction = origin;
        index.emplace(key, mechs.size());
        mechs.push_back(std::move(m));
    };

    for (int t = 0; t < R; t++) {
        // Data bit flips before round t's measurements.
        if (p_data > 0) {
            for (int q = 0; q < lat.n_qubits(); q++) {
                auto sites = pauli == Pauli::Z ? lat.qubit_plaquettes(q) : lat.qubit_stars(q);
                push({det_id(sites[0], t), det_id(sites[1], t)}, p_data, ctx.qubit_mask(q), t * 100000 + q);
            }
        }
        // Measurement flips on round t's checks.
        if (q_meas > 0) {
            const CheckSet &set = sched.round_set(t, pauli);
            const BinaryMatrix &u = sched.round_u(t, pauli);
            for (size_t j = 0; j < set.checks.size(); j++) {
                std::vector<uint32_t> dets;
                for (size_t r = 0; r < u.rows; r++) {
                    if (u.get(r, j)) {
                        dets.push_back(det_id((int)r, t));
                        dets.push_back(det_id((int)r, t + 1));
                    }
                }
                push(std::move(dets), q_meas, 0, t * 100000 + 50000 + (int)j);
            }
        }
    }
    return mechs;
}

CompiledGraph compile_graph(std::vector<ErrorMechanism> mechs, int L, int n_layers, DecompKind kind,
                            const std::vector<std::vector<int>> &allowed_sites, Pauli pauli, bool keep_audit) {
    CompiledGraph out;
    Decomposer d(L, n_layers, kind, allowed_sites, pauli, keep_audit, &out);
    d.run(std::move(mechs));
    return out;
}

CompiledGraph compile_phenomenological_graph(const Schedule &sched, int R, double p_data, double q_meas,
                                             DecompKind kind, bool keep_audit) {
    int n_layers = R + 1;
    auto allowed = allowed_sites_table(sched, n_layers);
    auto mechs = phenom_mechanisms(sched, R, p_data, q_meas);
    return compile_graph(std::move(mechs), sched.L, n_layers, kind, allowed, Pauli::Z, keep_audit);
}

int measured_time_distance(const Schedule &sched, int W, DecompKind kind) {
    CompiledGraph cg = compile_phenomenological_graph(sched, W + 2, 0.01, 0.01, kind);
    return time_distance_bfs(cg.graph, 0, W);
}

DetectorConverter::DetectorConverter(const Schedule &sched, Pauli pauli)
    : sched(sched), pauli(pauli), local_matrix(build_local_checks(sched.L, pauli).matrix()) {
}

BitVec DetectorConverter::detectors(const std::vector<BitVec> &round_records, const BitVec &final_data) const {
    int R = (int)round_records.size();
    int n_sites = sched.L * sched.L;
    BitVec out((size_t)((R + 1) * n_sites));
    BitVec prev((size_t)n_sites);
    for (int t = 0; t < R; t++) {
        const CheckSet &set = sched.round_set(t, pauli);
        const BinaryMatrix &u = sched.round_u(t, pauli);
        if ((int)round_records[(size_t)t].size() != (int)set.checks.size()) {
            throw std::invalid_argument("detectors_from_records: record length mismatch");
        }
        BitVec padded((size_t)set.padded_rows());
        for (size_t j = 0; j < set.checks.size(); j++) {
            if (round_records[(size_t)t].get(j)) {
                padded.set(j, true);
            }
        }
        BitVec m = u.mul_vec(padded);
        BitVec d = m;
        d.xor_with(prev);  // D(0) = M(0), D(t) = M(t-1) xor M(t)
        for (int s = 0; s < n_sites; s++) {
            if (d.get((size_t)s)) {
                out.set((size_t)(t * n_sites + s), true);
            }
        }
        prev = m;
    }
    BitVec final_layer = local_matrix.mul_vec(final_data);
    final_layer.xor_with(prev);
    for (int s = 0; s < n_sites; s++) {
        if (final_layer.get((size_t)s)) {
            out.set((size_t)(R * n_sites + s), true);
        }
    }
    return out;
}

uint8_t DetectorConverter::observable_flips(const BitVec &final_data, const LogicalOperators &ops) const {
    const BitVec &l1 = pauli == Pauli::Z ? ops.z1 : ops.x1;
    const BitVec &l2 = pauli == Pauli::Z ? ops.z2 : ops.x2;
    return (uint8_t)((final_data.dot(l1) ? 1 : 0) | (final_data.dot(l2) ? 2 : 0));
}

BitVec detectors_from_records(const Schedule &sched, const std::vector<BitVec> &round_records,
                              const BitVec &final_data, Pauli pauli) {
    return DetectorConverter(sched, pauli).detectors(round_records, final_data);
}

}  // namespace lssc
