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

#include "lssc/decoding_graph.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace lssc {

EdgeKind DecodingGraph::edge_kind(const GraphEdge &e) const {
    if (e.b == kBoundaryVertex) {
        return EdgeKind::Boundary;
    }
    int ta = det_layer(e.a), tb = det_layer(e.b);
    int sa = det_site(e.a), sb = det_site(e.b);
    if (ta == tb) {
        return EdgeKind::Space;
    }
    return sa == sb ? EdgeKind::Time : EdgeKind::SpaceTime;
}

DecodingGraph::Adjacency DecodingGraph::build_adjacency(bool include_boundary) const {
    Adjacency adj;
    uint32_t n = n_vertices();
    adj.offsets.assign(n + 1, 0);
    for (const GraphEdge &e : edges) {
        adj.offsets[e.a + 1]++;
        if (e.b != kBoundaryVertex) {
            adj.offsets[e.b + 1]++;
        } else if (!include_boundary) {
            adj.offsets[e.a + 1]--;
        }
    }
    for (uint32_t i = 0; i < n; i++) {
        adj.offsets[i + 1] += adj.offsets[i];
    }
    adj.edge_ids.resize(adj.offsets[n]);
    std::vector<uint32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (uint32_t i = 0; i < edges.size(); i++) {
        const GraphEdge &e = edges[i];
        if (e.b == kBoundaryVertex) {
            if (include_boundary) {
                adj.edge_ids[cursor[e.a]++] = i;
            }
            continue;
        }
        adj.edge_ids[cursor[e.a]++] = i;
        adj.edge_ids[cursor[e.b]++] = i;
    }
    return adj;
}

double edge_weight_from_probability(double p) {
    const double cap = 0.5 - 1e-9;
    if (p > cap) {
        p = cap;
    }
    return std::log((1 - p) / p);
}

GraphBuilder::GraphBuilder(int L, int n_layers) {
    g_.L = L;
    g_.n_layers = n_layers;
}

uint32_t GraphBuilder::aux_vertex(int site, int t) {
    auto key = std::make_pair(site, t);
    auto it = aux_index_.find(key);
    if (it != aux_index_.end()) {
        return it->second;
    }
    uint32_t id = g_.n_site_detectors() + (uint32_t)g_.aux_coords.size();
    g_.aux_coords.push_back(key);
    aux_index_.emplace(key, id);
    return id;
}

int64_t GraphBuilder::add_edge(uint32_t a, uint32_t b, double p, uint8_t logical) {
    if (p <= 0) {
        return -1;
    }
    if (a == b) {
        throw std::logic_error("add_edge: self loop");
    }
    if (b != kBoundaryVertex && a > b) {
        std::swap(a, b);
    }
    auto key = std::make_pair(a, b);
    auto it = edge_index_.find(key);
    if (it != edge_index_.end()) {
        GraphEdge &e = g_.edges[it->second];
        if (e.logical != logical) {
            g_.n_mask_conflicts++;  // keep the original mask
        }
        e.p = merge_parallel_edges(e.p, p);
        e.weight = edge_weight_from_probability(e.p);
        return (int64_t)it->second;
    }
    GraphEdge e;
    e.a = a;
    e.b = b;
    e.p = p;
    e.weight = edge_weight_from_probability(p);
    e.logical = logical;
    g_.edges.push_back(e);
    edge_index_.emplace(key, g_.edges.size() - 1);
    return (int64_t)(g_.edges.size() - 1);
}

DecodingGraph GraphBuilder::take() {
    return std::move(g_);
}

int time_distance_bfs(const DecodingGraph &g, int t_i, int W) {
    if (g.edges.empty()) {
        throw std::invalid_argument("time_distance_bfs: empty graph");
    }
    if (t_i + W > g.n_layers) {
        throw std::invalid_argument("time_distance_bfs: graph does not span the window");
    }
    auto adj = g.build_adjacency(true);
    std::vector<int> dist(g.n_vertices(), -1);
    std::deque<uint32_t> queue;
    for (int s = 0; s < g.L * g.L; s++) {
        uint32_t id = g.det_id(s, t_i);
        dist[id] = 0;
        queue.push_back(id);
    }
    int lo = t_i, hi = t_i + W;  // window layers [lo, hi)
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        for (uint32_t rel = adj.offsets[x]; rel < adj.offsets[x + 1]; rel++) {
            const GraphEdge &e = g.edges[adj.edge_ids[rel]];
            uint32_t y = e.a == x ? e.b : e.a;
            if (y == kBoundaryVertex) {
                return dist[x] + 1;  // explicit boundary edge
            }
            int ty = g.det_layer(y);
            if (ty >= hi) {
                return dist[x] + 1;  // crossing the upper seam reaches the time boundary
            }
            if (ty < lo || dist[y] >= 0) {
                continue;
            }
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    return -1;
}

bool edge_is_local(const DecodingGraph &g, const GraphEdge &e) {
    if (e.b == kBoundaryVertex) {
        return true;
    }
    TorusLattice lat(g.L);
    int sa = g.det_site(e.a), sb = g.det_site(e.b);
    int dr = lat.cyc_dist(lat.site_row(sa), lat.site_row(sb));
    int dc = lat.cyc_dist(lat.site_col(sa), lat.site_col(sb));
    return dr <= 1 && dc <= 1;
}

static void write_error_line(std::ostream &out, double p, const std::vector<uint32_t> &dets, uint8_t logical) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    out << "error(" << buf << ")";
    for (uint32_t d : dets) {
        if (d == kBoundaryVertex) {
            out << " B";
        } else {
            out << " D" << d;
        }
    }
    for (int k = 0; k < 8; k++) {
        if ((logical >> k) & 1) {
            out << " L" << k;
        }
    }
    out << "\n";
}

void save_dem(std::ostream &out, const DecodingGraph &g, int n_observables) {
    out << "# dem L=" << g.L << " layers=" << g.n_layers << " aux=" << g.aux_coords.size()
        << " observables=" << n_observables << "\n";
    for (auto &[site, t] : g.aux_coords) {
        out << "aux " << site << " " << t << "\n";
    }
    for (const GraphEdge &e : g.edges) {
        std::vector<uint32_t> dets{e.a};
        if (e.b != kBoundaryVertex) {
            dets.push_back(e.b);
        } else {
            dets.push_back(kBoundaryVertex);
        }
        write_error_line(out, e.p, dets, e.logical);
    }
}

DecodingGraph load_dem(std::istream &in, int *n_observables_out) {
    DecodingGraph g;
    GraphBuilder *builder = nullptr;
    std::vector<std::array<int, 2>> aux;
    std::vector<std::tuple<double, std::vector<uint32_t>, uint8_t>> lines;
    std::string line;
    int n_obs = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) {
                    continue;
                }
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "L") {
                    g.L = std::stoi(val);
                } else if (key == "layers") {
                    g.n_layers = std::stoi(val);
                } else if (key == "observables") {
                    n_obs = std::stoi(val);
                }
            }
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "aux") {
            int site, t;
            ls >> site >> t;
            aux.push_back({site, t});
            continue;
        }
        if (tok.rfind("error(", 0) != 0) {
            throw std::invalid_argument("load_dem: bad line: " + line);
        }
        double p = std::stod(tok.substr(6));
        std::vector<uint32_t> dets;
        uint8_t logical = 0;
        while (ls >> tok) {
            if (tok == "B") {
                dets.push_back(kBoundaryVertex);
            } else if (tok[0] == 'D') {
                dets.push_back((uint32_t)std::stoul(tok.substr(1)));
            } else if (tok[0] == 'L') {
                logical |= (uint8_t)(1u << std::stoul(tok.substr(1)));
            } else {
                throw std::invalid_argument("load_dem: bad token: " + tok);
            }
        }
        lines.emplace_back(p, dets, logical);
    }
    GraphBuilder gb(g.L, g.n_layers);
    for (auto &[site, t] : aux) {
        gb.aux_vertex(site, t);
    }
    for (auto &[p, dets, logical] : lines) {
        if (dets.size() != 2) {
            throw std::invalid_argument("load_dem: graph lines must have two endpoints");
        }
        gb.add_edge(dets[0], dets[1] == kBoundaryVertex ? kBoundaryVertex : dets[1], p, logical);
    }
    (void)builder;
    if (n_observables_out) {
        *n_observables_out = n_obs;
    }
    return gb.take();
}

void save_mechanisms_dem(std::ostream &out, const std::vector<ErrorMechanism> &mechs, int L, int n_layers,
                         int n_observables) {
    out << "# dem L=" << L << " layers=" << n_layers << " aux=0 observables=" << n_observables << " hyper=1\n";
    for (const ErrorMechanism &m : mechs) {
        write_error_line(out, m.p, m.dets, m.logical);
    }
}

}  // namespace lssc
