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

#ifndef LSSC_DECODING_GRAPH_H
#define LSSC_DECODING_GRAPH_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "lssc/lattice.h"

namespace lssc {

/// Virtual time-boundary vertex (window graphs only).
constexpr uint32_t kBoundaryVertex = 0xFFFFFFFFu;

/// One elementary error: flip probability, the detectors it flips and the
/// observables it toggles, plus where it came from for audits.
struct ErrorMechanism {
    double p = 0;
    std::vector<uint32_t> dets;  // sorted detector ids
    uint8_t logical = 0;
    int32_t origin_instruction = -1;
    int8_t origin_pauli = -1;
};

using Hyperedge = ErrorMechanism;

enum class EdgeKind : uint8_t { Space, Time, SpaceTime, Boundary };

struct GraphEdge {
    uint32_t a = 0;
    uint32_t b = 0;  // may be kBoundaryVertex
    double p = 0;
    double weight = 0;  // ln((1-p)/p)
    uint8_t logical = 0;
};

/// Matchable weighted graph over detectors. Site detectors are laid out
/// layer-major (id = t*L*L + site); auxiliary detectors follow.
struct DecodingGraph {
    int L = 0;
    int n_layers = 0;  // detector layers, the last one being the readout layer
    std::vector<GraphEdge> edges;
    // aux detector coords (site, layer), appended after site detectors
    std::vector<std::pair<int, int>> aux_coords;
    // allowed time-edge sites per layer transition t -> t+1
    std::vector<std::vector<int>> allowed_sites;
    uint64_t n_mask_conflicts = 0;

    uint32_t n_site_detectors() const {
        return (uint32_t)(n_layers * L * L);
    }
    uint32_t n_vertices() const {
        return n_site_detectors() + (uint32_t)aux_coords.size();
    }
    uint32_t det_id(int site, int t) const {
        return (uint32_t)(t * L * L + site);
    }
    bool is_aux(uint32_t id) const {
        return id != kBoundaryVertex && id >= n_site_detectors();
    }
    int det_site(uint32_t id) const {
        return is_aux(id) ? aux_coords[id - n_site_detectors()].first : (int)(id % (uint32_t)(L * L));
    }
    int det_layer(uint32_t id) const {
        return is_aux(id) ? aux_coords[id - n_site_detectors()].second : (int)(id / (uint32_t)(L * L));
    }
    EdgeKind edge_kind(const GraphEdge &e) const;

    /// CSR adjacency over edge indices.
    struct Adjacency {
        std::vector<uint32_t> offsets;
        std::vector<uint32_t> edge_ids;
    };
    Adjacency build_adjacency(bool include_boundary = true) const;
};

/// Probability that exactly one of two independent flips fires.
inline double merge_parallel_edges(double p1, double p2) {
    return p1 * (1 - p2) + p2 * (1 - p1);
}

double edge_weight_from_probability(double p);

/// Incremental graph assembly with parallel-edge merging and a shared
/// auxiliary-detector registry keyed by projected coordinate.
class GraphBuilder {
  public:
    GraphBuilder(int L, int n_layers);

    uint32_t aux_vertex(int site, int t);
    /// Adds or merges an edge; returns its index. Zero-probability edges are
    /// dropped (returns -1).
    int64_t add_edge(uint32_t a, uint32_t b, double p, uint8_t logical);
    DecodingGraph take();
    const DecodingGraph &graph() const {
        return g_;
    }

  private:
    DecodingGraph g_;
    std::map<std::pair<uint32_t, uint32_t>, size_t> edge_index_;
    std::map<std::pair<int, int>, uint32_t> aux_index_;
};

/// Minimum hop count from any layer-t_i site detector to the time boundary
/// after layer t_i+W-1, staying within the window. Returns -1 if the
/// boundary is unreachable. The graph must span layers >= t_i+W.
int time_distance_bfs(const DecodingGraph &g, int t_i, int W);

/// Spatial locality: an edge's same-layer projection must span nearest or
/// second-nearest sites (or coincide).
bool edge_is_local(const DecodingGraph &g, const GraphEdge &e);

void save_dem(std::ostream &out, const DecodingGraph &g, int n_observables);
DecodingGraph load_dem(std::istream &in, int *n_observables_out = nullptr);

/// Mechanism lists share the DEM text format (degree up to 6 per line).
void save_mechanisms_dem(std::ostream &out, const std::vector<ErrorMechanism> &mechs, int L, int n_layers,
                         int n_observables);

}  // namespace lssc

#endif
