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

#ifndef LSSC_COMPILE_H
#define LSSC_COMPILE_H

#include <string>

#include "lssc/decoding_graph.h"
#include "lssc/schedule.h"

namespace lssc {

enum class DecompKind : uint8_t { TimeFirst, SpaceFirst };

struct UnsupportedHyperedge {
    ErrorMechanism mech;
    std::string reason;
};

struct SubEdge {
    uint32_t a = 0, b = 0;
    uint8_t logical = 0;
};

/// A matchable graph together with the retained pre-decomposition hyperedge
/// list, per-hyperedge decomposition audit, and unsupported diagnostics.
struct CompiledGraph {
    DecodingGraph graph;
    std::vector<ErrorMechanism> hyperedges;
    std::vector<std::vector<SubEdge>> decomposition;  // parallel to hyperedges
    std::vector<UnsupportedHyperedge> diagnostics;
    int n_observables = 2;
};

/// Allowed time-edge sites for every layer transition t -> t+1 of an
/// n_layers experiment (entry t follows the round-t partition parity).
std::vector<std::vector<int>> allowed_sites_table(const Schedule &sched, int n_layers, Pauli pauli = Pauli::Z);

/// Elementary mechanisms of the phenomenological model over R noisy rounds
/// plus the perfect readout layer: per-round data flips (space edges) and
/// measurement flips (time edges or degree-4 hyperedges via U columns).
std::vector<ErrorMechanism> phenom_mechanisms(const Schedule &sched, int R, double p_data, double q_meas,
                                              Pauli pauli = Pauli::Z);

CompiledGraph compile_graph(std::vector<ErrorMechanism> mechs, int L, int n_layers, DecompKind kind,
                            const std::vector<std::vector<int>> &allowed_sites, Pauli pauli = Pauli::Z,
                            bool keep_audit = false);

/// Decoding graph for the phenomenological model: R noisy rounds + readout
/// layer, decomposed space-edge-first as in the reference construction.
CompiledGraph compile_phenomenological_graph(const Schedule &sched, int R, double p_data, double q_meas,
                                             DecompKind kind = DecompKind::SpaceFirst, bool keep_audit = false);

/// Window variant used for time-distance analysis: W noisy layers, edges
/// crossing the upper seam reach the time boundary.
int measured_time_distance(const Schedule &sched, int W, DecompKind kind = DecompKind::SpaceFirst);

/// Converts raw per-round measurement records (flip bits, one BitVec per
/// round in check order) plus the final transversal data readout into
/// detector bits, via M(t) = U_parity(t) * M~(t).
struct DetectorConverter {
    explicit DetectorConverter(const Schedule &sched, Pauli pauli = Pauli::Z);

    const Schedule &sched;
    Pauli pauli;
    BinaryMatrix local_matrix;  // site parities of a data-qubit pattern

    /// round_records[t] has one bit per measured check of round t's set.
    BitVec detectors(const std::vector<BitVec> &round_records, const BitVec &final_data) const;
    uint8_t observable_flips(const BitVec &final_data, const LogicalOperators &ops) const;
};

BitVec detectors_from_records(const Schedule &sched, const std::vector<BitVec> &round_records,
                              const BitVec &final_data, Pauli pauli = Pauli::Z);

}  // namespace lssc

#endif
