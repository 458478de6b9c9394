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

#ifndef LSSC_SCHEDULE_H
#define LSSC_SCHEDULE_H

#include "lssc/checks.h"
#include "lssc/conversion.h"

namespace lssc {

enum class Scheme : uint8_t { Aligned, Offset };

struct Partition {
    enum class Kind : uint8_t { SquarePatch, Strip };
    Kind kind = Kind::SquarePatch;
    int l = 1;
    int parity = 0;  // 0 = even rounds, 1 = odd rounds
    Origins origins;
};

/// Parity-0 partitions are axis-aligned at the origin; parity-1 partitions
/// are translated by floor(l/2), in both directions for square patches and
/// downward for strips.
Partition make_partition(int L, int l, Partition::Kind kind, int parity);

/// Round-indexed assignment of check sets. Offset schedules alternate the
/// two partition parities; aligned schedules repeat parity 0.
struct Schedule {
    int L = 0;
    int l = 1;
    int R = 1;
    FamilyKind family = FamilyKind::Local;
    Scheme scheme = Scheme::Aligned;
    CheckSet sets_z[2];
    CheckSet sets_x[2];
    BinaryMatrix u_z[2];
    BinaryMatrix u_x[2];

    int n_parities() const {
        return scheme == Scheme::Offset ? 2 : 1;
    }
    int parity(int round) const {
        return scheme == Scheme::Offset ? (round & 1) : 0;
    }
    const CheckSet &round_set(int round, Pauli p = Pauli::Z) const {
        return p == Pauli::Z ? sets_z[parity(round)] : sets_x[parity(round)];
    }
    const BinaryMatrix &round_u(int round, Pauli p = Pauli::Z) const {
        return p == Pauli::Z ? u_z[parity(round)] : u_x[parity(round)];
    }
};

Schedule make_schedule(int L, int l, FamilyKind family, Scheme scheme, int R);

/// Eqs. for the time distance of a W-round decoding window under the offset
/// scheme: FW gives W + (W-1)*floor(l/2), VW gives W + 2*(W-1)*floor(l/2).
/// Local checks give W; single-shot checks have no time edges (INT_MAX).
int predicted_time_distance(int W, int l, FamilyKind family);

/// Smallest window size whose time distance reaches d. VW with l == d needs
/// only a single round.
int min_window(int d, int l, FamilyKind family);

/// Sites (local-check positions) whose detectors admit time edges for the
/// given parity: positions of weight-1 columns of U over the measured checks.
std::vector<int> allowed_time_sites(const Schedule &sched, int parity, Pauli p = Pauli::Z);

}  // namespace lssc

#endif
