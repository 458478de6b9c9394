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

#include "lssc/schedule.h"

#include <climits>

namespace lssc {

Partition make_partition(int L, int l, Partition::Kind kind, int parity) {
    Partition p;
    p.kind = kind;
    p.l = l;
    p.parity = parity;
    int shift = parity == 0 ? 0 : l / 2;
    if (kind == Partition::Kind::SquarePatch) {
        p.origins = square_patch_origins(L, l, shift, shift);
    } else {
        p.origins = strip_origins(L, l, shift);
    }
    return p;
}

Schedule make_schedule(int L, int l, FamilyKind family, Scheme scheme, int R) {
    if (R < 1) {
        throw std::invalid_argument("make_schedule: R must be >= 1");
    }
    if (family == FamilyKind::Local || family == FamilyKind::SingleShot) {
        l = family == FamilyKind::Local ? 1 : L;
    }
    if (l < 1 || L % l != 0) {
        throw std::invalid_argument("make_schedule: l must divide L");
    }
    Schedule s;
    s.L = L;
    s.l = l;
    s.R = R;
    s.family = family;
    s.scheme = scheme;

    BinaryMatrix p_local_z = build_local_checks(L, Pauli::Z).matrix();
    BinaryMatrix p_local_x = build_local_checks(L, Pauli::X).matrix();
    for (int parity = 0; parity < s.n_parities(); parity++) {
        switch (family) {
            case FamilyKind::Local: {
                s.sets_z[parity] = build_local_checks(L, Pauli::Z);
                s.sets_x[parity] = build_local_checks(L, Pauli::X);
                break;
            }
            case FamilyKind::SingleShot: {
                s.sets_z[parity] = build_single_shot_checks(L, Pauli::Z);
                s.sets_x[parity] = build_single_shot_checks(L, Pauli::X);
                break;
            }
            case FamilyKind::VariableWidth: {
                Partition part = make_partition(L, l, Partition::Kind::SquarePatch, parity);
                s.sets_z[parity] = build_variable_width_checks(L, l, part.origins, Pauli::Z);
                s.sets_x[parity] = build_variable_width_checks(L, l, part.origins, Pauli::X);
                break;
            }
            case FamilyKind::FixedWidth: {
                Partition part = make_partition(L, l, Partition::Kind::Strip, parity);
                s.sets_z[parity] = build_fixed_width_checks(L, l, part.origins, Pauli::Z);
                s.sets_x[parity] = build_fixed_width_checks(L, l, part.origins, Pauli::X);
                break;
            }
        }
        s.u_z[parity] = conversion_matrix(p_local_z, s.sets_z[parity].matrix());
        s.u_x[parity] = conversion_matrix(p_local_x, s.sets_x[parity].matrix());
    }
    if (s.n_parities() == 1) {
        s.sets_z[1] = s.sets_z[0];
        s.sets_x[1] = s.sets_x[0];
        s.u_z[1] = s.u_z[0];
        s.u_x[1] = s.u_x[0];
    }
    return s;
}

int predicted_time_distance(int W, int l, FamilyKind family) {
    if (W < 1 || l < 1) {
        throw std::invalid_argument("predicted_time_distance: W and l must be >= 1");
    }
    int h = l / 2;
    switch (family) {
        case FamilyKind::Local:
            return W;
        case FamilyKind::SingleShot:
            return INT_MAX;
        case FamilyKind::FixedWidth:
            return W + (W - 1) * h;
        case FamilyKind::VariableWidth:
            return W + 2 * (W - 1) * h;
    }
    return W;
}

int min_window(int d, int l, FamilyKind family) {
    if (d < 2) {
        throw std::invalid_argument("min_window: d must be >= 2");
    }
    int h = l / 2;
    switch (family) {
        case FamilyKind::Local:
            return d;
        case FamilyKind::SingleShot:
            return 1;
        case FamilyKind::FixedWidth:
            return (d + h + (1 + h) - 1) / (1 + h);
        case FamilyKind::VariableWidth:
            if (l == d) {
                return 1;  // W_0 is the identity: no time edges at all
            }
            return (d + 2 * h + (1 + 2 * h) - 1) / (1 + 2 * h);
    }
    return d;
}

std::vector<int> allowed_time_sites(const Schedule &sched, int parity, Pauli p) {
    const CheckSet &set = p == Pauli::Z ? sched.sets_z[parity & 1] : sched.sets_x[parity & 1];
    const BinaryMatrix &u = p == Pauli::Z ? sched.u_z[parity & 1] : sched.u_x[parity & 1];
    std::vector<int> sites;
    for (size_t j = 0; j < set.checks.size(); j++) {
        int row = -1;
        int weight = 0;
        for (size_t r = 0; r < u.rows && weight <= 1; r++) {
            if (u.get(r, j)) {
                weight++;
                row = (int)r;
            }
        }
        if (weight == 1) {
            sites.push_back(row);
        }
    }
    std::sort(sites.begin(), sites.end());
    return sites;
}

}  // namespace lssc
