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

#ifndef LSSC_CHECKS_H
#define LSSC_CHECKS_H

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "lssc/lattice.h"

namespace lssc {

enum class Pauli : uint8_t { X, Z };

enum class CheckFamily : uint8_t {
    Local,
    SquareSS,
    RectSS,
    CircSS,
    SquareVW,
    NarrowVW,
    WideVW,
    TopFW,
    BottomFW,
    FullFW,
};

enum class FamilyKind : uint8_t { Local, SingleShot, VariableWidth, FixedWidth };

/// Marker for checks whose measurement error maps to a time edge rather than
/// a data-qubit error.
constexpr int kTimeEdge = -1;

struct Check {
    Pauli pauli = Pauli::Z;
    CheckFamily family = CheckFamily::Local;
    BitVec support;        // over the 2L^2 data qubits
    int u = -1, v = -1;    // patch/strip origin, -1 when global
    int mapped_qubit = kTimeEdge;
};

/// One family of same-Pauli checks on a torus. Identity checks (empty
/// support) are removed during construction; their slots survive as trailing
/// zero rows of the padded matrix so that conversion matrices stay square.
struct CheckSet {
    Pauli pauli = Pauli::Z;
    FamilyKind kind = FamilyKind::Local;
    int L = 0;
    int l = 1;
    std::vector<Check> checks;
    int n_removed = 0;

    int padded_rows() const {
        return (int)checks.size() + n_removed;
    }
    /// Padded parity check matrix: row i < checks.size() holds check i's
    /// support, trailing rows are zero.
    BinaryMatrix matrix() const;
};

struct LogicalOperators {
    BitVec z1, z2, x1, x2;  // fixed non-contractible loop representatives
};

using Origins = std::vector<std::pair<int, int>>;

/// Tiling of the torus by l x l patches (or l x 1 strips), origin-sorted.
Origins square_patch_origins(int L, int l, int shift_r, int shift_c);
Origins strip_origins(int L, int l, int shift_r);

std::pair<CheckSet, CheckSet> build_local_checks(int L);
CheckSet build_local_checks(int L, Pauli pauli);
CheckSet build_single_shot_checks(int L, Pauli pauli = Pauli::Z);
CheckSet build_variable_width_checks(int L, int l, const Origins &origins, Pauli pauli = Pauli::Z);
CheckSet build_fixed_width_checks(int L, int l, const Origins &origins, Pauli pauli = Pauli::Z);

LogicalOperators logical_operators(int L);

const char *family_name(CheckFamily f);
const char *family_kind_name(FamilyKind k);

void save_checks(std::ostream &out, const CheckSet &set);
CheckSet load_checks(std::istream &in);

}  // namespace lssc

#endif
