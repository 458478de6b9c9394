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

#ifndef LSSC_LATTICE_H
#define LSSC_LATTICE_H

#include <array>
#include <stdexcept>

#include "lssc/gf2.h"

namespace lssc {

/// L x L torus with one data qubit per lattice edge (2L^2 total).
///
/// Coordinates use matrix convention: r grows downward, c rightward, both
/// mod L. H(r,c) is the horizontal edge on the top side of plaquette (r,c);
/// V(r,c) is the vertical edge on its left side. Plaquette (r,c) has the
/// vertex (r,c) as its top-left corner, so the star at (r,c) touches
/// H(r,c), H(r,c-1), V(r,c) and V(r-1,c).
struct TorusLattice {
    int L;

    explicit TorusLattice(int L) : L(L) {
        if (L < 2) {
            throw std::invalid_argument("TorusLattice: L must be >= 2");
        }
    }

    int wrap(int i) const {
        i %= L;
        return i < 0 ? i + L : i;
    }
    int n_qubits() const {
        return 2 * L * L;
    }
    int n_sites() const {
        return L * L;
    }
    int h(int r, int c) const {
        return wrap(r) * L + wrap(c);
    }
    int v(int r, int c) const {
        return L * L + wrap(r) * L + wrap(c);
    }
    bool is_horizontal(int q) const {
        return q < L * L;
    }
    int qubit_row(int q) const {
        return (q % (L * L)) / L;
    }
    int qubit_col(int q) const {
        return (q % (L * L)) % L;
    }
    int site(int r, int c) const {
        return wrap(r) * L + wrap(c);
    }
    int site_row(int s) const {
        return s / L;
    }
    int site_col(int s) const {
        return s % L;
    }

    std::array<int, 4> plaquette_qubits(int r, int c) const {
        return {h(r, c), h(r + 1, c), v(r, c), v(r, c + 1)};
    }
    std::array<int, 4> star_qubits(int r, int c) const {
        return {h(r, c), h(r, c - 1), v(r, c), v(r - 1, c)};
    }

    /// The two plaquettes adjacent to a data qubit.
    std::array<int, 2> qubit_plaquettes(int q) const {
        int r = qubit_row(q), c = qubit_col(q);
        if (is_horizontal(q)) {
            return {site(r - 1, c), site(r, c)};
        }
        return {site(r, c - 1), site(r, c)};
    }

    /// The two stars adjacent to a data qubit.
    std::array<int, 2> qubit_stars(int q) const {
        int r = qubit_row(q), c = qubit_col(q);
        if (is_horizontal(q)) {
            return {site(r, c), site(r, c + 1)};
        }
        return {site(r, c), site(r + 1, c)};
    }

    /// Cyclic distance between coordinates.
    int cyc_dist(int a, int b) const {
        int d = wrap(a - b);
        return d > L - d ? L - d : d;
    }
};

}  // namespace lssc

#endif
