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

#include "lssc/conversion.h"

#include <vector>

namespace lssc {

namespace {

// Reduce v against an elimination basis; returns true if v is independent,
// in which case the basis absorbs the reduced vector.
struct EliminationBasis {
    std::vector<BitVec> rows;         // reduced basis rows
    std::vector<int> lead;            // leading bit per basis row

    bool try_insert(BitVec v) {
        for (size_t i = 0; i < rows.size(); i++) {
            if (v.get((size_t)lead[i])) {
                v.xor_with(rows[i]);
            }
        }
        if (!v.any()) {
            return false;
        }
        lead.push_back((int)v.set_bits()[0]);
        rows.push_back(std::move(v));
        return true;
    }

    bool is_independent(BitVec v) const {
        for (size_t i = 0; i < rows.size(); i++) {
            if (v.get((size_t)lead[i])) {
                v.xor_with(rows[i]);
            }
        }
        return v.any();
    }
};

}  // namespace

BinaryMatrix conversion_matrix(const BinaryMatrix &p_local, const BinaryMatrix &p_tilde) {
    if (p_local.rows != p_tilde.rows || p_local.cols != p_tilde.cols) {
        throw std::invalid_argument("conversion_matrix: dimension mismatch");
    }
    size_t n = p_local.rows;
    RowReduction rr = row_reduce(p_tilde);

    std::vector<BitVec> kernel;  // left null space of p_tilde
    for (size_t i = rr.rank; i < n; i++) {
        kernel.push_back(rr.transform.row[i]);
    }
    if (kernel.size() > 16) {
        throw not_a_generating_set_error("conversion_matrix: degenerate check set (kernel too large)");
    }
    size_t n_combos = (size_t)1 << kernel.size();

    // Deterministic kernel-coset representative: minimum weight, then
    // word-lexicographic.
    auto canonicalize = [&](const BitVec &x) {
        BitVec best = x;
        for (size_t mask = 1; mask < n_combos; mask++) {
            BitVec cand = x;
            for (size_t b = 0; b < kernel.size(); b++) {
                if ((mask >> b) & 1) {
                    cand.xor_with(kernel[b]);
                }
            }
            if (cand.canonical_less(best)) {
                best = cand;
            }
        }
        return best;
    };

    BinaryMatrix u(n, n);
    for (size_t i = 0; i < n; i++) {
        BitVec x;
        if (!solve_row_combination(rr, p_local.row[i], &x)) {
            throw not_a_generating_set_error("conversion_matrix: local check outside measured span");
        }
        u.row[i] = canonicalize(x);
    }

    // Complete to an invertible matrix: rows are only determined up to the
    // kernel, so nudge dependent rows by kernel combinations.
    EliminationBasis basis;
    for (size_t i = 0; i < n; i++) {
        if (basis.try_insert(u.row[i])) {
            continue;
        }
        bool fixed = false;
        for (size_t mask = 1; mask < n_combos && !fixed; mask++) {
            BitVec cand = u.row[i];
            for (size_t b = 0; b < kernel.size(); b++) {
                if ((mask >> b) & 1) {
                    cand.xor_with(kernel[b]);
                }
            }
            if (basis.is_independent(cand)) {
                u.row[i] = cand;
                basis.try_insert(u.row[i]);
                fixed = true;
            }
        }
        if (!fixed) {
            throw not_a_generating_set_error("conversion_matrix: no invertible completion");
        }
    }

    if (!(u.mul(p_tilde) == p_local)) {
        throw not_a_generating_set_error("conversion_matrix: verification failed");
    }
    return u;
}

}  // namespace lssc
