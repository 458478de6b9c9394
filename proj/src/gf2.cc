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

#include "lssc/gf2.h"

namespace lssc {

size_t BinaryMatrix::rank() const {
    std::vector<BitVec> work = row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t pivot = r;
        while (pivot < rows && !work[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(work[r], work[pivot]);
        for (size_t i = 0; i < rows; i++) {
            if (i != r && work[i].get(c)) {
                work[i].xor_with(work[r]);
            }
        }
        r++;
    }
    return r;
}

BinaryMatrix BinaryMatrix::inverse() const {
    if (rows != cols) {
        throw std::invalid_argument("inverse: matrix not square");
    }
    std::vector<BitVec> work = row;
    BinaryMatrix inv = identity(rows);
    for (size_t c = 0; c < cols; c++) {
        size_t pivot = c;
        while (pivot < rows && !work[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows) {
            throw std::invalid_argument("inverse: singular matrix");
        }
        std::swap(work[c], work[pivot]);
        std::swap(inv.row[c], inv.row[pivot]);
        for (size_t i = 0; i < rows; i++) {
            if (i != c && work[i].get(c)) {
                work[i].xor_with(work[c]);
                inv.row[i].xor_with(inv.row[c]);
            }
        }
    }
    return inv;
}

RowReduction row_reduce(const BinaryMatrix &a) {
    RowReduction rr;
    rr.reduced = a;
    rr.transform = BinaryMatrix::identity(a.rows);
    rr.pivot_col.assign(a.rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < a.cols && r < a.rows; c++) {
        size_t pivot = r;
        while (pivot < a.rows && !rr.reduced.row[pivot].get(c)) {
            pivot++;
        }
        if (pivot == a.rows) {
            continue;
        }
        std::swap(rr.reduced.row[r], rr.reduced.row[pivot]);
        std::swap(rr.transform.row[r], rr.transform.row[pivot]);
        for (size_t i = 0; i < a.rows; i++) {
            if (i != r && rr.reduced.row[i].get(c)) {
                rr.reduced.row[i].xor_with(rr.reduced.row[r]);
                rr.transform.row[i].xor_with(rr.transform.row[r]);
            }
        }
        rr.pivot_col[r] = (int)c;
        r++;
    }
    rr.rank = r;
    return rr;
}

bool solve_row_combination(const RowReduction &rr, const BitVec &target, BitVec *x_out) {
    BitVec residue = target;
    BitVec x(rr.transform.rows);
    for (size_t r = 0; r < rr.rank; r++) {
        int c = rr.pivot_col[r];
        if (c >= 0 && residue.get((size_t)c)) {
            residue.xor_with(rr.reduced.row[r]);
            x.xor_with(rr.transform.row[r]);
        }
    }
    if (residue.any()) {
        return false;
    }
    *x_out = x;
    return true;
}

}  // namespace lssc
