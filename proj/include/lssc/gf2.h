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

#ifndef LSSC_GF2_H
#define LSSC_GF2_H

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lssc {

/// Dense bit vector over GF(2), little-endian within 64-bit words.
struct BitVec {
    size_t n_bits = 0;
    std::vector<uint64_t> words;

    BitVec() = default;
    explicit BitVec(size_t n) : n_bits(n), words((n + 63) / 64, 0) {}

    size_t size() const {
        return n_bits;
    }
    bool get(size_t i) const {
        return (words[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            words[i >> 6] |= m;
        } else {
            words[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) {
        words[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    void clear() {
        std::fill(words.begin(), words.end(), 0);
    }
    void xor_with(const BitVec &other) {
        for (size_t k = 0; k < words.size(); k++) {
            words[k] ^= other.words[k];
        }
    }
    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : words) {
            c += (size_t)__builtin_popcountll(w);
        }
        return c;
    }
    bool any() const {
        for (uint64_t w : words) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool operator==(const BitVec &other) const {
        return n_bits == other.n_bits && words == other.words;
    }
    bool operator!=(const BitVec &other) const {
        return !(*this == other);
    }

    /// Parity of the AND of two vectors.
    bool dot(const BitVec &other) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < words.size(); k++) {
            acc ^= words[k] & other.words[k];
        }
        return __builtin_parityll(acc);
    }

    /// Indices of set bits, ascending.
    std::vector<uint32_t> set_bits() const {
        std::vector<uint32_t> out;
        for (size_t k = 0; k < words.size(); k++) {
            uint64_t w = words[k];
            while (w) {
                out.push_back((uint32_t)(k * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Deterministic total order: fewer set bits first, then word-lexicographic.
    bool canonical_less(const BitVec &other) const {
        size_t pa = popcount(), pb = other.popcount();
        if (pa != pb) {
            return pa < pb;
        }
        for (size_t k = 0; k < words.size(); k++) {
            if (words[k] != other.words[k]) {
                return words[k] < other.words[k];
            }
        }
        return false;
    }
};

/// Dense GF(2) matrix stored as row bit vectors.
struct BinaryMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<BitVec> row;

    BinaryMatrix() = default;
    BinaryMatrix(size_t r, size_t c) : rows(r), cols(c), row(r, BitVec(c)) {}

    static BinaryMatrix identity(size_t n) {
        BinaryMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m.row[i].set(i, true);
        }
        return m;
    }

    bool get(size_t r, size_t c) const {
        return row[r].get(c);
    }
    void set(size_t r, size_t c, bool v) {
        row[r].set(c, v);
    }

    bool operator==(const BinaryMatrix &o) const {
        return rows == o.rows && cols == o.cols && row == o.row;
    }

    /// M * x with x a column vector of length cols.
    BitVec mul_vec(const BitVec &x) const {
        if (x.size() != cols) {
            throw std::invalid_argument("mul_vec: dimension mismatch");
        }
        BitVec out(rows);
        for (size_t r = 0; r < rows; r++) {
            if (row[r].dot(x)) {
                out.set(r, true);
            }
        }
        return out;
    }

    /// this * other.
    BinaryMatrix mul(const BinaryMatrix &other) const {
        if (cols != other.rows) {
            throw std::invalid_argument("mul: dimension mismatch");
        }
        BinaryMatrix out(rows, other.cols);
        for (size_t r = 0; r < rows; r++) {
            for (uint32_t c : row[r].set_bits()) {
                out.row[r].xor_with(other.row[c]);
            }
        }
        return out;
    }

    BinaryMatrix transposed() const {
        BinaryMatrix out(cols, rows);
        for (size_t r = 0; r < rows; r++) {
            for (uint32_t c : row[r].set_bits()) {
                out.row[c].set(r, true);
            }
        }
        return out;
    }

    size_t rank() const;

    /// Gauss-Jordan inverse with partial pivoting by lowest row index.
    /// Throws std::invalid_argument if not square or singular.
    BinaryMatrix inverse() const;

    size_t column_weight(size_t c) const {
        size_t w = 0;
        for (size_t r = 0; r < rows; r++) {
            w += row[r].get(c);
        }
        return w;
    }
};

/// Row-reduction transcript: T * A has pivot rows first (row-echelon), and
/// the trailing rows of T span the left null space of A.
struct RowReduction {
    BinaryMatrix reduced;        // echelon form of A
    BinaryMatrix transform;      // T with T*A == reduced
    std::vector<int> pivot_col;  // pivot column per leading row, -1 past rank
    size_t rank = 0;
};

RowReduction row_reduce(const BinaryMatrix &a);

/// Solve x * A == target for a row vector x (length A.rows). Returns false if
/// target is outside the row span.
bool solve_row_combination(const RowReduction &rr, const BitVec &target, BitVec *x_out);

}  // namespace lssc

#endif
