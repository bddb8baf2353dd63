// Copyright 2026 The corrsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrsim/bits.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace corrsim {

void BitVector::erase(size_t k) {
    size_t wi = k >> 6;
    size_t b = k & 63;
    uint64_t low = b ? ((uint64_t{1} << b) - 1) : 0;
    w_[wi] = (w_[wi] & low) | ((w_[wi] >> 1) & ~low);
    for (size_t i = wi + 1; i < w_.size(); i++) {
        w_[i - 1] |= (w_[i] & 1) << 63;
        w_[i] >>= 1;
    }
    n_--;
    w_.resize((n_ + 63) / 64);
}

void BitVector::push_back(bool v) {
    n_++;
    w_.resize((n_ + 63) / 64, 0);
    set(n_ - 1, v);
}

std::string BitVector::to_bitstring() const {
    std::string s(n_, '0');
    for (size_t k = 0; k < n_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

BitVector BitVector::from_bitstring(const std::string &s) {
    BitVector v(s.size());
    for (size_t k = 0; k < s.size(); k++) {
        if (s[k] == '1') {
            v.set(k, true);
        } else if (s[k] != '0') {
            throw std::invalid_argument("bitstring may only contain '0' and '1'");
        }
    }
    return v;
}

std::string BitVector::to_hex() const {
    static const char *digits = "0123456789abcdef";
    size_t nd = std::max<size_t>(1, (n_ + 3) / 4);
    std::string s(nd, '0');
    for (size_t d = 0; d < nd; d++) {
        int val = 0;
        for (size_t j = 0; j < 4; j++) {
            size_t k = d * 4 + j;
            if (k < n_ && get(k)) {
                val |= 1 << j;
            }
        }
        s[nd - 1 - d] = digits[val];
    }
    return s;
}

BitVector BitVector::from_hex(const std::string &s, size_t num_bits) {
    BitVector v(num_bits);
    size_t nd = s.size();
    for (size_t d = 0; d < nd; d++) {
        char c = s[nd - 1 - d];
        int val;
        if (c >= '0' && c <= '9') {
            val = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            val = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            val = c - 'A' + 10;
        } else {
            throw std::invalid_argument("invalid hex digit in '" + s + "'");
        }
        for (size_t j = 0; j < 4; j++) {
            if ((val >> j) & 1) {
                size_t k = d * 4 + j;
                if (k >= num_bits) {
                    throw std::invalid_argument("hex value '" + s + "' exceeds bit length");
                }
                v.set(k, true);
            }
        }
    }
    return v;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BitVector BitMatrix::column(size_t c) const {
    BitVector v(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        v.set(r, rows_[r].get(c));
    }
    return v;
}

BitVector BitMatrix::mul(const BitVector &v) const {
    BitVector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].dot(v));
    }
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix &o) const {
    BitMatrix out(rows_.size(), o.cols());
    for (size_t r = 0; r < rows_.size(); r++) {
        const BitVector &a = rows_[r];
        BitVector &dst = out.row(r);
        for (size_t k = a.first_one(); k < cols_; k++) {
            if (a.get(k)) {
                dst ^= o.row(k);
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (rows_[r].get(c)) {
                out.set(c, r, true);
            }
        }
    }
    return out;
}

void BitMatrix::erase_column(size_t c) {
    for (auto &r : rows_) {
        r.erase(c);
    }
    cols_--;
}

void BitMatrix::push_column(const BitVector &col) {
    for (size_t r = 0; r < rows_.size(); r++) {
        rows_[r].push_back(col.get(r));
    }
    cols_++;
}

void BitMatrix::erase_row(size_t r) { rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r)); }

void BitMatrix::xor_column(size_t dst, size_t src) {
    for (auto &r : rows_) {
        if (r.get(src)) {
            r.flip(dst);
        }
    }
}

Gf2Solution solve_gf2(const BitMatrix &a, const BitVector &b) {
    size_t m = a.rows();
    size_t n = a.cols();
    std::vector<BitVector> rows;
    rows.reserve(m);
    for (size_t r = 0; r < m; r++) {
        BitVector v = a.row(r);
        v.push_back(b.get(r));
        rows.push_back(std::move(v));
    }
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < m; c++) {
        size_t p = rank;
        while (p < m && !rows[p].get(c)) {
            p++;
        }
        if (p == m) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (size_t r = 0; r < m; r++) {
            if (r != rank && rows[r].get(c)) {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push_back(c);
        rank++;
    }
    Gf2Solution sol;
    for (size_t r = rank; r < m; r++) {
        if (rows[r].get(n)) {
            return sol;
        }
    }
    sol.consistent = true;
    sol.particular = BitVector(n);
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < rank; r++) {
        is_pivot[pivots[r]] = true;
        sol.particular.set(pivots[r], rows[r].get(n));
    }
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; c++) {
        if (!is_pivot[c]) {
            free_cols.push_back(c);
        }
    }
    sol.null_basis = BitMatrix(n, free_cols.size());
    for (size_t j = 0; j < free_cols.size(); j++) {
        size_t f = free_cols[j];
        sol.null_basis.set(f, j, true);
        for (size_t r = 0; r < rank; r++) {
            if (rows[r].get(f)) {
                sol.null_basis.set(pivots[r], j, true);
            }
        }
    }
    return sol;
}

BitMatrix left_reducer(const BitMatrix &g) {
    size_t n = g.rows();
    size_t r = g.cols();
    std::vector<BitVector> rows;
    rows.reserve(n);
    for (size_t i = 0; i < n; i++) {
        BitVector v(r + n);
        for (size_t c = 0; c < r; c++) {
            v.set(c, g.get(i, c));
        }
        v.set(r + i, true);
        rows.push_back(std::move(v));
    }
    for (size_t c = 0; c < r; c++) {
        size_t p = c;
        while (p < n && !rows[p].get(c)) {
            p++;
        }
        if (p == n) {
            throw std::logic_error("left_reducer: matrix is not full column rank");
        }
        std::swap(rows[p], rows[c]);
        for (size_t i = 0; i < n; i++) {
            if (i != c && rows[i].get(c)) {
                rows[i] ^= rows[c];
            }
        }
    }
    BitMatrix e(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            e.set(i, j, rows[i].get(r + j));
        }
    }
    return e;
}

}  // namespace corrsim
