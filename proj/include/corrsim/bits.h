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

#ifndef CORRSIM_BITS_H
#define CORRSIM_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace corrsim {

/// Fixed-length bit vector packed into 64-bit words. Bit 0 is the least
/// significant bit of word 0.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : n_(num_bits), w_((num_bits + 63) / 64, 0) {}

    size_t size() const { return n_; }
    size_t num_words() const { return w_.size(); }
    uint64_t *words() { return w_.data(); }
    const uint64_t *words() const { return w_.data(); }

    bool get(size_t k) const { return (w_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool v) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (v) {
            w_[k >> 6] |= m;
        } else {
            w_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) { w_[k >> 6] ^= uint64_t{1} << (k & 63); }

    BitVector &operator^=(const BitVector &o) {
        for (size_t i = 0; i < w_.size(); i++) {
            w_[i] ^= o.w_[i];
        }
        return *this;
    }
    BitVector &operator&=(const BitVector &o) {
        for (size_t i = 0; i < w_.size(); i++) {
            w_[i] &= o.w_[i];
        }
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }
    bool operator==(const BitVector &o) const { return n_ == o.n_ && w_ == o.w_; }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : w_) {
            c += std::popcount(w);
        }
        return c;
    }
    bool any() const {
        for (uint64_t w : w_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    /// Parity of the bitwise AND with another vector.
    bool dot(const BitVector &o) const {
        uint64_t acc = 0;
        for (size_t i = 0; i < w_.size(); i++) {
            acc ^= w_[i] & o.w_[i];
        }
        return std::popcount(acc) & 1;
    }
    /// Index of the lowest set bit, or size() if none.
    size_t first_one() const {
        for (size_t i = 0; i < w_.size(); i++) {
            if (w_[i]) {
                return i * 64 + std::countr_zero(w_[i]);
            }
        }
        return n_;
    }

    /// Removes bit k, shifting higher bits down by one.
    void erase(size_t k);
    /// Appends one bit at the top.
    void push_back(bool v);

    /// Characters '0'/'1', character i is bit i.
    std::string to_bitstring() const;
    static BitVector from_bitstring(const std::string &s);
    /// Little-endian hexadecimal: the last character holds bits 0..3.
    std::string to_hex() const;
    static BitVector from_hex(const std::string &s, size_t num_bits);

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// Dense binary matrix stored as rows of packed bits.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : rows_(rows, BitVector(cols)), cols_(cols) {}
    static BitMatrix identity(size_t n);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    BitVector &row(size_t r) { return rows_[r]; }
    const BitVector &row(size_t r) const { return rows_[r]; }
    bool get(size_t r, size_t c) const { return rows_[r].get(c); }
    void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }
    void flip(size_t r, size_t c) { rows_[r].flip(c); }

    BitVector column(size_t c) const;
    /// Matrix-vector product over GF(2).
    BitVector mul(const BitVector &v) const;
    /// Matrix product over GF(2).
    BitMatrix mul(const BitMatrix &o) const;
    BitMatrix transposed() const;

    void erase_column(size_t c);
    void push_column(const BitVector &col);
    void erase_row(size_t r);
    void push_row(const BitVector &r) { rows_.push_back(r); }
    /// column dst ^= column src.
    void xor_column(size_t dst, size_t src);
    bool operator==(const BitMatrix &o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

   private:
    std::vector<BitVector> rows_;
    size_t cols_ = 0;
};

/// General solution of A u = b over GF(2): u = particular + span(null_basis).
struct Gf2Solution {
    bool consistent = false;
    BitVector particular;
    BitMatrix null_basis;  // cols(A) x dim(kernel); columns span the kernel.
};
Gf2Solution solve_gf2(const BitMatrix &a, const BitVector &b);

/// For a full-column-rank n x r matrix G, returns an n x n invertible E with
/// E G = [I_r; 0]. The first r rows invert G on its image; the remaining rows
/// span the annihilator of the image.
BitMatrix left_reducer(const BitMatrix &g);

}  // namespace corrsim

#endif
