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

#ifndef CORRSIM_QUAD_FORM_H
#define CORRSIM_QUAD_FORM_H

#include <complex>
#include <cstdint>
#include <vector>

#include "corrsim/bits.h"

namespace corrsim {

/// Exact scalar sqrt(2)^sqrt2_pow * exp(i pi phase8 / 4), or zero.
struct Scalar {
    uint8_t phase8 = 0;
    int sqrt2_pow = 0;
    bool zero = false;

    static Scalar zero_value() { return Scalar{0, 0, true}; }
    Scalar &operator*=(const Scalar &o) {
        zero = zero || o.zero;
        phase8 = static_cast<uint8_t>((phase8 + o.phase8) & 7);
        sqrt2_pow += o.sqrt2_pow;
        return *this;
    }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    Scalar conj() const { return Scalar{static_cast<uint8_t>((8 - phase8) & 7), sqrt2_pow, zero}; }
    std::complex<double> value() const;
};

/// Optional affine map x = h + G u whose columns follow a form's variables.
struct AffineMapRef {
    BitVector *h = nullptr;
    BitMatrix *g = nullptr;
};

/// Mod-4 quadratic form over binary variables u:
///   J(u) = c0 + sum_j L_j u_j + 2 sum_{a<b} Q_ab u_a u_b   (mod 4)
/// with Q symmetric and zero on the diagonal.
class QuadForm {
   public:
    QuadForm() = default;
    explicit QuadForm(size_t m) : lin_(m, 0), quad_(m, m) {}

    size_t size() const { return lin_.size(); }
    uint8_t constant() const { return c0_; }
    uint8_t linear(size_t j) const { return lin_[j]; }
    bool quad(size_t a, size_t b) const { return quad_.get(a, b); }
    const BitVector &quad_row(size_t a) const { return quad_.row(a); }

    void add_constant(int c) { c0_ = static_cast<uint8_t>((c0_ + c) & 3); }
    void add_linear(size_t j, int c) { lin_[j] = static_cast<uint8_t>((lin_[j] + c) & 3); }
    void toggle_quad(size_t a, size_t b);
    /// Adds coef * XOR_{e in s} u_e, reduced mod 4.
    void add_xor_term(int coef, const BitVector &s);
    /// Adds 2 (a.u)(b.u) for binary forms a, b.
    void add_bilinear(const BitVector &a, const BitVector &b);

    /// Appends a fresh variable with linear coefficient l and 2 u_new (c.u).
    void push_variable(uint8_t l, const BitVector &couplings);
    void erase_variable(size_t v);

    /// Value J(u) for a concrete assignment.
    uint8_t eval(const BitVector &u) const;
    /// Negated form -J.
    QuadForm negated() const;
    /// Pointwise sum of two forms on the same variables.
    QuadForm &operator+=(const QuadForm &o);
    /// Form w -> J(c + T w) for an m x m' matrix T.
    QuadForm compose(const BitMatrix &t, const BitVector &c) const;

    /// Replaces u_c by b XOR (XOR_{e in s} u_e) and drops variable c.
    void substitute(size_t c, bool b, const BitVector &s, AffineMapRef map = {});
    /// Sums i^J over variable v, leaving the constraint it induces applied to
    /// the remaining variables and to map. Column v of map must be zero.
    Scalar sum_out(size_t v, AffineMapRef map = {});
    /// sum_u i^{J(u)} over all assignments.
    Scalar exp_sum() const;

    bool operator==(const QuadForm &o) const { return c0_ == o.c0_ && lin_ == o.lin_ && quad_ == o.quad_; }

   private:
    void toggle_pairs(const BitVector &s);

    uint8_t c0_ = 0;
    std::vector<uint8_t> lin_;
    BitMatrix quad_;
};

}  // namespace corrsim

#endif
