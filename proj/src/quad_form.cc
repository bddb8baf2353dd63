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

#include "corrsim/quad_form.h"

#include <cmath>

namespace corrsim {

std::complex<double> Scalar::value() const {
    if (zero) {
        return 0.0;
    }
    static const double h = std::sqrt(0.5);
    static const std::complex<double> unit[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
    int half = sqrt2_pow >= 0 ? sqrt2_pow / 2 : -((-sqrt2_pow + 1) / 2);
    double mag = std::ldexp(1.0, half);
    if (sqrt2_pow - 2 * half == 1) {
        mag *= std::sqrt(2.0);
    }
    return mag * unit[phase8 & 7];
}

void QuadForm::toggle_quad(size_t a, size_t b) {
    if (a != b) {
        quad_.flip(a, b);
        quad_.flip(b, a);
    }
}

void QuadForm::toggle_pairs(const BitVector &s) {
    for (size_t e = s.first_one(); e < s.size(); e++) {
        if (s.get(e)) {
            quad_.row(e) ^= s;
            quad_.flip(e, e);
        }
    }
}

void QuadForm::add_xor_term(int coef, const BitVector &s) {
    coef &= 3;
    if (coef == 0) {
        return;
    }
    for (size_t e = s.first_one(); e < s.size(); e++) {
        if (s.get(e)) {
            add_linear(e, coef);
        }
    }
    if (coef & 1) {
        toggle_pairs(s);
    }
}

void QuadForm::add_bilinear(const BitVector &a, const BitVector &b) {
    for (size_t e = a.first_one(); e < a.size(); e++) {
        if (a.get(e)) {
            quad_.row(e) ^= b;
            if (b.get(e)) {
                add_linear(e, 2);
            }
        }
    }
    for (size_t e = b.first_one(); e < b.size(); e++) {
        if (b.get(e)) {
            quad_.row(e) ^= a;
        }
    }
}

void QuadForm::push_variable(uint8_t l, const BitVector &couplings) {
    lin_.push_back(l & 3);
    quad_.push_column(couplings);
    BitVector row = couplings;
    row.push_back(false);
    quad_.push_row(row);
}

void QuadForm::erase_variable(size_t v) {
    lin_.erase(lin_.begin() + static_cast<std::ptrdiff_t>(v));
    quad_.erase_row(v);
    quad_.erase_column(v);
}

uint8_t QuadForm::eval(const BitVector &u) const {
    unsigned acc = c0_;
    unsigned twice_pairs = 0;
    for (size_t j = 0; j < lin_.size(); j++) {
        if (u.get(j)) {
            acc += lin_[j];
            twice_pairs += static_cast<unsigned>((quad_.row(j) & u).popcount());
        }
    }
    acc += 2 * (twice_pairs / 2);
    return static_cast<uint8_t>(acc & 3);
}

QuadForm QuadForm::negated() const {
    QuadForm out = *this;
    out.c0_ = static_cast<uint8_t>((4 - c0_) & 3);
    for (auto &l : out.lin_) {
        l = static_cast<uint8_t>((4 - l) & 3);
    }
    return out;
}

QuadForm &QuadForm::operator+=(const QuadForm &o) {
    add_constant(o.c0_);
    for (size_t j = 0; j < lin_.size(); j++) {
        add_linear(j, o.lin_[j]);
        quad_.row(j) ^= o.quad_.row(j);
    }
    return *this;
}

QuadForm QuadForm::compose(const BitMatrix &t, const BitVector &c) const {
    size_t m = size();
    size_t mp = t.cols();
    QuadForm out(mp);
    out.c0_ = c0_;
    for (size_t j = 0; j < m; j++) {
        uint8_t l = lin_[j];
        if (l == 0) {
            continue;
        }
        bool cj = c.get(j);
        if (cj) {
            out.add_constant(l);
        }
        out.add_xor_term(cj ? 4 - l : l, t.row(j));
    }

    BitMatrix b(mp, mp);
    BitVector w(mp);
    unsigned twice_pairs_c = 0;
    for (size_t a = 0; a < m; a++) {
        const BitVector &qa = quad_.row(a);
        BitVector ma(mp);
        for (size_t bb = a + 1; bb < m; bb++) {
            if (qa.get(bb)) {
                ma ^= t.row(bb);
            }
        }
        const BitVector &ta = t.row(a);
        for (size_t e = ta.first_one(); e < mp; e++) {
            if (ta.get(e)) {
                b.row(e) ^= ma;
            }
        }
        if (qa.dot(c)) {
            w ^= t.row(a);
        }
        if (c.get(a)) {
            twice_pairs_c += static_cast<unsigned>((qa & c).popcount());
        }
    }
    BitMatrix bt = b.transposed();
    for (size_t e = 0; e < mp; e++) {
        out.quad_.row(e) ^= b.row(e);
        out.quad_.row(e) ^= bt.row(e);
        if (b.get(e, e)) {
            out.add_linear(e, 2);
        }
        if (w.get(e)) {
            out.add_linear(e, 2);
        }
    }
    out.add_constant(2 * static_cast<int>((twice_pairs_c / 2) & 1));
    return out;
}

void QuadForm::substitute(size_t c, bool b, const BitVector &s, AffineMapRef map) {
    uint8_t lc = lin_[c];
    BitVector q = quad_.row(c);
    lin_[c] = 0;
    for (size_t e = q.first_one(); e < q.size(); e++) {
        if (q.get(e)) {
            toggle_quad(c, e);
        }
    }
    if (b) {
        add_constant(lc);
    }
    add_xor_term(b ? 4 - lc : lc, s);
    if (b) {
        add_xor_term(2, q);
    }
    add_bilinear(q, s);
    erase_variable(c);
    if (map.g != nullptr) {
        if (b && map.h != nullptr) {
            *map.h ^= map.g->column(c);
        }
        for (size_t e = s.first_one(); e < s.size(); e++) {
            if (s.get(e)) {
                map.g->xor_column(e, c);
            }
        }
        map.g->erase_column(c);
    }
}

Scalar QuadForm::sum_out(size_t v, AffineMapRef map) {
    uint8_t lv = lin_[v];
    BitVector q = quad_.row(v);
    erase_variable(v);
    q.erase(v);
    if (map.g != nullptr) {
        map.g->erase_column(v);
    }
    if (lv & 1) {
        add_xor_term(4 - lv, q);
        return Scalar{static_cast<uint8_t>(lv == 1 ? 1 : 7), 1, false};
    }
    if (!q.any()) {
        return lv == 0 ? Scalar{0, 2, false} : Scalar::zero_value();
    }
    size_t c = q.first_one();
    q.set(c, false);
    substitute(c, lv == 2, q, map);
    return Scalar{0, 2, false};
}

Scalar QuadForm::exp_sum() const {
    QuadForm f = *this;
    Scalar acc;
    while (f.size() > 0) {
        acc *= f.sum_out(f.size() - 1);
        if (acc.zero) {
            return acc;
        }
    }
    acc.phase8 = static_cast<uint8_t>((acc.phase8 + 2 * f.c0_) & 7);
    return acc;
}

}  // namespace corrsim
