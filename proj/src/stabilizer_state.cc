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

#include "corrsim/stabilizer_state.h"

#include <cmath>
#include <stdexcept>

namespace corrsim {

namespace {

void check_same_size(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": qubit counts differ (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

BitMatrix row_block(const BitMatrix &m, size_t begin, size_t end) {
    BitMatrix out(end - begin, m.cols());
    for (size_t r = begin; r < end; r++) {
        out.row(r - begin) = m.row(r);
    }
    return out;
}

}  // namespace

StabilizerState::StabilizerState(size_t n) : h_(n), g_(n, 0), form_(0) {}

StabilizerState StabilizerState::zero_state(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("zero_state requires at least one qubit");
    }
    return StabilizerState(num_qubits);
}

StabilizerState StabilizerState::basis_state(const BitVector &bits) {
    StabilizerState s = zero_state(bits.size());
    s.h_ = bits;
    return s;
}

StabilizerState StabilizerState::product_state(const std::vector<ProductFactor> &factors) {
    StabilizerState s = zero_state(factors.size());
    for (size_t q = 0; q < factors.size(); q++) {
        if (factors[q] == ProductFactor::PLUS) {
            BitVector col(factors.size());
            col.set(q, true);
            s.form_.push_variable(0, BitVector(s.g_.cols()));
            s.g_.push_column(col);
            s.scalar_.sqrt2_pow -= 1;
        }
    }
    return s;
}

double StabilizerState::squared_norm() const {
    if (scalar_.zero) {
        return 0.0;
    }
    return std::ldexp(1.0, scalar_.sqrt2_pow + static_cast<int>(rank()));
}

std::complex<double> StabilizerState::amplitude(const BitVector &basis) const {
    check_same_size(basis.size(), num_qubits(), "amplitude");
    if (scalar_.zero) {
        return 0.0;
    }
    BitVector d = basis ^ h_;
    BitMatrix e = left_reducer(g_);
    size_t r = rank();
    BitVector u(r);
    for (size_t k = 0; k < num_qubits(); k++) {
        bool bit = e.row(k).dot(d);
        if (k < r) {
            u.set(k, bit);
        } else if (bit) {
            return 0.0;
        }
    }
    Scalar s = scalar_;
    s.phase8 = static_cast<uint8_t>((s.phase8 + 2 * form_.eval(u)) & 7);
    return s.value();
}

std::complex<double> StabilizerState::inner_product(const StabilizerState &other) const {
    check_same_size(num_qubits(), other.num_qubits(), "inner_product");
    if (scalar_.zero || other.scalar_.zero) {
        return 0.0;
    }
    size_t n = num_qubits();
    size_t rb = other.rank();
    BitMatrix e = left_reducer(other.g_);
    BitMatrix reduce = row_block(e, 0, rb);
    BitMatrix check = row_block(e, rb, n);
    BitVector d = h_ ^ other.h_;

    Gf2Solution sol = solve_gf2(check.mul(g_), check.mul(d));
    if (!sol.consistent) {
        return 0.0;
    }
    BitVector v0 = reduce.mul(d ^ g_.mul(sol.particular));
    BitMatrix tv = reduce.mul(g_).mul(sol.null_basis);

    QuadForm f = form_.compose(sol.null_basis, sol.particular).negated();
    f += other.form_.compose(tv, v0);
    return (scalar_.conj() * other.scalar_ * f.exp_sum()).value();
}

void StabilizerState::apply_phase_power(size_t q, int c) {
    const BitVector &row = g_.row(q);
    if (h_.get(q)) {
        scalar_.phase8 = static_cast<uint8_t>((scalar_.phase8 + 2 * c) & 7);
        form_.add_xor_term(4 - c, row);
    } else {
        form_.add_xor_term(c, row);
    }
}

void StabilizerState::apply_h(size_t q) {
    size_t n = num_qubits();
    size_t r = rank();
    BitVector row = g_.row(q);
    bool hq = h_.get(q);

    BitVector z;
    bool has_kernel = false;
    if (row.any()) {
        BitMatrix e = left_reducer(g_);
        has_kernel = true;
        for (size_t k = r; k < n; k++) {
            if (e.get(k, q)) {
                has_kernel = false;
                break;
            }
        }
        if (has_kernel) {
            z = BitVector(r + 1);
            for (size_t k = 0; k < r; k++) {
                z.set(k, e.get(k, q));
            }
        }
    }

    form_.push_variable(hq ? 2 : 0, row);
    g_.row(q) = BitVector(r);
    h_.set(q, false);
    BitVector col(n);
    col.set(q, true);
    g_.push_column(col);
    scalar_.sqrt2_pow -= 1;

    if (!has_kernel) {
        return;
    }
    size_t a = z.first_one();
    BitMatrix t = BitMatrix::identity(r + 1);
    for (size_t b = 0; b < r; b++) {
        if (b != a && z.get(b)) {
            t.set(b, a, true);
        }
    }
    form_ = form_.compose(t, BitVector(r + 1));
    for (size_t k = 0; k < n; k++) {
        g_.set(k, a, false);
    }
    scalar_ *= form_.sum_out(a, AffineMapRef{&h_, &g_});
}

void StabilizerState::apply_gate_in_place(const Gate &g) {
    size_t a = g.q0;
    size_t b = g.q1;
    if (a >= num_qubits() || (g.is_two_qubit() && b >= num_qubits())) {
        throw std::invalid_argument("gate qubit index out of range");
    }
    switch (g.type) {
        case GateType::H:
            apply_h(a);
            break;
        case GateType::S:
            apply_phase_power(a, 1);
            break;
        case GateType::SDG:
            apply_phase_power(a, 3);
            break;
        case GateType::Z:
            apply_phase_power(a, 2);
            break;
        case GateType::X:
            h_.flip(a);
            break;
        case GateType::CX:
            if (h_.get(a)) {
                h_.flip(b);
            }
            g_.row(b) ^= g_.row(a);
            break;
        case GateType::CZ: {
            bool ha = h_.get(a), hb = h_.get(b);
            if (ha && hb) {
                scalar_.phase8 = static_cast<uint8_t>((scalar_.phase8 + 4) & 7);
            }
            if (ha) {
                form_.add_xor_term(2, g_.row(b));
            }
            if (hb) {
                form_.add_xor_term(2, g_.row(a));
            }
            form_.add_bilinear(g_.row(a), g_.row(b));
            break;
        }
    }
}

void StabilizerState::apply_in_place(const CliffordOp &op) {
    check_same_size(op.num_qubits(), num_qubits(), "apply_clifford");
    if (scalar_.zero) {
        return;
    }
    for (const Gate &g : op.gates()) {
        apply_gate_in_place(g);
    }
}

StabilizerState StabilizerState::apply_clifford(const CliffordOp &op) const {
    StabilizerState out = *this;
    out.apply_in_place(op);
    return out;
}

std::optional<std::pair<StabilizerState, double>> StabilizerState::project_pauli(const PauliOperator &p,
                                                                                   int outcome) const {
    check_same_size(p.num_qubits(), num_qubits(), "project_pauli");
    if (!p.is_hermitian()) {
        throw std::invalid_argument("project_pauli requires a Hermitian Pauli (phase +1 or -1)");
    }
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("measurement outcome must be +1 or -1");
    }
    if (scalar_.zero) {
        return std::nullopt;
    }
    if (p.is_identity()) {
        if (p.sign() == outcome) {
            return std::make_pair(*this, 1.0);
        }
        return std::nullopt;
    }
    ZReduction red = reduce_to_z(p);
    StabilizerState s = apply_clifford(red.word);
    size_t q = red.qubit;
    bool target = outcome * red.sign != 1;
    BitVector row = s.g_.row(q);
    if (!row.any()) {
        if (s.h_.get(q) == target) {
            return std::make_pair(*this, 1.0);
        }
        return std::nullopt;
    }
    size_t c = row.first_one();
    row.set(c, false);
    s.form_.substitute(c, target ^ s.h_.get(q), row, AffineMapRef{&s.h_, &s.g_});
    s.scalar_.sqrt2_pow += 1;
    s.apply_in_place(red.word.inverse());
    return std::make_pair(std::move(s), 0.5);
}

std::vector<std::complex<double>> StabilizerState::to_dense() const {
    size_t n = num_qubits();
    if (n > 30) {
        throw std::invalid_argument("to_dense supports at most 30 qubits");
    }
    std::vector<std::complex<double>> out(size_t{1} << n, 0.0);
    if (scalar_.zero) {
        return out;
    }
    size_t r = rank();
    for (uint64_t bits = 0; bits < (uint64_t{1} << r); bits++) {
        BitVector u(r);
        for (size_t k = 0; k < r; k++) {
            u.set(k, (bits >> k) & 1);
        }
        BitVector x = h_ ^ g_.mul(u);
        uint64_t idx = 0;
        for (size_t k = 0; k < n; k++) {
            if (x.get(k)) {
                idx |= uint64_t{1} << k;
            }
        }
        Scalar s = scalar_;
        s.phase8 = static_cast<uint8_t>((s.phase8 + 2 * form_.eval(u)) & 7);
        out[idx] = s.value();
    }
    return out;
}

}  // namespace corrsim
