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

#include "corrsim/dense.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace corrsim {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

DenseState::DenseState(size_t num_qubits) : n_(num_qubits) {
    if (n_ > kMaxQubits) {
        throw std::invalid_argument("dense state limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    amps_.assign(size_t{1} << n_, 0.0);
    amps_[0] = 1.0;
}

DenseState::DenseState(size_t num_qubits, Amplitudes amps) : n_(num_qubits), amps_(std::move(amps)) {
    if (n_ > kMaxQubits || amps_.size() != (size_t{1} << n_)) {
        throw std::invalid_argument("dense amplitude vector has the wrong length");
    }
}

void DenseState::apply_gate(const Gate &g) {
    size_t a = size_t{1} << g.q0;
    size_t b = size_t{1} << g.q1;
    size_t dim = amps_.size();
    static const double r = 1.0 / std::sqrt(2.0);
    switch (g.type) {
        case GateType::H:
            for (size_t k = 0; k < dim; k++) {
                if (!(k & a)) {
                    auto v0 = amps_[k], v1 = amps_[k | a];
                    amps_[k] = r * (v0 + v1);
                    amps_[k | a] = r * (v0 - v1);
                }
            }
            break;
        case GateType::S:
        case GateType::SDG:
        case GateType::Z: {
            std::complex<double> f = g.type == GateType::S ? kI : g.type == GateType::SDG ? -kI : -1.0;
            for (size_t k = 0; k < dim; k++) {
                if (k & a) {
                    amps_[k] *= f;
                }
            }
            break;
        }
        case GateType::X:
            for (size_t k = 0; k < dim; k++) {
                if (!(k & a)) {
                    std::swap(amps_[k], amps_[k | a]);
                }
            }
            break;
        case GateType::CX:
            for (size_t k = 0; k < dim; k++) {
                if ((k & a) && !(k & b)) {
                    std::swap(amps_[k], amps_[k | b]);
                }
            }
            break;
        case GateType::CZ:
            for (size_t k = 0; k < dim; k++) {
                if ((k & a) && (k & b)) {
                    amps_[k] = -amps_[k];
                }
            }
            break;
    }
}

void DenseState::apply(const CliffordOp &op) {
    if (op.num_qubits() != n_) {
        throw std::invalid_argument("Clifford size does not match dense state");
    }
    for (const Gate &g : op.gates()) {
        apply_gate(g);
    }
}

void DenseState::apply_pauli(const PauliOperator &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match dense state");
    }
    uint64_t xmask = 0, zmask = 0, ymask = 0;
    for (size_t q = 0; q < n_; q++) {
        if (p.x.get(q)) xmask |= uint64_t{1} << q;
        if (p.z.get(q)) zmask |= uint64_t{1} << q;
        if (p.x.get(q) && p.z.get(q)) ymask |= uint64_t{1} << q;
    }
    // Y = i X Z, so each Y contributes a factor of i beyond X^x Z^z.
    int base = (p.phase + std::popcount(ymask)) & 3;
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Amplitudes out(amps_.size());
    for (size_t k = 0; k < amps_.size(); k++) {
        int sign = std::popcount(k & zmask) & 1;
        out[k ^ xmask] = ipow[(base + 2 * sign) & 3] * amps_[k];
    }
    amps_ = std::move(out);
}

void DenseState::project(const PauliOperator &p, int outcome) {
    DenseState moved = *this;
    moved.apply_pauli(p);
    for (size_t k = 0; k < amps_.size(); k++) {
        amps_[k] = 0.5 * (amps_[k] + static_cast<double>(outcome) * moved.amps_[k]);
    }
}

double DenseState::squared_norm() const {
    double s = 0;
    for (const auto &v : amps_) {
        s += std::norm(v);
    }
    return s;
}

std::complex<double> DenseState::inner_product(const DenseState &other) const {
    std::complex<double> s = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        s += std::conj(amps_[k]) * other.amps_[k];
    }
    return s;
}

Amplitudes kron_product(const std::vector<std::array<std::complex<double>, 2>> &factors) {
    Amplitudes out{1.0};
    for (size_t q = 0; q < factors.size(); q++) {
        Amplitudes next(out.size() * 2);
        for (size_t k = 0; k < out.size(); k++) {
            next[k] = out[k] * factors[q][0];
            next[k + out.size()] = out[k] * factors[q][1];
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace corrsim
