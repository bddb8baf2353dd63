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

#include "corrsim/clifford.h"

#include <stdexcept>
#include <utility>

namespace corrsim {

const char *gate_name(GateType type) {
    switch (type) {
        case GateType::H:
            return "H";
        case GateType::S:
            return "S";
        case GateType::SDG:
            return "Sdg";
        case GateType::X:
            return "X";
        case GateType::Z:
            return "Z";
        case GateType::CX:
            return "CX";
        case GateType::CZ:
            return "CZ";
    }
    return "?";
}

GateType gate_type_from_name(const std::string &name) {
    if (name == "H") return GateType::H;
    if (name == "S") return GateType::S;
    if (name == "Sdg" || name == "SDG" || name == "S_DAG") return GateType::SDG;
    if (name == "X") return GateType::X;
    if (name == "Z") return GateType::Z;
    if (name == "CX" || name == "CNOT") return GateType::CX;
    if (name == "CZ") return GateType::CZ;
    throw std::invalid_argument("unknown gate '" + name + "'");
}

void conjugate_pauli(const Gate &g, PauliOperator &p) {
    BitVector &x = p.x;
    BitVector &z = p.z;
    size_t a = g.q0;
    size_t b = g.q1;
    bool flip = false;
    switch (g.type) {
        case GateType::H: {
            bool xa = x.get(a), za = z.get(a);
            flip = xa && za;
            x.set(a, za);
            z.set(a, xa);
            break;
        }
        case GateType::S: {
            bool xa = x.get(a), za = z.get(a);
            flip = xa && za;
            z.set(a, za ^ xa);
            break;
        }
        case GateType::SDG: {
            bool xa = x.get(a), za = z.get(a);
            flip = xa && !za;
            z.set(a, za ^ xa);
            break;
        }
        case GateType::X:
            flip = z.get(a);
            break;
        case GateType::Z:
            flip = x.get(a);
            break;
        case GateType::CX: {
            bool xc = x.get(a), zc = z.get(a), xt = x.get(b), zt = z.get(b);
            flip = xc && zt && !(xt ^ zc);
            x.set(b, xt ^ xc);
            z.set(a, zc ^ zt);
            break;
        }
        case GateType::CZ: {
            bool xa = x.get(a), za = z.get(a), xb = x.get(b), zb = z.get(b);
            flip = xa && xb && (za ^ zb);
            z.set(a, za ^ xb);
            z.set(b, zb ^ xa);
            break;
        }
    }
    if (flip) {
        p.phase = (p.phase + 2) & 3;
    }
}

CliffordOp::CliffordOp(size_t num_qubits, std::vector<Gate> gates) : n_(num_qubits) {
    for (const Gate &g : gates) {
        append(g);
    }
}

void CliffordOp::append(const Gate &g) {
    if (g.q0 >= n_ || (g.is_two_qubit() && (g.q1 >= n_ || g.q1 == g.q0))) {
        throw std::invalid_argument(std::string("gate ") + gate_name(g.type) + " has invalid qubit indices");
    }
    gates_.push_back(g);
}

void CliffordOp::append(const CliffordOp &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("cannot append Clifford words on different qubit counts");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

CliffordOp CliffordOp::inverse() const {
    CliffordOp inv(n_);
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        if (g.type == GateType::S) {
            g.type = GateType::SDG;
        } else if (g.type == GateType::SDG) {
            g.type = GateType::S;
        }
        inv.gates_.push_back(g);
    }
    return inv;
}

PauliOperator CliffordOp::conjugate(PauliOperator p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match Clifford size");
    }
    for (const Gate &g : gates_) {
        conjugate_pauli(g, p);
    }
    return p;
}

std::vector<PauliOperator> CliffordOp::tableau() const {
    std::vector<PauliOperator> out;
    out.reserve(2 * n_);
    for (size_t q = 0; q < n_; q++) {
        PauliOperator px(n_);
        px.x.set(q, true);
        out.push_back(conjugate(px));
        PauliOperator pz(n_);
        pz.z.set(q, true);
        out.push_back(conjugate(pz));
    }
    return out;
}

bool CliffordOp::preserves_commutation() const {
    std::vector<PauliOperator> t = tableau();
    for (size_t a = 0; a < t.size(); a++) {
        if (!t[a].is_hermitian() || t[a].is_identity()) {
            return false;
        }
        for (size_t b = a + 1; b < t.size(); b++) {
            bool should_anticommute = (a / 2 == b / 2);
            if (t[a].commutes(t[b]) == should_anticommute) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct PairReducer {
    PauliOperator p;
    PauliOperator q;
    CliffordOp word;

    void apply(GateType type, size_t a, size_t b = 0) {
        Gate g{type, static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
        word.append(g);
        conjugate_pauli(g, p);
        conjugate_pauli(g, q);
    }
};

PauliOperator random_pauli_on_tail(size_t n, size_t first, Rng &rng) {
    PauliOperator p(n);
    for (size_t j = first; j < n; j++) {
        uint64_t bits = rng() & 3;
        p.x.set(j, bits & 1);
        p.z.set(j, bits >> 1);
    }
    return p;
}

}  // namespace

CliffordOp random_clifford(size_t n, Rng &rng) {
    if (n == 0) {
        throw std::invalid_argument("random_clifford requires at least one qubit");
    }
    CliffordOp out(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t bits = rng() & 3;
        if (bits & 1) out.append(Gate{GateType::X, static_cast<uint32_t>(q)});
        if (bits & 2) out.append(Gate{GateType::Z, static_cast<uint32_t>(q)});
    }
    std::vector<CliffordOp> layers;
    for (size_t i = 0; i < n; i++) {
        PairReducer r{PauliOperator(n), PauliOperator(n), CliffordOp(n)};
        do {
            r.p = random_pauli_on_tail(n, i, rng);
        } while (r.p.is_identity());
        do {
            r.q = random_pauli_on_tail(n, i, rng);
        } while (r.q.commutes(r.p));

        for (size_t j = i; j < n; j++) {
            char c = r.p.letter(j);
            if (c == 'Z') {
                r.apply(GateType::H, j);
            } else if (c == 'Y') {
                r.apply(GateType::S, j);
            }
        }
        if (!r.p.x.get(i)) {
            size_t j = i + 1;
            while (!r.p.x.get(j)) {
                j++;
            }
            r.apply(GateType::CX, i, j);
            r.apply(GateType::CX, j, i);
            r.apply(GateType::CX, i, j);
        }
        for (size_t j = i + 1; j < n; j++) {
            if (r.p.x.get(j)) {
                r.apply(GateType::CX, i, j);
            }
        }
        for (size_t j = i + 1; j < n; j++) {
            char c = r.q.letter(j);
            if (c == 'X') {
                r.apply(GateType::H, j);
            } else if (c == 'Y') {
                r.apply(GateType::S, j);
                r.apply(GateType::H, j);
            }
            if (r.q.z.get(j)) {
                r.apply(GateType::CX, j, i);
            }
        }
        if (r.q.x.get(i)) {
            r.apply(GateType::H, i);
            r.apply(GateType::S, i);
            r.apply(GateType::H, i);
        }
        layers.push_back(r.word.inverse());
    }
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        out.append(*it);
    }
    return out;
}

ZReduction reduce_to_z(const PauliOperator &p) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("Pauli measurement operator must be Hermitian");
    }
    if (p.is_identity()) {
        throw std::invalid_argument("identity Pauli cannot be reduced to a single Z");
    }
    size_t n = p.num_qubits();
    ZReduction red{CliffordOp(n), 0, 1};
    PauliOperator cur = p;
    auto apply = [&](GateType type, size_t a, size_t b = 0) {
        Gate g{type, static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
        red.word.append(g);
        conjugate_pauli(g, cur);
    };
    size_t first = n;
    for (size_t j = 0; j < n; j++) {
        char c = cur.letter(j);
        if (c == 'I') {
            continue;
        }
        if (c == 'X') {
            apply(GateType::H, j);
        } else if (c == 'Y') {
            apply(GateType::SDG, j);
            apply(GateType::H, j);
        }
        if (first == n) {
            first = j;
        } else {
            apply(GateType::CX, j, first);
        }
    }
    red.qubit = first;
    red.sign = cur.sign();
    return red;
}

}  // namespace corrsim
