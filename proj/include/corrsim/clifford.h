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

#ifndef CORRSIM_CLIFFORD_H
#define CORRSIM_CLIFFORD_H

#include <cstdint>
#include <string>
#include <vector>

#include "corrsim/pauli.h"
#include "corrsim/rng.h"

namespace corrsim {

enum class GateType : uint8_t { H, S, SDG, X, Z, CX, CZ };

struct Gate {
    GateType type;
    uint32_t q0;
    uint32_t q1 = 0;  // target of CX, partner of CZ

    bool is_two_qubit() const { return type == GateType::CX || type == GateType::CZ; }
    bool operator==(const Gate &o) const = default;
};

const char *gate_name(GateType type);
GateType gate_type_from_name(const std::string &name);

/// Replaces p with g p g^dagger.
void conjugate_pauli(const Gate &g, PauliOperator &p);

/// A Clifford unitary given as a gate word; gates apply in list order.
class CliffordOp {
   public:
    CliffordOp() = default;
    explicit CliffordOp(size_t num_qubits) : n_(num_qubits) {}
    CliffordOp(size_t num_qubits, std::vector<Gate> gates);

    size_t num_qubits() const { return n_; }
    const std::vector<Gate> &gates() const { return gates_; }
    size_t size() const { return gates_.size(); }

    void append(const Gate &g);
    void append(const CliffordOp &other);
    CliffordOp inverse() const;

    /// Returns U p U^dagger.
    PauliOperator conjugate(PauliOperator p) const;

    /// Images of X_q and Z_q for every q: the tableau columns.
    std::vector<PauliOperator> tableau() const;
    /// True when the images of single-qubit X and Z obey the canonical
    /// commutation relations and remain Hermitian.
    bool preserves_commutation() const;

    bool operator==(const CliffordOp &o) const { return n_ == o.n_ && gates_ == o.gates_; }

   private:
    size_t n_ = 0;
    std::vector<Gate> gates_;
};

/// Clifford drawn uniformly from the n-qubit Clifford group (modulo global
/// phase), built column by column from random anticommuting Pauli pairs.
CliffordOp random_clifford(size_t num_qubits, Rng &rng);

/// Word V satisfying V p V^dagger = s Z_q for some qubit q and sign s. The
/// input must be Hermitian and not proportional to the identity.
struct ZReduction {
    CliffordOp word;
    size_t qubit = 0;
    int sign = 1;
};
ZReduction reduce_to_z(const PauliOperator &p);

}  // namespace corrsim

#endif
