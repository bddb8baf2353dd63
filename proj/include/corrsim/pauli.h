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

#ifndef CORRSIM_PAULI_H
#define CORRSIM_PAULI_H

#include <cstdint>
#include <string>

#include "corrsim/bits.h"

namespace corrsim {

/// A Pauli product i^phase * P_0 (x) P_1 (x) ... with letters P_j in {I,X,Y,Z}
/// encoded as (x_j, z_j) = I(0,0), X(1,0), Y(1,1), Z(0,1).
struct PauliOperator {
    BitVector x;
    BitVector z;
    uint8_t phase = 0;  // power of i, mod 4

    PauliOperator() = default;
    explicit PauliOperator(size_t n) : x(n), z(n) {}

    size_t num_qubits() const { return x.size(); }
    char letter(size_t q) const;
    void set_letter(size_t q, char c);
    bool is_hermitian() const { return (phase & 1) == 0; }
    bool is_identity() const { return !x.any() && !z.any(); }
    /// Sign of a Hermitian operator, +1 or -1.
    int sign() const { return phase == 0 ? 1 : -1; }
    bool commutes(const PauliOperator &other) const;

    /// Parses an optional sign ('+', '-', 'i', '-i', '+i') followed by letters.
    static PauliOperator parse(const std::string &text);
    std::string str() const;

    bool operator==(const PauliOperator &o) const { return x == o.x && z == o.z && phase == o.phase; }
};

}  // namespace corrsim

#endif
