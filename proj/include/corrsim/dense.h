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

#ifndef CORRSIM_DENSE_H
#define CORRSIM_DENSE_H

#include <array>
#include <complex>
#include <vector>

#include "corrsim/clifford.h"
#include "corrsim/pauli.h"

namespace corrsim {

using Amplitudes = std::vector<std::complex<double>>;

/// Full state-vector reference implementation. Index bit q is qubit q.
class DenseState {
   public:
    static constexpr size_t kMaxQubits = 20;

    explicit DenseState(size_t num_qubits);
    DenseState(size_t num_qubits, Amplitudes amps);

    size_t num_qubits() const { return n_; }
    const Amplitudes &amplitudes() const { return amps_; }
    Amplitudes &amplitudes() { return amps_; }

    void apply_gate(const Gate &g);
    void apply(const CliffordOp &op);
    /// In-place p|psi>.
    void apply_pauli(const PauliOperator &p);
    /// In-place (I + outcome p)/2 |psi>.
    void project(const PauliOperator &p, int outcome);

    double squared_norm() const;
    std::complex<double> inner_product(const DenseState &other) const;

   private:
    size_t n_;
    Amplitudes amps_;
};

/// Kronecker product of single-qubit vectors; factor q acts on qubit q.
Amplitudes kron_product(const std::vector<std::array<std::complex<double>, 2>> &factors);

}  // namespace corrsim

#endif
