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

#ifndef CORRSIM_STABILIZER_STATE_H
#define CORRSIM_STABILIZER_STATE_H

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "corrsim/bits.h"
#include "corrsim/clifford.h"
#include "corrsim/pauli.h"
#include "corrsim/quad_form.h"

namespace corrsim {

enum class ProductFactor : uint8_t { ZERO, PLUS };

/// Pure stabilizer state in affine quadratic form:
///   psi(x) = s * i^{J(u)}  if x = h + G u for some u, else 0,
/// where G is n x r with full column rank, J is a mod-4 quadratic form on r
/// binary variables, and s is an exact scalar.
class StabilizerState {
   public:
    StabilizerState() = default;

    static StabilizerState zero_state(size_t num_qubits);
    static StabilizerState basis_state(const BitVector &bits);
    static StabilizerState product_state(const std::vector<ProductFactor> &factors);

    size_t num_qubits() const { return h_.size(); }
    size_t rank() const { return g_.cols(); }
    bool is_zero() const { return scalar_.zero; }
    const Scalar &scalar() const { return scalar_; }
    const BitVector &offset() const { return h_; }
    const BitMatrix &generators() const { return g_; }
    const QuadForm &phase_form() const { return form_; }

    double squared_norm() const;
    std::complex<double> amplitude(const BitVector &basis) const;
    /// <this|other>.
    std::complex<double> inner_product(const StabilizerState &other) const;

    StabilizerState apply_clifford(const CliffordOp &op) const;
    void apply_gate_in_place(const Gate &g);
    void apply_in_place(const CliffordOp &op);

    /// Normalized post-measurement state and its probability for the
    /// projector (I + outcome p)/2, or nullopt when the projector annihilates.
    std::optional<std::pair<StabilizerState, double>> project_pauli(const PauliOperator &p, int outcome) const;

    /// Multiplies the global scalar.
    void scale(const Scalar &s) { scalar_ *= s; }

    /// Full amplitude vector, index bit q = qubit q.
    std::vector<std::complex<double>> to_dense() const;

   private:
    explicit StabilizerState(size_t n);

    void apply_phase_power(size_t q, int c);
    void apply_h(size_t q);

    BitVector h_;
    BitMatrix g_;
    QuadForm form_;
    Scalar scalar_;
};

}  // namespace corrsim

#endif
