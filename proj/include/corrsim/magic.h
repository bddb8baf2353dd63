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

#ifndef CORRSIM_MAGIC_H
#define CORRSIM_MAGIC_H

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "corrsim/bits.h"
#include "corrsim/dense.h"
#include "corrsim/masks.h"
#include "corrsim/rng.h"
#include "corrsim/stabilizer_state.h"

namespace corrsim {

/// Tensor power of the one-qubit magic state c0|0> + c1|+> with the
/// extent-saturating coefficients
///   c0 = (i/sqrt2)(-i + e^{-i pi/4})(-i + e^{i phi}) / (2 nu),
///   c1 = (i/sqrt2)(1 + e^{-i pi/4})(1 - e^{i phi}) / (2 nu),   nu = cos(pi/8).
struct MagicModel {
    double phi = 0;
    size_t t = 0;
    std::complex<double> c0;
    std::complex<double> c1;
    double c0_mag = 0;
    double c1_mag = 0;
    std::complex<double> u0;
    std::complex<double> u1;
    double xi_t = 0;
    double l1 = 0;
    double p1 = 0;

    /// Dense target vector, index bit q = qubit q.
    Amplitudes target_dense() const;
    /// Unit phase u0^{t-|x|} u1^{|x|}.
    std::complex<double> phase_of(const BitVector &x) const;
};

MagicModel magic_model(double phi, size_t t);

/// Per-bit overlap constant (2^{-1/2} + 1)(sin phi + cos phi - 1).
double overlap(double phi);
/// 2 (2 ln 2 + ln(1 - 1/sqrt2)) / ln 2.
double alpha_bound();

/// EXACT marks the complete 2^t-term expansion.
enum class SamplingMode { IID, THEOREM1, THEOREM2, EXACT };
const char *mode_name(SamplingMode mode);
SamplingMode mode_from_name(const std::string &name);

struct DecompositionEntry {
    BitVector x;  // bit q set: qubit q is |+>, clear: |0>
    std::complex<double> phase;
    double magnitude = 1.0;  // relative weight; 1 for sampled ensembles
};

struct DecompositionGroup {
    size_t seed_index = 0;
    std::vector<size_t> members;
};

/// psi = prefactor * sum_i magnitude_i phase_i |x_i>, with normalized product
/// states |x_i>.
struct SparseDecomposition {
    size_t t = 0;
    size_t k = 0;
    double prefactor = 0;
    SamplingMode mode = SamplingMode::IID;
    size_t f_t = 0;
    std::string mask_ref;
    uint64_t seed = 0;
    std::vector<DecompositionEntry> entries;
    std::vector<DecompositionGroup> groups;
    std::vector<std::string> warnings;
};

SparseDecomposition sample_iid(const MagicModel &model, size_t k, Rng &rng);

/// ceil(k_total / (f_t + 1)) seeds, each followed by seed XOR mask_j for the
/// first f_t masks. The mask block length must equal model.t.
SparseDecomposition sample_correlated(const MagicModel &model, const MaskSet &masks, size_t f_t, size_t k_total,
                                      SamplingMode mode, Rng &rng);

/// Every one of the 2^t terms with its exact coefficient.
SparseDecomposition complete_decomposition(const MagicModel &model);

/// 1 + f_t - sum_{j < f_t} xi_t |overlap|^{w_j}.
double gamma_bound(const MagicModel &model, const MaskSet &masks, size_t f_t);

/// Cross-term constant of the grouped ensemble computed exactly from the
/// per-bit pair expectations, so that E||Psi - psi||^2 = (xi_t - gamma)/k when
/// p1 = 1/2.
double gamma_exact(const MagicModel &model, const MaskSet &masks, size_t f_t);

/// 1 - 2 exp(-delta^2 xi / 8 + gamma delta^2 / 8), clamped to [0, 1].
double tail_bound(double xi, double delta, double gamma);

/// (weight, state) pairs with weight = prefactor * magnitude * phase.
std::vector<std::pair<std::complex<double>, StabilizerState>> to_states(const SparseDecomposition &decomp);

/// Dense expansion of psi.
Amplitudes decomposition_dense(const SparseDecomposition &decomp);

}  // namespace corrsim

#endif
