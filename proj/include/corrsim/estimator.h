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

#ifndef CORRSIM_ESTIMATOR_H
#define CORRSIM_ESTIMATOR_H

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "corrsim/clifford.h"
#include "corrsim/magic.h"
#include "corrsim/pauli.h"
#include "corrsim/rng.h"
#include "corrsim/stabilizer_state.h"

namespace corrsim {

enum class NormMethod { EXACT, FASTNORM };
const char *norm_method_name(NormMethod m);
NormMethod norm_method_from_name(const std::string &name);

struct NormEstimate {
    double value = 0;
    NormMethod method = NormMethod::EXACT;
    size_t samples_used = 0;
    uint64_t seed = 0;
};

using WeightedStates = std::vector<std::pair<std::complex<double>, StabilizerState>>;

/// <psi|psi> from pairwise overlaps of the product terms.
NormEstimate exact_sqnorm(const SparseDecomposition &decomp);
/// <psi|psi> from O(k^2) stabilizer inner products.
double exact_sqnorm(const WeightedStates &terms, size_t threads = 1);

/// (2^t / M) sum_j |<theta_j|psi>|^2 with theta_j = C_j |0>, C_j uniform random
/// Cliffords.
NormEstimate fastnorm(const SparseDecomposition &decomp, size_t samples, Rng &rng, uint64_t seed = 0);
double fastnorm(const WeightedStates &terms, size_t samples, Rng &rng);

constexpr size_t kDenseVectorCap = 12;
constexpr size_t kDenseMatrixCap = 10;

/// ||Psi - psi|| evaluated densely.
double approx_error(const SparseDecomposition &decomp, const MagicModel &model);

/// Trace norm (sum of absolute eigenvalues) of a Hermitian matrix stored
/// row-major.
double trace_norm(const std::vector<std::complex<double>> &matrix, size_t dim);

/// ||E[|psi><psi| / <psi|psi>] - |Psi><Psi|||_1 over `trials` draws; trial i
/// samples with the stream derive_stream(seed, i).
using Sampler = std::function<SparseDecomposition(Rng &)>;
double rho1_distance(const MagicModel &model, const Sampler &sampler, size_t trials, uint64_t seed,
                     size_t threads = 1);

struct PauliMeasurement {
    PauliOperator pauli;
    int outcome = 1;
};
/// Parses "ZIII,+;XXII,-" into measurements.
std::vector<PauliMeasurement> parse_measurements(const std::string &text);

struct ProbabilityEstimate {
    double value = 0;        // clamped joint probability
    double raw = 0;          // unclamped joint probability
    bool clamped = false;
    std::vector<double> conditionals;  // p(step j | steps < j), unclamped
    std::vector<double> cumulative;    // p(steps <= j), unclamped
    NormMethod method = NormMethod::EXACT;
};

struct NormOptions {
    NormMethod method = NormMethod::EXACT;
    size_t fastnorm_samples = 1000;
    size_t threads = 1;
};

/// Chain-rule probability of the measurement record after applying circuit to
/// psi. Circuits or Paulis on fewer qubits act on the leading qubits.
ProbabilityEstimate pauli_prob(const SparseDecomposition &decomp, const CliffordOp &circuit,
                               const std::vector<PauliMeasurement> &paulis, const NormOptions &opts, Rng &rng);

/// Same chain evaluated on a dense state; returns cumulative probabilities.
std::vector<double> dense_pauli_prob(const Amplitudes &state, size_t num_qubits, const CliffordOp &circuit,
                                     const std::vector<PauliMeasurement> &paulis);

}  // namespace corrsim

#endif
