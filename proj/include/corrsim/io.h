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

#ifndef CORRSIM_IO_H
#define CORRSIM_IO_H

#include <string>

#include "corrsim/clifford.h"
#include "corrsim/magic.h"
#include "corrsim/masks.h"

namespace corrsim {

// JSON artifacts. Bitstrings are hex strings in BitVector::to_hex order.

/// {block_length, source_t, strategy, masks: [hex]}
std::string masks_to_json(const MaskSet &set);
MaskSet masks_from_json(const std::string &text);

/// {t, k, prefactor, mode, f_t, mask_ref, seed, entries: [{x, phase: [re, im]}],
/// groups: [{seed_index, members}], warnings}. Entries carry "magnitude" only
/// when it differs from 1.
std::string decomposition_to_json(const SparseDecomposition &d);
SparseDecomposition decomposition_from_json(const std::string &text);

/// {num_qubits, gates: [{gate, qubits}]}. A bare gate array is also accepted on
/// input, with the qubit count inferred.
std::string circuit_to_json(const CliffordOp &op);
CliffordOp circuit_from_json(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

}  // namespace corrsim

#endif
