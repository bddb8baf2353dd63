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

#ifndef CORRSIM_MASKS_H
#define CORRSIM_MASKS_H

#include <cstddef>
#include <string>
#include <vector>

#include "corrsim/bits.h"

namespace corrsim {

enum class MaskStrategy { POW2, EVEN, PADDED };

/// XOR masks whose union with the zero word is a binary code of minimum
/// distance block_length / 2.
struct MaskSet {
    size_t block_length = 0;
    size_t source_t = 0;
    MaskStrategy strategy = MaskStrategy::POW2;
    std::vector<BitVector> masks;

    /// "pow2", "even", or "padded(<block_length>)".
    std::string strategy_name() const;
};

/// Bitstrings at distance >= t/2 from the all-ones word and from each other,
/// grown from {10, 01, 00} by cloning and complementing halves.
std::vector<BitVector> additional_bitstrings_pow2(size_t t);

MaskSet generate_masks_pow2(size_t t);
MaskSet generate_masks_even(size_t t);
MaskSet generate_masks_padded(size_t t, size_t count);

/// Smallest power of two t' >= t with 2t' - 1 >= count.
size_t padded_block_length(size_t t, size_t count);

struct MaskReport {
    size_t count = 0;
    size_t min_weight = 0;
    size_t min_pairwise_distance = 0;
    bool pass = false;
};
MaskReport verify_mask_set(const MaskSet &set);

enum class SupplementKind { DIRECT, EVEN, PADDED };

struct SupplementPlan {
    SupplementKind kind = SupplementKind::DIRECT;
    size_t block_length = 0;
    size_t available = 0;
    size_t f_t = 0;

    std::string name() const;
};
SupplementPlan plan_supplement(size_t t, size_t f_required);
/// Generates the mask set a plan refers to.
MaskSet masks_for_plan(size_t t, const SupplementPlan &plan);

}  // namespace corrsim

#endif
