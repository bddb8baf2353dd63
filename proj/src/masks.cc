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

#include "corrsim/masks.h"

#include <bit>
#include <algorithm>
#include <stdexcept>

namespace corrsim {

namespace {

bool is_pow2(size_t t) { return t >= 1 && std::has_single_bit(t); }

BitVector cloned(const BitVector &v) {
    size_t len = v.size();
    BitVector out(2 * len);
    if (len % 64 == 0) {
        size_t nw = v.num_words();
        for (size_t i = 0; i < nw; i++) {
            out.words()[i] = v.words()[i];
            out.words()[nw + i] = v.words()[i];
        }
    } else {
        for (size_t k = 0; k < len; k++) {
            bool b = v.get(k);
            out.set(k, b);
            out.set(len + k, b);
        }
    }
    return out;
}

void complement_range(BitVector &v, size_t begin, size_t end) {
    if (begin % 64 == 0 && end % 64 == 0) {
        for (size_t i = begin / 64; i < end / 64; i++) {
            v.words()[i] = ~v.words()[i];
        }
    } else {
        for (size_t k = begin; k < end; k++) {
            v.flip(k);
        }
    }
}

BitVector complement(BitVector v) {
    complement_range(v, 0, v.size());
    return v;
}

BitVector tiled(const BitVector &v, size_t copies) {
    BitVector out(v.size() * copies);
    for (size_t c = 0; c < copies; c++) {
        for (size_t k = 0; k < v.size(); k++) {
            out.set(c * v.size() + k, v.get(k));
        }
    }
    return out;
}

}  // namespace

std::string MaskSet::strategy_name() const {
    switch (strategy) {
        case MaskStrategy::POW2:
            return "pow2";
        case MaskStrategy::EVEN:
            return "even";
        case MaskStrategy::PADDED:
            return "padded(" + std::to_string(block_length) + ")";
    }
    return "?";
}

std::vector<BitVector> additional_bitstrings_pow2(size_t t) {
    if (t < 2 || !is_pow2(t)) {
        throw std::invalid_argument("power-of-two mask generation requires t = 2^k with k >= 1, got " +
                                    std::to_string(t));
    }
    std::vector<BitVector> ys = {BitVector::from_bitstring("10"), BitVector::from_bitstring("01"),
                                 BitVector::from_bitstring("00")};
    for (size_t len = 2; len < t; len *= 2) {
        size_t count = ys.size();
        std::vector<BitVector> next(2 * count + 1);
        for (size_t i = 0; i < count; i++) {
            next[i] = cloned(ys[i]);
            next[i + count] = next[i];
            complement_range(next[i + count], len, 2 * len);
        }
        // All-delta word with one half complemented: the complement of the
        // cloned-and-half-complemented gamma word.
        next[2 * count] = complement(next[count + 2]);
        ys = std::move(next);
    }
    return ys;
}

MaskSet generate_masks_pow2(size_t t) {
    MaskSet set;
    set.block_length = t;
    set.source_t = t;
    set.strategy = MaskStrategy::POW2;
    for (auto &y : additional_bitstrings_pow2(t)) {
        set.masks.push_back(complement(std::move(y)));
    }
    return set;
}

MaskSet generate_masks_even(size_t t) {
    if (t < 2 || t % 2 != 0) {
        throw std::invalid_argument("even mask generation requires an even t >= 2, got " + std::to_string(t));
    }
    size_t base = size_t{1} << std::countr_zero(t);
    MaskSet set = generate_masks_pow2(base);
    set.block_length = t;
    set.source_t = t;
    set.strategy = is_pow2(t) ? MaskStrategy::POW2 : MaskStrategy::EVEN;
    if (base != t) {
        for (auto &m : set.masks) {
            m = tiled(m, t / base);
        }
    }
    return set;
}

size_t padded_block_length(size_t t, size_t count) {
    size_t tp = 2;
    while (tp < t || 2 * tp - 1 < count) {
        tp *= 2;
    }
    return tp;
}

MaskSet generate_masks_padded(size_t t, size_t count) {
    if (count <= 2 * t - 1) {
        throw std::invalid_argument("padded generation requires count > 2t-1; direct generation suffices");
    }
    MaskSet set = generate_masks_pow2(padded_block_length(t, count));
    set.source_t = t;
    set.strategy = MaskStrategy::PADDED;
    return set;
}

MaskReport verify_mask_set(const MaskSet &set) {
    MaskReport rep;
    rep.count = set.masks.size();
    rep.min_weight = set.block_length;
    rep.min_pairwise_distance = set.block_length;
    for (size_t i = 0; i < set.masks.size(); i++) {
        const BitVector &a = set.masks[i];
        if (a.size() != set.block_length) {
            return rep;
        }
        rep.min_weight = std::min(rep.min_weight, a.popcount());
        for (size_t j = i + 1; j < set.masks.size(); j++) {
            const BitVector &b = set.masks[j];
            size_t d = 0;
            for (size_t w = 0; w < a.num_words(); w++) {
                d += std::popcount(a.words()[w] ^ b.words()[w]);
            }
            rep.min_pairwise_distance = std::min(rep.min_pairwise_distance, d);
        }
    }
    size_t half = (set.block_length + 1) / 2;
    rep.pass = rep.min_weight >= half && rep.min_pairwise_distance >= half;
    return rep;
}

std::string SupplementPlan::name() const {
    switch (kind) {
        case SupplementKind::DIRECT:
            return "direct";
        case SupplementKind::EVEN:
            return "even";
        case SupplementKind::PADDED:
            return "padded(" + std::to_string(block_length) + ")";
    }
    return "?";
}

SupplementPlan plan_supplement(size_t t, size_t f_required) {
    SupplementPlan plan;
    plan.f_t = f_required;
    plan.block_length = t;
    if (f_required == 0) {
        plan.kind = SupplementKind::DIRECT;
        plan.available = (t >= 2 && is_pow2(t)) ? 2 * t - 1 : 0;
        return plan;
    }
    if (t >= 2 && is_pow2(t) && f_required <= 2 * t - 1) {
        plan.kind = SupplementKind::DIRECT;
        plan.available = 2 * t - 1;
        return plan;
    }
    if (t >= 2 && t % 2 == 0) {
        size_t base = size_t{1} << std::countr_zero(t);
        if (f_required <= 2 * base - 1) {
            plan.kind = SupplementKind::EVEN;
            plan.available = 2 * base - 1;
            return plan;
        }
    }
    plan.kind = SupplementKind::PADDED;
    plan.block_length = padded_block_length(t, f_required);
    plan.available = 2 * plan.block_length - 1;
    return plan;
}

MaskSet masks_for_plan(size_t t, const SupplementPlan &plan) {
    switch (plan.kind) {
        case SupplementKind::DIRECT:
            if (t >= 2 && is_pow2(t)) {
                return generate_masks_pow2(t);
            }
            return MaskSet{t, t, MaskStrategy::POW2, {}};
        case SupplementKind::EVEN:
            return generate_masks_even(t);
        case SupplementKind::PADDED: {
            MaskSet set = generate_masks_pow2(plan.block_length);
            set.source_t = t;
            set.strategy = MaskStrategy::PADDED;
            return set;
        }
    }
    return {};
}

}  // namespace corrsim
