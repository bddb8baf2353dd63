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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "corrsim/masks.h"
#include "mask_tables.h"

using namespace corrsim;
using namespace corrsim::testing;

namespace {

std::set<std::string> generated(size_t t) {
    std::set<std::string> out;
    for (const auto &y : additional_bitstrings_pow2(t)) {
        out.insert(y.to_bitstring());
    }
    return out;
}

MaskSet from_strings(size_t t, const std::vector<std::string> &ms) {
    MaskSet s;
    s.block_length = t;
    s.source_t = t;
    for (const auto &m : ms) s.masks.push_back(BitVector::from_bitstring(m));
    return s;
}

}  // namespace

TEST(Masks, SmallestSetsMatchSeedWords) {
    auto ys = additional_bitstrings_pow2(2);
    ASSERT_EQ(ys.size(), 3u);
    EXPECT_EQ(ys[0].to_bitstring(), "10");
    EXPECT_EQ(ys[1].to_bitstring(), "01");
    EXPECT_EQ(ys[2].to_bitstring(), "00");
    auto ms = generate_masks_pow2(2);
    EXPECT_EQ(ms.masks[0].to_bitstring(), "01");
    EXPECT_EQ(ms.masks[1].to_bitstring(), "10");
    EXPECT_EQ(ms.masks[2].to_bitstring(), "11");
}

TEST(Masks, MatchBinaryTreeTable) {
    EXPECT_EQ(generated(2), expand(kTableT2));
    EXPECT_EQ(generated(4), expand(kTableT4));
    EXPECT_EQ(generated(8), expand(kTableT8));
    EXPECT_EQ(generated(16), expand(kTableT16));
    EXPECT_EQ(kTableT16.size(), 31u);
}

TEST(Masks, GenerationOrderAtEight) {
    const std::vector<std::string> expect = {"01010101", "10101010", "11111111", "01100110", "10011001",
                                             "11001100", "00110011", "01011010", "10100101", "11110000",
                                             "01101001", "10010110", "11000011", "00111100", "00001111"};
    auto ms = generate_masks_pow2(8);
    ASSERT_EQ(ms.masks.size(), expect.size());
    for (size_t i = 0; i < expect.size(); i++) {
        EXPECT_EQ(ms.masks[i].to_bitstring(), expect[i]) << i;
    }
}

TEST(Masks, CodePropertyExhaustive) {
    for (size_t t = 2; t <= 256; t *= 2) {
        auto rep = verify_mask_set(generate_masks_pow2(t));
        EXPECT_EQ(rep.count, 2 * t - 1);
        EXPECT_EQ(rep.min_weight, t / 2) << t;
        EXPECT_EQ(rep.min_pairwise_distance, t / 2) << t;
        EXPECT_TRUE(rep.pass);
    }
    auto rep16 = verify_mask_set(generate_masks_pow2(16));
    EXPECT_EQ(rep16.count, 31u);
    EXPECT_EQ(rep16.min_pairwise_distance, 8u);
}

TEST(Masks, CardinalityUpTo1024) {
    for (size_t t = 2; t <= 1024; t *= 2) {
        EXPECT_EQ(generate_masks_pow2(t).masks.size(), 2 * t - 1);
    }
}

TEST(Masks, Deterministic) {
    auto a = generate_masks_pow2(64);
    auto b = generate_masks_pow2(64);
    EXPECT_EQ(a.masks, b.masks);
}

TEST(Masks, RejectsNonPowerOfTwo) {
    EXPECT_THROW(generate_masks_pow2(12), std::invalid_argument);
    EXPECT_THROW(generate_masks_pow2(1), std::invalid_argument);
    EXPECT_THROW(generate_masks_even(7), std::invalid_argument);
}

TEST(Masks, EvenGeneration) {
    auto m12 = generate_masks_even(12);
    EXPECT_EQ(m12.masks.size(), 7u);
    EXPECT_EQ(m12.block_length, 12u);
    auto rep = verify_mask_set(m12);
    EXPECT_GE(rep.min_pairwise_distance, 6u);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(generate_masks_even(8).masks, generate_masks_pow2(8).masks);
    for (size_t t = 2; t <= 200; t += 2) {
        EXPECT_TRUE(verify_mask_set(generate_masks_even(t)).pass) << t;
    }
}

TEST(Masks, PaddedGeneration) {
    auto p = generate_masks_padded(8, 40);
    EXPECT_EQ(p.block_length, 32u);
    EXPECT_EQ(p.masks.size(), 63u);
    EXPECT_EQ(p.strategy_name(), "padded(32)");
    EXPECT_THROW(generate_masks_padded(8, 15), std::invalid_argument);
    // Fractional block length from the padding lemma, t=8 and count=40.
    double alpha = std::ceil(40.0 / 15.0);
    EXPECT_LE(alpha * (8 - 0.5) + 0.5, 32.0);
    for (size_t t = 2; t <= 64; t++) {
        for (size_t count : {2 * t, 3 * t + 1, 7 * t}) {
            size_t tp = padded_block_length(t, count);
            EXPECT_TRUE(std::has_single_bit(tp));
            EXPECT_GE(tp, t);
            EXPECT_GE(2 * tp - 1, count);
            EXPECT_TRUE(tp == 2 || tp / 2 < t || 2 * (tp / 2) - 1 < count) << t << " " << count;
        }
    }
}

TEST(Masks, VerifyExamples) {
    EXPECT_TRUE(verify_mask_set(from_strings(2, {"01", "10", "11"})).pass);
    EXPECT_EQ(verify_mask_set(from_strings(2, {"01", "10", "11"})).min_weight, 1u);
    auto r = verify_mask_set(from_strings(2, {"11", "10"}));
    EXPECT_EQ(r.min_pairwise_distance, 1u);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(verify_mask_set(from_strings(8, {"10000000", "01000000"})).pass);
}

TEST(Masks, PlanSupplement) {
    auto a = plan_supplement(16, 20);
    EXPECT_EQ(a.kind, SupplementKind::DIRECT);
    EXPECT_EQ(a.available, 31u);
    auto b = plan_supplement(16, 100);
    EXPECT_EQ(b.kind, SupplementKind::PADDED);
    EXPECT_EQ(b.block_length, 64u);
    auto c = plan_supplement(16, 0);
    EXPECT_EQ(c.kind, SupplementKind::DIRECT);
    EXPECT_EQ(c.f_t, 0u);
    auto d = plan_supplement(12, 7);
    EXPECT_EQ(d.kind, SupplementKind::EVEN);
    auto e = plan_supplement(12, 8);
    EXPECT_EQ(e.kind, SupplementKind::PADDED);
    EXPECT_EQ(e.block_length, 16u);
    EXPECT_EQ(masks_for_plan(12, e).masks.size(), 31u);
}

TEST(Masks, HexRoundTrip) {
    auto ms = generate_masks_pow2(32);
    for (const auto &m : ms.masks) {
        EXPECT_EQ(BitVector::from_hex(m.to_hex(), 32), m);
    }
    // Qubit 0 is the least significant bit.
    EXPECT_EQ(BitVector::from_bitstring("1000").to_hex(), "1");
    EXPECT_EQ(BitVector::from_bitstring("00001111").to_hex(), "f0");
}
