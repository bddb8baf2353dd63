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

#include <cmath>
#include <map>
#include <set>

#include "corrsim/quad_form.h"
#include "corrsim/stabilizer_state.h"
#include "test_util.h"

using namespace corrsim;
using namespace corrsim::testing;

namespace {

constexpr double kAlgebraTol = 1e-10;
constexpr double kOracleTol = 1e-9;

Amplitudes dense_after(size_t n, const CliffordOp &op) {
    DenseState d(n);
    d.apply(op);
    return d.amplitudes();
}

QuadForm random_form(size_t m, Rng &rng) {
    QuadForm f(m);
    f.add_constant(static_cast<int>(uniform_below(rng, 4)));
    for (size_t j = 0; j < m; j++) {
        f.add_linear(j, static_cast<int>(uniform_below(rng, 4)));
        for (size_t k = j + 1; k < m; k++) {
            if (uniform_below(rng, 2)) {
                f.toggle_quad(j, k);
            }
        }
    }
    return f;
}

std::complex<double> brute_exp_sum(const QuadForm &f) {
    std::complex<double> s = 0;
    const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (uint64_t u = 0; u < (uint64_t{1} << f.size()); u++) {
        s += ipow[f.eval(bits_of_index(u, f.size()))];
    }
    return s;
}

}  // namespace

TEST(QuadForm, ExpSumMatchesEnumeration) {
    Rng rng(11);
    for (int trial = 0; trial < 300; trial++) {
        QuadForm f = random_form(uniform_below(rng, 8), rng);
        EXPECT_LT(std::abs(f.exp_sum().value() - brute_exp_sum(f)), kAlgebraTol);
    }
}

TEST(QuadForm, ComposeMatchesPointwiseEvaluation) {
    Rng rng(12);
    for (int trial = 0; trial < 200; trial++) {
        size_t m = 1 + uniform_below(rng, 6);
        size_t mp = uniform_below(rng, 6);
        QuadForm f = random_form(m, rng);
        BitMatrix t(m, mp);
        BitVector c(m);
        for (size_t j = 0; j < m; j++) {
            c.set(j, uniform_below(rng, 2));
            for (size_t e = 0; e < mp; e++) {
                t.set(j, e, uniform_below(rng, 2));
            }
        }
        QuadForm g = f.compose(t, c);
        for (uint64_t w = 0; w < (uint64_t{1} << mp); w++) {
            BitVector wv = bits_of_index(w, mp);
            EXPECT_EQ(g.eval(wv), f.eval(c ^ t.mul(wv)));
        }
    }
}

TEST(QuadForm, SubstituteMatchesPointwiseEvaluation) {
    Rng rng(13);
    for (int trial = 0; trial < 200; trial++) {
        size_t m = 2 + uniform_below(rng, 5);
        QuadForm f = random_form(m, rng);
        size_t c = uniform_below(rng, m);
        bool b = uniform_below(rng, 2);
        BitVector s(m);
        for (size_t e = 0; e < m; e++) {
            if (e != c) s.set(e, uniform_below(rng, 2));
        }
        QuadForm g = f;
        g.substitute(c, b, s);
        for (uint64_t w = 0; w < (uint64_t{1} << (m - 1)); w++) {
            BitVector full(m);
            size_t k = 0;
            for (size_t e = 0; e < m; e++) {
                if (e != c) full.set(e, (w >> k++) & 1);
            }
            full.set(c, b ^ full.dot(s));
            EXPECT_EQ(g.eval(bits_of_index(w, m - 1)), f.eval(full));
        }
    }
}

TEST(StabilizerState, ZeroState) {
    auto s1 = StabilizerState::zero_state(1);
    EXPECT_EQ(s1.amplitude(BitVector::from_bitstring("0")), std::complex<double>(1.0));
    EXPECT_EQ(s1.amplitude(BitVector::from_bitstring("1")), std::complex<double>(0.0));
    EXPECT_NEAR(StabilizerState::zero_state(3).squared_norm(), 1.0, 1e-12);
    Amplitudes d = StabilizerState::zero_state(6).to_dense();
    ASSERT_EQ(d.size(), 64u);
    Amplitudes e0(64, 0.0);
    e0[0] = 1.0;
    EXPECT_LT(max_abs_diff(d, e0), kOracleTol);
    EXPECT_THROW(StabilizerState::zero_state(0), std::invalid_argument);
}

TEST(StabilizerState, ProductState) {
    double r = 1 / std::sqrt(2.0);
    auto p = StabilizerState::product_state({ProductFactor::PLUS});
    EXPECT_NEAR(std::abs(p.amplitude(BitVector::from_bitstring("0")) - r), 0, 1e-15);
    EXPECT_NEAR(std::abs(p.amplitude(BitVector::from_bitstring("1")) - r), 0, 1e-15);
    auto zp = StabilizerState::product_state({ProductFactor::ZERO, ProductFactor::PLUS});
    // Character k of a bitstring is qubit k.
    EXPECT_NEAR(std::abs(zp.amplitude(BitVector::from_bitstring("00")) - r), 0, 1e-15);
    EXPECT_NEAR(std::abs(zp.amplitude(BitVector::from_bitstring("01")) - r), 0, 1e-15);
    EXPECT_EQ(zp.amplitude(BitVector::from_bitstring("10")), std::complex<double>(0.0));
    EXPECT_EQ(zp.amplitude(BitVector::from_bitstring("11")), std::complex<double>(0.0));
    auto plus4 = StabilizerState::product_state(std::vector<ProductFactor>(4, ProductFactor::PLUS));
    auto ip = StabilizerState::zero_state(4).inner_product(plus4);
    EXPECT_NEAR(std::abs(ip - std::pow(r, 4)), 0, kOracleTol);
    EXPECT_THROW(StabilizerState::product_state({}), std::invalid_argument);
}

TEST(StabilizerState, SingleGateExamples) {
    CliffordOp h(1);
    h.append(Gate{GateType::H, 0});
    auto plus = StabilizerState::zero_state(1).apply_clifford(h);
    auto ref = StabilizerState::product_state({ProductFactor::PLUS});
    EXPECT_LT(max_abs_diff(plus.to_dense(), ref.to_dense()), kAlgebraTol);

    CliffordOp ss(1);
    ss.append(Gate{GateType::S, 0});
    ss.append(Gate{GateType::S, 0});
    auto minus = ref.apply_clifford(ss);
    double r = 1 / std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(minus.to_dense(), Amplitudes{r, -r}), kAlgebraTol);
}

TEST(StabilizerState, GateWordsMatchDenseOracle) {
    Rng rng(1);
    for (int trial = 0; trial < 600; trial++) {
        size_t n = 1 + uniform_below(rng, 6);
        CliffordOp w = random_word(n, 5 + uniform_below(rng, 60), rng);
        auto s = StabilizerState::zero_state(n).apply_clifford(w);
        ASSERT_LT(max_abs_diff(s.to_dense(), dense_after(n, w)), kAlgebraTol) << "trial " << trial;
        ASSERT_NEAR(s.squared_norm(), 1.0, kAlgebraTol);
    }
}

TEST(StabilizerState, FiveGateWordAtFourQubits) {
    Rng rng(2);
    for (int trial = 0; trial < 50; trial++) {
        CliffordOp w = random_word(4, 5, rng);
        auto s = StabilizerState::zero_state(4).apply_clifford(w);
        Amplitudes d = dense_after(4, w);
        for (uint64_t b = 0; b < 16; b++) {
            EXPECT_LT(std::abs(s.amplitude(bits_of_index(b, 4)) - d[b]), kAlgebraTol);
        }
    }
}

TEST(StabilizerState, InnerProductsMatchDenseOracle) {
    Rng rng(3);
    for (int trial = 0; trial < 600; trial++) {
        size_t n = 1 + uniform_below(rng, 6);
        auto a = StabilizerState::zero_state(n).apply_clifford(random_word(n, 40, rng));
        auto b = StabilizerState::zero_state(n).apply_clifford(random_word(n, 40, rng));
        auto expect = dense_of(a).inner_product(dense_of(b));
        auto got = a.inner_product(b);
        ASSERT_LT(std::abs(got - expect), kOracleTol) << "trial " << trial;
        EXPECT_LT(std::abs(got - std::conj(b.inner_product(a))), 1e-14);
        EXPECT_NEAR(std::abs(a.inner_product(a) - 1.0), 0, kAlgebraTol);
    }
}

TEST(StabilizerState, InnerProductAgainstBasisAndProduct) {
    auto z = StabilizerState::zero_state(1);
    auto p = StabilizerState::product_state({ProductFactor::PLUS});
    EXPECT_NEAR(std::abs(z.inner_product(p) - 1 / std::sqrt(2.0)), 0, 1e-15);
    EXPECT_THROW(z.inner_product(StabilizerState::zero_state(2)), std::invalid_argument);
}

TEST(StabilizerState, AmplitudesRandomFiveQubits) {
    Rng rng(4);
    for (int trial = 0; trial < 100; trial++) {
        CliffordOp w = random_word(5, 80, rng);
        auto s = StabilizerState::zero_state(5).apply_clifford(w);
        Amplitudes d = dense_after(5, w);
        for (uint64_t b = 0; b < 32; b++) {
            ASSERT_LT(std::abs(s.amplitude(bits_of_index(b, 5)) - d[b]), kAlgebraTol);
        }
    }
    EXPECT_THROW(StabilizerState::zero_state(2).amplitude(BitVector(3)), std::invalid_argument);
}

TEST(StabilizerState, ProjectionExamples) {
    auto plus = StabilizerState::product_state({ProductFactor::PLUS});
    auto res = plus.project_pauli(PauliOperator::parse("Z"), +1);
    ASSERT_TRUE(res.has_value());
    EXPECT_NEAR(res->second, 0.5, 1e-15);
    EXPECT_LT(max_abs_diff(res->first.to_dense(), Amplitudes{1.0, 0.0}), kAlgebraTol);

    auto zero = StabilizerState::zero_state(1);
    res = zero.project_pauli(PauliOperator::parse("Z"), +1);
    ASSERT_TRUE(res.has_value());
    EXPECT_NEAR(res->second, 1.0, 1e-15);
    EXPECT_FALSE(zero.project_pauli(PauliOperator::parse("Z"), -1).has_value());
    EXPECT_FALSE(zero.project_pauli(PauliOperator::parse("-I"), +1).has_value());
    EXPECT_THROW(zero.project_pauli(PauliOperator::parse("iZ"), +1), std::invalid_argument);
}

TEST(StabilizerState, ProjectionsMatchDenseOracle) {
    Rng rng(5);
    int checked = 0;
    for (int trial = 0; trial < 600; trial++) {
        size_t n = 1 + uniform_below(rng, 6);
        auto s = StabilizerState::zero_state(n).apply_clifford(random_word(n, 40, rng));
        PauliOperator p = trial < 100 && n >= 2 ? PauliOperator::parse("-XX" + std::string(n - 2, 'I'))
                                               : random_hermitian_pauli(n, rng);
        double total = 0;
        for (int outcome : {+1, -1}) {
            DenseState d = dense_of(s);
            d.project(p, outcome);
            double expect = d.squared_norm();
            auto res = s.project_pauli(p, outcome);
            double got = res ? res->second : 0.0;
            total += got;
            ASSERT_NEAR(got, expect, kOracleTol) << p.str();
            if (res) {
                Amplitudes post = d.amplitudes();
                for (auto &v : post) v /= std::sqrt(expect);
                ASSERT_LT(max_abs_diff(res->first.to_dense(), post), kOracleTol) << p.str();
                ASSERT_NEAR(res->first.squared_norm(), 1.0, kAlgebraTol);
            }
            checked++;
        }
        EXPECT_NEAR(total, 1.0, kAlgebraTol);
    }
    EXPECT_GE(checked, 500);
}

TEST(StabilizerState, NormPreservedOverLongWords) {
    Rng rng(6);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 2 + uniform_below(rng, 14);
        auto s = StabilizerState::zero_state(n).apply_clifford(random_word(n, 1000, rng));
        EXPECT_NEAR(std::abs(s.inner_product(s)), 1.0, kAlgebraTol);
    }
}

TEST(RandomClifford, DeterministicUnderSeed) {
    Rng a(99), b(99);
    EXPECT_EQ(random_clifford(5, a), random_clifford(5, b));
}

TEST(RandomClifford, SingleQubitUniformOverGroup) {
    Rng rng(7);
    std::map<std::string, int> counts;
    for (int k = 0; k < 24000; k++) {
        auto tab = random_clifford(1, rng).tableau();
        counts[tab[0].str() + tab[1].str()]++;
    }
    ASSERT_EQ(counts.size(), 24u);
    for (const auto &[key, c] : counts) {
        EXPECT_NEAR(c, 1000, 120) << key;
    }
}

TEST(RandomClifford, TwoQubitPreservesCommutation) {
    Rng rng(8);
    int ok = 0;
    for (int k = 0; k < 1000; k++) {
        ok += random_clifford(2, rng).preserves_commutation();
    }
    EXPECT_EQ(ok, 1000);
}

TEST(RandomClifford, TwoQubitCoversGroup) {
    // |C_2 / phases| = 11520.
    Rng rng(9);
    std::set<std::string> seen;
    for (int k = 0; k < 200000; k++) {
        std::string key;
        for (const auto &p : random_clifford(2, rng).tableau()) key += p.str();
        seen.insert(key);
    }
    EXPECT_EQ(seen.size(), 11520u);
}

TEST(RandomClifford, StatesMatchDenseOracle) {
    Rng rng(10);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + uniform_below(rng, 6);
        CliffordOp c = random_clifford(n, rng);
        auto s = StabilizerState::zero_state(n).apply_clifford(c);
        EXPECT_LT(max_abs_diff(s.to_dense(), dense_after(n, c)), kAlgebraTol);
    }
}

TEST(Pauli, ParseAndConjugate) {
    auto p = PauliOperator::parse("-XYZI");
    EXPECT_EQ(p.str(), "-XYZI");
    EXPECT_EQ(p.sign(), -1);
    EXPECT_THROW(PauliOperator::parse("XQ"), std::invalid_argument);
    CliffordOp h(1);
    h.append(Gate{GateType::H, 0});
    EXPECT_EQ(h.conjugate(PauliOperator::parse("Y")).str(), "-Y");
    EXPECT_EQ(h.conjugate(PauliOperator::parse("X")).str(), "+Z");
}

TEST(Pauli, ConjugationMatchesDenseOracle) {
    Rng rng(14);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + uniform_below(rng, 4);
        CliffordOp w = random_word(n, 20, rng);
        PauliOperator p = random_hermitian_pauli(n, rng);
        PauliOperator img = w.conjugate(p);
        // U P |v> = (U P U^dag) U |v> for a random dense |v>.
        DenseState v(n);
        v.apply(random_word(n, 30, rng));
        DenseState lhs = v;
        lhs.apply_pauli(p);
        lhs.apply(w);
        DenseState rhs = v;
        rhs.apply(w);
        rhs.apply_pauli(img);
        EXPECT_LT(max_abs_diff(lhs.amplitudes(), rhs.amplitudes()), kAlgebraTol);
    }
}
