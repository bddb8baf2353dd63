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
#include <complex>
#include <numbers>

#include "corrsim/cost.h"
#include "corrsim/rng.h"

using namespace corrsim;

namespace {

constexpr double kPi = std::numbers::pi;
const double kXi1 = 4.0 - 2.0 * std::sqrt(2.0);

// Closed-form Cardano expression for the correlated sample count, evaluated
// with principal complex cube roots.
double closed_form_root(double xi, double delta, double f) {
    using C = std::complex<double>;
    double d2 = delta * delta, d4 = d2 * d2, x2 = xi * xi, f2 = f * f, f3 = f2 * f;
    C a = (27 * d4 - 36 * d2 - 128) * f3 - 72 * d2 * f * x2;
    C b = (3 * d2 + 16) * f2 + 6 * d2 * x2;
    C inner = a + std::sqrt(C(a * a - 4.0 * b * b * b));
    C cube = std::pow(inner, 1.0 / 3.0);
    C k = std::cbrt(4.0) / (6 * d2) * cube + 2.0 * std::cbrt(2.0) * b / (6 * d2 * cube) - 4.0 / 3.0 * f / d2;
    return k.real();
}

}  // namespace

TEST(ClosedForms, BaselineCounts) {
    EXPECT_EQ(k_sota(kXi1, 0.1), 40.0);
    EXPECT_EQ(k_iid_quadratic(1.0, 1.0), 1.0);
    EXPECT_NEAR(k_iid_tight(1e6, 1e-3) / k_sota(1e6, 1e-3), std::sqrt(2.0) / (2.0 + std::sqrt(2.0)), 1e-9);
    EXPECT_NEAR(std::sqrt(2.0) / (2.0 + std::sqrt(2.0)), 0.4142, 1e-4);
    EXPECT_EQ(k_iid_quadratic(3.5, 0.5), 14.0);
    EXPECT_THROW(k_sota(2.0, 0.0), std::invalid_argument);
}

TEST(ClosedForms, Theorem1Count) {
    for (double xi : {2.0, 3.5, 17.0}) {
        EXPECT_EQ(k_theorem1(xi, 0.3, 1.0), std::ceil((xi - 1.0) / 0.09 - 1e-9));
    }
    EXPECT_THROW(k_theorem1(3.5448, 0.4, 16.0), std::invalid_argument);
    EXPECT_THROW(k_theorem1(2.0, 0.4, 2.0), std::invalid_argument);
    EXPECT_EQ(k_theorem1(100.0, 0.4, 16.0), 525.0);
}

TEST(ClosedForms, BetaAndSupplements) {
    EXPECT_NEAR(optimal_beta(0.05), 0.025, 1e-15);
    EXPECT_EQ(optimal_f_t(0.1, 35.0), 35u);
    EXPECT_NEAR(std::pow(kXi1, 22), 32.6, 0.1);
    EXPECT_EQ(optimal_f_t(1e-6, 1e3), 0u);
}

TEST(Correlated, NoSupplementsReducesToSqrt2) {
    for (double xi : {1.0, 3.5, 120.0, 1e6}) {
        for (double delta : {0.3, 0.05, 1e-3}) {
            EXPECT_EQ(k_correlated(xi, delta, 0), k_iid_tight(xi, delta));
            EXPECT_NEAR(correlated_root(xi, delta, 0), std::sqrt(2.0) * xi / delta, 1e-9 * xi / delta);
        }
    }
}

TEST(Correlated, MatchesClosedForm) {
    for (double xi : {2.0, 35.0, 1e3, 1e5}) {
        for (double delta : {0.2, 0.05, 0.01}) {
            size_t f = optimal_f_t(delta, xi);
            double oracle = closed_form_root(xi, delta, static_cast<double>(f));
            EXPECT_NEAR(correlated_root(xi, delta, f), oracle, 1e-6 * oracle) << xi << " " << delta;
        }
    }
}

TEST(Correlated, Asymptote) {
    const double delta = 1e-4, xi = 1e7;
    size_t f = optimal_f_t(delta, xi);
    double k = k_correlated(xi, delta, f);
    double c = k * delta / xi;
    EXPECT_NEAR(c, std::sqrt(402.0) - 20.0, 0.01 * 0.049938);
    EXPECT_NEAR(kCorrelatedConstant, 0.049938, 1e-6);
    EXPECT_NEAR(k_sota(xi, delta) / k, 68.28, 0.5);
    EXPECT_NEAR(k_iid_tight(xi, delta) / k, 28.28, 0.5);
    EXPECT_NEAR((2.0 + std::sqrt(2.0)) / kCorrelatedConstantRounded, 68.28, 0.01);
    EXPECT_NEAR((2.0 + std::sqrt(2.0)) / kCorrelatedConstant, 68.37, 0.01);
}

TEST(Correlated, CubicMinimalityUpToGroupRounding) {
    Rng rng(42);
    for (int trial = 0; trial < 1000; trial++) {
        double xi = std::exp(uniform01(rng) * std::log(1e6));
        double delta = std::exp(std::log(1e-3) + uniform01(rng) * std::log(1e3));
        size_t f = uniform_below(rng, 2) ? optimal_f_t(delta, xi) : uniform_below(rng, 64);
        double k = k_correlated(xi, delta, f);
        EXPECT_GE(correlated_cubic(xi, delta, f, k), 0.0);
        EXPECT_LT(correlated_cubic(xi, delta, f, k - static_cast<double>(f + 1)), 0.0);
        EXPECT_EQ(std::fmod(k, static_cast<double>(f + 1)), 0.0);
    }
}

TEST(Correlated, NonincreasingInSupplements) {
    for (double xi : {20.0, 500.0, 1e4}) {
        for (double delta : {0.05, 0.02, 0.005}) {
            size_t fmax = optimal_f_t(delta, xi);
            double prev = correlated_root(xi, delta, 0);
            for (size_t f = 1; f <= fmax; f++) {
                double r = correlated_root(xi, delta, f);
                EXPECT_LE(r, prev * (1 + 1e-12));
                prev = r;
            }
        }
    }
}

TEST(Correlated, LargeDeltaMinimumBelowRoundedBeta) {
    // At delta = 0.1 the minimum over f_t sits near 0.85 (10 delta xi) and the
    // endpoint is within 2% of it.
    for (double xi : {20.0, 500.0}) {
        size_t fmax = optimal_f_t(0.1, xi);
        double best = correlated_root(xi, 0.1, 0);
        size_t arg = 0;
        for (size_t f = 1; f <= fmax; f++) {
            double r = correlated_root(xi, 0.1, f);
            if (r < best) {
                best = r;
                arg = f;
            }
        }
        EXPECT_LT(arg, fmax);
        EXPECT_GT(arg, fmax / 2);
        EXPECT_LE(correlated_root(xi, 0.1, fmax), 1.02 * best);
    }
}

TEST(Correlated, ImprovementAtModerateSize) {
    double xi = std::pow(kXi1, 30);
    double delta = 0.01;
    double k = k_correlated(xi, delta, optimal_f_t(delta, xi));
    EXPECT_LE(k * delta / xi, 0.06);
    for (size_t t : {8u, 12u, 20u}) {
        double x = std::pow(kXi1, t);
        for (double d : {0.1, 0.05, 0.01}) {
            EXPECT_LE(k_correlated(x, d, optimal_f_t(d, x)), k_sota(x, d));
        }
    }
}

TEST(Theorem1Choice, DeskScaleExample) {
    MagicModel m = magic_model(kPi / 4, 8);
    Theorem1Choice c = choose_theorem1(m, generate_masks_pow2(8), 0.4);
    EXPECT_EQ(c.f_t, 7u);
    EXPECT_EQ(c.k, 8.0);
    EXPECT_NEAR(c.gamma, gamma_bound(m, generate_masks_pow2(8), 7), 1e-15);
    EXPECT_EQ(k_theorem1(m.xi_t, 0.4, 1.0), 16.0);
}

TEST(Regime, InequalitiesAndLabels) {
    // Large delta: weak simulation is cheapest.
    RegimeResult weak = regime(20, 0.3, kPi / 4);
    EXPECT_EQ(weak.cheapest, Regime::WEAK_CORRELATED);
    EXPECT_FALSE(weak.strong_lower_cost);
    // Tiny delta at small t: exact simulation wins.
    RegimeResult exact = regime(4, 1e-3, kPi / 4);
    EXPECT_TRUE(exact.exact_fewer_states);
    EXPECT_TRUE(exact.exact_lower_cost);
    EXPECT_EQ(exact.cheapest, Regime::EXACT);
    // Each flag agrees with its threshold.
    for (size_t t : {5u, 40u, 120u}) {
        auto th = regime_thresholds(static_cast<double>(t), kPi / 4);
        for (double d : {0.5, 0.1, 0.01, 1e-4}) {
            RegimeResult r = regime(t, d, kPi / 4);
            EXPECT_EQ(r.strong_fewer_states, d < th.strong_fewer_states);
            EXPECT_EQ(r.exact_fewer_states, d < th.exact_fewer_states);
            EXPECT_EQ(r.strong_lower_cost, d < th.strong_lower_cost);
            EXPECT_EQ(r.exact_lower_cost, d < th.exact_lower_cost);
        }
    }
    EXPECT_STREQ(regime_name(Regime::STRONG), "STRONG");
}

TEST(Regime, ChiOverrides) {
    ChiTable known = known_chi_table();
    EXPECT_EQ(chi_value(4, kDefaultChiExponent, &known), 4.0);
    EXPECT_EQ(chi_value(8, kDefaultChiExponent, &known), 12.0);
    EXPECT_EQ(chi_value(16, kDefaultChiExponent, &known), 108.0);
    EXPECT_NEAR(chi_value(10), std::exp2(3.96), 1e-12);
    EXPECT_EQ(regime(8, 0.2, kPi / 4, kDefaultChiExponent, &known).chi_t, 12.0);
}

TEST(Regime, Crossovers) {
    Crossover c = regime_crossover(kPi / 4);
    // Fewer-states pair: chi = 0.05^2 xi^2, solved in closed form.
    double closed = 2 * std::log2(0.05) / (0.396 - 2 * std::log2(kXi1));
    EXPECT_NEAR(c.fewer_states_exact, closed, 1e-6);
    EXPECT_EQ(c.fewer_states_t, static_cast<size_t>(std::floor(closed)));
    // Lower-cost pair: chi = c17^3 / c18 xi^2.
    double c17 = 0.05 * (2 + std::sqrt(2.0));
    double c18 = 0.6 / (2 + std::sqrt(2.0));
    double closed_cost = std::log2(c18 / (c17 * c17 * c17)) / (2 * std::log2(kXi1) - 0.396);
    EXPECT_NEAR(c.lower_cost_exact, closed_cost, 1e-6);
    // 2^{0.396 t} stabilizer terms exceed 10^17 beyond t = 150.
    EXPECT_GT(chi_value(150), 1e17);
}

TEST(Regime, ExtentEquivalence) {
    // A 68.28-fold count reduction equals the extent of about 27 magic states.
    double gates = std::log((2 + std::sqrt(2.0)) / kCorrelatedConstantRounded) / std::log(kXi1);
    EXPECT_EQ(std::lround(gates), 27);
    EXPECT_NEAR(std::pow(kXi1, 27), 71.9, 0.1);
}

TEST(CostPoint, FieldsConsistent) {
    CostPoint p = cost_point(8, 0.2, kPi / 4, cost_masks(8));
    EXPECT_EQ(p.k_sota, k_sota(p.xi_t, 0.2));
    EXPECT_EQ(p.f_t, optimal_f_t(0.2, p.xi_t));
    EXPECT_EQ(p.k_correlated, k_correlated(p.xi_t, 0.2, p.f_t));
    EXPECT_GT(p.k_theorem1, 0);
    EXPECT_NEAR(p.beta, 0.4, 1e-12);
    for (size_t t : {1u, 3u, 9u, 31u}) {
        MaskSet m = cost_masks(t);
        EXPECT_EQ(m.block_length, t);
        for (const auto &w : m.masks) EXPECT_GE(2 * w.popcount(), t - 1);
        CostPoint q = cost_point(t, 0.05, kPi / 4, m);
        EXPECT_GT(q.k_iid_quadratic, 0);
        EXPECT_GT(q.k_correlated, 0);
    }
}
