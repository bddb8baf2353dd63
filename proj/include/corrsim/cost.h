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

#ifndef CORRSIM_COST_H
#define CORRSIM_COST_H

#include <cmath>
#include <cstddef>
#include <map>
#include <string>

#include "corrsim/magic.h"
#include "corrsim/masks.h"

namespace corrsim {

// Sample counts are returned as doubles holding whole numbers: at large t and
// small delta they exceed 64-bit integer range.

/// ceil((2 + sqrt2) xi / delta).
double k_sota(double xi, double delta);
/// ceil(xi / delta^2).
double k_iid_quadratic(double xi, double delta);
/// ceil(sqrt2 xi / delta).
double k_iid_tight(double xi, double delta);
/// ceil((xi - gamma) / delta^2); throws when gamma >= xi.
double k_theorem1(double xi, double delta, double gamma);

/// beta = 10 delta^2.
double optimal_beta(double delta);
/// round(10 delta xi).
size_t optimal_f_t(double delta, double xi);

/// Largest real root of delta^2 k^3 + 4 f k^2 - (2 xi^2 + f^2) k - f^3.
double correlated_root(double xi, double delta, size_t f_t);
/// Same root with a real-valued supplement count, the form in which the
/// delta -> 0 limit with f_t = 10 delta xi is taken.
double correlated_root_real(double xi, double delta, double f);
/// Root rounded up to a whole number of groups of size f_t + 1.
double k_correlated(double xi, double delta, size_t f_t);
/// Value of the cubic at k.
double correlated_cubic(double xi, double delta, size_t f_t, double k);

/// Limit of k delta / xi as delta -> 0 with f_t = 10 delta xi.
inline const double kCorrelatedConstant = std::sqrt(402.0) - 20.0;
/// Rounded constant quoted alongside the exact one.
constexpr double kCorrelatedConstantRounded = 0.05;

/// Group size, gamma and count minimizing the grouped Theorem-1 sample count
/// over f_t in [0, |masks|]; ties go to the smaller f_t.
struct Theorem1Choice {
    size_t f_t = 0;
    double gamma = 1.0;
    double k = 0;
};
Theorem1Choice choose_theorem1(const MagicModel &model, const MaskSet &masks, double delta);

/// Mask set used for cost tables: the power-of-two or even-length construction,
/// the t - 1 construction padded with a zero bit for odd t, empty for t = 1.
MaskSet cost_masks(size_t t);

using ChiTable = std::map<size_t, double>;
/// Lowest known exact stabilizer ranks at t = 4, 8, 16.
ChiTable known_chi_table();
constexpr double kDefaultChiExponent = 0.396;
/// 2^{exponent t} unless t appears in overrides.
double chi_value(size_t t, double exponent = kDefaultChiExponent, const ChiTable *overrides = nullptr);

enum class Regime { WEAK_CORRELATED, STRONG, EXACT };
const char *regime_name(Regime r);

struct RegimeResult {
    double xi_t = 0;
    double chi_t = 0;
    bool strong_fewer_states = false;  // chi < 0.05 xi / delta
    bool exact_fewer_states = false;   // chi^2 < 0.05 xi / delta^3
    bool strong_lower_cost = false;    // chi / (delta^2 (2 + sqrt2)) < 0.05 xi / delta^3
    bool exact_lower_cost = false;     // chi^2 < 12 (0.05) / (2 + sqrt2) xi / delta^3
    double cost_weak = 0;
    double cost_strong = 0;
    double cost_exact = 0;
    Regime cheapest = Regime::WEAK_CORRELATED;
};
RegimeResult regime(size_t t, double delta, double phi, double chi_exponent = kDefaultChiExponent,
                    const ChiTable *overrides = nullptr);

/// delta below which each inequality holds, in the order of RegimeResult.
struct RegimeThresholds {
    double strong_fewer_states = 0;
    double exact_fewer_states = 0;
    double strong_lower_cost = 0;
    double exact_lower_cost = 0;
};
RegimeThresholds regime_thresholds(double t, double phi, double chi_exponent = kDefaultChiExponent);

/// Largest integer t such that, for every t' in [1, t], the exact-simulation
/// inequality holds at a higher delta than its strong-simulation partner, plus
/// the real-valued crossing point.
struct Crossover {
    size_t fewer_states_t = 0;
    double fewer_states_exact = 0;
    size_t lower_cost_t = 0;
    double lower_cost_exact = 0;
};
Crossover regime_crossover(double phi, double chi_exponent = kDefaultChiExponent, size_t t_max = 2000);

struct CostPoint {
    size_t t = 0;
    double delta = 0;
    double xi_t = 0;
    double chi_t = 0;
    double k_iid_quadratic = 0;
    double k_sota = 0;
    double k_iid_tight = 0;
    double k_theorem1 = 0;
    size_t f_t_theorem1 = 0;
    double gamma = 1;
    double k_correlated = 0;
    size_t f_t = 0;
    double beta = 0;
    RegimeResult regime;
};
/// Evaluates every count; gamma and f_t_theorem1 come from choose_theorem1
/// over masks.
CostPoint cost_point(size_t t, double delta, double phi, const MaskSet &masks,
                     double chi_exponent = kDefaultChiExponent, const ChiTable *overrides = nullptr);

}  // namespace corrsim

#endif
