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

#include "corrsim/cost.h"

#include <cmath>
#include <stdexcept>

namespace corrsim {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Ceiling that ignores floating-point noise above an integer.
double ceil_count(double v) { return std::ceil(v - 1e-12 * std::max(1.0, std::abs(v))); }

void check_inputs(double xi, double delta) {
    if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
    if (!(xi >= 1.0 - 1e-12)) throw std::invalid_argument("xi must be at least 1");
}

}  // namespace

double k_sota(double xi, double delta) {
    check_inputs(xi, delta);
    return ceil_count((2.0 + kSqrt2) * xi / delta);
}

double k_iid_quadratic(double xi, double delta) {
    check_inputs(xi, delta);
    return ceil_count(xi / (delta * delta));
}

double k_iid_tight(double xi, double delta) {
    check_inputs(xi, delta);
    return ceil_count(kSqrt2 * xi / delta);
}

double k_theorem1(double xi, double delta, double gamma) {
    if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
    if (gamma >= xi) {
        throw std::invalid_argument("gamma = " + std::to_string(gamma) + " must be below xi = " + std::to_string(xi));
    }
    return ceil_count((xi - gamma) / (delta * delta));
}

double optimal_beta(double delta) { return 10.0 * delta * delta; }

size_t optimal_f_t(double delta, double xi) { return static_cast<size_t>(std::llround(10.0 * delta * xi)); }

namespace {

double cubic(double xi, double delta, double f, double k) {
    return ((delta * delta * k + 4.0 * f) * k - (2.0 * xi * xi + f * f)) * k - f * f * f;
}

}  // namespace

double correlated_cubic(double xi, double delta, size_t f_t, double k) {
    return cubic(xi, delta, static_cast<double>(f_t), k);
}

double correlated_root_real(double xi, double delta, double f) {
    check_inputs(xi, delta);
    if (!(f >= 0)) throw std::invalid_argument("f_t must be nonnegative");
    // One sign change in the coefficients: exactly one positive root, with the
    // cubic nonpositive on [0, root].
    double lo = 0.0;
    double hi = 10.0 * xi / delta + 10.0 * f;
    while (cubic(xi, delta, f, hi) <= 0) hi *= 2;
    for (int it = 0; it < 400 && hi - lo > 1e-13 * hi; it++) {
        double mid = 0.5 * (lo + hi);
        if (cubic(xi, delta, f, mid) <= 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

double correlated_root(double xi, double delta, size_t f_t) {
    return correlated_root_real(xi, delta, static_cast<double>(f_t));
}

double k_correlated(double xi, double delta, size_t f_t) {
    double root = correlated_root(xi, delta, f_t);
    double g = static_cast<double>(f_t + 1);
    return std::ceil(ceil_count(root) / g) * g;
}

Theorem1Choice choose_theorem1(const MagicModel &model, const MaskSet &masks, double delta) {
    Theorem1Choice best;
    best.k = -1;
    size_t limit = model.t >= 2 ? masks.masks.size() : 0;
    for (size_t f = 0; f <= limit; f++) {
        double gamma = gamma_bound(model, masks, f);
        if (gamma >= model.xi_t) continue;
        double g = static_cast<double>(f + 1);
        double k = std::ceil(k_theorem1(model.xi_t, delta, gamma) / g) * g;
        if (best.k < 0 || k < best.k) {
            best = {f, gamma, k};
        }
    }
    if (best.k < 0) {
        throw std::invalid_argument("no supplement count leaves gamma below xi");
    }
    return best;
}

MaskSet cost_masks(size_t t) {
    if (t < 2) {
        MaskSet empty;
        empty.block_length = t;
        empty.source_t = t;
        return empty;
    }
    if ((t & (t - 1)) == 0) return generate_masks_pow2(t);
    if (t % 2 == 0) return generate_masks_even(t);
    MaskSet m = generate_masks_even(t - 1);
    for (auto &w : m.masks) w.push_back(false);
    m.block_length = t;
    return m;
}

ChiTable known_chi_table() { return {{4, 4.0}, {8, 12.0}, {16, 108.0}}; }

double chi_value(size_t t, double exponent, const ChiTable *overrides) {
    if (overrides) {
        auto it = overrides->find(t);
        if (it != overrides->end()) return it->second;
    }
    return std::exp2(exponent * static_cast<double>(t));
}

const char *regime_name(Regime r) {
    switch (r) {
        case Regime::WEAK_CORRELATED:
            return "WEAK_CORRELATED";
        case Regime::STRONG:
            return "STRONG";
        case Regime::EXACT:
            return "EXACT";
    }
    return "?";
}

RegimeResult regime(size_t t, double delta, double phi, double chi_exponent, const ChiTable *overrides) {
    if (t == 0) throw std::invalid_argument("regime requires t >= 1");
    if (!(delta > 0) || delta > 1) throw std::invalid_argument("delta must lie in (0, 1]");
    RegimeResult r;
    r.xi_t = magic_model(phi, t).xi_t;
    r.chi_t = chi_value(t, chi_exponent, overrides);
    const double c = kCorrelatedConstantRounded;
    const double d3 = delta * delta * delta;
    r.strong_fewer_states = r.chi_t < c * r.xi_t / delta;
    r.exact_fewer_states = r.chi_t * r.chi_t < c * r.xi_t / d3;
    r.cost_weak = c * r.xi_t / d3;
    r.cost_strong = r.chi_t / (delta * delta * (2.0 + kSqrt2));
    r.cost_exact = r.chi_t * r.chi_t * (2.0 + kSqrt2) / 12.0;
    r.strong_lower_cost = r.cost_strong < r.cost_weak;
    r.exact_lower_cost = r.cost_exact < r.cost_weak;
    r.cheapest = Regime::WEAK_CORRELATED;
    double best = r.cost_weak;
    if (r.cost_strong < best) {
        best = r.cost_strong;
        r.cheapest = Regime::STRONG;
    }
    if (r.cost_exact < best) {
        r.cheapest = Regime::EXACT;
    }
    return r;
}

RegimeThresholds regime_thresholds(double t, double phi, double chi_exponent) {
    double xi = std::pow(magic_model(phi, 1).xi_t, t);
    double chi = std::exp2(chi_exponent * t);
    const double c = kCorrelatedConstantRounded;
    RegimeThresholds th;
    th.strong_fewer_states = c * xi / chi;
    th.exact_fewer_states = std::cbrt(c * xi / (chi * chi));
    th.strong_lower_cost = c * (2.0 + kSqrt2) * xi / chi;
    th.exact_lower_cost = std::cbrt(12.0 * c / (2.0 + kSqrt2) * xi / (chi * chi));
    return th;
}

namespace {

template <class Gap>
void scan_crossover(Gap gap, size_t t_max, size_t &last_t, double &crossing) {
    last_t = 0;
    for (size_t t = 1; t <= t_max && gap(static_cast<double>(t)) > 0; t++) last_t = t;
    crossing = static_cast<double>(last_t);
    if (last_t == 0 || last_t == t_max) return;
    double lo = static_cast<double>(last_t), hi = lo + 1;
    for (int it = 0; it < 100; it++) {
        double mid = 0.5 * (lo + hi);
        (gap(mid) > 0 ? lo : hi) = mid;
    }
    crossing = lo;
}

}  // namespace

Crossover regime_crossover(double phi, double chi_exponent, size_t t_max) {
    Crossover c;
    scan_crossover(
        [&](double t) {
            auto th = regime_thresholds(t, phi, chi_exponent);
            return std::log(th.exact_fewer_states) - std::log(th.strong_fewer_states);
        },
        t_max, c.fewer_states_t, c.fewer_states_exact);
    scan_crossover(
        [&](double t) {
            auto th = regime_thresholds(t, phi, chi_exponent);
            return std::log(th.exact_lower_cost) - std::log(th.strong_lower_cost);
        },
        t_max, c.lower_cost_t, c.lower_cost_exact);
    return c;
}

CostPoint cost_point(size_t t, double delta, double phi, const MaskSet &masks, double chi_exponent,
                     const ChiTable *overrides) {
    MagicModel model = magic_model(phi, t);
    CostPoint p;
    p.t = t;
    p.delta = delta;
    p.xi_t = model.xi_t;
    p.regime = regime(t, delta, phi, chi_exponent, overrides);
    p.chi_t = p.regime.chi_t;
    p.k_iid_quadratic = k_iid_quadratic(p.xi_t, delta);
    p.k_sota = k_sota(p.xi_t, delta);
    p.k_iid_tight = k_iid_tight(p.xi_t, delta);
    if (model.xi_t > 1.0 + 1e-12) {
        Theorem1Choice c = choose_theorem1(model, masks, delta);
        p.k_theorem1 = c.k;
        p.f_t_theorem1 = c.f_t;
        p.gamma = c.gamma;
    } else {
        p.k_theorem1 = 1;
    }
    p.beta = optimal_beta(delta);
    p.f_t = optimal_f_t(delta, p.xi_t);
    p.k_correlated = k_correlated(p.xi_t, delta, p.f_t);
    return p;
}

}  // namespace corrsim
