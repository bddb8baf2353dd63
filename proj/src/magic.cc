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

#include "corrsim/magic.h"

#include <cmath>
#include <algorithm>
#include <bit>
#include <numbers>
#include <stdexcept>

namespace corrsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> unit_or_one(std::complex<double> c) {
    double m = std::abs(c);
    return m > 1e-15 ? c / m : std::complex<double>(1.0);
}

std::complex<double> ipow_complex(std::complex<double> u, size_t e) {
    std::complex<double> r = 1.0;
    std::complex<double> b = u;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r / std::abs(r);
}

}  // namespace

Amplitudes MagicModel::target_dense() const {
    const double r = 1.0 / std::sqrt(2.0);
    std::array<std::complex<double>, 2> one = {c0 + c1 * r, c1 * r};
    return kron_product(std::vector<std::array<std::complex<double>, 2>>(t, one));
}

std::complex<double> MagicModel::phase_of(const BitVector &x) const {
    size_t ones = x.popcount();
    return ipow_complex(u0, t - ones) * ipow_complex(u1, ones);
}

MagicModel magic_model(double phi, size_t t) {
    if (!(phi > 0.0) || phi > kPi / 2 + 1e-12) {
        throw std::invalid_argument("phi must lie in (0, pi/2]");
    }
    if (t == 0) {
        throw std::invalid_argument("magic model requires t >= 1");
    }
    MagicModel m;
    m.phi = phi;
    m.t = t;
    const double two_nu = 2.0 * std::cos(kPi / 8);
    const std::complex<double> w = std::exp(-kI * (kPi / 4));
    const std::complex<double> e = std::exp(kI * phi);
    m.c0 = kI / std::sqrt(2.0) * (-kI + w) * (-kI + e) / two_nu;
    m.c1 = kI / std::sqrt(2.0) * (1.0 + w) * (1.0 - e) / two_nu;
    m.c0_mag = std::sqrt(std::max(0.0, 1.0 - std::sin(phi)));
    m.c1_mag = std::sqrt(std::max(0.0, 1.0 - std::cos(phi)));
    m.u0 = unit_or_one(m.c0);
    m.u1 = unit_or_one(m.c1);
    double s = m.c0_mag + m.c1_mag;
    m.l1 = std::pow(s, static_cast<double>(t));
    m.xi_t = m.l1 * m.l1;
    m.p1 = m.c1_mag / s;
    return m;
}

double overlap(double phi) { return (1.0 / std::sqrt(2.0) + 1.0) * (std::sin(phi) + std::cos(phi) - 1.0); }

double alpha_bound() { return 2.0 * (2.0 * std::log(2.0) + std::log(1.0 - 1.0 / std::sqrt(2.0))) / std::log(2.0); }

const char *mode_name(SamplingMode mode) {
    switch (mode) {
        case SamplingMode::IID:
            return "iid";
        case SamplingMode::THEOREM1:
            return "theorem1";
        case SamplingMode::THEOREM2:
            return "theorem2";
        case SamplingMode::EXACT:
            return "exact";
    }
    return "?";
}

SamplingMode mode_from_name(const std::string &name) {
    if (name == "iid") return SamplingMode::IID;
    if (name == "theorem1") return SamplingMode::THEOREM1;
    if (name == "theorem2") return SamplingMode::THEOREM2;
    if (name == "exact") return SamplingMode::EXACT;
    throw std::invalid_argument("unknown sampling mode '" + name + "'");
}

namespace {

BitVector sample_bits(const MagicModel &model, Rng &rng) {
    BitVector x(model.t);
    for (size_t q = 0; q < model.t; q++) {
        x.set(q, bernoulli(rng, model.p1));
    }
    return x;
}

}  // namespace

SparseDecomposition sample_iid(const MagicModel &model, size_t k, Rng &rng) {
    if (k == 0) {
        throw std::invalid_argument("sample_iid requires k >= 1");
    }
    SparseDecomposition d;
    d.t = model.t;
    d.k = k;
    d.prefactor = model.l1 / static_cast<double>(k);
    d.mode = SamplingMode::IID;
    d.entries.reserve(k);
    for (size_t i = 0; i < k; i++) {
        BitVector x = sample_bits(model, rng);
        std::complex<double> ph = model.phase_of(x);
        d.entries.push_back({std::move(x), ph});
    }
    return d;
}

SparseDecomposition sample_correlated(const MagicModel &model, const MaskSet &masks, size_t f_t, size_t k_total,
                                      SamplingMode mode, Rng &rng) {
    if (f_t > masks.masks.size()) {
        throw std::invalid_argument("f_t = " + std::to_string(f_t) + " exceeds the " +
                                    std::to_string(masks.masks.size()) + " available masks");
    }
    if (f_t > 0 && masks.block_length != model.t) {
        throw std::invalid_argument("mask block length " + std::to_string(masks.block_length) +
                                    " differs from the model qubit count " + std::to_string(model.t));
    }
    if (k_total == 0) {
        throw std::invalid_argument("sample_correlated requires k_total >= 1");
    }
    size_t group = f_t + 1;
    size_t m = (k_total + group - 1) / group;
    SparseDecomposition d;
    d.t = model.t;
    d.k = m * group;
    d.prefactor = model.l1 / static_cast<double>(d.k);
    d.mode = mode;
    d.f_t = f_t;
    d.mask_ref = masks.strategy_name() + ":" + std::to_string(masks.block_length);
    if (f_t > 0 && std::abs(model.p1 - 0.5) > 1e-12) {
        d.warnings.push_back(
            "masked supplements preserve the seed distribution only for phi = pi/4; this ensemble is biased");
    }
    d.entries.reserve(d.k);
    for (size_t g = 0; g < m; g++) {
        DecompositionGroup grp;
        grp.seed_index = d.entries.size();
        BitVector seed = sample_bits(model, rng);
        for (size_t j = 0; j <= f_t; j++) {
            BitVector x = j == 0 ? seed : seed ^ masks.masks[j - 1];
            std::complex<double> ph = model.phase_of(x);
            grp.members.push_back(d.entries.size());
            d.entries.push_back({std::move(x), ph});
        }
        d.groups.push_back(std::move(grp));
    }
    return d;
}

SparseDecomposition complete_decomposition(const MagicModel &model) {
    if (model.t > DenseState::kMaxQubits) {
        throw std::invalid_argument("complete decomposition limited to " + std::to_string(DenseState::kMaxQubits) +
                                    " qubits");
    }
    SparseDecomposition d;
    d.t = model.t;
    d.k = size_t{1} << model.t;
    d.prefactor = 1.0;
    d.mode = SamplingMode::EXACT;
    for (uint64_t bits = 0; bits < d.k; bits++) {
        BitVector x(model.t);
        for (size_t q = 0; q < model.t; q++) {
            x.set(q, (bits >> q) & 1);
        }
        size_t ones = x.popcount();
        double mag = std::pow(model.c0_mag, static_cast<double>(model.t - ones)) *
                     std::pow(model.c1_mag, static_cast<double>(ones));
        std::complex<double> ph = model.phase_of(x);
        d.entries.push_back({std::move(x), ph, mag});
    }
    return d;
}

double gamma_bound(const MagicModel &model, const MaskSet &masks, size_t f_t) {
    if (f_t > masks.masks.size()) {
        throw std::invalid_argument("f_t exceeds the available masks");
    }
    double ov = std::abs(overlap(model.phi));
    double s = 0;
    for (size_t j = 0; j < f_t; j++) {
        s += model.xi_t * std::pow(ov, static_cast<double>(masks.masks[j].popcount()));
    }
    return 1.0 + static_cast<double>(f_t) - s;
}

double gamma_exact(const MagicModel &model, const MaskSet &masks, size_t f_t) {
    if (f_t > masks.masks.size()) {
        throw std::invalid_argument("f_t exceeds the available masks");
    }
    if (f_t > 0 && masks.block_length != model.t) {
        throw std::invalid_argument("mask block length differs from the model qubit count");
    }
    const double r = 1.0 / std::sqrt(2.0);
    // <x~|y~> for one differing bit, by the value of the first bit.
    const std::complex<double> from0 = std::conj(model.u0) * model.u1 * r;
    const std::complex<double> from1 = std::conj(model.u1) * model.u0 * r;
    std::vector<BitVector> offsets = {BitVector(model.t)};
    for (size_t j = 0; j < f_t; j++) {
        offsets.push_back(masks.masks[j]);
    }
    double pairs = 0;
    for (size_t a = 0; a < offsets.size(); a++) {
        for (size_t b = 0; b < offsets.size(); b++) {
            if (a == b) continue;
            std::complex<double> e = 1.0;
            for (size_t q = 0; q < model.t; q++) {
                bool oa = offsets[a].get(q);
                if (oa == offsets[b].get(q)) continue;
                double p_first_zero = oa ? model.p1 : 1.0 - model.p1;
                e *= p_first_zero * from0 + (1.0 - p_first_zero) * from1;
            }
            pairs += e.real();
        }
    }
    return 1.0 + static_cast<double>(f_t) - model.xi_t * pairs / static_cast<double>(f_t + 1);
}

double tail_bound(double xi, double delta, double gamma) {
    double v = 1.0 - 2.0 * std::exp(-delta * delta * xi / 8.0 + gamma * delta * delta / 8.0);
    return std::clamp(v, 0.0, 1.0);
}

std::vector<std::pair<std::complex<double>, StabilizerState>> to_states(const SparseDecomposition &decomp) {
    std::vector<std::pair<std::complex<double>, StabilizerState>> out;
    out.reserve(decomp.entries.size());
    for (const auto &e : decomp.entries) {
        std::vector<ProductFactor> f(decomp.t);
        for (size_t q = 0; q < decomp.t; q++) {
            f[q] = e.x.get(q) ? ProductFactor::PLUS : ProductFactor::ZERO;
        }
        out.emplace_back(decomp.prefactor * e.magnitude * e.phase, StabilizerState::product_state(f));
    }
    return out;
}

Amplitudes decomposition_dense(const SparseDecomposition &decomp) {
    if (decomp.t > DenseState::kMaxQubits) {
        throw std::invalid_argument("dense expansion limited to " + std::to_string(DenseState::kMaxQubits) +
                                    " qubits");
    }
    const double r = 1.0 / std::sqrt(2.0);
    size_t dim = size_t{1} << decomp.t;
    Amplitudes out(dim, 0.0);
    for (const auto &e : decomp.entries) {
        std::complex<double> w = decomp.prefactor * e.magnitude * e.phase;
        uint64_t plus = 0;
        for (size_t q = 0; q < decomp.t; q++) {
            if (e.x.get(q)) plus |= uint64_t{1} << q;
        }
        // Support: indices whose bits outside the |+> set are zero.
        double amp = std::pow(r, static_cast<double>(std::popcount(plus)));
        for (uint64_t sub = plus;; sub = (sub - 1) & plus) {
            out[sub] += w * amp;
            if (sub == 0) break;
        }
    }
    return out;
}

}  // namespace corrsim
