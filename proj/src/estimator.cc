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

#include "corrsim/estimator.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "corrsim/parallel.h"

namespace corrsim {

const char *norm_method_name(NormMethod m) { return m == NormMethod::EXACT ? "exact" : "fastnorm"; }

NormMethod norm_method_from_name(const std::string &name) {
    if (name == "exact") return NormMethod::EXACT;
    if (name == "fastnorm") return NormMethod::FASTNORM;
    throw std::invalid_argument("unknown norm method '" + name + "'");
}

NormEstimate exact_sqnorm(const SparseDecomposition &decomp) {
    size_t k = decomp.entries.size();
    std::vector<double> overlap_pow(decomp.t + 1);
    for (size_t d = 0; d <= decomp.t; d++) {
        overlap_pow[d] = std::pow(0.5, 0.5 * static_cast<double>(d));
    }
    std::vector<std::complex<double>> w(k);
    for (size_t i = 0; i < k; i++) {
        w[i] = decomp.entries[i].magnitude * decomp.entries[i].phase;
    }
    double diag = 0;
    std::complex<double> off = 0;
    for (size_t i = 0; i < k; i++) {
        diag += std::norm(w[i]);
        const BitVector &xi = decomp.entries[i].x;
        std::complex<double> row = 0;
        for (size_t j = i + 1; j < k; j++) {
            const BitVector &xj = decomp.entries[j].x;
            size_t d = 0;
            for (size_t q = 0; q < xi.num_words(); q++) {
                d += std::popcount(xi.words()[q] ^ xj.words()[q]);
            }
            row += w[j] * overlap_pow[d];
        }
        off += std::conj(w[i]) * row;
    }
    NormEstimate est;
    est.value = decomp.prefactor * decomp.prefactor * (diag + 2.0 * off.real());
    est.method = NormMethod::EXACT;
    return est;
}

double exact_sqnorm(const WeightedStates &terms, size_t threads) {
    size_t k = terms.size();
    std::vector<std::complex<double>> rows(k, 0.0);
    parallel_for(k, threads, [&](size_t i) {
        std::complex<double> row = 0;
        for (size_t j = i + 1; j < k; j++) {
            row += terms[j].first * terms[i].second.inner_product(terms[j].second);
        }
        rows[i] = std::conj(terms[i].first) * row;
    });
    double diag = 0;
    std::complex<double> off = 0;
    for (size_t i = 0; i < k; i++) {
        diag += std::norm(terms[i].first) * terms[i].second.squared_norm();
        off += rows[i];
    }
    return diag + 2.0 * off.real();
}

double fastnorm(const WeightedStates &terms, size_t samples, Rng &rng) {
    if (samples == 0) {
        throw std::invalid_argument("fastnorm requires at least one sample");
    }
    if (terms.empty()) {
        return 0.0;
    }
    size_t n = terms.front().second.num_qubits();
    double acc = 0;
    for (size_t s = 0; s < samples; s++) {
        StabilizerState theta = StabilizerState::zero_state(n).apply_clifford(random_clifford(n, rng));
        std::complex<double> a = 0;
        for (const auto &[w, st] : terms) {
            a += w * theta.inner_product(st);
        }
        acc += std::norm(a);
    }
    return std::ldexp(acc, static_cast<int>(n)) / static_cast<double>(samples);
}

NormEstimate fastnorm(const SparseDecomposition &decomp, size_t samples, Rng &rng, uint64_t seed) {
    NormEstimate est;
    est.value = fastnorm(to_states(decomp), samples, rng);
    est.method = NormMethod::FASTNORM;
    est.samples_used = samples;
    est.seed = seed;
    return est;
}

double approx_error(const SparseDecomposition &decomp, const MagicModel &model) {
    if (model.t > kDenseVectorCap || decomp.t != model.t) {
        throw std::invalid_argument("approx_error requires matching t <= " + std::to_string(kDenseVectorCap));
    }
    Amplitudes target = model.target_dense();
    Amplitudes psi = decomposition_dense(decomp);
    double s = 0;
    for (size_t i = 0; i < target.size(); i++) {
        s += std::norm(target[i] - psi[i]);
    }
    return std::sqrt(s);
}

double trace_norm(const std::vector<std::complex<double>> &matrix, size_t dim) {
    Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(
        matrix.data(), static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    Eigen::MatrixXcd m = a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

double rho1_distance(const MagicModel &model, const Sampler &sampler, size_t trials, uint64_t seed,
                     size_t threads) {
    if (model.t > kDenseMatrixCap) {
        throw std::invalid_argument("rho1_distance requires t <= " + std::to_string(kDenseMatrixCap));
    }
    if (trials == 0) {
        throw std::invalid_argument("rho1_distance requires at least one trial");
    }
    size_t dim = size_t{1} << model.t;
    std::vector<Eigen::VectorXcd> vecs(trials);
    parallel_for(trials, threads, [&](size_t i) {
        Rng rng = derive_stream(seed, i);
        Amplitudes psi = decomposition_dense(sampler(rng));
        Eigen::VectorXcd v = Eigen::Map<Eigen::VectorXcd>(psi.data(), static_cast<Eigen::Index>(dim));
        double nrm = v.squaredNorm();
        vecs[i] = nrm > 0 ? Eigen::VectorXcd(v / std::sqrt(nrm)) : Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    });
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &v : vecs) {
        rho.noalias() += v * v.adjoint();
    }
    rho /= static_cast<double>(trials);
    Amplitudes target = model.target_dense();
    Eigen::VectorXcd tv = Eigen::Map<Eigen::VectorXcd>(target.data(), static_cast<Eigen::Index>(dim));
    rho -= tv * tv.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

std::vector<PauliMeasurement> parse_measurements(const std::string &text) {
    std::vector<PauliMeasurement> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) {
            if (end == text.size()) break;
            continue;
        }
        PauliMeasurement m;
        size_t comma = item.find(',');
        std::string pstr = item.substr(0, comma);
        if (comma != std::string::npos) {
            std::string o = item.substr(comma + 1);
            if (o == "+" || o == "+1" || o == "1") {
                m.outcome = 1;
            } else if (o == "-" || o == "-1") {
                m.outcome = -1;
            } else {
                throw std::invalid_argument("invalid measurement outcome '" + o + "'");
            }
        }
        m.pauli = PauliOperator::parse(pstr);
        if (!m.pauli.is_hermitian()) {
            throw std::invalid_argument("measurement Pauli '" + pstr + "' is not Hermitian");
        }
        out.push_back(std::move(m));
        if (end == text.size()) break;
    }
    return out;
}

namespace {

CliffordOp embed(const CliffordOp &op, size_t n) {
    if (op.num_qubits() > n) {
        throw std::invalid_argument("circuit acts on more qubits than the decomposition");
    }
    return CliffordOp(n, op.gates());
}

PauliOperator embed(const PauliOperator &p, size_t n) {
    if (p.num_qubits() > n) {
        throw std::invalid_argument("Pauli acts on more qubits than the decomposition");
    }
    PauliOperator out(n);
    out.phase = p.phase;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out.x.set(q, p.x.get(q));
        out.z.set(q, p.z.get(q));
    }
    return out;
}

double norm_of(const WeightedStates &terms, const NormOptions &opts, Rng &rng) {
    if (terms.empty()) return 0.0;
    if (opts.method == NormMethod::EXACT) return exact_sqnorm(terms, opts.threads);
    return fastnorm(terms, opts.fastnorm_samples, rng);
}

}  // namespace

ProbabilityEstimate pauli_prob(const SparseDecomposition &decomp, const CliffordOp &circuit,
                               const std::vector<PauliMeasurement> &paulis, const NormOptions &opts, Rng &rng) {
    size_t n = decomp.t;
    CliffordOp c = embed(circuit, n);
    WeightedStates terms = to_states(decomp);
    for (auto &[w, s] : terms) {
        s.apply_in_place(c);
    }
    ProbabilityEstimate est;
    est.method = opts.method;
    double base = norm_of(terms, opts, rng);
    double prev = base;
    for (const auto &m : paulis) {
        PauliOperator p = embed(m.pauli, n);
        WeightedStates next;
        next.reserve(terms.size());
        for (auto &[w, s] : terms) {
            auto res = s.project_pauli(p, m.outcome);
            if (res) {
                next.emplace_back(w * std::sqrt(res->second), std::move(res->first));
            }
        }
        terms = std::move(next);
        double cur = norm_of(terms, opts, rng);
        est.conditionals.push_back(prev > 0 ? cur / prev : 0.0);
        est.cumulative.push_back(base > 0 ? cur / base : 0.0);
        prev = cur;
    }
    est.raw = est.cumulative.empty() ? 1.0 : est.cumulative.back();
    est.value = std::clamp(est.raw, 0.0, 1.0);
    est.clamped = est.value != est.raw;
    return est;
}

std::vector<double> dense_pauli_prob(const Amplitudes &state, size_t num_qubits, const CliffordOp &circuit,
                                     const std::vector<PauliMeasurement> &paulis) {
    DenseState d(num_qubits, state);
    d.apply(embed(circuit, num_qubits));
    double base = d.squared_norm();
    std::vector<double> out;
    for (const auto &m : paulis) {
        d.project(embed(m.pauli, num_qubits), m.outcome);
        out.push_back(base > 0 ? d.squared_norm() / base : 0.0);
    }
    return out;
}

}  // namespace corrsim
