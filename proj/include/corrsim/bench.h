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

#ifndef CORRSIM_BENCH_H
#define CORRSIM_BENCH_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "corrsim/cost.h"
#include "corrsim/estimator.h"
#include "corrsim/magic.h"
#include "corrsim/masks.h"

namespace corrsim {

// Argument parsing helpers shared by the command-line tool.

/// "0.785", "pi", "pi/4", "3pi/8", "3*pi/8".
double parse_angle(const std::string &text);
/// "4,8,16", "1..200" (inclusive) or "32..16384:x2" (geometric).
std::vector<size_t> parse_size_list(const std::string &text);
/// "0.24,0.2" or "0.3..0.001" with `steps` log-spaced points.
std::vector<double> parse_real_list(const std::string &text, size_t steps);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Everything needed to draw one decomposition for (phi, t, delta, mode).
struct SamplingPlan {
    MagicModel model;
    MaskSet masks;
    SamplingMode mode = SamplingMode::IID;
    size_t f_t = 0;
    size_t k = 0;
    double gamma = 1.0;
    std::string supplement;
    std::vector<std::string> notes;
};

/// IID: k = ceil((xi - 1) / delta^2). THEOREM1: f_t minimizing the grouped
/// count. THEOREM2: f_t = round(10 delta xi), k from the correlated cubic; if
/// more masks are needed than t supports, the model is built on the padded
/// block length. EXACT: the complete expansion.
SamplingPlan make_sampling_plan(double phi, size_t t, double delta, SamplingMode mode,
                                std::optional<size_t> f_override = {}, std::optional<size_t> k_override = {});
SparseDecomposition draw(const SamplingPlan &plan, Rng &rng, uint64_t seed = 0);

/// Stream for trial `trial` of cell `cell` under a master seed.
Rng trial_stream(uint64_t seed, uint64_t cell, uint64_t trial, uint64_t sub = 0);

struct SparsifyStatsOptions {
    double phi = 0.7853981633974483;
    std::vector<size_t> ts = {8};
    std::vector<double> deltas = {0.4};
    std::vector<SamplingMode> modes = {SamplingMode::IID, SamplingMode::THEOREM1};
    size_t trials = 1000;
    uint64_t seed = 1;
    size_t threads = 1;
};
/// Trial rows: experiment,mode,phi,t,delta,k,f_t,trial,seed,sqnorm,err2,converged,wall_ns.
/// Summary rows (optional): one per (t, delta, mode) cell.
void run_sparsify_stats(const SparsifyStatsOptions &opts, std::ostream &trials_csv, std::ostream *summary_csv);

struct WorstCaseOptions {
    double phi = 0.7853981633974483;
    std::vector<size_t> ts = {4, 8, 16};
    std::vector<double> deltas = {0.24, 0.2, 0.15};
    /// Modes: "sota" (i.i.d. with (2+sqrt2) xi / delta terms), "iid", "theorem1",
    /// "theorem2", "exact".
    std::vector<std::string> modes = {"sota", "theorem1", "theorem2"};
    size_t cliffords = 1000;
    size_t trials = 200;
    uint64_t seed = 1;
    size_t threads = 1;
    NormOptions norm;
};
/// One row per (cell, mode, trial): single-marginal, conditional and joint
/// probability errors against the dense truth (t <= kDenseVectorCap).
void run_worst_case(const WorstCaseOptions &opts, std::ostream &trials_csv, std::ostream *summary_csv);

/// Random word of `length` gates drawn uniformly from H, S and CX.
CliffordOp random_gate_word(size_t n, size_t length, Rng &rng);
/// Uniform non-identity Hermitian Pauli with sign +1.
PauliOperator random_nontrivial_pauli(size_t n, Rng &rng);

struct MaskTimingOptions {
    std::vector<size_t> ts = {32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
    size_t repeats = 3;
};
/// Rows: experiment,t,masks,min_weight,wall_ns,ns_per_mask.
void run_mask_timing(const MaskTimingOptions &opts, std::ostream &csv);
/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

struct CostMapOptions {
    double phi = 0.7853981633974483;
    std::vector<size_t> ts = {8};
    std::vector<double> deltas = {0.1};
    double chi_exponent = kDefaultChiExponent;
    bool known_chi = false;
    size_t threads = 1;
};
/// One row per (t, delta) with every CostPoint field.
void run_cost_map(const CostMapOptions &opts, std::ostream &csv);
std::string cost_point_json(const CostPoint &p);

}  // namespace corrsim

#endif
