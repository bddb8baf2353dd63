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

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "corrsim/bench.h"
#include "corrsim/cost.h"
#include "corrsim/estimator.h"
#include "corrsim/io.h"
#include "corrsim/masks.h"
#include "json.hpp"

using namespace corrsim;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    uint64_t seed = 1;
    size_t threads = 1;
    std::string out;
    bool json = false;
    bool csv = false;
};

// Argument conversions report failures as usage errors.
template <class F>
auto usage(F &&f) {
    try {
        return f();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

double checked_phi(const std::string &text) {
    double phi = usage([&] { return parse_angle(text); });
    if (!(phi > 0) || phi > std::numbers::pi / 2 + 1e-12) throw UsageError("--phi must lie in (0, pi/2]");
    return phi;
}

void check_delta(double delta) {
    if (!(delta > 0) || delta > 1) throw UsageError("--delta values must lie in (0, 1]");
}

void check_t(size_t t) {
    if (t == 0) throw UsageError("--t values must be at least 1");
}

SamplingMode checked_mode(const std::string &name) {
    return usage([&] { return mode_from_name(name); });
}

// Writes to --out when given, else stdout.
void emit(const Globals &g, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        write_file(g.out, text);
    }
}

std::unique_ptr<std::ostream> open_or_null(const std::string &path) {
    if (path.empty()) return nullptr;
    auto f = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*f) throw std::runtime_error("cannot write '" + path + "'");
    return f;
}

struct Sink {
    std::ostringstream buffer;
    void flush(const Globals &g) { emit(g, buffer.str()); }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Correlated sampling of sparse stabilizer decompositions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Master RNG seed");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Output file (default stdout)");
    app.add_flag("--json", g.json, "JSON output where supported");
    app.add_flag("--csv", g.csv, "CSV output where supported");
    app.fallthrough();

    // gen-masks
    auto *gen = app.add_subcommand("gen-masks", "Generate XOR masks of pairwise distance >= t/2");
    size_t gm_t = 0;
    std::optional<size_t> gm_count;
    gen->add_option("--t", gm_t, "Block length")->required();
    gen->add_option("--count", gm_count, "Number of masks required (selects padded generation when needed)");

    // sparsify
    auto *sp = app.add_subcommand("sparsify", "Sample a sparse decomposition of the magic-state tensor power");
    std::string sp_phi = "pi/4", sp_mode = "theorem1";
    size_t sp_t = 0;
    double sp_delta = 0;
    std::optional<size_t> sp_ft, sp_k;
    sp->add_option("--phi", sp_phi, "Angle in radians or as 'pi/4'")->capture_default_str();
    sp->add_option("--t", sp_t, "Number of magic states")->required();
    sp->add_option("--delta", sp_delta, "Target additive error")->required();
    sp->add_option("--mode", sp_mode, "iid | theorem1 | theorem2 | exact")->capture_default_str();
    sp->add_option("--ft", sp_ft, "Override the number of supplements per seed");
    sp->add_option("--k", sp_k, "Override the term count (rounded up to whole groups)");

    // estimate
    auto *est = app.add_subcommand("estimate", "Estimate Pauli-measurement probabilities from a decomposition");
    std::string es_decomp, es_circuit, es_paulis, es_method = "exact";
    size_t es_samples = 1000;
    est->add_option("--decomp", es_decomp, "Decomposition JSON")->required();
    est->add_option("--circuit", es_circuit, "Circuit JSON (default: identity)");
    est->add_option("--paulis", es_paulis, "Measurements, e.g. 'ZIII,+;XXII,-'")->required();
    est->add_option("--method", es_method, "exact | fastnorm")->capture_default_str();
    est->add_option("--fastnorm-samples", es_samples, "Random stabilizer states per FASTNORM call")
        ->capture_default_str();

    // cost (also available as bench cost-map)
    std::string c_phi = "pi/4", c_t = "8", c_delta = "0.1";
    size_t c_steps = 30;
    double c_chi_exp = kDefaultChiExponent;
    bool c_known = false;
    auto add_cost_options = [&](CLI::App *cmd) {
        cmd->add_option("--phi", c_phi, "Angle in radians or as 'pi/4'")->capture_default_str();
        cmd->add_option("--t", c_t, "t values: '8', '4,8,16' or '1..200'")->capture_default_str();
        cmd->add_option("--delta", c_delta, "delta values: '0.1', '0.24,0.2' or '0.3..0.001'")
            ->capture_default_str();
        cmd->add_option("--delta-steps", c_steps, "Log-spaced points for a delta range")->capture_default_str();
        cmd->add_option("--chi-exponent", c_chi_exp, "chi_t = 2^{exponent t}")->capture_default_str();
        cmd->add_flag("--known-chi", c_known, "Use chi_4 = 4, chi_8 = 12, chi_16 = 108");
    };
    auto *cost = app.add_subcommand("cost", "Sample counts and simulation-regime map");
    add_cost_options(cost);

    // bench
    auto *bench = app.add_subcommand("bench", "Statistical experiments");
    bench->require_subcommand(1);
    bench->fallthrough();
    std::string b_phi = "pi/4", b_t, b_delta, b_modes, b_summary, b_method = "exact";
    size_t b_trials = 0, b_cliffords = 1000, b_samples = 1000, b_repeats = 3;
    auto *bs = bench->add_subcommand("sparsify-stats", "Norm and error statistics of sampled decompositions");
    b_t = "8";
    b_delta = "0.4";
    bs->add_option("--phi", b_phi, "Angle")->capture_default_str();
    bs->add_option("--t", b_t, "t values")->capture_default_str();
    bs->add_option("--delta", b_delta, "delta values")->capture_default_str();
    bs->add_option("--modes", b_modes, "Comma-separated modes (default iid,theorem1)");
    bs->add_option("--trials", b_trials, "Trials per cell (default 1000)");
    bs->add_option("--summary", b_summary, "Per-cell summary CSV");
    bs->fallthrough();
    auto *bw = bench->add_subcommand("worst-case", "Probability errors after random Clifford circuits");
    bw->add_option("--phi", b_phi, "Angle")->capture_default_str();
    bw->add_option("--t", b_t, "t values (default 4,8,16)");
    bw->add_option("--delta", b_delta, "delta values (default 0.24,0.2,0.15)");
    bw->add_option("--modes", b_modes, "Comma-separated: sota, iid, theorem1, theorem2, exact");
    bw->add_option("--cliffords", b_cliffords, "Gates per random circuit")->capture_default_str();
    bw->add_option("--trials", b_trials, "Trials per cell (default 200)");
    bw->add_option("--method", b_method, "exact | fastnorm")->capture_default_str();
    bw->add_option("--fastnorm-samples", b_samples, "Samples per FASTNORM call")->capture_default_str();
    bw->add_option("--summary", b_summary, "Per-cell summary CSV");
    bw->fallthrough();
    auto *bm = bench->add_subcommand("mask-timing", "Mask generation time against t");
    bm->add_option("--t", b_t, "t values (default 32..16384:x2)");
    bm->add_option("--repeats", b_repeats, "Repetitions per t (minimum time kept)")->capture_default_str();
    bm->fallthrough();
    auto *bc = bench->add_subcommand("cost-map", "Regime grid over (t, delta)");
    add_cost_options(bc);
    bc->fallthrough();

    app.footer(
        "CSV schemas:\n"
        "  sparsify-stats: experiment,mode,phi,t,delta,k,f_t,trial,seed,sqnorm,err2,converged,wall_ns\n"
        "  worst-case: experiment,mode,phi,t,delta,k,f_t,trial,seed,p1_est,p12_est,p1_true,p12_true,\n"
        "              err_marginal1,err_marginal2,err_combined,clamped,wall_ns\n"
        "  mask-timing: experiment,t,masks,min_weight,wall_ns,ns_per_mask\n"
        "  cost / cost-map: t,delta,xi_t,chi_t,k_iid_quadratic,k_sota,k_iid_tight,k_theorem1,f_t_theorem1,\n"
        "              gamma,k_correlated,f_t,beta,strong_fewer_states,exact_fewer_states,strong_lower_cost,\n"
        "              exact_lower_cost,cheapest_regime,sota_over_correlated\n"
        "Exit codes: 0 success, 2 invalid arguments, 3 precondition failure.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) {
            check_t(gm_t);
            MaskSet set;
            if (gm_count) {
                SupplementPlan plan = plan_supplement(gm_t, *gm_count);
                set = masks_for_plan(gm_t, plan);
                if (set.masks.size() < *gm_count) {
                    throw std::invalid_argument("no direct construction supplies " + std::to_string(*gm_count) +
                                                " masks at t = " + std::to_string(gm_t));
                }
                set.masks.resize(*gm_count);
            } else if ((gm_t & (gm_t - 1)) == 0 && gm_t >= 2) {
                set = generate_masks_pow2(gm_t);
            } else if (gm_t % 2 == 0) {
                set = generate_masks_even(gm_t);
            } else {
                throw std::invalid_argument("odd t needs --count to select padded generation");
            }
            emit(g, masks_to_json(set));
        } else if (*sp) {
            double phi = checked_phi(sp_phi);
            check_t(sp_t);
            check_delta(sp_delta);
            SamplingMode mode = checked_mode(sp_mode);
            SamplingPlan plan = make_sampling_plan(phi, sp_t, sp_delta, mode, sp_ft, sp_k);
            Rng rng = derive_stream(g.seed, 0);
            SparseDecomposition d = draw(plan, rng, g.seed);
            for (const auto &w : d.warnings) std::cerr << "warning: " << w << "\n";
            emit(g, decomposition_to_json(d));
        } else if (*est) {
            SparseDecomposition d = decomposition_from_json(read_file(es_decomp));
            CliffordOp circuit = es_circuit.empty() ? CliffordOp(d.t) : circuit_from_json(read_file(es_circuit));
            auto ms = usage([&] { return parse_measurements(es_paulis); });
            NormOptions opts;
            opts.method = usage([&] { return norm_method_from_name(es_method); });
            opts.fastnorm_samples = es_samples;
            opts.threads = g.threads;
            Rng rng = derive_stream(g.seed, 0);
            ProbabilityEstimate p = pauli_prob(d, circuit, ms, opts, rng);
            if (g.json) {
                nlohmann::json j;
                j["value"] = p.value;
                j["raw"] = p.raw;
                j["clamped"] = p.clamped;
                j["conditionals"] = p.conditionals;
                j["cumulative"] = p.cumulative;
                j["method"] = norm_method_name(p.method);
                j["paulis"] = es_paulis;
                j["circuit"] = es_circuit.empty() ? "identity" : es_circuit;
                j["decomposition"] = es_decomp;
                j["seed"] = g.seed;
                emit(g, j.dump(2) + "\n");
            } else {
                emit(g, "probability," + format_double(p.value) + "\nraw," + format_double(p.raw) + "\n");
            }
        } else if (*cost || (*bench && *bc)) {
            CostMapOptions o;
            o.phi = checked_phi(c_phi);
            o.ts = usage([&] { return parse_size_list(c_t); });
            o.deltas = usage([&] { return parse_real_list(c_delta, c_steps); });
            for (size_t t : o.ts) check_t(t);
            for (double d : o.deltas) check_delta(d);
            o.chi_exponent = c_chi_exp;
            o.known_chi = c_known;
            o.threads = g.threads;
            if (g.json && o.ts.size() == 1 && o.deltas.size() == 1) {
                ChiTable known = known_chi_table();
                CostPoint p = cost_point(o.ts[0], o.deltas[0], o.phi, cost_masks(o.ts[0]), o.chi_exponent,
                                         o.known_chi ? &known : nullptr);
                emit(g, cost_point_json(p));
            } else {
                Sink s;
                run_cost_map(o, s.buffer);
                s.flush(g);
            }
        } else if (*bench && *bs) {
            SparsifyStatsOptions o;
            o.phi = checked_phi(b_phi);
            o.ts = usage([&] { return parse_size_list(b_t); });
            o.deltas = usage([&] { return parse_real_list(b_delta, 1); });
            for (size_t t : o.ts) check_t(t);
            for (double d : o.deltas) check_delta(d);
            if (!b_modes.empty()) {
                o.modes.clear();
                for (const auto &name : usage([&] {
                         std::vector<std::string> v;
                         std::stringstream ss(b_modes);
                         for (std::string m; std::getline(ss, m, ',');) v.push_back(m);
                         return v;
                     })) {
                    o.modes.push_back(checked_mode(name));
                }
            }
            o.trials = bs->count("--trials") ? b_trials : 1000;
            o.seed = g.seed;
            o.threads = g.threads;
            auto summary = open_or_null(b_summary);
            Sink s;
            run_sparsify_stats(o, s.buffer, summary.get());
            s.flush(g);
        } else if (*bench && *bw) {
            WorstCaseOptions o;
            o.phi = checked_phi(b_phi);
            if (bw->count("--t")) o.ts = usage([&] { return parse_size_list(b_t); });
            if (bw->count("--delta")) o.deltas = usage([&] { return parse_real_list(b_delta, 1); });
            for (size_t t : o.ts) check_t(t);
            for (double d : o.deltas) check_delta(d);
            if (!b_modes.empty()) {
                o.modes.clear();
                std::stringstream ss(b_modes);
                for (std::string m; std::getline(ss, m, ',');) {
                    if (m != "sota") checked_mode(m);
                    o.modes.push_back(m);
                }
            }
            o.cliffords = b_cliffords;
            o.trials = bw->count("--trials") ? b_trials : 200;
            o.seed = g.seed;
            o.threads = g.threads;
            o.norm.method = usage([&] { return norm_method_from_name(b_method); });
            o.norm.fastnorm_samples = b_samples;
            auto summary = open_or_null(b_summary);
            Sink s;
            run_worst_case(o, s.buffer, summary.get());
            s.flush(g);
        } else if (*bench && *bm) {
            MaskTimingOptions o;
            if (bm->count("--t")) o.ts = usage([&] { return parse_size_list(b_t); });
            for (size_t t : o.ts) {
                if (t < 2 || (t & (t - 1)) != 0) throw UsageError("mask-timing needs power-of-two t values");
            }
            o.repeats = b_repeats;
            Sink s;
            run_mask_timing(o, s.buffer);
            s.flush(g);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
