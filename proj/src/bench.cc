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

#include "corrsim/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "corrsim/parallel.h"
#include "json.hpp"

namespace corrsim {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

double parse_number(const std::string &s) {
    std::string t = trim(s);
    double v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw std::invalid_argument("invalid number '" + s + "'");
    }
    return v;
}

size_t parse_count(const std::string &s) {
    std::string t = trim(s);
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw std::invalid_argument("invalid count '" + s + "'");
    }
    return v;
}

int64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
}

std::string join(const std::vector<std::string> &cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); i++) {
        if (i) out += ',';
        out += cells[i];
    }
    return out + "\n";
}

std::string fmt(size_t v) { return std::to_string(v); }
std::string fmt(double v) { return format_double(v); }
std::string fmt_bool(bool v) { return v ? "1" : "0"; }

double quantile(std::vector<double> v, double q) {
    if (v.empty()) return std::nan("");
    std::sort(v.begin(), v.end());
    double pos = q * static_cast<double>(v.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(pos));
    size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

struct Moments {
    double mean = std::nan("");
    double var = std::nan("");
};

Moments moments(const std::vector<double> &v) {
    Moments m;
    if (v.empty()) return m;
    double s = 0;
    for (double x : v) s += x;
    m.mean = s / static_cast<double>(v.size());
    if (v.size() > 1) {
        double q = 0;
        for (double x : v) q += (x - m.mean) * (x - m.mean);
        m.var = q / static_cast<double>(v.size() - 1);
    }
    return m;
}

}  // namespace

double parse_angle(const std::string &text) {
    std::string s = trim(text);
    size_t p = s.find("pi");
    if (p == std::string::npos) return parse_number(s);
    std::string num = trim(s.substr(0, p));
    if (!num.empty() && num.back() == '*') num = trim(num.substr(0, num.size() - 1));
    double a = num.empty() ? 1.0 : (num == "-" ? -1.0 : parse_number(num));
    std::string rest = trim(s.substr(p + 2));
    double b = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/') throw std::invalid_argument("invalid angle '" + text + "'");
        b = parse_number(rest.substr(1));
        if (b == 0) throw std::invalid_argument("invalid angle '" + text + "'");
    }
    return a * 3.141592653589793238462643383279502884 / b;
}

std::vector<size_t> parse_size_list(const std::string &text) {
    std::vector<size_t> out;
    for (const std::string &item : split(text, ',')) {
        if (item.empty()) continue;
        size_t dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_count(item));
            continue;
        }
        std::string hi_part = item.substr(dots + 2);
        std::string step_part;
        size_t colon = hi_part.find(':');
        if (colon != std::string::npos) {
            step_part = hi_part.substr(colon + 1);
            hi_part = hi_part.substr(0, colon);
        }
        size_t lo = parse_count(item.substr(0, dots)), hi = parse_count(hi_part);
        if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
        if (!step_part.empty() && step_part[0] == 'x') {
            size_t factor = parse_count(step_part.substr(1));
            if (factor < 2 || lo == 0) throw std::invalid_argument("invalid geometric range '" + item + "'");
            for (size_t v = lo; v <= hi; v *= factor) out.push_back(v);
        } else {
            size_t step = step_part.empty() ? 1 : parse_count(step_part);
            if (step == 0) throw std::invalid_argument("zero step in '" + item + "'");
            for (size_t v = lo; v <= hi; v += step) out.push_back(v);
        }
    }
    return out;
}

std::vector<double> parse_real_list(const std::string &text, size_t steps) {
    std::vector<double> out;
    for (const std::string &item : split(text, ',')) {
        if (item.empty()) continue;
        size_t dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_number(item));
            continue;
        }
        double a = parse_number(item.substr(0, dots)), b = parse_number(item.substr(dots + 2));
        if (steps <= 1) {
            out.push_back(a);
            continue;
        }
        bool geometric = a > 0 && b > 0;
        for (size_t i = 0; i < steps; i++) {
            double f = static_cast<double>(i) / static_cast<double>(steps - 1);
            out.push_back(geometric ? a * std::pow(b / a, f) : a + (b - a) * f);
        }
    }
    return out;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

SamplingPlan make_sampling_plan(double phi, size_t t, double delta, SamplingMode mode, std::optional<size_t> f_override,
                                std::optional<size_t> k_override) {
    if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
    SamplingPlan plan;
    plan.model = magic_model(phi, t);
    plan.mode = mode;
    const double xi = plan.model.xi_t;
    auto group_round = [](double k, size_t f) {
        double g = static_cast<double>(f + 1);
        return static_cast<size_t>(std::max(g, std::ceil(k / g) * g));
    };
    switch (mode) {
        case SamplingMode::IID: {
            if (f_override && *f_override != 0) throw std::invalid_argument("i.i.d. sampling has no supplements");
            plan.k = xi - 1.0 > 1e-12 ? static_cast<size_t>(std::max(1.0, k_theorem1(xi, delta, 1.0))) : 1;
            plan.supplement = "none";
            break;
        }
        case SamplingMode::THEOREM1: {
            plan.masks = cost_masks(t);
            if (f_override) {
                if (*f_override > plan.masks.masks.size()) {
                    throw std::invalid_argument("f_t = " + std::to_string(*f_override) + " exceeds the " +
                                                std::to_string(plan.masks.masks.size()) + " masks available at t = " +
                                                std::to_string(t));
                }
                plan.f_t = *f_override;
                plan.gamma = gamma_bound(plan.model, plan.masks, plan.f_t);
                plan.k = group_round(k_theorem1(xi, delta, plan.gamma), plan.f_t);
            } else {
                Theorem1Choice c = choose_theorem1(plan.model, plan.masks, delta);
                plan.f_t = c.f_t;
                plan.gamma = c.gamma;
                plan.k = static_cast<size_t>(c.k);
            }
            plan.supplement = plan.masks.strategy_name();
            break;
        }
        case SamplingMode::THEOREM2: {
            plan.f_t = f_override ? *f_override : optimal_f_t(delta, xi);
            plan.masks = cost_masks(t);
            plan.supplement = plan.masks.strategy_name();
            if (plan.f_t > plan.masks.masks.size()) {
                SupplementPlan sp = plan_supplement(t, plan.f_t);
                plan.masks = masks_for_plan(t, sp);
                plan.supplement = sp.name();
                if (plan.masks.block_length != t) {
                    plan.model = magic_model(phi, plan.masks.block_length);
                    plan.notes.push_back("padded to " + std::to_string(plan.masks.block_length) +
                                         " magic-state qubits to supply " + std::to_string(plan.f_t) + " masks");
                }
            }
            plan.gamma = gamma_bound(plan.model, plan.masks, plan.f_t);
            plan.k = static_cast<size_t>(k_correlated(plan.model.xi_t, delta, plan.f_t));
            break;
        }
        case SamplingMode::EXACT: {
            if (t > DenseState::kMaxQubits) {
                throw std::invalid_argument("exact expansion limited to " + std::to_string(DenseState::kMaxQubits) +
                                            " qubits");
            }
            plan.k = size_t{1} << t;
            plan.supplement = "complete";
            break;
        }
    }
    if (k_override) {
        if (*k_override == 0) throw std::invalid_argument("k must be positive");
        if (mode == SamplingMode::EXACT) throw std::invalid_argument("the exact expansion has a fixed term count");
        plan.k = group_round(static_cast<double>(*k_override), plan.f_t);
    }
    return plan;
}

SparseDecomposition draw(const SamplingPlan &plan, Rng &rng, uint64_t seed) {
    SparseDecomposition d;
    switch (plan.mode) {
        case SamplingMode::IID:
            d = sample_iid(plan.model, plan.k, rng);
            break;
        case SamplingMode::THEOREM1:
        case SamplingMode::THEOREM2:
            d = sample_correlated(plan.model, plan.masks, plan.f_t, plan.k, plan.mode, rng);
            break;
        case SamplingMode::EXACT:
            d = complete_decomposition(plan.model);
            break;
    }
    d.seed = seed;
    for (const auto &n : plan.notes) d.warnings.push_back(n);
    return d;
}

Rng trial_stream(uint64_t seed, uint64_t cell, uint64_t trial, uint64_t sub) {
    uint64_t base = splitmix64(seed ^ splitmix64(cell * 0x9e3779b97f4a7c15ULL + sub));
    return derive_stream(base, trial);
}

void run_sparsify_stats(const SparsifyStatsOptions &opts, std::ostream &trials_csv, std::ostream *summary_csv) {
    trials_csv << "experiment,mode,phi,t,delta,k,f_t,trial,seed,sqnorm,err2,converged,wall_ns\n";
    if (summary_csv) {
        *summary_csv << "experiment,mode,phi,t,delta,k,f_t,gamma,trials,seed,sqnorm_mean,sqnorm_var,err2_mean,"
                        "err2_ci95,converged_frac\n";
    }
    struct Cell {
        size_t t;
        double delta;
        SamplingMode mode;
        SamplingPlan plan;
    };
    std::vector<Cell> cells;
    for (size_t t : opts.ts) {
        for (double delta : opts.deltas) {
            for (SamplingMode mode : opts.modes) {
                cells.push_back({t, delta, mode, make_sampling_plan(opts.phi, t, delta, mode)});
            }
        }
    }
    struct Row {
        double sqnorm = 0;
        double err2 = std::nan("");
        int64_t ns = 0;
    };
    const size_t n = cells.size() * opts.trials;
    std::vector<Row> rows(n);
    parallel_for(n, opts.threads, [&](size_t idx) {
        const Cell &c = cells[idx / opts.trials];
        size_t trial = idx % opts.trials;
        auto start = std::chrono::steady_clock::now();
        Rng rng = trial_stream(opts.seed, idx / opts.trials, trial);
        SparseDecomposition d = draw(c.plan, rng, opts.seed);
        Row r;
        r.sqnorm = exact_sqnorm(d).value;
        if (c.plan.model.t <= kDenseVectorCap) {
            double e = approx_error(d, c.plan.model);
            r.err2 = e * e;
        }
        r.ns = elapsed_ns(start);
        rows[idx] = r;
    });
    for (size_t ci = 0; ci < cells.size(); ci++) {
        const Cell &c = cells[ci];
        std::vector<double> norms, errs;
        size_t converged = 0;
        for (size_t trial = 0; trial < opts.trials; trial++) {
            const Row &r = rows[ci * opts.trials + trial];
            bool has_err = !std::isnan(r.err2);
            bool ok = has_err && r.err2 <= c.delta * c.delta;
            converged += ok;
            norms.push_back(r.sqnorm);
            if (has_err) errs.push_back(r.err2);
            trials_csv << join({"sparsify-stats", mode_name(c.mode), fmt(opts.phi), fmt(c.t), fmt(c.delta),
                                fmt(c.plan.k), fmt(c.plan.f_t), fmt(trial), std::to_string(opts.seed),
                                fmt(r.sqnorm), has_err ? fmt(r.err2) : "", has_err ? fmt_bool(ok) : "",
                                std::to_string(r.ns)});
        }
        if (summary_csv) {
            Moments mn = moments(norms), me = moments(errs);
            double ci95 = errs.size() > 1 ? 1.96 * std::sqrt(me.var / static_cast<double>(errs.size())) : std::nan("");
            double frac = errs.empty() ? std::nan("") : static_cast<double>(converged) / static_cast<double>(errs.size());
            *summary_csv << join({"sparsify-stats", mode_name(c.mode), fmt(opts.phi), fmt(c.t), fmt(c.delta),
                                  fmt(c.plan.k), fmt(c.plan.f_t), fmt(c.plan.gamma), fmt(opts.trials),
                                  std::to_string(opts.seed), fmt(mn.mean), fmt(mn.var), fmt(me.mean), fmt(ci95),
                                  fmt(frac)});
        }
    }
}

CliffordOp random_gate_word(size_t n, size_t length, Rng &rng) {
    CliffordOp op(n);
    for (size_t i = 0; i < length; i++) {
        uint64_t kind = n > 1 ? uniform_below(rng, 3) : uniform_below(rng, 2);
        uint32_t a = static_cast<uint32_t>(uniform_below(rng, n));
        if (kind == 0) {
            op.append(Gate{GateType::H, a});
        } else if (kind == 1) {
            op.append(Gate{GateType::S, a});
        } else {
            uint32_t b = static_cast<uint32_t>(uniform_below(rng, n - 1));
            if (b >= a) b++;
            op.append(Gate{GateType::CX, a, b});
        }
    }
    return op;
}

PauliOperator random_nontrivial_pauli(size_t n, Rng &rng) {
    PauliOperator p(n);
    do {
        for (size_t q = 0; q < n; q++) {
            uint64_t b = uniform_below(rng, 4);
            p.x.set(q, b & 1);
            p.z.set(q, b >> 1);
        }
    } while (p.is_identity());
    return p;
}

namespace {

SamplingPlan worst_case_plan(double phi, size_t t, double delta, const std::string &mode) {
    if (mode == "sota") {
        MagicModel m = magic_model(phi, t);
        return make_sampling_plan(phi, t, delta, SamplingMode::IID, {},
                                  static_cast<size_t>(k_sota(m.xi_t, delta)));
    }
    return make_sampling_plan(phi, t, delta, mode_from_name(mode));
}

}  // namespace

void run_worst_case(const WorstCaseOptions &opts, std::ostream &trials_csv, std::ostream *summary_csv) {
    trials_csv << "experiment,mode,phi,t,delta,k,f_t,trial,seed,p1_est,p12_est,p1_true,p12_true,err_marginal1,"
                  "err_marginal2,err_combined,clamped,wall_ns\n";
    if (summary_csv) {
        *summary_csv << "experiment,mode,phi,t,delta,k,f_t,gamma,trials,seed,err_combined_max,err_combined_mean,"
                        "err_combined_q50,err_combined_q90,err_combined_q99,err_marginal1_max,err_marginal2_max,"
                        "frac_within_delta,tail_bound\n";
    }
    struct Cell {
        size_t t;
        double delta;
        size_t instance_cell;
        std::string mode;
        SamplingPlan plan;
    };
    std::vector<Cell> cells;
    size_t instance_cell = 0;
    for (size_t t : opts.ts) {
        for (double delta : opts.deltas) {
            for (const auto &mode : opts.modes) {
                cells.push_back({t, delta, instance_cell, mode, worst_case_plan(opts.phi, t, delta, mode)});
            }
            instance_cell++;
        }
    }
    struct Row {
        double p1 = 0, p12 = 0, p1_true = std::nan(""), p12_true = std::nan("");
        double e1 = std::nan(""), e2 = std::nan(""), e12 = std::nan("");
        bool clamped = false;
        int64_t ns = 0;
    };
    const size_t n = cells.size() * opts.trials;
    std::vector<Row> rows(n);
    parallel_for(n, opts.threads, [&](size_t idx) {
        const Cell &c = cells[idx / opts.trials];
        size_t trial = idx % opts.trials;
        size_t mode_index = (idx / opts.trials) % opts.modes.size();
        auto start = std::chrono::steady_clock::now();
        // The instance depends only on (t, delta, trial), shared by all modes.
        Rng inst = trial_stream(opts.seed, c.instance_cell, trial, 0);
        CliffordOp circuit = random_gate_word(c.t, opts.cliffords, inst);
        std::vector<PauliMeasurement> ms(2);
        for (auto &m : ms) {
            m.pauli = random_nontrivial_pauli(c.t, inst);
            m.outcome = uniform_below(inst, 2) ? 1 : -1;
        }
        Rng rng = trial_stream(opts.seed, c.instance_cell, trial, 1 + mode_index);
        SparseDecomposition d = draw(c.plan, rng, opts.seed);
        ProbabilityEstimate est = pauli_prob(d, circuit, ms, opts.norm, rng);
        Row r;
        r.p1 = std::clamp(est.cumulative[0], 0.0, 1.0);
        r.p12 = est.value;
        r.clamped = est.clamped || r.p1 != est.cumulative[0];
        if (c.t <= kDenseVectorCap) {
            std::vector<double> truth = dense_pauli_prob(magic_model(opts.phi, c.t).target_dense(), c.t, circuit, ms);
            r.p1_true = truth[0];
            r.p12_true = truth[1];
            auto cond = [](double joint, double first) { return first > 0 ? std::clamp(joint / first, 0.0, 1.0) : 0.0; };
            r.e1 = std::abs(r.p1 - r.p1_true);
            r.e2 = std::abs(cond(r.p12, r.p1) - cond(r.p12_true, r.p1_true));
            r.e12 = std::abs(r.p12 - r.p12_true);
        }
        r.ns = elapsed_ns(start);
        rows[idx] = r;
    });
    auto opt = [](double v) { return std::isnan(v) ? std::string() : fmt(v); };
    for (size_t ci = 0; ci < cells.size(); ci++) {
        const Cell &c = cells[ci];
        std::vector<double> e12, e1, e2;
        size_t within = 0;
        for (size_t trial = 0; trial < opts.trials; trial++) {
            const Row &r = rows[ci * opts.trials + trial];
            if (!std::isnan(r.e12)) {
                e12.push_back(r.e12);
                e1.push_back(r.e1);
                e2.push_back(r.e2);
                within += r.e12 <= c.delta;
            }
            trials_csv << join({"worst-case", c.mode, fmt(opts.phi), fmt(c.t), fmt(c.delta), fmt(c.plan.k),
                                fmt(c.plan.f_t), fmt(trial), std::to_string(opts.seed), fmt(r.p1), fmt(r.p12),
                                opt(r.p1_true), opt(r.p12_true), opt(r.e1), opt(r.e2), opt(r.e12),
                                fmt_bool(r.clamped), std::to_string(r.ns)});
        }
        if (summary_csv) {
            double mx = e12.empty() ? std::nan("") : *std::max_element(e12.begin(), e12.end());
            double m1 = e1.empty() ? std::nan("") : *std::max_element(e1.begin(), e1.end());
            double m2 = e2.empty() ? std::nan("") : *std::max_element(e2.begin(), e2.end());
            double frac = e12.empty() ? std::nan("") : static_cast<double>(within) / static_cast<double>(e12.size());
            double tb = c.plan.gamma < c.plan.model.xi_t ? tail_bound(c.plan.model.xi_t, c.delta, c.plan.gamma) : 0.0;
            *summary_csv << join({"worst-case", c.mode, fmt(opts.phi), fmt(c.t), fmt(c.delta), fmt(c.plan.k),
                                  fmt(c.plan.f_t), fmt(c.plan.gamma), fmt(opts.trials), std::to_string(opts.seed),
                                  opt(mx), opt(moments(e12).mean), opt(quantile(e12, 0.5)), opt(quantile(e12, 0.9)),
                                  opt(quantile(e12, 0.99)), opt(m1), opt(m2), opt(frac), fmt(tb)});
        }
    }
}

void run_mask_timing(const MaskTimingOptions &opts, std::ostream &csv) {
    csv << "experiment,t,masks,min_weight,wall_ns,ns_per_mask\n";
    for (size_t t : opts.ts) {
        int64_t best = -1;
        MaskSet set;
        for (size_t r = 0; r < std::max<size_t>(1, opts.repeats); r++) {
            auto start = std::chrono::steady_clock::now();
            set = generate_masks_pow2(t);
            int64_t ns = elapsed_ns(start);
            if (best < 0 || ns < best) best = ns;
        }
        size_t min_weight = t;
        for (const auto &m : set.masks) min_weight = std::min(min_weight, m.popcount());
        double per = set.masks.empty() ? 0.0 : static_cast<double>(best) / static_cast<double>(set.masks.size());
        csv << join({"mask-timing", fmt(t), fmt(set.masks.size()), fmt(min_weight), std::to_string(best), fmt(per)});
    }
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs two or more points");
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); i++) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

namespace {

std::vector<std::string> cost_cells(const CostPoint &p) {
    const RegimeResult &r = p.regime;
    return {fmt(p.t),
            fmt(p.delta),
            fmt(p.xi_t),
            fmt(p.chi_t),
            fmt(p.k_iid_quadratic),
            fmt(p.k_sota),
            fmt(p.k_iid_tight),
            fmt(p.k_theorem1),
            fmt(p.f_t_theorem1),
            fmt(p.gamma),
            fmt(p.k_correlated),
            fmt(p.f_t),
            fmt(p.beta),
            fmt_bool(r.strong_fewer_states),
            fmt_bool(r.exact_fewer_states),
            fmt_bool(r.strong_lower_cost),
            fmt_bool(r.exact_lower_cost),
            regime_name(r.cheapest),
            fmt(p.k_sota / p.k_correlated)};
}

}  // namespace

void run_cost_map(const CostMapOptions &opts, std::ostream &csv) {
    csv << "t,delta,xi_t,chi_t,k_iid_quadratic,k_sota,k_iid_tight,k_theorem1,f_t_theorem1,gamma,k_correlated,f_t,"
           "beta,strong_fewer_states,exact_fewer_states,strong_lower_cost,exact_lower_cost,cheapest_regime,"
           "sota_over_correlated\n";
    ChiTable known = known_chi_table();
    const ChiTable *table = opts.known_chi ? &known : nullptr;
    std::vector<std::string> blocks(opts.ts.size());
    parallel_for(opts.ts.size(), opts.threads, [&](size_t i) {
        size_t t = opts.ts[i];
        MaskSet masks = cost_masks(t);
        std::string out;
        for (double delta : opts.deltas) {
            out += join(cost_cells(cost_point(t, delta, opts.phi, masks, opts.chi_exponent, table)));
        }
        blocks[i] = std::move(out);
    });
    for (const auto &b : blocks) csv << b;
}

std::string cost_point_json(const CostPoint &p) {
    nlohmann::json j;
    j["t"] = p.t;
    j["delta"] = p.delta;
    j["xi_t"] = p.xi_t;
    j["chi_t"] = p.chi_t;
    j["k_iid_quadratic"] = p.k_iid_quadratic;
    j["k_sota"] = p.k_sota;
    j["k_iid_tight"] = p.k_iid_tight;
    j["k_theorem1"] = p.k_theorem1;
    j["f_t_theorem1"] = p.f_t_theorem1;
    j["gamma"] = p.gamma;
    j["k_correlated"] = p.k_correlated;
    j["f_t"] = p.f_t;
    j["beta"] = p.beta;
    j["strong_fewer_states"] = p.regime.strong_fewer_states;
    j["exact_fewer_states"] = p.regime.exact_fewer_states;
    j["strong_lower_cost"] = p.regime.strong_lower_cost;
    j["exact_lower_cost"] = p.regime.exact_lower_cost;
    j["cheapest_regime"] = regime_name(p.regime.cheapest);
    j["correlated_constant"] = kCorrelatedConstant;
    j["correlated_constant_rounded"] = kCorrelatedConstantRounded;
    return j.dump(2) + "\n";
}

}  // namespace corrsim
