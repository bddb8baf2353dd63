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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "corrsim/bench.h"
#include "corrsim/cost.h"
#include "corrsim/estimator.h"
#include "corrsim/io.h"
#include "corrsim/magic.h"
#include "corrsim/masks.h"

namespace py = pybind11;
using namespace corrsim;

namespace {

std::string gen_masks_json(size_t t, std::optional<size_t> count) {
    if (count) {
        MaskSet set = masks_for_plan(t, plan_supplement(t, *count));
        if (set.masks.size() < *count) {
            throw std::invalid_argument("no direct construction supplies the requested masks");
        }
        set.masks.resize(*count);
        return masks_to_json(set);
    }
    if (t >= 2 && (t & (t - 1)) == 0) return masks_to_json(generate_masks_pow2(t));
    return masks_to_json(generate_masks_even(t));
}

std::string sparsify_json(size_t t, double delta, double phi, const std::string &mode, uint64_t seed,
                          std::optional<size_t> f_t, std::optional<size_t> k) {
    SamplingPlan plan = make_sampling_plan(phi, t, delta, mode_from_name(mode), f_t, k);
    Rng rng = derive_stream(seed, 0);
    return decomposition_to_json(draw(plan, rng, seed));
}

py::dict estimate(const std::string &decomp_json, const std::string &paulis, const std::string &circuit_json,
                  const std::string &method, size_t fastnorm_samples, uint64_t seed, size_t threads) {
    SparseDecomposition d = decomposition_from_json(decomp_json);
    CliffordOp circuit = circuit_json.empty() ? CliffordOp(d.t) : circuit_from_json(circuit_json);
    NormOptions opts;
    opts.method = norm_method_from_name(method);
    opts.fastnorm_samples = fastnorm_samples;
    opts.threads = threads;
    Rng rng = derive_stream(seed, 0);
    ProbabilityEstimate p = pauli_prob(d, circuit, parse_measurements(paulis), opts, rng);
    py::dict out;
    out["value"] = p.value;
    out["raw"] = p.raw;
    out["clamped"] = p.clamped;
    out["conditionals"] = p.conditionals;
    out["cumulative"] = p.cumulative;
    out["method"] = norm_method_name(p.method);
    return out;
}

std::string cost_json(size_t t, double delta, double phi, double chi_exponent, bool known_chi) {
    ChiTable known = known_chi_table();
    return cost_point_json(cost_point(t, delta, phi, cost_masks(t), chi_exponent, known_chi ? &known : nullptr));
}

py::dict crossover(double phi, double chi_exponent) {
    Crossover c = regime_crossover(phi, chi_exponent);
    py::dict out;
    out["fewer_states_t"] = c.fewer_states_t;
    out["fewer_states_exact"] = c.fewer_states_exact;
    out["lower_cost_t"] = c.lower_cost_t;
    out["lower_cost_exact"] = c.lower_cost_exact;
    return out;
}

}  // namespace

PYBIND11_MODULE(_corrsim, m) {
    m.doc() = "Correlated sampling of sparse stabilizer decompositions";
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::invalid_argument &e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("extent", [](double phi, size_t t) { return magic_model(phi, t).xi_t; }, py::arg("phi"), py::arg("t") = 1);
    m.def("overlap", &overlap, py::arg("phi"));
    m.def("alpha_bound", &alpha_bound);
    m.def("gen_masks_json", &gen_masks_json, py::arg("t"), py::arg("count") = std::nullopt);
    m.def("sparsify_json", &sparsify_json, py::arg("t"), py::arg("delta"), py::arg("phi"), py::arg("mode"),
          py::arg("seed"), py::arg("f_t") = std::nullopt, py::arg("k") = std::nullopt);
    m.def("exact_sqnorm", [](const std::string &j) { return exact_sqnorm(decomposition_from_json(j)).value; });
    m.def("estimate", &estimate, py::arg("decomp_json"), py::arg("paulis"), py::arg("circuit_json") = "",
          py::arg("method") = "exact", py::arg("fastnorm_samples") = 1000, py::arg("seed") = 1,
          py::arg("threads") = 1);
    m.def("cost_json", &cost_json, py::arg("t"), py::arg("delta"), py::arg("phi"),
          py::arg("chi_exponent") = kDefaultChiExponent, py::arg("known_chi") = false);
    m.def("regime_crossover", &crossover, py::arg("phi"), py::arg("chi_exponent") = kDefaultChiExponent);
    m.def("k_sota", &k_sota, py::arg("xi"), py::arg("delta"));
    m.def("k_iid_tight", &k_iid_tight, py::arg("xi"), py::arg("delta"));
    m.def("k_theorem1", &k_theorem1, py::arg("xi"), py::arg("delta"), py::arg("gamma"));
    m.def("k_correlated", &k_correlated, py::arg("xi"), py::arg("delta"), py::arg("f_t"));
}
