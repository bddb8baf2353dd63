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

#include "corrsim/io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace corrsim {

using nlohmann::json;

namespace {

MaskStrategy strategy_from_name(const std::string &name) {
    if (name == "pow2") return MaskStrategy::POW2;
    if (name == "even") return MaskStrategy::EVEN;
    if (name.rfind("padded", 0) == 0) return MaskStrategy::PADDED;
    throw std::invalid_argument("unknown mask strategy '" + name + "'");
}

json parse(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("invalid JSON document: ") + e.what());
    }
}

}  // namespace

std::string masks_to_json(const MaskSet &set) {
    json j;
    j["block_length"] = set.block_length;
    j["source_t"] = set.source_t;
    j["strategy"] = set.strategy_name();
    json arr = json::array();
    for (const auto &m : set.masks) arr.push_back(m.to_hex());
    j["masks"] = arr;
    return j.dump(2) + "\n";
}

MaskSet masks_from_json(const std::string &text) {
    json j = parse(text);
    return guarded([&] {
        MaskSet set;
        set.block_length = j.at("block_length").get<size_t>();
        set.source_t = j.value("source_t", set.block_length);
        set.strategy = strategy_from_name(j.at("strategy").get<std::string>());
        for (const auto &h : j.at("masks")) {
            set.masks.push_back(BitVector::from_hex(h.get<std::string>(), set.block_length));
        }
        return set;
    });
}

std::string decomposition_to_json(const SparseDecomposition &d) {
    json j;
    j["t"] = d.t;
    j["k"] = d.k;
    j["prefactor"] = d.prefactor;
    j["mode"] = mode_name(d.mode);
    j["f_t"] = d.f_t;
    j["mask_ref"] = d.mask_ref.empty() ? json(nullptr) : json(d.mask_ref);
    j["seed"] = d.seed;
    json entries = json::array();
    for (const auto &e : d.entries) {
        json je;
        je["x"] = e.x.to_hex();
        je["phase"] = {e.phase.real(), e.phase.imag()};
        if (e.magnitude != 1.0) je["magnitude"] = e.magnitude;
        entries.push_back(je);
    }
    j["entries"] = entries;
    json groups = json::array();
    for (const auto &g : d.groups) {
        groups.push_back({{"seed_index", g.seed_index}, {"members", g.members}});
    }
    j["groups"] = groups;
    j["warnings"] = d.warnings;
    return j.dump(2) + "\n";
}

SparseDecomposition decomposition_from_json(const std::string &text) {
    json j = parse(text);
    return guarded([&] {
        SparseDecomposition d;
        d.t = j.at("t").get<size_t>();
        d.prefactor = j.at("prefactor").get<double>();
        d.mode = mode_from_name(j.at("mode").get<std::string>());
        d.f_t = j.value("f_t", size_t{0});
        if (j.contains("mask_ref") && j["mask_ref"].is_string()) d.mask_ref = j["mask_ref"].get<std::string>();
        d.seed = j.value("seed", uint64_t{0});
        for (const auto &je : j.at("entries")) {
            DecompositionEntry e;
            e.x = BitVector::from_hex(je.at("x").get<std::string>(), d.t);
            const auto &ph = je.at("phase");
            e.phase = {ph.at(0).get<double>(), ph.at(1).get<double>()};
            e.magnitude = je.value("magnitude", 1.0);
            d.entries.push_back(std::move(e));
        }
        d.k = j.value("k", d.entries.size());
        if (d.k != d.entries.size()) {
            throw std::invalid_argument("decomposition k does not match the entry count");
        }
        if (j.contains("groups")) {
            for (const auto &jg : j["groups"]) {
                DecompositionGroup g;
                g.seed_index = jg.at("seed_index").get<size_t>();
                g.members = jg.at("members").get<std::vector<size_t>>();
                for (size_t m : g.members) {
                    if (m >= d.entries.size()) throw std::invalid_argument("group member out of range");
                }
                d.groups.push_back(std::move(g));
            }
        }
        if (j.contains("warnings")) d.warnings = j["warnings"].get<std::vector<std::string>>();
        return d;
    });
}

std::string circuit_to_json(const CliffordOp &op) {
    json gates = json::array();
    for (const auto &g : op.gates()) {
        json q = json::array({g.q0});
        if (g.is_two_qubit()) q.push_back(g.q1);
        gates.push_back({{"gate", gate_name(g.type)}, {"qubits", q}});
    }
    json j;
    j["num_qubits"] = op.num_qubits();
    j["gates"] = gates;
    return j.dump(2) + "\n";
}

CliffordOp circuit_from_json(const std::string &text) {
    json j = parse(text);
    return guarded([&] {
        const json &gates = j.is_array() ? j : j.at("gates");
        std::vector<Gate> out;
        size_t max_q = 0;
        for (const auto &jg : gates) {
            Gate g;
            g.type = gate_type_from_name(jg.at("gate").get<std::string>());
            auto qs = jg.at("qubits").get<std::vector<uint32_t>>();
            bool two = g.is_two_qubit();
            if (qs.size() != (two ? 2u : 1u)) {
                throw std::invalid_argument(std::string("gate ") + gate_name(g.type) + " has the wrong qubit count");
            }
            g.q0 = qs[0];
            if (two) g.q1 = qs[1];
            for (uint32_t q : qs) max_q = std::max<size_t>(max_q, q + 1);
            out.push_back(g);
        }
        size_t n = j.is_object() && j.contains("num_qubits") ? j["num_qubits"].get<size_t>() : max_q;
        return CliffordOp(n, std::move(out));
    });
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace corrsim
