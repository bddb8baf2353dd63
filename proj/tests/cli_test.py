# Copyright 2026 The corrsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command-line behaviour: exit codes, schemas and reproducibility."""

import csv
import io
import json
import os
import subprocess

import pytest

BIN = os.environ.get("CORRSIM_BIN", os.path.join(os.path.dirname(__file__), "..", "build", "corrsim"))


def run(*args, check_code=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    assert proc.returncode == check_code, proc.stderr
    return proc


def metric_rows(text):
    """CSV rows with timing columns removed; each header row resets the column set."""
    out, drop = [], set()
    for row in csv.reader(io.StringIO(text)):
        if row and row[0] in ("experiment", "t") and not row[0].isdigit():
            drop = {i for i, c in enumerate(row) if c in ("wall_ns", "ns_per_mask")}
        out.append([c for i, c in enumerate(row) if i not in drop])
    return out


def test_help_lists_schemas():
    text = run("--help").stdout
    for name in ("gen-masks", "sparsify", "estimate", "cost", "bench"):
        assert name in text
    assert "Exit codes: 0 success, 2 invalid arguments, 3 precondition failure." in text


def test_gen_masks_json():
    masks = json.loads(run("gen-masks", "--t", "8").stdout)
    assert masks["block_length"] == 8
    assert masks["strategy"] == "pow2"
    values = [int(m, 16) for m in masks["masks"]]
    assert len(values) == 15
    assert min(bin(v).count("1") for v in values) >= 4
    assert min(bin(a ^ b).count("1") for i, a in enumerate(values) for b in values[i + 1:]) >= 4


def test_sparsify_estimate_pipeline(tmp_path):
    decomp = tmp_path / "d.json"
    run("--seed", "5", "sparsify", "--t", "4", "--delta", "0.3", "--out", str(decomp))
    again = run("--seed", "5", "sparsify", "--t", "4", "--delta", "0.3").stdout
    assert json.loads(again) == json.loads(decomp.read_text())
    exact = tmp_path / "e.json"
    run("sparsify", "--t", "4", "--delta", "0.3", "--mode", "exact", "--out", str(exact))
    res = json.loads(run("--json", "estimate", "--decomp", str(exact), "--paulis", "ZIII,+").stdout)
    # Qubit 0 of the magic state has P(Z = +) = cos^2(pi/8).
    assert res["value"] == pytest.approx(0.8535533905932737, abs=1e-12)


def test_cost_json_fields():
    res = json.loads(run("--json", "cost", "--t", "8", "--delta", "0.1").stdout)
    assert res["correlated_constant_rounded"] == 0.05
    assert res["k_sota"] == 122.0
    assert res["cheapest_regime"] in ("WEAK_CORRELATED", "STRONG", "EXACT")


@pytest.mark.parametrize(
    "args",
    [
        ["sparsify", "--t", "4", "--delta", "-1"],
        ["sparsify", "--t", "0", "--delta", "0.3"],
        ["sparsify", "--t", "4", "--delta", "0.3", "--mode", "bogus"],
        ["estimate", "--decomp", "/nonexistent.json", "--paulis", "Z"],
        ["bench", "cost-map", "--t", "x..y"],
        ["no-such-command"],
    ],
)
def test_invalid_arguments_exit_2(args):
    proc = run(*args, check_code=2)
    assert proc.stderr


def test_precondition_failure_exit_3():
    proc = run("sparsify", "--t", "30", "--delta", "0.3", "--mode", "exact", check_code=3)
    assert "20 qubits" in proc.stderr


def test_header_only_outputs():
    stats = run("bench", "sparsify-stats", "--trials", "0").stdout.strip().splitlines()
    assert stats == ["experiment,mode,phi,t,delta,k,f_t,trial,seed,sqnorm,err2,converged,wall_ns"]
    grid = run("bench", "cost-map", "--t", "").stdout.strip().splitlines()
    assert len(grid) == 1 and grid[0].startswith("t,delta,xi_t")


BENCH_CASES = [
    ["bench", "sparsify-stats", "--t", "4,8", "--delta", "0.4,0.3", "--modes", "iid,theorem1,theorem2",
     "--trials", "30"],
    ["bench", "worst-case", "--t", "4", "--delta", "0.24", "--modes", "sota,theorem1,theorem2,exact",
     "--cliffords", "100", "--trials", "15"],
    ["bench", "worst-case", "--t", "4", "--delta", "0.3", "--modes", "theorem1", "--cliffords", "50",
     "--trials", "8", "--method", "fastnorm", "--fastnorm-samples", "100"],
    ["bench", "cost-map", "--t", "4..40", "--delta", "0.3..0.001", "--delta-steps", "7"],
    ["bench", "mask-timing", "--t", "32,64", "--repeats", "1"],
]


@pytest.mark.parametrize("args", BENCH_CASES, ids=lambda a: a[1])
def test_bench_deterministic_across_workers(args, tmp_path):
    outputs = []
    for threads in ("1", "4", "8", "1"):
        summary = tmp_path / f"s{threads}.csv"
        extra = ["--summary", str(summary)] if args[1] in ("sparsify-stats", "worst-case") else []
        text = run("--seed", "11", "--threads", threads, *args, *extra).stdout
        if extra:
            text += summary.read_text()
        outputs.append(metric_rows(text))
    assert len(outputs[0]) > 1
    for other in outputs[1:]:
        assert other == outputs[0]
