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

"""Python interface to the corrsim library.

Artifacts (masks, decompositions, cost points) are exchanged as JSON-compatible
dicts with the same layout the command-line tool reads and writes.
"""

import json
import math

from . import _corrsim
from ._corrsim import alpha_bound, extent, k_correlated, k_iid_tight, k_sota, k_theorem1, overlap, regime_crossover

PI_4 = math.pi / 4

__all__ = [
    "PI_4",
    "alpha_bound",
    "cost",
    "estimate",
    "exact_sqnorm",
    "extent",
    "gen_masks",
    "k_correlated",
    "k_iid_tight",
    "k_sota",
    "k_theorem1",
    "overlap",
    "regime_crossover",
    "sparsify",
]


def gen_masks(t, count=None):
    """XOR masks of block length t with pairwise distance at least t/2."""
    return json.loads(_corrsim.gen_masks_json(t, count))


def sparsify(t, delta, phi=PI_4, mode="theorem1", seed=1, f_t=None, k=None):
    """Sample a sparse decomposition of the t-fold magic state."""
    return json.loads(_corrsim.sparsify_json(t, delta, phi, mode, seed, f_t, k))


def exact_sqnorm(decomp):
    return _corrsim.exact_sqnorm(json.dumps(decomp))


def estimate(decomp, paulis, circuit=None, method="exact", fastnorm_samples=1000, seed=1, threads=1):
    """Joint probability of a sequence of Pauli outcomes, e.g. 'ZIII,+;XXII,-'."""
    circuit_json = "" if circuit is None else json.dumps(circuit)
    return _corrsim.estimate(json.dumps(decomp), paulis, circuit_json, method, fastnorm_samples, seed, threads)


def cost(t, delta, phi=PI_4, chi_exponent=0.396, known_chi=False):
    """Sample counts and regime classification at one (t, delta) point."""
    return json.loads(_corrsim.cost_json(t, delta, phi, chi_exponent, known_chi))
