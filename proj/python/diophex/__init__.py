# Copyright 2026 The diophex Authors
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

"""Diophantine exponents of polynomial matrix families."""

import json
from fractions import Fraction

from . import _core
from ._core import UniquenessError, ValidationError, hook_content_dim, weyl_dim, witt_dim

__all__ = [
    "UniquenessError",
    "ValidationError",
    "cli",
    "dani_systole",
    "estimate_beta",
    "formula",
    "geometric_range",
    "hook_content_dim",
    "min_image_qnorm",
    "run_criterion",
    "tau",
    "veronese_beta",
    "weyl_dim",
    "witt_dim",
]


def _weights(ws):
    return [str(Fraction(w)) for w in ws]


def cli(*args):
    """Runs the command line in process. Returns (exit code, parsed output, stderr)."""
    code, out, err = _core.run_cli([str(a) for a in args])
    try:
        parsed = json.loads(out)
    except json.JSONDecodeError:
        parsed = out
    return code, parsed, err


def formula(family, **p):
    """Closed form exponent as a dict; exact values are 'p/q' strings."""
    order = {
        "heisenberg": ("k",),
        "us": ("s", "k"),
        "free": ("d", "s", "k"),
        "step2": ("d1", "d2", "k"),
    }
    if family not in order:
        raise ValueError(f"unknown family {family}")
    args = [int(p[name]) for name in order[family]]
    return json.loads(_core.formula_json(family, *args))


def veronese_beta(p, m):
    return Fraction(_core.veronese_beta(p, m))


def min_image_qnorm(x, q, weights_v=None, weights_e=None, method="auto", threads=1):
    wv = _weights(weights_v or [1] * len(x[0]))
    we = _weights(weights_e or [1] * len(x))
    return _core.min_image_qnorm(x, wv, we, float(q), method, threads)


def geometric_range(q0, qmax, n):
    return _core.geometric_range(q0, qmax, n)


def estimate_beta(x, schedule, weights_v=None, weights_e=None, method="auto", threads=1):
    wv = _weights(weights_v or [1] * len(x[0]))
    we = _weights(weights_e or [1] * len(x))
    return json.loads(_core.estimate_beta_json(x, wv, we, list(schedule), method, threads))


def dani_systole(x, beta, times):
    return json.loads(_core.dani_systole_json(x, beta, list(times)))


def tau(manifold, seed=1):
    """Exact exponent over the candidate family of a manifold (dict or JSON text)."""
    text = manifold if isinstance(manifold, str) else json.dumps(manifold)
    return json.loads(_core.tau_json(text, seed))


def run_criterion(criterion, seed=1, threads=1):
    return json.loads(_core.run_criterion_json(criterion, seed, threads))
