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

import json

import jsonschema
import pytest

RUNS = [
    ("formula", "heisenberg", "--k", "3"),
    ("formula", "free", "--d", "3", "--s", "3", "--k", "3..6"),
    ("formula", "metabelian", "--s", "3", "--dim-last", "1", "--k", "4", "--layer-dims", "2,1,1"),
    ("exponent", "--family", "heisenberg", "--k", "3"),
    ("exponent", "--family", "wedge", "--k", "4"),
    ("laws", "--builtin", "u(3)", "--k", "2"),
    ("pencil-check", "--family", "wedge", "--k", "4", "--coords", "1,2,3", "--a", "1", "--b", "1"),
    ("empirical", "--family", "curve", "--p", "2", "--qmax", "1000"),
    ("dani", "--theta", "0.7071", "--beta", "1.3"),
    ("heisenberg", "--k", "2", "--bound", "20"),
    ("selftest", "--only", "1"),
]


@pytest.mark.parametrize("args", RUNS, ids=lambda a: " ".join(a[:2]))
def test_reports_match_the_schema(args, run_cli, validator):
    code, out, _ = run_cli(*args)
    assert code == 0
    validator("report.json", out)
    assert out["command"] == args[0]
    assert out["argv"] == list(args)


def test_fixtures_match_the_schema(root, validator):
    for name in ("veronese_m2_p3.json", "tied_candidates.json"):
        validator("manifold.json", json.loads((root / "data" / name).read_text()))
    validator("lie_algebra.json", json.loads((root / "data" / "heisenberg_algebra.json").read_text()))


def test_schema_rejects_float_exact_values(run_cli, validator):
    _, out, _ = run_cli("formula", "heisenberg", "--k", "3")
    out["results"]["beta"] = 0.4444
    with pytest.raises(jsonschema.ValidationError):
        validator("report.json", out)
    out["results"]["beta"] = "4/9"
    out["results"]["alpha"] = "4/-9"
    with pytest.raises(jsonschema.ValidationError):
        validator("report.json", out)


def test_errors_match_the_schema(root, run_cli, validator):
    for args, code in [
        (("exponent", "--manifold", root / "data" / "tied_candidates.json"), 3),
        (("formula", "heisenberg"), 2),
        (("dani", "--theta", "abc"), 2),
    ]:
        got, out, _ = run_cli(*args)
        assert got == code
        validator("error.json", out)


def test_inputs_echo_byte_identically(root, run_cli):
    path = root / "data" / "veronese_m2_p3.json"
    code, out, _ = run_cli("exponent", "--manifold", path)
    assert code == 0
    assert out["inputs"][0]["content"] == path.read_text()
    assert out["results"]["tau"] == "1"


def test_seed_from_environment(run_cli):
    _, a, _ = run_cli("empirical", "--family", "curve", "--p", "2", "--qmax", "500", env={"DIOPHEX_SEED": "5"})
    _, b, _ = run_cli("empirical", "--family", "curve", "--p", "2", "--qmax", "500", "--seed", "5")
    assert a["seed"] == 5
    assert a["results"] == b["results"]


def test_slope_csv(tmp_path, run_cli):
    csv = tmp_path / "fit.csv"
    code, out, _ = run_cli("empirical", "--family", "curve", "--p", "2", "--qmax", "1000", "--csv", csv)
    assert code == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "Q,min_norm,log_Q,neg_log_min"
    assert len(lines) == 1 + len(out["results"]["points"])
