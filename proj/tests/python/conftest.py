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
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(os.environ.get("DIOPHEX_ROOT", pathlib.Path(__file__).resolve().parents[2]))
CLI = os.environ.get("DIOPHEX_CLI", str(ROOT / "build" / "diophex"))


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def run_cli():
    def run(*args, env=None):
        e = dict(os.environ)
        e.pop("DIOPHEX_SEED", None)
        e.update(env or {})
        p = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=e)
        try:
            out = json.loads(p.stdout)
        except json.JSONDecodeError:
            out = p.stdout
        return p.returncode, out, p.stderr

    return run


@pytest.fixture(scope="session")
def validator():
    from jsonschema import Draft202012Validator
    from referencing import Registry, Resource

    resources = []
    for path in sorted((ROOT / "schemas").glob("*.json")):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    registry = Registry().with_resources(resources)

    def validate(schema, instance):
        Draft202012Validator({"$ref": schema}, registry=registry).validate(instance)

    return validate
