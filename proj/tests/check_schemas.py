# Copyright 2026 The dtlsum Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates CLI JSON output and the golden files against schema/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = {
    "compute": [
        ["compute", "--model", "periodic", "--method", "det-mu", "--L", "4"],
        ["compute", "--model", "open", "--method", "oracle", "--L", "3"],
        ["compute", "--model", "open", "--method", "det-nu", "--vars", "z1,z2,xl,xr"],
    ],
    "dump": [
        ["dump", "--family", "lambda", "--L", "3", "--i", "1"],
        ["dump", "--matrix", "w-plus", "--L", "4"],
    ],
    "verify": [
        ["verify", "--suite", "all", "--max-L", "3", "--seed", "4"],
        ["verify", "--id", "rec1p,symmetry", "--L", "6", "--mode", "random", "--trials", "7", "--seed", "4",
         "--timing"],
        ["verify", "--id", "rec1p", "--L", "3", "--mode", "random", "--trials", "5", "--corrupt"],
    ],
}


def main(tool, schema_dir, golden_dir):
    schemas = {}
    for name in RUNS:
        schema = json.loads((pathlib.Path(schema_dir) / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        schemas[name] = jsonschema.Draft202012Validator(schema)

    checked = 0
    for name, runs in RUNS.items():
        for args in runs:
            out = subprocess.run([tool, *args, "--format", "json"], capture_output=True, text=True)
            if out.returncode not in (0, 1):
                sys.exit(f"{' '.join(args)}: exit {out.returncode}\n{out.stderr}")
            schemas[name].validate(json.loads(out.stdout))
            checked += 1

    for path in sorted(pathlib.Path(golden_dir).rglob("*.json")):
        schemas[path.parent.name].validate(json.loads(path.read_text()))
        checked += 1
    print(f"{checked} documents valid")


if __name__ == "__main__":
    main(*sys.argv[1:4])
