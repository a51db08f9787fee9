# Copyright 2026 The manypoints Authors
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

"""Run each CLI subcommand with --format json and validate against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = {
    "field": [["field", "--p", "3", "--n", "2"], ["field", "--p", "1000003", "--n", "1"]],
    "count": [["count", "legendre", "--q", "7", "--lambda", "3"],
              ["count", "twisted", "--q", "25", "--lambda-poly", "2,1", "--twist", "7"],
              ["count", "quartic", "--q", "9", "--lambda", "2"]],
    "best": [["best", "--q", "7"], ["best", "--q", "2401"]],
    "survey": [["survey", "--q", "13"], ["survey", "--q-max", "50"]],
    "find": [["find", "--q", "29", "--target", "40", "--method", "hasse"],
             ["find", "--q", "13", "--target", "8"]],
    "table-nq3": [["table", "nq3", "--q-list", "7,31,53"]],
    "char3": [["char3", "--n-max", "5"]],
    "bounds": [["bounds", "--q", "9"], ["bounds", "--q", "128", "--genus", "2"]],
    "achievable": [["achievable", "--q", "25", "--target", "36"], ["achievable", "--q", "13", "--target", "9"]],
    "hasse-poly": [["hasse-poly", "--p", "7"]],
}


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, runs in CASES.items():
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        for args in runs:
            out = subprocess.run([binary, "--format", "json", *args], check=True, capture_output=True, text=True)
            try:
                jsonschema.validate(json.loads(out.stdout), schema, cls=jsonschema.Draft202012Validator)
                print(f"ok   {name}: {' '.join(args)}")
            except jsonschema.ValidationError as e:
                failures += 1
                print(f"FAIL {name}: {' '.join(args)}: {e.message}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
