# Copyright 2026 The hzknots Authors
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

"""CLI tests: exit codes, golden outputs and JSON schema validation.

Usage: cli_tests.py --bin PATH CASE [--update]
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

ROOT = Path(__file__).resolve().parents[2]
GOLDEN = ROOT / "tests" / "golden"
SCHEMAS = ROOT / "schemas"
DATA = Path(__file__).resolve().parent / "data"


def run(binary, args, env=None, expect=0):
    full_env = {k: v for k, v in os.environ.items() if not k.startswith("HZKNOTS_")}
    full_env.update(env or {})
    proc = subprocess.run([binary, *args], capture_output=True, text=True, env=full_env, timeout=600)
    if proc.returncode != expect:
        sys.exit(f"{args}: exit {proc.returncode}, expected {expect}\nstdout:\n{proc.stdout}\nstderr:\n{proc.stderr}")
    return proc


def golden(name, text, update):
    path = GOLDEN / name
    if update:
        path.write_text(text)
        return
    expected = path.read_text()
    if text != expected:
        sys.exit(f"{name}: output differs from the golden file\n--- got\n{text}\n--- expected\n{expected}")


def contains(text, *needles):
    for n in needles:
        if n not in text:
            sys.exit(f"missing {n!r} in\n{text}")


def validate(binary, args, command, expect=0):
    doc = json.loads(run(binary, [*args, "--format", "json"], expect=expect).stdout)
    schema = json.loads((SCHEMAS / f"{command}.schema.json").read_text())
    jsonschema.Draft202012Validator(schema).validate(doc)
    return doc


def case_homfly(b, u):
    golden("homfly_torus_2_3.txt", run(b, ["homfly", "torus:2,3"]).stdout, u)
    golden("homfly_torus_2_1.txt", run(b, ["homfly", "torus:2,1"]).stdout, u)
    contains(run(b, ["homfly", "fam:2k2:k=0"], expect=2).stderr, "out of range")
    run(b, ["homfly", "fam:2k2:k=0", "--extrapolate"])


def case_hz(b, u):
    out = run(b, ["hz", "pretzel:k=0", "--check-factorized"]).stdout
    contains(out, "fully_factorized: true")
    golden("hz_pretzel_0.txt", out, u)
    contains(run(b, ["hz", "fam:2k2:k=1", "--check-factorized"]).stdout, "fully_factorized: false")
    contains(run(b, ["hz", "torus:3,4", "--closed-form", "--pipeline"]).stdout, "closed form vs pipeline: match")
    contains(run(b, ["hz", "torus:3,4", "--closed-form", "--pipeline", "--sign", "-1", "--strict"]).stdout, "match")


def case_expand(b, u):
    out = run(b, ["expand", "pretzel:k=0"]).stdout
    contains(out, "a_-2 = 13/35", "(match)")
    golden("expand_pretzel_0.txt", out, u)
    # The reference a_-2 of this family has the opposite sign; strict mode turns
    # the mismatch into exit 3.
    run(b, ["expand", "fam:2k2:k=1", "--strict"], expect=3)
    run(b, ["expand", "fam:2k2:k=1"])


def case_residues(b, u):
    out = run(b, ["residues", "torus:2,5"]).stdout
    contains(out, "finite_sum: 1\n", "infinity: -1\n", "total_is_zero: true")
    golden("residues_torus_2_5.txt", out, u)
    run(b, ["residues", "app:c:k=2", "--strict"])


def case_zeros(b, u):
    with tempfile.TemporaryDirectory() as tmp:
        svg = Path(tmp) / "t56.svg"
        csv = Path(tmp) / "t23.csv"
        contains(run(b, ["zeros", "torus:5,6", "--svg", str(svg)]).stdout, "on_circle 126,", "exact endpoint check: true")
        text = svg.read_text()
        contains(text, 'width="600" height="600"', '<circle cx="300" cy="300" r="250"')
        golden("zeros_torus_5_6.svg", text, u)
        run(b, ["zeros", "torus:2,3", "--csv", str(csv)])
        golden("zeros_torus_2_3.csv", csv.read_text(), u)
        run(b, ["zeros", "torus:2,3", "torus:2,5", "--csv", str(csv)], expect=2)
    contains(run(b, ["zeros", "fam:2k2:k=2"]).stdout, "real_negative 2,")


def case_ingest(b, u):
    out = run(b, ["ingest", str(DATA / "trefoil.txt")]).stdout
    contains(out, "3_1\ttrue\t")
    golden("ingest_trefoil.txt", out, u)
    doc = validate(b, ["ingest", str(DATA / "empty.txt")], "ingest")
    assert doc["results"] == [] and doc["errors"] == [], doc
    out = run(b, ["ingest", str(DATA / "syntax_error.txt")]).stdout
    contains(out, "syntax_error.txt:3:")
    doc = validate(b, ["ingest", str(DATA / "syntax_error.txt")], "ingest")
    assert [e["line"] for e in doc["errors"]] == [3], doc
    assert [r["name"] for r in doc["results"]] == ["3_1", "4_1", "5_2", "8_20"], doc
    assert [r["fully_factorized"] for r in doc["results"]] == [True, False, True, True], doc
    contains(run(b, ["ingest", str(DATA / "syntax_error.txt"), "--strict"], expect=2).stdout, ":3:")
    run(b, ["ingest", str(DATA / "syntax_error.txt")], env={"HZKNOTS_STRICT": "1"}, expect=2)
    run(b, ["ingest", str(DATA / "missing.txt")], expect=2)


def case_usage(b, u):
    run(b, [], expect=2)
    run(b, ["frobnicate"], expect=2)
    run(b, ["zeros", "torus:2,3", "--precision", "32"], expect=2)
    run(b, ["zeros", "torus:2,3"], env={"HZKNOTS_PRECISION": "32"}, expect=2)
    run(b, ["zeros", "torus:2,3"], env={"HZKNOTS_PRECISION": "128"})
    run(b, ["homfly", "torus:2,x"], expect=2)
    run(b, ["verify", "nothing"], expect=2)
    run(b, ["zeros", "torus:2,3", "--precision", "1024", "--order", "1"], expect=2)


def case_batch(b, u):
    ids = ["pretzel:k=3", "torus:2,3", "fam:2k2_3:k=2", "app:d:k=1", "torus:3,5", "fam:2k1_2:k=4"]
    one = run(b, ["hz", *ids, "--jobs", "1"]).stdout
    four = run(b, ["hz", *ids, "--jobs", "4"]).stdout
    if one != four:
        sys.exit("output depends on the worker count")
    order = [line for line in one.splitlines() if not line.startswith(" ")]
    if order != ids:
        sys.exit(f"results out of input order: {order}")
    a = run(b, ["zeros", "app:a:k=4", "--format", "json"]).stdout
    if a != run(b, ["zeros", "app:a:k=4", "--format", "json", "--jobs", "3"]).stdout:
        sys.exit("zeros output is not deterministic")


def case_schemas(b, u):
    validate(b, ["homfly", "torus:2,3", "compose:sum(torus:2,3,torus:2,5)"], "homfly")
    doc = validate(b, ["hz", "pretzel:k=1", "fam:2k2:k=1", "--check-factorized", "--closed-form", "--pipeline"], "hz")
    assert [r["factorization"]["fully_factorized"] for r in doc["results"]] == [True, False], doc
    validate(b, ["expand", "pretzel:k=0", "torus:2,3", "fam:2k2:k=3"], "expand")
    validate(b, ["residues", "torus:2,5", "app:b:k=2", "unknot"], "residues")
    doc = validate(b, ["zeros", "torus:2,3", "fam:2k2:k=1", "unknot"], "zeros")
    assert doc["results"][2]["degree"] == 0, doc
    doc = validate(b, ["hz", "compose:disjoint(torus:2,3,unknot)", "--closed-form"], "hz", expect=1)
    assert "error" in doc["results"][0], doc
    validate(b, ["verify", "algebra"], "verify")


def case_verify(b, u):
    contains(run(b, ["verify", "algebra"]).stdout, "all checks pass")
    contains(run(b, ["verify", "hz", "--quick"]).stdout, "PASS hz/factorizability census")
    contains(run(b, ["verify", "zeros", "--quick"]).stdout, "PASS zeros/zero-locus structure")


CASES = {name[5:]: fn for name, fn in globals().items() if name.startswith("case_")}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--bin", required=True)
    parser.add_argument("--update", action="store_true", help="rewrite golden files")
    parser.add_argument("case", choices=sorted(CASES))
    args = parser.parse_args()
    CASES[args.case](args.bin, args.update)


if __name__ == "__main__":
    main()
