#!/usr/bin/env python3
"""Run the CLI on the sample inputs and validate each output against the v1 schema."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

CLI = sys.argv[1]
ROOT = Path(sys.argv[2])
SAMPLES = ROOT / "samples"
SCHEMA = json.loads((ROOT / "schemas" / "gtpoly-v1.schema.json").read_text())

CASES = [
    ("classify", ["classify", "--lambda", "3,2,1,1", "--mu", "2,1"]),
    ("classify", ["classify", "--lambda", "4,2", "--mu", "1"]),
    ("classify", ["classify", "--shape", str(SAMPLES / "shape_forbidden.json")]),
    ("tiling", ["tiling", "--pattern", str(SAMPLES / "pattern_edge.json")]),
    ("tiling", ["tiling", "--pattern", str(SAMPLES / "pattern_two_free.json")]),
    ("points", ["points", "--lambda", "2,1", "--weight", "1,1,1", "--k", "1"]),
    ("points", ["points", "--lambda", "4,3,1", "--weight", "2,2,2,2", "--k", "1", "--count"]),
    ("vertices", ["vertices", "--shape", str(SAMPLES / "spec_nonintegral_53.json"), "--k", "1"]),
    ("analyze", ["analyze", "--shape", str(SAMPLES / "spec_integral_53.json"), "--k", "1", "--max-k", "2"]),
    ("analyze", ["analyze", "--shape", str(SAMPLES / "spec_nonintegral_53.json"), "--k", "1", "--timing"]),
    ("idp", ["idp", "--lambda", "2,2", "--mu", "1", "--weight", "1,1,1", "--k", "1", "--max-k", "3"]),
    ("triangulate", ["triangulate", "--lambda", "2,1", "--weight", "1,1,1", "--k", "1"]),
    ("triangulate", ["triangulate", "--lambda", "2,1", "--weight", "1,1,1", "--k", "1",
                     "--order", "file", "--order-file", str(SAMPLES / "order_reverse.json")]),
    ("poset", ["poset", "--lambda", "4,3,1"]),
    ("decompose", ["decompose", "--mode", "hook", "--input", str(SAMPLES / "tableau_hook_k2.json"), "--k", "2"]),
    ("decompose", ["decompose", "--mode", "columns", "--input", str(SAMPLES / "tableau_columns_k3.json"), "--k", "3"]),
    ("decompose", ["decompose", "--mode", "contingency", "--input", str(SAMPLES / "pattern_birkhoff.json")]),
    ("repro", ["repro"]),
]


def main():
    failures = 0
    for kind, args in CASES:
        label = " ".join(args)
        out = None
        if kind == "repro":
            out = Path(tempfile.mkdtemp()) / "repro.json"
            args = [*args, "--json", str(out)]
        proc = subprocess.run([CLI, *args], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(out.read_text() if out else proc.stdout)
        schema = dict(SCHEMA)
        schema["$ref"] = f"#/$defs/{kind}"
        try:
            jsonschema.validate(doc, schema)
            print(f"ok   {label}")
        except jsonschema.ValidationError as e:
            print(f"FAIL {label}: {e.message}")
            failures += 1
    bad = subprocess.run([CLI, "points", "--lambda", "1,2", "--k", "1"], capture_output=True, text=True)
    if bad.returncode != 2:
        print(f"FAIL malformed input exit code {bad.returncode}")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
