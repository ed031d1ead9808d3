#!/usr/bin/env python3
"""Validate every builtin spec and its analyze report against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load(path):
    with open(path) as f:
        return json.load(f)


def main():
    zecap, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    spec_schema = load(schema_dir / "spec.schema.json")
    report_schema = load(schema_dir / "report.schema.json")
    registry = Registry().with_resources(
        [(s["$id"], Resource.from_contents(s)) for s in (spec_schema, report_schema)]
    )
    spec_v = Draft202012Validator(spec_schema, registry=registry)
    report_v = Draft202012Validator(report_schema, registry=registry)

    names = ["identity-d2", "identity-d3", "depolarizing-p1", "dephasing-p0.5", "bitflip-p0.1", "pentagon"]
    bad = 0
    with tempfile.TemporaryDirectory() as tmp:
        for name in names:
            spec_path = pathlib.Path(tmp) / f"{name}.json"
            report_path = pathlib.Path(tmp) / f"{name}.report.json"
            spec_path.write_text(subprocess.run([zecap, "builtin", name], check=True, capture_output=True, text=True).stdout)
            subprocess.run([zecap, "analyze", str(spec_path), "--restarts", "4", "--iters", "300", "--out", str(report_path)], check=True)
            for label, v, path in (("spec", spec_v, spec_path), ("report", report_v, report_path)):
                errors = [e.message for e in v.iter_errors(load(path))]
                if errors:
                    bad += 1
                    print(f"{name} {label}: {errors[0]}")
        failed = pathlib.Path(tmp) / "failed.json"
        failed.write_text('{"dim": 2, "kraus": [[[[2, 0], [0, 0]], [[0, 0], [1, 0]]]]}')
        out = pathlib.Path(tmp) / "failed.report.json"
        code = subprocess.run([zecap, "analyze", str(failed), "--out", str(out)], capture_output=True).returncode
        if code != 1 or list(report_v.iter_errors(load(out))):
            bad += 1
            print(f"failed report: exit {code} or schema mismatch")
    print(f"{len(names)} builtins checked, {bad} problems")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
