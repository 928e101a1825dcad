"""Runs the CLI over a small corpus and validates every report against reports.schema.json."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    # (argv, expected exit code, checks on the report)
    (["solve", "z", "z+2"], 0, lambda r: r["status"] == "FINITE" and r["bound"] == 4 and len(r["points"]) == 1),
    (["solve", "z^2", "(z^2-1/2)/(1-1/2*z^2)"], 0, lambda r: r["status"] == "DEGENERATE" and r["witness"] is not None),
    (["solve", "z", "z^5"], 0, lambda r: r["status"] == "DEGENERATE"),
    (["solve", "z", "z+1", "--precision", "256"], 0, lambda r: len(r["points"]) == 2),
    (["solve", "2", "z"], 0, lambda r: r["points"] == []),
    (["blaschke", "check", "(z-1/2)/(1-1/2*z)"], 0, lambda r: r["verdict"] is True),
    (["blaschke", "check", "z+1"], 0, lambda r: r["verdict"] is False),
    (["blaschke", "split", "(3/5+4/5*i)*z^2*(z-1/3)/(1-1/3*z)"], 0, lambda r: len(r["factors"]) == 2),
    (["argcd", "z", "z+1", "--max-k", "12"], 0, lambda r: r["stabilized_F"] == "z^2+z+1" and r["stabilized_at"] == 6),
    (["curve", "analyze", "x*y-1"], 0, lambda r: r["verdict"] == "INFINITE_UNIMODULAR"),
    (["curve", "analyze", "x-y-2"], 0, lambda r: r["verdict"] == "FINITE_BOUNDED" and len(r["points"]) == 1),
    (["curve", "analyze", "x^2+y^2-3", "--reducible"], 0, lambda r: r["assumed_irreducible"] is False),
    (["curve", "implicitize", "z^2", "z^4"], 0, lambda r: r["power"] == 2),
    (["decompose", "z^2+1", "z^4"], 0, lambda r: r["degree_W"] == 2),
    (["bound", "z", "z^3"], 0, lambda r: r["bound"] == 16),
    (["solve", "z + + 1", "z"], 1, lambda r: r["error"] == "ParseError"),
    (["solve", "z*(1+1/2)^(1/2)", "z"], 1, lambda r: r["error"] == "ParseError"),
    (["solve", "x", "z"], 1, lambda r: r["error"] == "WrongVariable"),
    (["blaschke", "split", "z/2"], 1, lambda r: r["error"] == "NotCirclePreserving"),
    (["argcd", "z", "z+1", "--max-k", "6"], 1, lambda r: r["error"] == "HorizonTooSmall"),
    (["argcd", "z^2", "z^3"], 1, lambda r: r["error"] == "DependentInputs"),
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for argv, code, check in CASES:
        proc = subprocess.run([cli, *argv], capture_output=True, text=True, timeout=120)
        label = " ".join(argv)
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError:
            print(f"FAIL {label}: stdout is not a single JSON object")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(report), key=str)
        ok = proc.returncode == code and not errors and check(report)
        print(f"{'PASS' if ok else 'FAIL'} {label} (exit {proc.returncode})")
        for e in errors[:3]:
            print("   ", e.message)
        failures += not ok
    # Text mode never prints JSON.
    proc = subprocess.run([cli, "--format", "text", "bound", "z", "z^2"], capture_output=True, text=True)
    if proc.returncode != 0 or proc.stdout.lstrip().startswith("{"):
        print("FAIL text format")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
