"""Validate `dpz --format json` output against the report schema."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["lines", "--r", "6"],
    ["roots", "--r", "7", "--positive"],
    ["classes", "--r", "5", "--self-int", "1", "--degree", "3"],
    ["triples", "--r", "6"],
    ["sixes", "--r", "6"],
    ["sixes", "--r", "6", "--double"],
    ["orbit", "--r", "6", "--weight", "h-e1"],
    ["weights", "--r", "6", "--fundamental", "1", "--minuscule"],
    ["weights", "--r", "6", "--fundamental", "1", "--dual"],
    ["weights", "--r", "7", "--adjoint"],
    ["degenerate", "--r", "6", "--curves", "e1-e2,e2-e3"],
    ["period", "--r", "3", "--assign", "h=1/2,0", "--assign", "e1=1/2,0",
     "--canonical"],
    ["lines", "--r", "4", "--timing"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft7Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, *args, "--format", "json"],
                              capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {label}: {e.json_path}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
