#!/usr/bin/env python3
"""Validate every subcommand's --json output against the run-report schema.

usage: check_json_schema.py CLI SCHEMA CORPUS
"""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, corpus = sys.argv[1:4]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    runs = [
        (["validate", f"{corpus}/s3.sgp"], 0),
        (["green", f"{corpus}/w_not_v1.sgp"], 0),
        (["epi", f"{corpus}/v1_nonvariant_2.sgp"], 0),
        (["variety", f"{corpus}/w_not_v1.sgp", "--test", "W,V1"], 1),
        (["variety", f"{corpus}/z3.sgp", "--identity", "x''' = x'"], 0),
        (["variant", f"{corpus}/s3.sgp", "--at", "1", "--unary"], 0),
        (["conjugacy", f"{corpus}/s3.sgp"], 0),
        (["enumerate", "--order", "3", "--filter", "canonical_unary,V1"], 0),
        (["verify", "--only", "2,10", "--corpus", corpus], 0),
    ]
    failures = 0
    for args, expected in runs:
        proc = subprocess.run([cli, *args, "--json"], capture_output=True,
                              text=True, check=False)
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"{label}: exit {proc.returncode}, expected {expected}\n"
                  f"{proc.stderr}")
            failures += 1
            continue
        try:
            report = json.loads(proc.stdout)
            validator.validate(report)
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            print(f"{label}: {err}")
            failures += 1
            continue
        verdicts = {c["verdict"] for c in report["checks"]}
        if (expected == 0) != ("fail" not in verdicts):
            print(f"{label}: verdicts {verdicts} disagree with exit code")
            failures += 1
    print(f"{len(runs) - failures}/{len(runs)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
