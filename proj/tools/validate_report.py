#!/usr/bin/env python3
"""Validate qkk JSON reports against schema/report.schema.json.

Also checks that `overall` is the conjunction of the per-check flags.
Exit status 0 when every report is valid, 1 otherwise.
"""
import argparse
import json
import pathlib
import sys

import jsonschema

DEFAULT_SCHEMA = pathlib.Path(__file__).resolve().parent.parent / "schema" / "report.schema.json"


def problems(report, validator):
    out = [f"{'/'.join(map(str, e.path)) or '<root>'}: {e.message}" for e in validator.iter_errors(report)]
    if not out:
        expected = "pass" if all(c["pass"] for c in report["checks"]) else "fail"
        if report["overall"] != expected:
            out.append(f"overall is {report['overall']!r} but the checks give {expected!r}")
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("reports", nargs="+", type=pathlib.Path)
    ap.add_argument("--schema", type=pathlib.Path, default=DEFAULT_SCHEMA)
    args = ap.parse_args()

    schema = json.loads(args.schema.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    bad = 0
    for path in args.reports:
        try:
            report = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as e:
            print(f"{path}: unreadable: {e}")
            bad += 1
            continue
        errs = problems(report, validator)
        for e in errs:
            print(f"{path}: {e}")
        bad += bool(errs)
        if not errs:
            print(f"{path}: valid")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
