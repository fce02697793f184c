#!/usr/bin/env python3
"""Run the dynmono binary on every subcommand and validate --json output against the schema."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    # (argv, expected exit code, extra check)
    (["analyze", "0", "-2"], 0, lambda d: d["result"]["verdict"]["kind"] == "DYNAMICALLY_MONOGENIC_ALL_N"),
    (["analyze", "0", "3"], 0, lambda d: d["result"]["verdict"]["text"] == "NOT_MONOGENIC_AT(1, 2)"),
    (["analyze", "-1", "2", "--depth", "3"], 0, None),
    (["analyze", "0", "-4"], 1, lambda d: d["error"]["kind"] == "ReducibleInput"),
    (["analyze", "-1", "2", "--max-bits", "64"], 2, lambda d: d["result"]["verdict"]["kind"] == "UNKNOWN"),
    (["split2", "-1", "2", "5", "--verify"], 0, lambda d: d["result"]["match"] is True),
    (["split2", "0", "-2", "4"], 0, lambda d: d["result"]["predicted"]["entries"] == [{"e": 16, "f": 1, "count": 1}]),
    (["split2", "0", "3", "2"], 2, lambda d: d["error"]["kind"] == "Not2MaximalInput"),
    (["split2", "0", "-2", "3", "--verify"], 1, lambda d: d["error"]["kind"] == "UsageError"),
    (["oracle", "0", "-2", "2", "2"], 0, lambda d: d["result"]["banner"] == "AGREE"),
    (["oracle", "3", "9", "1", "3"], 0, lambda d: d["result"]["dedekind"]["p_maximal"] is False),
    (["oracle", "-1", "2", "3", "7"], 0, lambda d: d["result"]["banner"] == "AGREE"),
    (["pcf-scan", "h", "-5", "5"], 0, lambda d: d["result"]["summary"]["inconsistent"] == 0),
    (["--jobs", "4", "pcf-scan", "f", "-10", "10"], 0, lambda d: len(d["result"]["rows"]) == 21),
    (["pcf-scan", "q", "0", "1"], 1, None),
    (["factor2", "-1", "2", "5"], 0, lambda d: d["result"]["degrees"] == [1, 1, 2, 4, 4, 4, 8, 8]),
    (["factor2", "1", "1", "0"], 1, None),
    (["check-identities", "--suite", "all"], 0, lambda d: d["result"]["summary"]["fail"] == 0),
    (["check-identities", "--suite", "nope"], 1, None),
    (["--seed", "7", "repro"], 0, lambda d: d["result"]["summary"]["fail"] == 0 and d["provenance"]["seed"] == 7),
]


def main() -> int:
    binary, schema_path = sys.argv[1], Path(sys.argv[2])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for argv, want_code, check in CASES:
        proc = subprocess.run([binary, "--json", *argv], capture_output=True, text=True, timeout=300)
        label = " ".join(argv)
        problems = []
        if proc.returncode != want_code:
            problems.append(f"exit {proc.returncode}, wanted {want_code}")
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            problems.append(f"stdout is not JSON: {e}")
            doc = None
        if doc is not None:
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
            problems += [f"schema: {'/'.join(map(str, e.path))}: {e.message}" for e in errors[:5]]
            if check and not errors:
                try:
                    ok = check(doc)
                except (KeyError, TypeError) as e:
                    ok, problems = False, problems + [f"missing field {e}"]
                if not ok:
                    problems.append("content check failed")
            again = subprocess.run([binary, "--json", *argv], capture_output=True, text=True, timeout=300)
            if again.stdout != proc.stdout:
                problems.append("rerun output differs")
        status = "ok" if not problems else "FAIL"
        print(f"{status:4} [{proc.returncode}] {label}")
        for p in problems:
            print(f"     {p}")
        failures += bool(problems)

    # the text form carries the same document
    text = subprocess.run([binary, "analyze", "0", "-2"], capture_output=True, text=True).stdout
    if "kind: DYNAMICALLY_MONOGENIC_ALL_N" not in text or "schema_version: 1.0" not in text:
        print("FAIL text output missing verdict")
        failures += 1

    print(f"{len(CASES) - failures}/{len(CASES)} cases ok")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
