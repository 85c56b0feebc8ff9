#!/usr/bin/env python3
"""Black-box checks of the command line binary: JSON shapes, exit
codes, byte-stable output, batch mode, and the on-disk polynomial
cache. Usage: cli_smoke.py /path/to/swanlab"""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = 0


def run(args, expect_code, env=None):
    global failures
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [BIN] + args, capture_output=True, text=True, env=full_env
    )
    if proc.returncode != expect_code:
        failures += 1
        print(
            f"FAIL exit {proc.returncode} != {expect_code}: {args}\n"
            f"  stdout: {proc.stdout[:400]}\n  stderr: {proc.stderr[:400]}"
        )
        return None
    try:
        doc = json.loads(proc.stdout)
    except json.JSONDecodeError:
        failures += 1
        print(f"FAIL not JSON: {args}\n  stdout: {proc.stdout[:400]}")
        return None
    return proc.stdout, doc


def check(cond, what):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {what}")


# conductor, happy path
out = run(
    ["conductor", "-p", "3", "--residue", "perfect", "--witt", '["pi^-2"]'],
    0,
)
if out:
    raw, doc = out
    check(doc["schema"] == "swanlab/1", "schema tag")
    check(doc["sw"] == 2 and doc["sw_mod"] == 2, "conductor values")
    check(doc["rsw"]["beta"] == "2", "rsw beta")
    check(doc["slope"] == 3 and doc["log_slope"] == 2, "slopes")
    again = run(
        ["conductor", "-p", "3", "--residue", "perfect", "--witt",
         '["pi^-2"]'],
        0,
    )
    check(again and again[0] == raw, "byte-stable output")

# exit 2 on the unsupported corner, result still emitted
out = run(
    ["conductor", "-p", "2", "--residue", "rational", "--witt",
     '["y*pi^-2"]'],
    2,
)
if out:
    check(out[1]["status"] == "unsupported_range", "corner status")
    check(out[1]["sw"] == 2, "corner still reports sw")

# exit 3 when budgets bite
out = run(
    ["conductor", "-p", "2", "--witt", '["pi^-8"]', "--budget", "0",
     "--phase1-cap", "1"],
    3,
)
if out:
    check(out[1]["status"] == "budget_exceeded", "budget status")

# exit 1 with a positioned error on bad input
out = run(["conductor", "-p", "2", "--witt", '["pi^-2 + @"]'], 1)
if out:
    check(out[1]["status"] == "error", "parse error status")
    check("position" in out[1], "parse error position")

# filtration table
out = run(
    ["filtration", "-p", "2", "--residue", "rational", "--witt",
     '["y*pi^-2"]', "--n-range", "0..3"],
    0,
)
if out:
    check(out[1]["fil"] == [False, False, True, True], "fil table")
    check(out[1]["fil_mod"] == [False, True, True, True], "fil_mod table")

# reduce
out = run(["reduce", "-p", "2", "--witt", '["pi^-4+pi^-1"]'], 0)
if out:
    check(out[1]["level"] == 0 and out[1]["reduced"] == ["0"], "reduce to 0")

# normalform
out = run(
    ["normalform", "-p", "2", "--residue", "rational", "--basis", "log",
     "-n", "2", "--alpha", "1", "--beta", "0"],
    0,
)
if out:
    check(out[1]["in_image"] is True, "normal form in image")

# witt arithmetic
out = run(
    ["witt", "-p", "2", "--op", "add", "--witt", '["pi^-1"]', "--other",
     '["pi^-1"]'],
    0,
)
if out:
    check(out[1]["result"] == ["0"], "witt add cancels")

# batch file: order kept, worst exit code wins
with tempfile.TemporaryDirectory() as tmp:
    jobs = {
        "jobs": [
            {"field": {"p": 3, "residue": "perfect"}, "witt": ["pi^-2"]},
            {"field": {"p": 2, "residue": "perfect"}, "witt": ["pi^-3"]},
        ]
    }
    path = os.path.join(tmp, "jobs.json")
    with open(path, "w") as fh:
        json.dump(jobs, fh)
    out = run(["conductor", "--jobs", path], 0)
    if out:
        check(
            [j["sw"] for j in out[1]["jobs"]] == [2, 3], "batch order"
        )

    # polynomial cache: populated on first use, byte-identical reuse
    cache = os.path.join(tmp, "cache")
    env = {"SWANLAB_CACHE_DIR": cache}
    witt_args = [
        "witt", "-p", "2", "--op", "add", "--witt", '["pi^-1","0"]',
        "--other", '["0","pi^-1"]',
    ]
    first = run(witt_args, 0, env=env)
    check(os.path.isdir(cache) and os.listdir(cache), "cache populated")
    second = run(witt_args, 0, env=env)
    if first and second:
        check(first[0] == second[0], "cache run identical")

# selftest on one suite, machine-readable summary
out = run(["selftest", "--suite", "render-roundtrip"], 0)
if out:
    check(out[1]["passed"] is True, "selftest suite passes")

# unknown flags are an error, help is not
run(["conductor", "--frobnicate"], 1)
proc = subprocess.run([BIN, "--help"], capture_output=True, text=True)
check(proc.returncode == 0 and "conductor" in proc.stdout, "help text")

if failures:
    print(f"{failures} cli smoke failure(s)")
    sys.exit(1)
print("cli smoke ok")
