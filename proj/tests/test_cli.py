#!/usr/bin/env python3
"""End-to-end checks of the command line tool: exit codes, output shapes,
determinism, and the JSON round trip."""
import json
import os
import subprocess
import sys

BIN = os.environ.get("LIECURRENT_BIN", "build/tools/liecurrent")
failures = 0


def run(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([BIN, *args], capture_output=True, text=True,
                          env=env)


def check(label, cond):
    global failures
    print(("ok  " if cond else "FAIL") + " " + label)
    if not cond:
        failures += 1


# exit 0 with a full passing suite
r = run("verify", "--case", "A3", "--algebra", "sl2", "--window", "-10:6",
        "--depth", "4")
check("verify A3 exit 0", r.returncode == 0)
check("verify A3 prints RESULT: PASS", "RESULT: PASS" in r.stdout)

# exit 2 on degenerate parameters
r = run("verify", "--case", "A4", "--m1", "1", "--m2", "1", "--algebra",
        "sl2")
check("degenerate A4 exit 2", r.returncode == 2)

# json output parses, has the schema marker, and all checks pass
r = run("verify", "--case", "A1", "--algebra", "sl2", "--format", "json")
check("verify json exit 0", r.returncode == 0)
doc = json.loads(r.stdout)
check("schema report_v1", doc.get("schema") == "report_v1")
check("all checks pass", all(c["status"] == "pass" for c in doc["checks"]))

# byte-identical reruns (determinism) and thread-cap indifference
r2 = run("verify", "--case", "A1", "--algebra", "sl2", "--format", "json")
check("rerun is byte-identical", r.stdout == r2.stdout)
r3 = run("verify", "--case", "A1", "--algebra", "sl2", "--format", "json",
         env_extra={"LIECURRENT_THREADS": "0"})
check("serial run is byte-identical", r.stdout == r3.stdout)
r4 = run("verify", "--case", "A1", "--algebra", "sl2", "--format", "json",
         env_extra={"LIECURRENT_THREADS": "4"})
check("threaded run is byte-identical", r.stdout == r4.stdout)

# parse + re-render round trip
canon = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
check("json round trip", canon == r.stdout)

# A4 with valid parameters
r = run("verify", "--case", "A4", "--m1", "1", "--m2", "2", "--algebra",
        "sl2", "--format", "json")
doc = json.loads(r.stdout)
check("A4 verify exit 0", r.returncode == 0)
check("A4 carries m1/m2", doc["m1"] == "1" and doc["m2"] == "2")

# --output writes the same bytes to a file
import tempfile
with tempfile.TemporaryDirectory() as td:
    path = os.path.join(td, "rep.json")
    r = run("verify", "--case", "A1", "--algebra", "sl2", "--format", "json",
            "--output", path)
    check("output file written", r.returncode == 0 and os.path.exists(path))
    with open(path) as f:
        onfile = f.read()
    r2 = run("verify", "--case", "A1", "--algebra", "sl2", "--format",
             "json")
    check("file matches stdout bytes", onfile == r2.stdout)

# bd enumeration
r = run("bd", "--algebra", "sl2", "--vertex", "1", "--format", "json")
doc = json.loads(r.stdout)
check("bd sl2 has 2 triples", doc["count"] == 2 and len(doc["triples"]) == 2)
check("bd v_dims", [t["v_dim"] for t in doc["triples"]] == [1, 0])
r = run("bd", "--algebra", "g2", "--vertex", "2")
check("bd g2 runs", r.returncode == 0)

# trace tools
r = run("trace", "classify", "--poly", "1,-3,2")
check("classify A4 j=9/2", r.returncode == 0 and "A4, j=9/2" in r.stdout)
r = run("trace", "normalize", "--n", "0", "--alpha", "1,0,0", "--order", "6")
check("normalize exit 0", r.returncode == 0 and "pass" in r.stdout)
r = run("trace", "normalize", "--n", "2", "--alpha", "1", "--order", "4")
check("obstructed normalize exit 1", r.returncode == 1)

# export
r = run("export", "--what", "algebra", "--algebra", "sl3")
doc = json.loads(r.stdout)
check("algebra export dim 8", doc["dim"] == 8)
r = run("export", "--what", "rmatrix", "--algebra", "sl2", "--case", "A2")
doc = json.loads(r.stdout)
check("rmatrix export case", doc["case"] == "A2" and doc["denom_power"] == 1)

sys.exit(1 if failures else 0)
