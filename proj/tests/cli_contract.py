#!/usr/bin/env python3
# Copyright 2026 The k3nine authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Contract tests for the command-line interface: exit codes, JSON shapes,
byte-for-byte determinism, and the corrupted-fixture self-test."""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
DATA = sys.argv[2]

failures = []


def check(name, cond, detail=""):
    status = "ok" if cond else "FAIL"
    print(f"[{status}] {name}" + (f" -- {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def run(*args, data=DATA):
    cmd = [BIN, "--data", data, *args]
    return subprocess.run(cmd, capture_output=True, text=True)


def run_json(*args, data=DATA):
    r = run(*args, data=data)
    doc = json.loads(r.stdout) if r.stdout.strip().startswith(("{", "[")) else None
    return r, doc


def fnv1a64(data: bytes) -> str:
    h = 14695981039346656037
    for b in data:
        h ^= b
        h = (h * 1099511628211) % (1 << 64)
    return f"{h:016x}"


# ---- lefschetz ------------------------------------------------------------
r, doc = run_json("lefschetz", "--order", "9", "--k", "3", "--isolated-only")
check("lefschetz (9,3) exits 0", r.returncode == 0, r.stderr)
check("lefschetz (9,3) inconsistent", doc and doc["consistent"] is False)
check("lefschetz (9,3) types", doc and [[t["i"], t["j"]] for t in doc["types"]] ==
      [[1, 2], [4, 8], [5, 7]])

r, doc = run_json("lefschetz", "--order", "9", "--k", "1", "--enumerate")
check("lefschetz (9,1) exits 0", r.returncode == 0, r.stderr)
check("lefschetz (9,1) has 3 relations", doc and len(doc["relations"]) == 3)
check("lefschetz (9,1) enumerates 31 solutions", doc and len(doc["solutions"]) == 31)

r, doc = run_json("lefschetz", "--order", "3", "--k", "1")
check("lefschetz (3,1) relation", doc and
      doc["relation_strings"] == ["a_{2,2} - alpha = 3"])

r = run("lefschetz", "--order", "9")
check("missing required flag exits 2", r.returncode == 2)

# ---- classify ------------------------------------------------------------
r, doc = run_json("classify", "--axioms", "full", "--diff")
check("classify --diff exits 0", r.returncode == 0, r.stderr)
check("classify emits 13 rows", doc and doc["count"] == 13)
check("classify matches the table", doc and doc["match"] is True)

r, doc = run_json("classify", "--axioms", "combinatorial")
check("combinatorial superset", doc and doc["count"] > 13)
check("superset rows flagged", doc and any(not row["reference"] for row in doc["rows"]))
check("superset contains the table", doc and
      sum(1 for row in doc["rows"] if row["reference"]) == 13)

r, doc = run_json("classify", "--case", "D")
check("case D has four rows", doc and [row["id"] for row in doc["rows"]] ==
      ["D1", "D3", "D2", "D4"])

r, doc = run_json("classify", "--explain", "B")
check("explain B exits 0", r.returncode == 0, r.stderr)
check("explain B cites the hyperelliptic axiom",
      doc and any("AX-HYPER" in line for line in doc["trace"]))

r = run("classify", "--axioms", "AX-BOGUS")
check("unknown axiom exits 2", r.returncode == 2)

r = run("classify", "--case", "Z")
check("unknown case exits 2", r.returncode == 2)

r = run("classify", data="/nonexistent")
check("missing dataset exits 2", r.returncode == 2)

# ---- lattice ---------------------------------------------------------------
r, doc = run_json("lattice", "U+E8")
check("lattice U+E8", r.returncode == 0 and doc["determinant"] == "-1" and doc["rank"] == 10)
r, doc = run_json("lattice", "U(3)+A2")
check("lattice U(3)+A2", doc["rank"] == 4 and doc["determinant"] == "-27" and
      doc["signature"] == [1, 3])
r, doc = run_json("lattice", "U+E6+E8")
check("lattice U+E6+E8 rank 16", doc["rank"] == 16)
r = run("lattice", "E7")
check("unsupported atom exits 2", r.returncode == 2)

# ---- fibration --------------------------------------------------------------
r, doc = run_json("fibration", "--b", "t*(t^3-1)*(t^3-2)*(t^3-3)")
check("fibration census", r.returncode == 0 and doc["euler_total"] == 24 and doc["k3"] is True)
types = sorted((p["kodaira"], p["count"]) for p in doc["places"])
check("fibration places", types == [("II", 10), ("IV", 1)])

r, doc = run_json("fibration", "--bisection", "t^4*(t^3-2)^2")
check("bisection splits", doc["bisection"] == "splits")
r, doc = run_json("fibration", "--bisection", "t*(t^3-1)*(t^3-2)*(t^3-3)")
check("bisection genus 4", doc["bisection"] == 4)
r = run("fibration", "--a", "0", "--b", "0")
check("degenerate model exits 2", r.returncode == 2)

# ---- monomials --------------------------------------------------------------
r, doc = run_json("monomials", "--order", "9", "--weights", "0,3,6,1", "--degree", "4")
check("monomials A2 count", r.returncode == 0 and doc["count"] == 6)
check("monomials A2 set", "x0^2*x1*x2" in doc["monomials"])
r, doc = run_json("monomials", "--order", "9", "--weights", "0,0,3,1", "--degree", "4")
check("excluded action screen", any(v["necessarily_singular"] and v["coordinate"] == 3
                                    for v in doc["screen"]))

# ---- verify-paper -----------------------------------------------------------
r1 = run("verify-paper")
check("verify-paper exits 0", r1.returncode == 0, r1.stdout + r1.stderr)
check("verify-paper prints per-check lines", "[ok]" in r1.stdout and "[FAIL]" not in r1.stdout)
check("verify-paper carries the computed-vs-text note", "note:" in r1.stdout)
r2 = run("verify-paper")
check("verify-paper deterministic", r1.stdout == r2.stdout)

r, doc = run_json("verify-paper", "--json")
check("verify-paper --json", doc["pass"] is True and doc["failed"] == 0)
check("verify-paper check count", doc["total"] == 3 + 8 + 7 + 3)

# ---- corrupted fixture self-test ---------------------------------------------
with tempfile.TemporaryDirectory() as tmp:
    for name in ("table1.json", "table2.json", "fixtures.json"):
        shutil.copy(Path(DATA) / name, Path(tmp) / name)
    p = Path(tmp) / "table1.json"
    doc = json.loads(p.read_text())
    doc["records"][4]["r"] = 9  # corrupt row D1, keep the digest consistent
    payload = json.dumps(doc["records"], sort_keys=True, separators=(",", ":"))
    doc["fnv1a64"] = fnv1a64(payload.encode())
    p.write_text(json.dumps(doc, indent=2, sort_keys=True))

    r = run("verify-paper", data=tmp)
    check("corrupted table: verify-paper exits 1", r.returncode == 1, r.stdout)
    check("corrupted table: failing row named", "D1" in r.stdout)
    r, doc = run_json("classify", "--diff", data=tmp)
    check("corrupted table: classify --diff exits 1", r.returncode == 1)
    check("corrupted table: diff names the row",
          "D1" in json.dumps(doc["diff"]["missing"]) or
          any(row["id"].startswith("D-x") for row in doc["diff"]["extra"]))

    # tampering without fixing the digest is caught by the loader
    doc = json.loads(p.read_text())
    doc["records"][4]["r"] = 10
    p.write_text(json.dumps(doc, indent=2, sort_keys=True))
    r = run("verify-paper", data=tmp)
    check("digest mismatch exits 2", r.returncode == 2)
    check("digest mismatch message", "integrity digest mismatch" in r.stderr)

print()
if failures:
    print(f"cli contract: {len(failures)} checks failed: {failures}")
    sys.exit(1)
print("cli contract: all checks passed")
