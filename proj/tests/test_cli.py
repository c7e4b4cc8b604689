#!/usr/bin/env python3
"""End-to-end checks of the command-line interface (text and JSON forms,
exit codes). Usage: test_cli.py /path/to/fiblucas"""

import json
import subprocess
import sys

BIN = sys.argv[1]
failures = 0


def run(*args, expect_code=0):
    global failures
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    if proc.returncode != expect_code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode} != {expect_code}\n"
              f"  stdout: {proc.stdout[:400]}\n  stderr: {proc.stderr[:400]}")
    return proc


def check(cond, label):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {label}")
    else:
        print(f"ok   {label}")


# gen: F_5 = phi^{1,1}_4 = x^4 + 3x^2 + 1
p = run("gen", "--kind", "phi", "--a", "1", "--b", "1", "--deg", "4")
check(p.stdout.strip() == "x^4 + 3*x^2 + 1", "gen text form")

p = run("--json", "gen", "--family", "chebyshev-t", "--deg", "4")
doc = json.loads(p.stdout)
check(doc["poly"]["coeffs"] == [["1", "1"], ["0", "1"], ["-8", "1"], ["0", "1"], ["8", "1"]],
      "gen chebyshev-t JSON coeffs (display scale 1/2)")
check(doc["family"] == "chebyshev-t", "gen family tag")

# rationals parse as p/q
p = run("gen", "--kind", "psi", "--a", "1/2", "--b", "-1/3", "--deg", "2")
check(p.stdout.strip() == "1/4*x^2 - 2/3", "gen rational parameters")

# hyp: 2F1(-1,-2;-3;1) = 1/3
p = run("hyp", "--m", "1", "--a2", "-2", "--b1", "-3", "--z", "1")
check(p.stdout.strip() == "1/3", "hyp exact value")

# connect with verification, JSON schema {degree, terms, verified}
p = run("--json", "connect", "--from", "phi:1,1", "--to", "psi:1,1", "--deg", "2", "--verify")
doc = json.loads(p.stdout)
check(doc["verified"] is True and doc["degree"] == 2, "connect verified JSON")
check(doc["terms"] == [{"m": 0, "coeff": "1"}, {"m": 1, "coeff": "-1/2"}],
      "connect F_3 = psi_2 - (1/2) psi_0")

# invert
p = run("--json", "invert", "--kind", "psi", "--a", "2", "--b", "-1", "--deg", "4", "--verify")
doc = json.loads(p.stdout)
check(doc["verified"] is True and doc["terms"][0]["coeff"] == "1/16", "invert verified JSON")

# numbers
p = run("numbers", "--suite", "--imax", "40")
check("0 failures" in p.stdout, "numbers suite")
p = run("--json", "numbers", "--from", "P", "--to", "Q", "--i", "3")
doc = json.loads(p.stdout)
check(doc["verified"] is True and doc["lhs"] == "12", "cross-family P_4 = Q_3 - Q_1")

# integral JSON schema {pi_coeff, quad_residual}
p = run("--json", "integral", "--which", "phiT", "--a", "1", "--b", "1",
        "--i", "1", "--j", "1", "--quad-check")
doc = json.loads(p.stdout)
check(doc["pi_coeff"] == "1/2" and abs(doc["quad_residual"]) < 1e-10, "integral phiT JSON")

p = run("--json", "integral", "--which", "psiU", "--a", "2", "--b", "-1", "--i", "2", "--j", "2")
check(json.loads(p.stdout)["pi_coeff"] == "1/2", "integral psiU value")

# radical: cbrt(7 + 5 sqrt2) + cbrt(7 - 5 sqrt2) = 2
p = run("radical", "--mode", "odd", "--a", "1", "--b", "1", "--x", "2", "--k", "3")
check("7 + 5*sqrt(2)" in p.stdout and "root sum:  2" in p.stdout, "radical odd text")

p = run("--json", "radical", "--mode", "composed-even", "--a", "1", "--b", "-1",
        "--x", "110", "--k", "6")
check(json.loads(p.stdout)["value"] == "110", "Ramanujan radical via CLI")

# denest JSON schema {status, value, witness}
p = run("--json", "denest", "--k", "3", "--u", "7", "--v", "5", "--d", "2")
doc = json.loads(p.stdout)
check(doc["status"] == "Denested" and doc["value"] == {"p": "1", "q": "1", "d": "2"},
      "denest 7+5*sqrt(2) -> 1+sqrt(2)")
check(doc["witness"]["b"] == "1" and doc["witness"]["branch"] == "plus", "denest witness")

p = run("--json", "denest", "--k", "3", "--u", "1", "--v", "1", "--d", "7919")
check(json.loads(p.stdout)["status"] == "NotRecognized", "denest NotRecognized")

# same-class connection routes through the CLI
p = run("--json", "connect", "--from", "psi:3,-2", "--to", "psi:1,1", "--deg", "5", "--verify")
check(json.loads(p.stdout)["verified"] is True, "connect psi->psi verified")
p = run("--json", "connect", "--from", "phi:2,-1", "--to", "phi:1,1", "--deg", "2", "--verify")
doc = json.loads(p.stdout)
check(doc["terms"] == [{"m": 0, "coeff": "4"}, {"m": 1, "coeff": "-5"}],
      "connect U_2 = 4 F_3 - 5 F_1")
run("connect", "--from", "junk", "--to", "psi:1,1", "--deg", "2", expect_code=2)
print("ok   malformed --from exits 2")
run("gen", "--family", "nope", "--deg", "2", expect_code=2)
print("ok   unknown family exits 2")

# rational radicand shortcut
p = run("--json", "denest", "--k", "3", "--u", "8", "--v", "0", "--d", "0")
check(json.loads(p.stdout)["value"]["p"] == "2", "denest cube root of 8")

# --cases includes the full case list
p = run("--json", "verify-all", "--imax", "2", "--cases")
doc = json.loads(p.stdout)
check(all("cases" in s for s in doc["suites"]) and
      sum(len(s["cases"]) for s in doc["suites"]) == doc["summary"]["pass"] +
      doc["summary"]["fail"] + doc["summary"]["skipped"], "verify-all --cases list")

# precision flag drives decimal rendering
p = run("--precision", "12", "radical", "--mode", "even", "--a", "1", "--b", "1",
        "--x", "2", "--k", "4")
check("2.828427124746" in p.stdout, "precision flag (sqrt(8) to 12 digits)")

# verify-all: exit 0 on pass, 1 on corrupted build, 2 on usage error
p = run("verify-all", "--imax", "2")
check("total:" in p.stdout and "0 failed" in p.stdout, "verify-all text summary")

p = run("--json", "--seed", "5", "verify-all", "--imax", "2")
doc = json.loads(p.stdout)
check(doc["summary"]["fail"] == 0 and doc["options"]["seed"] == 5, "verify-all JSON")
q = run("--json", "--seed", "5", "verify-all", "--imax", "2")
check(p.stdout == q.stdout, "verify-all byte-identical for same seed")

run("verify-all", "--imax", "2", "--corrupt", expect_code=1)
print("ok   verify-all --corrupt exits 1")

run("gen", "--kind", "phi", "--a", "0", "--b", "1", "--deg", "3", expect_code=2)
print("ok   zero parameter exits 2")
run("gen", "--deg", "oops", expect_code=2)
print("ok   malformed flag exits 2")
run("nonsense", expect_code=2)
print("ok   unknown subcommand exits 2")
run("hyp", "--m", "2", "--a2", "5", "--b1", "-1", "--z", "1", expect_code=1)
print("ok   2F1 pole exits 1")
run("radical", "--mode", "odd", "--a", "1", "--b", "-1", "--x", "1", "--k", "3", expect_code=1)
print("ok   out-of-domain radical exits 1")

print(f"{failures} failures")
sys.exit(1 if failures else 0)
