"""Drives the svred executable through pipelines and checks exit codes and schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
registry = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in schemas.values())
failures = []


def run(args, stdin=""):
    proc = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout


def validate(schema, text):
    jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(json.loads(text))


def case(label, family, params, command, expected_exit, schema):
    _, doc = run(["family", family, *params])
    validate("family", doc)
    code, out = run(command, doc)
    again = run(command, doc)
    problems = []
    if code != expected_exit:
        problems.append(f"exit {code}, expected {expected_exit}")
    if again != (code, out):
        problems.append("output differs between runs")
    try:
        validate(schema if code != 2 else "error", out)
    except Exception as e:
        problems.append(f"schema: {e}".splitlines()[0])
    status = "ok" if not problems else "FAIL"
    print(f"{status:4} {label}: exit {code}" + ("" if not problems else " " + "; ".join(problems)))
    if problems:
        failures.append(label)
    return out


sv_families = [("dual-ci", ["2,2"]), ("dual-ci", ["3,2"]), ("dual-ci-sum", ["2,2+2,2"])]
for fam, params in sv_families:
    name = f"{fam} {' '.join(params)}"
    case(f"{name} | check --mode sv", fam, params, ["check", "--mode", "sv"], 0, "check")
    case(f"{name} | reduce", fam, params, ["reduce"], 0, "reduce")
    case(f"{name} | verify", fam, params, ["verify"], 0, "verify")
    case(f"{name} | invariants --certify", fam, params, ["invariants", "--certify"], 0, "invariants")
    case(f"{name} | search --certify", fam, params, ["search", "--certify"], 0, "search")

out = case("dual-ci 2,2 | check --mode sv", "dual-ci", ["2,2"], ["check", "--mode", "sv"], 0, "check")
if not json.loads(out)["witnesses"]:
    failures.append("dual-ci witness table empty")

for r in ["2", "3"]:
    case(f"even-cycle {r} | check --mode ba", "even-cycle", [r], ["check", "--mode", "ba"], 0, "check")
    case(f"even-cycle {r} | verify", "even-cycle", [r], ["verify"], 0, "verify")
for m in ["2", "3"]:
    out = case(f"hypersurface {m} | check --mode sv", "hypersurface", [m], ["check", "--mode", "sv"], 1, "check")
    if json.loads(out)["failure"]["elements_text"] != ["x", "y"]:
        failures.append(f"hypersurface {m} failing pair")
    case(f"hypersurface {m} | check --mode b", "hypersurface", [m], ["check", "--mode", "b", "--m-max", m], 0, "check")
    case(f"hypersurface {m} | verify", "hypersurface", [m], ["verify"], 0, "verify")
case("binomial | check --mode sv", "binomial", [], ["check", "--mode", "sv"], 1, "check")
case("binomial | check --mode b", "binomial", [], ["check", "--mode", "b", "--m-max", "4"], 0, "check")
case("k5 2,3,4,5 | verify", "k5", ["2,3,4,5"], ["verify"], 0, "verify")
out = case("k5 1,2,3,4 | verify", "k5", ["1,2,3,4"], ["verify"], 1, "verify")
if json.loads(out)["failed_stage"] != "oracle":
    failures.append("k5 1,2,3,4 failed stage")
case("k5 | search --r-target 3", "k5", [], ["search", "--r-target", "3"], 1, "search")

# reduce output feeds verify
_, doc = run(["family", "dual-ci", "2,2"])
_, reduced = run(["reduce"], doc)
code, out = run(["verify"], reduced)
validate("verify", out)
validate("certificate", json.dumps(json.loads(reduced)["certificate"]))
print(f"{'ok' if code == 0 else 'FAIL':4} reduce | verify: exit {code}")
if code != 0:
    failures.append("reduce | verify")

# the session printed by family re-parses as grammar input
session = json.loads(doc)["session"]
code, out = run(["check", "--mode", "sv"], session)
print(f"{'ok' if code == 0 else 'FAIL':4} session text | check --mode sv: exit {code}")
if code != 0:
    failures.append("session text")

# usage and parse errors
for label, args, stdin in [
    ("parse error", ["check", "--mode", "sv"], "ring R = vars x; ideal I = x*;"),
    ("unknown family", ["family", "nope"], ""),
    ("missing mode", ["check"], "ring R = vars x; ideal I = x;"),
]:
    code, out = run(args, stdin)
    ok = code == 2
    if out.strip():
        try:
            validate("error", out)
        except Exception:
            ok = False
    print(f"{'ok' if ok else 'FAIL':4} {label}: exit {code}")
    if not ok:
        failures.append(label)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
