"""
Tests for the command-line surface:

1. normalize / hopf-check / cocycle / dump-presentation exit codes and output
2. verify sizes and report JSON
"""

import contextlib
import io
import json
import os
import sys
import tempfile
from pathlib import Path

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cli.commands import run
from models.report_models import LemmaReport
from storage.presentation_store import PresentationStore


def _run(argv):
    """Run the CLI, returning (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


def test_normalize_command():
    """normalize prints canonical text; --json adds terms and certification."""
    print("\n═══ Test 1: normalize ═══")
    code, out, _ = _run(["normalize", "--alg", "su2", "g*a"])
    assert code == 0 and out.strip() == "-1*a*g"
    code, out, _ = _run(["normalize", "--alg", "o+", "--n", "2", "v[1,1]*v[1,1] + v[2,1]*v[2,1]"])
    assert code == 0 and out.strip() == "1"
    print("  ✓ ga -> -1*a*g, sum_k v_k1 v_k1 -> 1")

    code, out, _ = _run(["normalize", "--alg", "s1", "--json", "z*z'*z"])
    data = json.loads(out)
    assert code == 0
    assert data["algebra"] == "S1" and data["normal_form"] == "1*z" and data["certified"] is True
    assert data["terms"] == [{"word": ["z"], "re": "1", "im": "0"}]
    print("  ✓ --json output")

    code, _, err = _run(["normalize", "--alg", "o+", "v[1,1] + v[3,1]"])
    assert code == 2 and "col 10" in err
    code, _, err = _run(["normalize", "--alg", "s1", "1/0*z"])
    assert code == 2 and "denominator" in err and "col 1" in err
    code, _, err = _run(["normalize", "--alg", "s1", "z + (1/0+1i)"])
    assert code == 2 and "col 5" in err
    code, _, err = _run(["normalize", "g*a"])
    assert code == 2 and "--alg" in err
    code, _, err = _run(["normalize", "--alg", "sp+", "1"])
    assert code == 2 and "Unknown algebra" in err
    code, _, _ = _run(["no-such-command"])
    assert code == 2
    print("  ✓ input and usage errors exit 2")
    print("  PASSED")


def test_hopf_and_schema_commands():
    print("\n═══ Test 2: hopf-check and schema ═══")
    code, out, _ = _run(["hopf-check", "--alg", "s1", "--degree-bound", "2", "--samples", "3", "--json"])
    assert code == 0 and json.loads(out)["pass"] is True
    print("  ✓ hopf-check on S1 passes")

    code, out, _ = _run(["schema", "lemma-report"])
    schema = json.loads(out)
    assert code == 0 and "checks" in schema["properties"]
    print("  ✓ schema lemma-report")
    print("  PASSED")


def test_cocycle_commands():
    """inner / eval / check / solve-inner."""
    print("\n═══ Test 3: cocycle ═══")
    code, out, _ = _run(["cocycle", "inner", "--alg", "s1", "--xi", "z"])
    doc = json.loads(out)
    assert code == 0 and doc["module"] == "S1"
    assert [t["word"] for t in doc["values"]["z"]] == [["z"], ["z", "z"]]
    print("  ✓ inner cocycle document for xi = z")

    code, out, _ = _run(["cocycle", "eval", "z*z", "--alg", "s1", "--value", "z=1"])
    assert code == 0 and out.strip() == "1 + 1*z"
    print("  ✓ c(zz) = z c(z) + c(z) = 1 + z")

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "cocycle.json"
        path.write_text(json.dumps({"module": "S1", "n": 1, "values": {"z": "z*z - z"}}))
        code, out, _ = _run(["cocycle", "check", "--cocycle", str(path)])
        assert code == 0 and "PASS" in out
    print("  ✓ cocycle document with expression values passes check")

    values = ["--value", "v[1,1]=1", "--value", "v[1,2]=0", "--value", "v[2,1]=0", "--value", "v[2,2]=0"]
    code, out, _ = _run(["cocycle", "check", "--alg", "o+", "--degree", "4"] + values)
    assert code == 1 and "FAIL" in out
    code, _, err = _run(["cocycle", "check", "--alg", "o+", "--degree", "4", "--value", "v[1,1]=1"])
    assert code == 2 and "no value" in err
    print("  ✓ bad table exits 1, incomplete table exits 2")

    code, out, _ = _run(["cocycle", "solve-inner", "--alg", "s1", "--value", "z=1", "--bound", "3"])
    assert code == 0 and "no witness up to degree 3" in out
    code, out, _ = _run(["cocycle", "solve-inner", "--alg", "s1", "--value", "z=z*z - z", "--bound", "3", "--json"])
    assert code == 0 and json.loads(out)["witness"] is not None
    print("  ✓ solve-inner reports witnesses and their absence")
    print("  PASSED")


def test_dump_and_cache():
    """dump-presentation writes a reloadable document; --cache stores completions."""
    print("\n═══ Test 4: dump-presentation and complete ═══")
    with tempfile.TemporaryDirectory() as tmp:
        out_path = Path(tmp) / "s1.json"
        code, _, _ = _run(["dump-presentation", "--alg", "s1", "--degree", "4", "--out", str(out_path)])
        doc = json.loads(out_path.read_text())
        assert code == 0 and doc["name"] == "S1" and doc["certified_degree"] == 4 and len(doc["rules"]) == 2
        print("  ✓ S1 dumped with 2 rules")

        code, _, err = _run(["dump-presentation", "--alg", "h", "--degree", "4"])
        assert code == 2 and "factor by factor" in err
        print("  ✓ H_n dump refused")

        cache = Path(tmp) / "cache"
        code, _, _ = _run(["complete", "--alg", "s1", "--degree", "7", "--cache", str(cache)])
        assert code == 0
        assert "S1-n1-d7.json" in PresentationStore(str(cache)).list_cached()
        print("  ✓ complete --cache writes S1-n1-d7.json")
    print("  PASSED")


def test_verify_command():
    """verify passes --tables/--samples through; --json output validates as a LemmaReport."""
    print("\n═══ Test 5: verify ═══")
    code, out, _ = _run([
        "verify", "determination", "--degree", "4", "--tables", "3", "--samples", "5", "--seed", "2", "--json",
    ])
    data = json.loads(out)
    report = LemmaReport.model_validate(data)
    assert code == 0 and report.passed and data["pass"] is True
    assert report.parameters["tables"] == 3 and report.parameters["samples"] == 5
    code, schema_out, _ = _run(["schema", "lemma-report"])
    assert set(json.loads(schema_out)["required"]) <= set(data)
    print("  ✓ determination with 3 tables, 5 samples; JSON matches the report schema")

    code, out, _ = _run(["verify", "domain", "--samples", "30", "--control", "--json"])
    report = LemmaReport.model_validate(json.loads(out))
    assert code == 1 and not report.passed and report.parameters["samples"] == 30
    print("  ✓ domain control exits 1 with a valid report")

    code, _, err = _run(["verify", "determination", "--tables", "0"])
    assert code == 2 and "tables" in err
    print("  ✓ --tables 0 exits 2")
    print("  PASSED")


def main():
    tests = [
        test_normalize_command,
        test_hopf_and_schema_commands,
        test_cocycle_commands,
        test_dump_and_cache,
        test_verify_command,
    ]

    passed = 0
    failed = 0
    for test in tests:
        try:
            test()
            passed += 1
        except Exception as e:
            failed += 1
            print(f"  FAILED: {e}")
            import traceback
            traceback.print_exc()

    print("\n" + "=" * 60)
    print(f"Results: {passed} passed, {failed} failed out of {len(tests)}")
    print("=" * 60)

    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
