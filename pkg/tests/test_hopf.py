"""
Tests for counit, comultiplication and the Hopf-axiom checks.
"""

import os
import sys

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.errors import ParameterError
from algebra.ncpoly import NCPoly, TensorPoly
from algebra.scalar import Scalar
from cli.expr_parser import parse_expr
from presentations.base import Presentation
from presentations.factory import completed_presentation
from services.hopf_service import (
    check_hopf_axioms,
    comultiply,
    counit,
    make_hopf_structure,
)


def test_counit():
    """eps(u_ij) = delta_ij, extended multiplicatively."""
    print("\n═══ Test 1: Counit ═══")
    u2 = completed_presentation("U_plus", 2, 4)
    hopf = make_hopf_structure(u2)
    assert counit(parse_expr("u[1,2]", u2), hopf) == Scalar(0)
    assert counit(NCPoly.one(u2.alphabet), hopf) == Scalar(1)
    print("  ✓ eps(u12) = 0, eps(1) = 1")

    o2 = completed_presentation("O_plus", 2, 4)
    o_hopf = make_hopf_structure(o2)
    assert counit(parse_expr("v[1,1]*v[2,2] + 3*v[1,2]*v[2,1]", o2), o_hopf) == Scalar(1)
    print("  ✓ eps(v11 v22 + 3 v12 v21) = 1")

    an = completed_presentation("A_n", 2, 4)
    an_hopf = make_hopf_structure(an)
    assert counit(parse_expr("w[1,1,2,2]", an), an_hopf) == Scalar(1)
    assert counit(parse_expr("w[1,2,2,2]", an), an_hopf) == Scalar(0)
    print("  ✓ eps(w_ijkl) = delta_ij delta_kl")
    print("  PASSED")


def test_comultiply():
    """Delta(u11), Delta(1), Delta(z v11)."""
    print("\n═══ Test 2: Comultiplication ═══")
    u2 = completed_presentation("U_plus", 2, 4)
    hopf = make_hopf_structure(u2)
    g = lambda text: parse_expr(text, u2)
    expected = TensorPoly.pure(g("u[1,1]"), g("u[1,1]")) + TensorPoly.pure(g("u[1,2]"), g("u[2,1]"))
    assert comultiply(g("u[1,1]"), hopf) == expected
    assert comultiply(NCPoly.one(u2.alphabet), hopf) == TensorPoly.one(u2.alphabet)
    print("  ✓ Delta(u11) = u11 (x) u11 + u12 (x) u21, Delta(1) = 1 (x) 1")

    h2 = completed_presentation("H_n", 2, 4)
    h_hopf = make_hopf_structure(h2)
    h = lambda text: parse_expr(text, h2)
    expected = TensorPoly.pure(h("z*v[1,1]"), h("z*v[1,1]")) + TensorPoly.pure(h("z*v[1,2]"), h("z*v[2,1]"))
    assert comultiply(h("z*v[1,1]"), h_hopf) == expected
    print("  ✓ Delta(z v11) = sum_k z v1k (x) z vk1")

    su2 = completed_presentation("SU_minus1_2", 2, 6)
    s_hopf = make_hopf_structure(su2)
    s = lambda text: parse_expr(text, su2)
    expected = TensorPoly.pure(s("a"), s("a")) + TensorPoly.pure(s("g'"), s("g"))
    assert comultiply(s("a"), s_hopf) == expected
    print("  ✓ Delta(a) = a (x) a + g' (x) g at q = -1")
    print("  PASSED")


def test_axioms_hold():
    """Counit law, coassociativity, multiplicativity on small samples."""
    print("\n═══ Test 3: Hopf axioms ═══")
    cases = [("U_plus", 2, 4), ("S1", 1, 8), ("SU_minus1_2", 2, 6), ("H_n", 2, 4)]
    for name, n, degree in cases:
        presentation = completed_presentation(name, n, degree)
        report = check_hopf_axioms(make_hopf_structure(presentation), degree_bound=2, samples=4, seed=1)
        assert report.passed, [c.description for c in report.failures()]
        assert len(report.checks) == 6
        print(f"  ✓ {name}: all {len(report.checks)} checks pass")
    print("  PASSED")


def test_unknown_structure():
    """Presentations without tables are refused."""
    print("\n═══ Test 4: Unknown Hopf structure ═══")
    s1 = completed_presentation("S1", 1, 4)
    other = Presentation("Other", 1, s1.alphabet, [], s1.order)
    try:
        make_hopf_structure(other)
        assert False, "missing tables must be rejected"
    except ParameterError as e:
        assert "Available" in str(e)
    print("  ✓ ParameterError lists the available structures")
    print("  PASSED")


def main():
    tests = [
        test_counit,
        test_comultiply,
        test_axioms_hold,
        test_unknown_structure,
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
