"""
Tests for the exact sparse solver.
"""

import os
import sys
from fractions import Fraction

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.scalar import Scalar
from services.linear_service import SparseLinearSystem


def _row(**coeffs):
    return {int(k[1:]): Scalar.coerce(v) for k, v in coeffs.items()}


def test_unique_solution():
    """x0 + x1 = 3, x0 - x1 = 1."""
    print("\n═══ Test 1: Unique solution ═══")
    system = SparseLinearSystem(2)
    system.add_equation(_row(c0=1, c1=1), Scalar(3))
    system.add_equation(_row(c0=1, c1=-1), Scalar(1))
    assert system.solve() == {0: Scalar(2), 1: Scalar(1)}
    assert system.rank == 2
    print("  ✓ x = (2, 1)")
    print("  PASSED")


def test_gaussian_rationals():
    """i x0 = 1 over Q(i)."""
    print("\n═══ Test 2: Complex coefficients ═══")
    system = SparseLinearSystem(1)
    system.add_equation({0: Scalar(0, 2)}, Scalar(1))
    assert system.solve() == {0: Scalar(0, Fraction(-1, 2))}
    print("  ✓ 2i x = 1 gives x = -i/2")
    print("  PASSED")


def test_inconsistent_and_free():
    """Contradictions return None; free variables are zero."""
    print("\n═══ Test 3: Inconsistent and underdetermined ═══")
    system = SparseLinearSystem(2)
    system.add_equation(_row(c0=1, c1=1), Scalar(1))
    system.add_equation(_row(c0=2, c1=2), Scalar(3))
    assert system.solve() is None
    print("  ✓ x + y = 1, 2x + 2y = 3 has no solution")

    system = SparseLinearSystem(3)
    system.add_equation(_row(c0=1, c2=1), Scalar(4))
    solution = system.solve()
    assert solution == {0: Scalar(4)}
    print("  ✓ free variables set to zero")

    try:
        system.add_equation({5: Scalar(1)}, Scalar(0))
        assert False, "out-of-range column must raise"
    except IndexError:
        pass
    print("  ✓ column outside the system rejected")
    print("  PASSED")


def main():
    tests = [
        test_unique_solution,
        test_gaussian_rationals,
        test_inconsistent_and_free,
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
