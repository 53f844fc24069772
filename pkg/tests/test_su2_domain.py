"""
Tests for the Pol(SU_-1(2)) basis oracle and the zero-divisor test.
"""

import os
import random
import sys

import sympy

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.errors import AlphabetError, DegreeError, ParameterError
from algebra.words import circle_alphabet, su2_alphabet
from cli.expr_parser import parse_expr
from services.su2_service import (
    SU2Normal,
    claim1_poly,
    deg_alpha,
    deg_gamma,
    domain_test,
    random_su2_element,
    su2_adjoint,
    su2_mul,
    su2_normal_form,
    unit_failures,
)
from utils.sampling import random_poly

t = sympy.Symbol("t")


def _nf(text):
    return su2_normal_form(parse_expr(text, su2_alphabet()))


def test_basis_expansion():
    """Defining relations read off in the basis a^i g^j g'^k."""
    print("\n═══ Test 1: Basis expansion ═══")
    assert _nf("a*a'") == SU2Normal({(0, 0, 0): 1, (0, 1, 1): -1})
    assert _nf("a'*a") == SU2Normal({(0, 0, 0): 1, (0, 1, 1): -1})
    assert _nf("g*a") == SU2Normal.monomial(1, 1, 0, -1)
    assert _nf("g'*g") == SU2Normal.monomial(0, 1, 1)
    assert _nf("a'*g'*a") == SU2Normal.monomial(0, 1, 2) - SU2Normal.monomial(0, 0, 1)
    print("  ✓ aa' = a'a = 1 - gg', ga = -ag, g'g = gg', a'g'a = gg'g' - g'")

    try:
        su2_normal_form(parse_expr("z", circle_alphabet()))
        assert False, "foreign alphabet must be rejected"
    except AlphabetError:
        pass
    print("  ✓ elements outside Pol(SU_-1(2)) rejected")
    print("  PASSED")


def test_degrees():
    """deg_alpha and deg_gamma read off exponents."""
    print("\n═══ Test 2: Degrees ═══")
    x = SU2Normal({(2, 1, 0): 1, (-1, 0, 1): 1})
    assert deg_alpha(x) == 2
    assert deg_gamma(x) == 1
    assert deg_alpha(SU2Normal.one()) == 0 and deg_gamma(SU2Normal.one()) == 0
    print("  ✓ a^2 g + a' g': (2, 1); 1: (0, 0)")

    for fn in (deg_alpha, deg_gamma):
        try:
            fn(SU2Normal())
            assert False, "degree of zero must raise"
        except DegreeError:
            pass
    print("  ✓ degree of zero undefined")
    print("  PASSED")


def test_merge_polynomials():
    """a^i a^j = a^(i+j) p_ij(gg')."""
    print("\n═══ Test 3: Alpha-power merge polynomials ═══")
    assert claim1_poly(1, -1).as_expr() == 1 - t
    assert claim1_poly(2, 3).as_expr() == 1
    assert claim1_poly(1, -3).as_expr() == 1 - t
    assert sympy.expand(claim1_poly(-2, 3).as_expr() - (1 - t) ** 2) == 0
    print("  ✓ p(1,-1) = 1-t, p(2,3) = 1, p(1,-3) = 1-t, p(-2,3) = (1-t)^2")

    a = SU2Normal.monomial(1)
    a_star = SU2Normal.monomial(-1)
    for i in range(-3, 4):
        for j in range(-3, 4):
            letters = [a if i > 0 else a_star] * abs(i) + [a if j > 0 else a_star] * abs(j)
            folded = SU2Normal.one()
            for letter in letters:
                folded = folded * letter
            assert folded == SU2Normal.monomial(i) * SU2Normal.monomial(j), (i, j)
    print("  ✓ letter-by-letter products agree with the closed formula for |i|, |j| <= 3")
    print("  PASSED")


def test_algebra_laws():
    """Unit, associativity and the involution on samples."""
    print("\n═══ Test 4: Algebra laws ═══")
    rng = random.Random(9)
    for _ in range(25):
        x = random_su2_element(rng, 2, 2, max_terms=3)
        y = random_su2_element(rng, 2, 2, max_terms=3)
        w = random_su2_element(rng, 2, 2, max_terms=3)
        assert SU2Normal.one() * x == x
        assert (x * y) * w == x * (y * w)
        assert su2_adjoint(su2_adjoint(x)) == x
        assert su2_adjoint(x * y) == su2_adjoint(y) * su2_adjoint(x)
    print("  ✓ unit, associativity, (xy)* = y* x* on 25 triples")

    alphabet = su2_alphabet()
    for _ in range(15):
        p = random_poly(alphabet, rng, 3)
        assert su2_adjoint(su2_normal_form(p)) == su2_normal_form(p.adjoint())
    print("  ✓ oracle involution matches the free-algebra adjoint")
    print("  PASSED")


def test_domain():
    """No zero divisors; deg_alpha is additive."""
    print("\n═══ Test 5: Zero-divisor test ═══")
    a, g = SU2Normal.monomial(1), SU2Normal.monomial(0, 1, 0)
    product = (a + g) * (a - g)
    assert not product.is_zero()
    assert product.terms[(2, 0, 0)] == 1
    print("  ✓ (a + g)(a - g) has a^2 coefficient 1")

    report = domain_test(100, 3, 3, seed=42)
    assert report.passed
    assert report.pairs_checked == 103
    print(f"  ✓ {report.pairs_checked} pairs, no failures")

    corrupted = domain_test(20, 2, 2, seed=0, corrupt=True)
    assert not corrupted.passed
    assert corrupted.failures[0].kind in ("zero_product", "degree_not_additive")
    assert su2_mul(a, SU2Normal.monomial(-1), corrupt=True).is_zero()
    print("  ✓ dropping the merge polynomial is caught")

    try:
        domain_test(0, 3, 3)
        assert False, "samples < 1 must be rejected"
    except ParameterError:
        pass
    print("  ✓ samples < 1 rejected")
    print("  PASSED")


def test_unit_neutral():
    """1 x = x = x 1 is checked; a wrong unit is reported."""
    print("\n═══ Test 6: Unit ═══")
    rng = random.Random(9)
    xs = [random_su2_element(rng, 3, 3) for _ in range(30)]
    assert unit_failures(xs) == []
    print("  ✓ 1 is neutral on 30 sampled elements")

    wrong = SU2Normal({(0, 0, 0): 2})
    failures = unit_failures(xs[:3], unit=wrong)
    assert len(failures) == 6
    assert all(f.kind == "unit_not_neutral" for f in failures)
    shifted = SU2Normal.one() + SU2Normal.monomial(0, 1, 0)
    assert len(unit_failures(xs[:1], unit=shifted)) == 2
    print("  ✓ 2 and 1 + g rejected as units, on both sides")

    report = domain_test(10, 2, 2, seed=3)
    assert report.passed and not [f for f in report.failures if f.kind == "unit_not_neutral"]
    print("  ✓ domain_test includes the unit check")
    print("  PASSED")


def main():
    tests = [
        test_basis_expansion,
        test_degrees,
        test_merge_polynomials,
        test_algebra_laws,
        test_domain,
        test_unit_neutral,
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
