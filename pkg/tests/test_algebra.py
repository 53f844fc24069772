"""
Tests for the exact arithmetic layer:

1. Gaussian rational scalars and their text form
2. Interned generator symbols and the involution on words
3. NCPoly products, adjoints and alphabet checks
4. Tensor products and leg contraction
5. Monomial orders
6. Substitution homomorphisms and lifting into a larger alphabet
"""

import os
import sys
from fractions import Fraction

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.errors import AlphabetError, ParameterError
from algebra.ncpoly import NCPoly, TensorPoly, adjoint, mul, tensor_mul
from algebra.scalar import I_UNIT, ONE, Scalar
from algebra.words import (
    DegLexOrder,
    GenSym,
    SU2GradedOrder,
    circle_alphabet,
    free_product_alphabet,
    orthogonal_alphabet,
    su2_alphabet,
    unitary_alphabet,
    word_adjoint,
)


def _v(i, j):
    return GenSym.of("v", (i, j))


def _u(i, j, star=False):
    return GenSym.of("u", (i, j), star)


def test_scalar_arithmetic():
    """Q(i) arithmetic is exact."""
    print("\n═══ Test 1: Scalar arithmetic ═══")
    assert I_UNIT * I_UNIT == Scalar(-1)
    assert Scalar(1, 1) * Scalar(1, -1) == Scalar(2)
    assert Scalar(1) / Scalar(3) == Scalar(Fraction(1, 3))
    assert (Scalar(2, 1) / Scalar(2, 1)).is_one()
    assert Scalar(3, -4).conj() == Scalar(3, 4)
    print("  ✓ i^2 = -1, division and conjugation exact")

    assert Scalar(Fraction(1, 2), -3).to_text() == "(1/2-3i)"
    assert Scalar.from_text("(1/2-3i)") == Scalar(Fraction(1, 2), -3)
    assert Scalar.from_text("-5/7") == Scalar(Fraction(-5, 7))
    assert Scalar.from_json({"re": "2", "im": "-1/3"}) == Scalar(2, Fraction(-1, 3))
    print("  ✓ Text and JSON forms parse back")

    try:
        Scalar.from_text("1.5")
        assert False, "decimal literal must be rejected"
    except ValueError:
        pass
    print("  ✓ Decimal literals rejected")
    print("  PASSED")


def test_symbols_and_words():
    """Symbols are interned; v and w families are self-adjoint."""
    print("\n═══ Test 2: Symbols and words ═══")
    assert GenSym.of("u", (1, 2)) is GenSym.from_text("u[1,2]")
    assert GenSym.from_text("u[1,2]'") is _u(1, 2, True)
    assert _v(1, 2).adjoint() is _v(1, 2)
    assert GenSym.of("w", (1, 2, 3, 4)).adjoint() is GenSym.of("w", (3, 4, 1, 2))
    assert GenSym.of("z", star=True).text == "z'"
    print("  ✓ Interning, text form, family adjoints")

    word = (GenSym.of("z"), _u(1, 1))
    assert word_adjoint(word) == (_u(1, 1, True), GenSym.of("z", star=True))
    print("  ✓ Word adjoint reverses and flips stars")

    try:
        GenSym.of("u", (1,))
        assert False, "wrong arity must be rejected"
    except ParameterError:
        pass
    print("  ✓ Wrong index arity rejected")
    print("  PASSED")


def test_ncpoly_mul():
    """Concatenation of monomials, unit law, bilinearity."""
    print("\n═══ Test 3: NCPoly multiplication ═══")
    o2 = orthogonal_alphabet(2)
    v11 = NCPoly.gen(o2, _v(1, 1))
    assert mul(v11, v11) == NCPoly.word(o2, (_v(1, 1), _v(1, 1)))
    assert mul(v11, NCPoly.one(o2)) == v11
    print("  ✓ [v11]*[v11] = [v11 v11], p*1 = p")

    s1 = circle_alphabet()
    z = GenSym.of("z")
    zs = GenSym.of("z", star=True)
    product = mul(NCPoly.word(s1, (z,), 2), NCPoly.word(s1, (zs,), 3))
    assert product == NCPoly.word(s1, (z, zs), 6)
    print("  ✓ (2z)(3z') = 6 zz'")

    p = NCPoly.gen(o2, _v(1, 2)) - NCPoly.gen(o2, _v(1, 2))
    assert p.is_zero() and p.degree() == -1
    print("  ✓ Zero coefficients dropped")

    try:
        mul(v11, NCPoly.gen(s1, z))
        assert False, "mismatched alphabets must raise"
    except AlphabetError:
        pass
    print("  ✓ Mismatched alphabets rejected")
    print("  PASSED")


def test_ncpoly_adjoint():
    """Antilinear anti-homomorphism."""
    print("\n═══ Test 4: NCPoly adjoint ═══")
    u2 = unitary_alphabet(2)
    assert adjoint(NCPoly.gen(u2, _u(1, 2))) == NCPoly.gen(u2, _u(1, 2, True))
    o2 = orthogonal_alphabet(2)
    assert adjoint(NCPoly.gen(o2, _v(1, 2))) == NCPoly.gen(o2, _v(1, 2))
    print("  ✓ [u12]* = [u12'], [v12]* = [v12]")

    p = NCPoly.word(u2, (_u(1, 1), _u(1, 2)), I_UNIT)
    expected = NCPoly.word(u2, (_u(1, 2, True), _u(1, 1, True)), -I_UNIT)
    assert adjoint(p) == expected
    assert adjoint(adjoint(p)) == p
    print("  ✓ (i u11 u12)* = -i u12' u11', involutive")

    q = NCPoly.gen(u2, _u(2, 1)) + 2
    assert adjoint(p * q) == adjoint(q) * adjoint(p)
    print("  ✓ (pq)* = q* p*")
    print("  PASSED")


def test_tensor_mul():
    """Leg-wise products, unit, bilinearity, contraction."""
    print("\n═══ Test 5: Tensor products ═══")
    u2 = unitary_alphabet(2)
    g = lambda i, j: NCPoly.gen(u2, _u(i, j))

    one = TensorPoly.one(u2)
    ab = TensorPoly.pure(g(1, 1), g(1, 2))
    assert tensor_mul(one, ab) == ab
    print("  ✓ (1 (x) 1)(a (x) b) = a (x) b")

    left = TensorPoly.pure(g(1, 1), g(1, 2))
    right = TensorPoly.pure(g(2, 1), g(2, 2))
    assert tensor_mul(left, right) == TensorPoly.pure(g(1, 1) * g(2, 1), g(1, 2) * g(2, 2))
    print("  ✓ (u11 (x) u12)(u21 (x) u22) = u11u21 (x) u12u22")

    two = TensorPoly.pure(NCPoly.const(u2, 2), NCPoly.one(u2))
    three = TensorPoly.pure(NCPoly.one(u2), NCPoly.const(u2, 3))
    assert tensor_mul(two, three) == TensorPoly.one(u2).scale(6)
    print("  ✓ (2 (x) 1)(1 (x) 3) = 6")

    t = TensorPoly.pure(g(1, 1) + 3, g(1, 2))
    contracted = t.contract_leg(0, lambda w: ONE if not w else Scalar(0))
    assert contracted == g(1, 2).scale(3)
    print("  ✓ Contracting a leg with a functional")

    try:
        tensor_mul(one, TensorPoly.one(circle_alphabet()))
        assert False, "mismatched alphabets must raise"
    except AlphabetError:
        pass
    print("  ✓ Mismatched alphabets rejected")
    print("  PASSED")


def test_monomial_orders():
    """Degree dominates; SU(2) order puts gamma-before-alpha words above."""
    print("\n═══ Test 6: Monomial orders ═══")
    o2 = orthogonal_alphabet(2)
    order = DegLexOrder(o2)
    assert order.less((_v(2, 2),), (_v(1, 1), _v(1, 1)))
    assert order.less((_v(1, 1), _v(2, 1)), (_v(2, 1), _v(2, 1)))
    print("  ✓ deglex compares degree, then ranks")

    su2 = SU2GradedOrder(su2_alphabet())
    a, g = GenSym.of("a"), GenSym.of("g")
    a_s, g_s = GenSym.of("a", star=True), GenSym.of("g", star=True)
    assert su2.less((a, g), (g, a))
    assert su2.less((g, g_s), (a, a_s))
    assert su2.less((g, g_s), (g_s, g))
    print("  ✓ ga > ag, aa' > gg', g'g > gg'")
    print("  PASSED")


def test_substitute_and_lift():
    """Homomorphisms given on generators; elements moved into a union alphabet."""
    print("\n═══ Test 7: Substitution and lifting ═══")
    s1, o2, h2 = circle_alphabet(), orthogonal_alphabet(2), free_product_alphabet(2)
    z, z_star = GenSym.of("z"), GenSym.of("z", star=True)
    p = NCPoly.word(s1, (z, z_star)) - NCPoly.gen(s1, z).scale(2)

    v11 = NCPoly.gen(o2, _v(1, 1))
    image = p.substitute({z: v11, z_star: v11}, o2)
    assert image == NCPoly.word(o2, (_v(1, 1), _v(1, 1))) - v11.scale(2)
    assert NCPoly.one(s1).substitute({}, o2) == NCPoly.one(o2)
    print("  ✓ z, z' -> v11 sends zz' - 2z to v11 v11 - 2 v11; 1 -> 1")

    try:
        p.substitute({z: v11}, o2)
        assert False, "missing image must raise"
    except AlphabetError:
        pass
    print("  ✓ generator without an image rejected")

    lifted = p.lift(h2)
    assert lifted.alphabet == h2
    assert lifted == NCPoly.word(h2, (z, z_star)) - NCPoly.gen(h2, z).scale(2)
    assert p.lift(s1) is p
    try:
        v11.lift(s1)
        assert False, "v11 is not in S1"
    except AlphabetError:
        pass
    print("  ✓ lift into H_2 keeps terms; lift into a foreign alphabet rejected")
    print("  PASSED")


def main():
    tests = [
        test_scalar_arithmetic,
        test_symbols_and_words,
        test_ncpoly_mul,
        test_ncpoly_adjoint,
        test_tensor_mul,
        test_monomial_orders,
        test_substitute_and_lift,
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
