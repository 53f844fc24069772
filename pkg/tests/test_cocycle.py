"""
Tests for 1-cocycles:

1. Inner cocycles and the Leibniz rule on Pol(S^1)
2. Determination of starred values and the round trip back
3. Relation checks
4. Free products and restriction to U_2^+ and A_2
5. Truncated innerness
6. Error paths
"""

import os
import random
import sys

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.errors import (
    AlphabetError,
    CertificationError,
    ClosureError,
    UnderdeterminedError,
)
from algebra.ncpoly import NCPoly
from algebra.words import GenSym
from cli.expr_parser import parse_expr
from presentations.factory import completed_presentation, make_presentation
from presentations.free_product import unitary_embedding
from services.cocycle_service import (
    ModuleSpec,
    adjoint_table,
    check_relations,
    derive_adjoint_values,
    derive_values_from_adjoints,
    eval_cocycle,
    factor_cocycle,
    free_product_cocycle,
    inner_cocycle,
    inner_value,
    make_cocycle,
    restrict,
    restrict_to_an,
    restrict_to_unitary,
    solve_inner,
)
from services.hopf_service import counit, make_hopf_structure
from services.rewriting_service import normal_form
from utils.sampling import random_poly

Z = GenSym.of("z")
Z_STAR = GenSym.of("z", star=True)


def _u(i, j, star=False):
    return GenSym.of("u", (i, j), star)


def _v(i, j):
    return GenSym.of("v", (i, j))


def _circle():
    s1 = completed_presentation("S1", 1, 8)
    return s1, ModuleSpec(s1)


def _h2():
    h2 = completed_presentation("H_n", 2, 4)
    return h2, ModuleSpec(h2)


def _xi_star_zero(h2, module, xi):
    """c(z) = xi on the circle factor, c = 0 on the O_2^+ factor."""
    zero = NCPoly.zero(h2.alphabet)
    c1 = factor_cocycle(module, 0, {Z: xi})
    c2 = factor_cocycle(module, 1, {g: zero for g in h2.factors[1].alphabet.generators})
    return free_product_cocycle(c1, c2, h2)


def _unitary_cocycle(h2, module, diagonal):
    """c(u_ij) = delta_ij * diagonal on U_2^+ acting through u -> z v."""
    zero = NCPoly.zero(h2.alphabet)
    values = {_u(i, j): (diagonal if i == j else zero) for i in (1, 2) for j in (1, 2)}
    return make_cocycle(module, values, domain=make_presentation("U_plus", 2), embedding=unitary_embedding(2))


def test_inner_on_circle():
    """c_xi(a) = a xi - eps(a) xi with xi = z."""
    print("\n═══ Test 1: Inner cocycle on Pol(S^1) ═══")
    s1, module = _circle()
    z = parse_expr("z", s1)
    c = inner_cocycle(z, module)
    assert c.values[Z] == parse_expr("z*z - z", s1)
    assert c.values[Z_STAR] == parse_expr("1 - z", s1)
    assert c.witness == z
    print("  ✓ c(z) = z^2 - z, c(z') = 1 - z")

    assert eval_cocycle(c, parse_expr("z*z'", s1)).is_zero()
    assert eval_cocycle(c, NCPoly.one(s1.alphabet)).is_zero()
    print("  ✓ c(zz') = 0, c(1) = 0")

    rng = random.Random(11)
    for _ in range(20):
        p = random_poly(s1.alphabet, rng, 3)
        assert eval_cocycle(c, p) == inner_value(z, p, c), p.to_text()
    print("  ✓ Leibniz evaluation matches the closed formula on 20 samples")

    zero = inner_cocycle(NCPoly.zero(s1.alphabet), module)
    assert all(v.is_zero() for v in zero.values.values())
    print("  ✓ xi = 0 gives the zero cocycle")
    print("  PASSED")


def test_leibniz_rule():
    """c(ab) = a.c(b) + c(a) eps(b) for a non-inner cocycle."""
    print("\n═══ Test 2: Leibniz rule ═══")
    s1, module = _circle()
    c = make_cocycle(module, {Z: NCPoly.one(s1.alphabet)})
    hopf = make_hopf_structure(s1)
    assert c.value_of(Z_STAR) == parse_expr("-z'", s1)
    print("  ✓ c(z') = -z' c(z) derived")

    rng = random.Random(5)
    for _ in range(20):
        a = random_poly(s1.alphabet, rng, 3)
        b = random_poly(s1.alphabet, rng, 3)
        lhs = eval_cocycle(c, a * b)
        rhs = normal_form(a * eval_cocycle(c, b), s1) + eval_cocycle(c, a).scale(counit(b, hopf))
        assert lhs == rhs, f"a = {a.to_text()}; b = {b.to_text()}"
    print("  ✓ 20 sampled pairs satisfy the Leibniz rule")
    print("  PASSED")


def test_determination():
    """Starred values follow from the fundamental ones and back."""
    print("\n═══ Test 3: Determination from fundamental values ═══")
    h2, module = _h2()
    one = NCPoly.one(h2.alphabet)
    c = derive_adjoint_values(_unitary_cocycle(h2, module, one))
    assert c.value_of(_u(1, 2, True)) == -parse_expr("v[1,2]*z'", h2)
    assert c.value_of(_u(1, 1, True)) == -parse_expr("v[1,1]*z'", h2)
    print("  ✓ c(u_ji') = -u_ji' xi")

    table = adjoint_table(c)
    starred_only = make_cocycle(
        module, table, domain=make_presentation("U_plus", 2), embedding=unitary_embedding(2),
    )
    derive_values_from_adjoints(starred_only)
    for i in (1, 2):
        for j in (1, 2):
            assert starred_only.value_of(_u(i, j)) == c.value_of(_u(i, j))
    print("  ✓ round trip through the starred table recovers c(u_ij)")

    zero = derive_adjoint_values(_unitary_cocycle(h2, module, NCPoly.zero(h2.alphabet)))
    assert all(v.is_zero() for v in adjoint_table(zero).values())
    print("  ✓ zero cocycle has zero starred values")
    print("  PASSED")


def test_check_relations():
    """Value tables that do not respect the relations are caught."""
    print("\n═══ Test 4: Relation checks ═══")
    o2 = completed_presentation("O_plus", 2, 4)
    module = ModuleSpec(o2)
    zero = NCPoly.zero(o2.alphabet)
    values = {g: zero for g in o2.alphabet.generators}

    assert check_relations(make_cocycle(module, values)).passed
    print("  ✓ zero cocycle passes")

    bad = dict(values)
    bad[_v(1, 1)] = NCPoly.one(o2.alphabet)
    report = check_relations(make_cocycle(module, bad))
    assert not report.passed
    assert report.failures()[0].counterexample
    print("  ✓ c(v11) = 1 fails an orthogonality relation")

    h2, h_module = _h2()
    assert check_relations(_xi_star_zero(h2, h_module, NCPoly.one(h2.alphabet))).passed
    print("  ✓ c_xi * 0 on H_2 passes every relation")
    print("  PASSED")


def test_free_product_and_restriction():
    """(c_xi * 0)(u_ij) = delta_ij xi."""
    print("\n═══ Test 5: Free products and restriction ═══")
    h2, module = _h2()
    xi = parse_expr("z + 2", h2)
    c = _xi_star_zero(h2, module, xi)
    assert eval_cocycle(c, parse_expr("z*v[1,1]", h2)) == xi
    assert eval_cocycle(c, parse_expr("z*v[1,2]", h2)).is_zero()
    print("  ✓ eval on z v_ij gives delta_ij xi")

    restricted = restrict_to_unitary(c)
    assert restricted.values[_u(1, 1)] == xi
    assert restricted.values[_u(2, 2)] == xi
    assert restricted.values[_u(1, 2)].is_zero()
    assert restricted.values[_u(2, 1)].is_zero()
    print("  ✓ restriction to U_2^+ has c(u_ij) = delta_ij xi")

    an = restrict_to_an(c)
    assert all(v.is_zero() for v in an.values.values())
    assert len(an.values) == 16
    print("  ✓ restriction to A_2 vanishes")

    zero_c = _xi_star_zero(h2, module, NCPoly.zero(h2.alphabet))
    assert all(v.is_zero() for v in restrict_to_unitary(zero_c).values.values())
    print("  ✓ restriction of the zero cocycle is zero")

    images = unitary_embedding(2)
    images[_u(1, 1, True)] = parse_expr("v[1,1]", h2)
    try:
        restrict(c, images, make_presentation("U_plus", 2))
        assert False, "non star-closed images must be rejected"
    except ClosureError:
        pass
    print("  ✓ images not closed under * rejected")
    print("  PASSED")


def test_solve_inner():
    """Witness search per truncation degree."""
    print("\n═══ Test 6: Truncated innerness ═══")
    s1, module = _circle()
    xi0 = parse_expr("z*z - 3*z'", s1)
    c = inner_cocycle(xi0, module)
    witness = solve_inner(c, 4)
    assert witness is not None
    rebuilt = inner_cocycle(witness, module)
    assert rebuilt.values == c.values
    print("  ✓ inner cocycle gets a verified witness")

    rng = random.Random(31)
    for _ in range(20):
        xi = normal_form(random_poly(s1.alphabet, rng, 2, nonzero=True), s1)
        c = inner_cocycle(xi, module)
        witness = solve_inner(c, 2)
        assert witness is not None, xi.to_text()
        assert inner_cocycle(witness, module).values == c.values, xi.to_text()
    print("  ✓ 20 sampled inner cocycles on S1 get witnesses")

    o2 = completed_presentation("O_plus", 2, 4)
    o2_module = ModuleSpec(o2)
    for _ in range(5):
        xi = normal_form(random_poly(o2.alphabet, rng, 2, nonzero=True), o2)
        c = inner_cocycle(xi, o2_module)
        witness = solve_inner(c, 2)
        assert witness is not None, xi.to_text()
        assert inner_cocycle(witness, o2_module).values == c.values, xi.to_text()
    print("  ✓ 5 sampled inner cocycles on O_2^+ get witnesses")

    constant = make_cocycle(module, {Z: NCPoly.one(s1.alphabet)})
    assert solve_inner(constant, 5) is None
    print("  ✓ c(z) = 1 has no witness up to degree 5")

    try:
        solve_inner(constant, 8)
        assert False, "uncertified degree must be refused"
    except CertificationError:
        pass
    print("  ✓ degree beyond the certificate refused")
    print("  PASSED")


def test_error_paths():
    """Missing values and foreign alphabets."""
    print("\n═══ Test 7: Error paths ═══")
    o2 = completed_presentation("O_plus", 2, 4)
    c = make_cocycle(ModuleSpec(o2), {})
    try:
        eval_cocycle(c, parse_expr("v[1,1]", o2))
        assert False, "missing value must raise"
    except UnderdeterminedError:
        pass
    print("  ✓ no value on v11 -> underdetermined")

    s1, _ = _circle()
    try:
        make_cocycle(ModuleSpec(o2), {_v(1, 1): NCPoly.one(s1.alphabet)})
        assert False, "value over a foreign alphabet must raise"
    except AlphabetError:
        pass
    print("  ✓ value over the wrong alphabet rejected")
    print("  PASSED")


def main():
    tests = [
        test_inner_on_circle,
        test_leibniz_rule,
        test_determination,
        test_check_relations,
        test_free_product_and_restriction,
        test_solve_inner,
        test_error_paths,
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
