"""
Pol(SU_-1(2)) in the monomial basis a^i g^j g'^k (i in Z, a^i = a'^-i for i < 0).

This is an independent normal-form oracle: products are computed from the
closed multiplication formula, never through the rewriting engine.

    (a^i g^j g'^k)(a^l g^m g'^n)
        = (-1)^((j+k)|l|) a^(i+l) p_{i,l}(t) g^(j+m) g'^(k+n),   t = gg' (central)
"""

import logging
import random
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from algebra.errors import AlphabetError, DegreeError, ParameterError
from algebra.ncpoly import NCPoly
from algebra.scalar import Number, ONE, Scalar, ZERO
from algebra.words import GenSym, su2_alphabet
from models.report_models import DomainFailure, DomainReport

logger = logging.getLogger(__name__)

Exponents = Tuple[int, int, int]

_t = sympy.Symbol("t")

_A = GenSym.of("a")
_A_STAR = GenSym.of("a", star=True)
_G = GenSym.of("g")
_G_STAR = GenSym.of("g", star=True)


class SU2Normal:
    """Finite map (i, j, k) -> Scalar with no zero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Exponents, Number]] = None):
        clean: Dict[Exponents, Scalar] = {}
        for (i, j, k), c in (terms or {}).items():
            if j < 0 or k < 0:
                raise ValueError(f"gamma exponents must be natural, got ({i}, {j}, {k})")
            c = Scalar.coerce(c)
            if not c.is_zero():
                clean[(i, j, k)] = c
        self._terms = clean

    @classmethod
    def one(cls) -> "SU2Normal":
        return cls({(0, 0, 0): ONE})

    @classmethod
    def monomial(cls, i: int, j: int = 0, k: int = 0, coeff: Number = 1) -> "SU2Normal":
        return cls({(i, j, k): coeff})

    @property
    def terms(self) -> Dict[Exponents, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "SU2Normal") -> "SU2Normal":
        acc = dict(self._terms)
        for key, c in other._terms.items():
            acc[key] = acc.get(key, ZERO) + c
        return SU2Normal(acc)

    def __neg__(self) -> "SU2Normal":
        return SU2Normal({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "SU2Normal") -> "SU2Normal":
        return self + (-other)

    def scale(self, s: Number) -> "SU2Normal":
        s = Scalar.coerce(s)
        return SU2Normal({key: c * s for key, c in self._terms.items()})

    def __mul__(self, other: "SU2Normal") -> "SU2Normal":
        return su2_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SU2Normal):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_text(self) -> str:
        return to_ncpoly(self).to_text()

    def __repr__(self) -> str:
        return f"SU2Normal({self.to_text()})"


# ---------- Alpha-power merge polynomials ----------

def claim1_poly(i: int, j: int) -> sympy.Poly:
    """p_{i,j}(t) with a^i a^j = a^(i+j) p_{i,j}(gg'): (1-t)^min(|i|,|j|) on opposite signs, else 1."""
    if i * j < 0:
        return sympy.Poly((1 - _t) ** min(abs(i), abs(j)), _t)
    return sympy.Poly(1, _t)


@lru_cache(maxsize=None)
def _claim1_coefficients(i: int, j: int) -> Tuple[Tuple[int, int], ...]:
    """(power of t, integer coefficient) pairs of claim1_poly(i, j)."""
    return tuple((int(monom[0]), int(coeff)) for monom, coeff in claim1_poly(i, j).terms())


# ---------- Multiplication and involution ----------

def su2_mul(x: SU2Normal, y: SU2Normal, corrupt: bool = False) -> SU2Normal:
    """
    Product in the basis. `corrupt=True` replaces every merge polynomial of
    opposite-sign exponents by 0; it exists only as a negative control.
    """
    acc: Dict[Exponents, Scalar] = {}
    for (i, j, k), lam in x.items():
        for (l, m, n), mu in y.items():
            coeff = lam * mu
            if ((j + k) * abs(l)) % 2:
                coeff = -coeff
            if corrupt and i * l < 0:
                continue
            for r, pc in _claim1_coefficients(i, l):
                key = (i + l, j + m + r, k + n + r)
                acc[key] = acc.get(key, ZERO) + coeff * pc
    return SU2Normal(acc)


def su2_adjoint(x: SU2Normal) -> SU2Normal:
    """(a^i g^j g'^k)* = g^k g'^j a^-i = (-1)^((j+k)|i|) a^-i g^k g'^j."""
    out: Dict[Exponents, Scalar] = {}
    for (i, j, k), lam in x.items():
        c = lam.conj()
        if ((j + k) * abs(i)) % 2:
            c = -c
        out[(-i, k, j)] = c
    return SU2Normal(out)


_LETTERS: Dict[GenSym, SU2Normal] = {
    _A: SU2Normal.monomial(1),
    _A_STAR: SU2Normal.monomial(-1),
    _G: SU2Normal.monomial(0, 1, 0),
    _G_STAR: SU2Normal.monomial(0, 0, 1),
}


def su2_normal_form(p: NCPoly) -> SU2Normal:
    """Basis expansion of p, multiplying letter by letter from the left."""
    if p.alphabet != su2_alphabet():
        raise AlphabetError(f"Element over {p.alphabet.name} is not in Pol(SU_-1(2))")
    total = SU2Normal()
    for word, c in p.items():
        value = SU2Normal.one().scale(c)
        for g in word:
            value = su2_mul(value, _LETTERS[g])
            if value.is_zero():
                break
        total = total + value
    return total


def to_ncpoly(x: SU2Normal) -> NCPoly:
    """a^i g^j g'^k as the word a..a g..g g'..g' (a' for negative i)."""
    alphabet = su2_alphabet()
    terms = {}
    for (i, j, k), c in x.items():
        alpha = (_A,) * i if i >= 0 else (_A_STAR,) * (-i)
        terms[alpha + (_G,) * j + (_G_STAR,) * k] = c
    return NCPoly(alphabet, terms, check=False)


# ---------- Degrees ----------

def deg_alpha(x: SU2Normal) -> int:
    if x.is_zero():
        raise DegreeError("deg_alpha of the zero element is undefined")
    return max(i for (i, _, _) in x._terms)


def deg_gamma(x: SU2Normal) -> int:
    if x.is_zero():
        raise DegreeError("deg_gamma of the zero element is undefined")
    return max(j + k for (_, j, k) in x._terms)


# ---------- Sampling and the zero-divisor test ----------

def random_su2_element(rng: random.Random, max_alpha: int, max_gamma: int, max_terms: int = 5) -> SU2Normal:
    """Nonzero element with up to `max_terms` monomials, |i| <= max_alpha, j+k <= max_gamma, coefficients in -3..3."""
    while True:
        terms: Dict[Exponents, int] = {}
        for _ in range(rng.randint(1, max_terms)):
            i = rng.randint(-max_alpha, max_alpha)
            j = rng.randint(0, max_gamma)
            k = rng.randint(0, max_gamma - j)
            terms[(i, j, k)] = rng.randint(-3, 3)
        x = SU2Normal(terms)
        if not x.is_zero():
            return x


def _fixed_pairs(first_sample: SU2Normal):
    a, g = SU2Normal.monomial(1), SU2Normal.monomial(0, 1, 0)
    return [
        (a + g, a - g),
        (SU2Normal.one(), first_sample),
        (a, SU2Normal.monomial(-1)),
    ]


def unit_failures(
    xs: Sequence[SU2Normal],
    unit: Optional[SU2Normal] = None,
    corrupt: bool = False,
) -> List[DomainFailure]:
    """Pairs where `unit` (default 1) fails 1 x = x = x 1."""
    unit = SU2Normal.one() if unit is None else unit
    failures = []
    for x in xs:
        for left, right in ((unit, x), (x, unit)):
            product = su2_mul(left, right, corrupt=corrupt)
            if product != x:
                failures.append(DomainFailure(
                    kind="unit_not_neutral", x=left.to_text(), y=right.to_text(), product=product.to_text(),
                ))
    return failures


def domain_test(
    samples: int,
    max_deg_alpha: int,
    max_deg_gamma: int,
    seed: int = 0,
    corrupt: bool = False,
) -> DomainReport:
    """Products of sampled nonzero pairs must be nonzero with additive deg_alpha."""
    if samples < 1:
        raise ParameterError(f"samples must be >= 1, got {samples}")
    rng = random.Random(seed)
    report = DomainReport(samples=samples, seed=seed, max_alpha=max_deg_alpha, max_gamma=max_deg_gamma)
    pairs = []
    for _ in range(samples):
        x = random_su2_element(rng, max_deg_alpha, max_deg_gamma)
        y = random_su2_element(rng, max_deg_alpha, max_deg_gamma)
        pairs.append((x, y))
    pairs = _fixed_pairs(pairs[0][0]) + pairs

    for x, y in pairs:
        product = su2_mul(x, y, corrupt=corrupt)
        report.pairs_checked += 1
        if product.is_zero():
            report.failures.append(DomainFailure(
                kind="zero_product", x=x.to_text(), y=y.to_text(), product="0",
            ))
        elif deg_alpha(product) != deg_alpha(x) + deg_alpha(y):
            report.failures.append(DomainFailure(
                kind="degree_not_additive", x=x.to_text(), y=y.to_text(), product=product.to_text(),
            ))
    report.failures.extend(unit_failures([pairs[1][1]], corrupt=corrupt))
    level = logging.WARNING if report.failures else logging.INFO
    logger.log(
        level,
        f"Domain test: {report.pairs_checked} pairs, {len(report.failures)} failures "
        f"(seed={seed}, box=({max_deg_alpha},{max_deg_gamma}))",
    )
    return report
