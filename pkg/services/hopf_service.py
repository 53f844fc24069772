"""
Counit and comultiplication on the presented algebras, and the Hopf-axiom checks.

Tables live per presentation name in `_TABLE_BUILDERS`; both maps are extended
multiplicatively from generators, and tensor legs are kept in normal form.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple, Union

from algebra.errors import AlphabetError, ParameterError
from algebra.ncpoly import NCPoly, TensorPoly
from algebra.scalar import ONE, Scalar, ZERO
from algebra.words import Alphabet, GenSym, Word
from models.report_models import LemmaReport
from presentations.base import FreeProductPresentation, Presentation
from services.rewriting_service import normal_form
from utils.sampling import random_poly

logger = logging.getLogger(__name__)

AnyPresentation = Union[Presentation, FreeProductPresentation]
Tables = Tuple[Dict[GenSym, Scalar], Dict[GenSym, TensorPoly]]


@dataclass
class HopfStructure:
    presentation: AnyPresentation
    counit_table: Dict[GenSym, Scalar]
    comult_table: Dict[GenSym, TensorPoly]
    _word_cache: Dict[Word, TensorPoly] = field(default_factory=dict, repr=False)

    @property
    def alphabet(self) -> Alphabet:
        return self.presentation.alphabet


def _delta(i: int, j: int) -> Scalar:
    return ONE if i == j else ZERO


def _matrix_tables(alphabet: Alphabet, family: str, n: int, with_star: bool) -> Tables:
    """eps(x_ij) = delta_ij, Delta(x_ij) = sum_k x_ik (x) x_kj, stars leg-wise."""
    counit: Dict[GenSym, Scalar] = {}
    comult: Dict[GenSym, TensorPoly] = {}
    stars = (False, True) if with_star else (False,)
    for star in stars:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                g = GenSym.of(family, (i, j), star)
                counit[g] = _delta(i, j)
                terms = {}
                for k in range(1, n + 1):
                    left = GenSym.of(family, (i, k), star)
                    right = GenSym.of(family, (k, j), star)
                    terms[((left,), (right,))] = ONE
                comult[g] = TensorPoly(alphabet, 2, terms)
    return counit, comult


def _orthogonal_tables(p: AnyPresentation) -> Tables:
    return _matrix_tables(p.alphabet, "v", p.n, with_star=False)


def _unitary_tables(p: AnyPresentation) -> Tables:
    return _matrix_tables(p.alphabet, "u", p.n, with_star=True)


def _circle_tables(p: AnyPresentation) -> Tables:
    # z group-like: forced by u_ij = z v_ij being a corepresentation entry
    counit: Dict[GenSym, Scalar] = {}
    comult: Dict[GenSym, TensorPoly] = {}
    for star in (False, True):
        z = GenSym.of("z", star=star)
        counit[z] = ONE
        comult[z] = TensorPoly(p.alphabet, 2, {((z,), (z,)): ONE})
    return counit, comult


def _su2_tables(p: AnyPresentation) -> Tables:
    """Matrix coefficients of [[a, -q g'], [g, a']]."""
    q = -1 if p.name == "SU_minus1_2" else 1
    a, a_s = GenSym.of("a"), GenSym.of("a", star=True)
    g, g_s = GenSym.of("g"), GenSym.of("g", star=True)
    alphabet = p.alphabet
    counit = {a: ONE, a_s: ONE, g: ZERO, g_s: ZERO}
    comult = {
        a: TensorPoly(alphabet, 2, {((a,), (a,)): ONE, ((g_s,), (g,)): Scalar(-q)}),
        a_s: TensorPoly(alphabet, 2, {((a_s,), (a_s,)): ONE, ((g,), (g_s,)): Scalar(-q)}),
        g: TensorPoly(alphabet, 2, {((g,), (a,)): ONE, ((a_s,), (g,)): ONE}),
        g_s: TensorPoly(alphabet, 2, {((g_s,), (a_s,)): ONE, ((a,), (g_s,)): ONE}),
    }
    return counit, comult


def _free_product_tables(p: AnyPresentation) -> Tables:
    counit: Dict[GenSym, Scalar] = {}
    comult: Dict[GenSym, TensorPoly] = {}
    for factor in p.factors:
        f_counit, f_comult = _TABLE_BUILDERS[factor.name](factor)
        counit.update(f_counit)
        for g, t in f_comult.items():
            comult[g] = TensorPoly(p.alphabet, 2, dict(t.items()))
    return counit, comult


def _an_tables(p: AnyPresentation) -> Tables:
    """eps(w_ijkl) = delta_ij delta_kl; Delta(w_ijkl) = sum_ab w_iakb (x) w_ajbl."""
    n = p.n
    counit: Dict[GenSym, Scalar] = {}
    comult: Dict[GenSym, TensorPoly] = {}
    for w in p.alphabet.generators:
        i, j, k, l = w.indices
        counit[w] = _delta(i, j) * _delta(k, l)
        terms = {}
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                terms[((GenSym.of("w", (i, a, k, b)),), (GenSym.of("w", (a, j, b, l)),))] = ONE
        comult[w] = TensorPoly(p.alphabet, 2, terms)
    return counit, comult


_TABLE_BUILDERS: Dict[str, Callable[[AnyPresentation], Tables]] = {
    "O_plus": _orthogonal_tables,
    "U_plus": _unitary_tables,
    "S1": _circle_tables,
    "SU_minus1_2": _su2_tables,
    "SU_plus1_2": _su2_tables,
    "H_n": _free_product_tables,
    "A_n": _an_tables,
}


def make_hopf_structure(presentation: AnyPresentation) -> HopfStructure:
    builder = _TABLE_BUILDERS.get(presentation.name)
    if builder is None:
        raise ParameterError(
            f"No Hopf structure for {presentation.name}. Available: {list(_TABLE_BUILDERS.keys())}"
        )
    counit_table, comult_table = builder(presentation)
    return HopfStructure(presentation, counit_table, comult_table)


# ---------- Maps ----------

def counit_word(word: Word, hopf: HopfStructure) -> Scalar:
    value = ONE
    for g in word:
        value = value * hopf.counit_table[g]
        if value.is_zero():
            return ZERO
    return value


def counit(p: NCPoly, hopf: HopfStructure) -> Scalar:
    """Unital homomorphism extending the counit table."""
    if p.alphabet != hopf.alphabet:
        raise AlphabetError(f"Element over {p.alphabet.name} is not over {hopf.presentation.name}")
    total = ZERO
    for w, c in p.items():
        total = total + c * counit_word(w, hopf)
    return total


def _leg_nf(hopf: HopfStructure) -> Callable[[Word], NCPoly]:
    alphabet = hopf.alphabet
    presentation = hopf.presentation
    return lambda w: normal_form(NCPoly.word(alphabet, w), presentation)


def tensor_normal_form(t: TensorPoly, hopf: HopfStructure) -> TensorPoly:
    nf = _leg_nf(hopf)
    return t.map_legs([nf] * t.legs)


def comultiply_word(word: Word, hopf: HopfStructure) -> TensorPoly:
    hit = hopf._word_cache.get(word)
    if hit is not None:
        return hit
    result = TensorPoly.one(hopf.alphabet, 2)
    for g in word:
        result = tensor_normal_form(result * hopf.comult_table[g], hopf)
    hopf._word_cache[word] = result
    return result


def comultiply(p: NCPoly, hopf: HopfStructure) -> TensorPoly:
    """Unital homomorphism into the tensor square; both legs in normal form."""
    if p.alphabet != hopf.alphabet:
        raise AlphabetError(f"Element over {p.alphabet.name} is not over {hopf.presentation.name}")
    result = TensorPoly(hopf.alphabet, 2)
    for w, c in p.items():
        result = result + comultiply_word(w, hopf).scale(c)
    return result


def _expand_leg(t: TensorPoly, leg: int, hopf: HopfStructure) -> TensorPoly:
    """Apply Delta to one leg: k legs in, k+1 legs out."""
    terms: Dict[tuple, Scalar] = {}
    for key, c in t.items():
        for (w1, w2), c2 in comultiply_word(key[leg], hopf).items():
            new_key = key[:leg] + (w1, w2) + key[leg + 1:]
            terms[new_key] = terms.get(new_key, ZERO) + c * c2
    return TensorPoly(hopf.alphabet, t.legs + 1, terms)


# ---------- Axiom checks ----------

def check_hopf_axioms(
    hopf: HopfStructure,
    degree_bound: int = 3,
    samples: int = 20,
    seed: int = 0,
    pairs: Optional[int] = None,
) -> LemmaReport:
    """Counit law and coassociativity on generators plus seeded samples; multiplicativity on pairs."""
    presentation = hopf.presentation
    alphabet = hopf.alphabet
    rng = random.Random(seed)
    report = LemmaReport(
        lemma_id="hopf-axioms",
        parameters={
            "algebra": presentation.name,
            "n": presentation.n,
            "degree": degree_bound,
            "samples": samples,
            "seed": seed,
        },
    )
    if presentation.certified_degree < 2 * degree_bound:
        report.caveats.append(
            f"{presentation.name} is certified to degree {presentation.certified_degree}, "
            f"below 2*{degree_bound}; products of sampled elements are reduced without a uniqueness certificate"
        )

    elements: List[NCPoly] = [NCPoly.one(alphabet)]
    elements += [NCPoly.gen(alphabet, g) for g in alphabet.generators]
    elements += [random_poly(alphabet, rng, degree_bound) for _ in range(samples)]

    counit_left: Optional[str] = None
    counit_right: Optional[str] = None
    coassoc: Optional[str] = None
    eps = lambda w: counit_word(w, hopf)
    for p in elements:
        reduced = normal_form(p, presentation)
        delta = comultiply(p, hopf)
        if counit_left is None and delta.contract_leg(0, eps) != reduced:
            counit_left = p.to_text()
        if counit_right is None and delta.contract_leg(1, eps) != reduced:
            counit_right = p.to_text()
        if coassoc is None and _expand_leg(delta, 0, hopf) != _expand_leg(delta, 1, hopf):
            coassoc = p.to_text()

    report.add("(eps (x) id) Delta(p) = p", counit_left is None, counit_left)
    report.add("(id (x) eps) Delta(p) = p", counit_right is None, counit_right)
    report.add("(Delta (x) id) Delta(p) = (id (x) Delta) Delta(p)", coassoc is None, coassoc)

    eps_mult: Optional[str] = None
    delta_mult: Optional[str] = None
    n_pairs = pairs if pairs is not None else max(1, samples // 2)
    for _ in range(n_pairs):
        p = random_poly(alphabet, rng, max(1, degree_bound // 2 + 1))
        q = random_poly(alphabet, rng, max(1, degree_bound // 2 + 1))
        pq = normal_form(p * q, presentation)
        if eps_mult is None and counit(pq, hopf) != counit(p, hopf) * counit(q, hopf):
            eps_mult = f"p = {p.to_text()}; q = {q.to_text()}"
        lhs = comultiply(pq, hopf)
        rhs = tensor_normal_form(comultiply(p, hopf) * comultiply(q, hopf), hopf)
        if delta_mult is None and lhs != rhs:
            delta_mult = f"p = {p.to_text()}; q = {q.to_text()}"
    report.add("eps(pq) = eps(p) eps(q)", eps_mult is None, eps_mult)
    report.add("Delta(pq) = Delta(p) Delta(q)", delta_mult is None, delta_mult)

    bad_relation: Optional[str] = None
    for r in presentation.closed_relations():
        if not counit(r, hopf).is_zero() or not comultiply(r, hopf).is_zero():
            bad_relation = r.to_text()
            break
    report.add("eps and Delta vanish on every defining relation", bad_relation is None, bad_relation)

    logger.info(
        f"Hopf axioms for {presentation.name} (n={presentation.n}): "
        f"{'pass' if report.passed else 'FAIL'} over {len(elements)} elements"
    )
    return report
