"""
1-cocycles c(ab) = a.c(b) + c(a) eps(b) with values in an ambient algebra.

A cocycle lives on a *domain* presentation and takes values in the *module*,
which is the ambient algebra acting on itself by left multiplication (the right
action goes through the counit). Domain generators act through `embedding`
(identity when domain and ambient coincide, u_ij -> z v_ij after restriction).
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from algebra.errors import (
    AlphabetError,
    CertificationError,
    ClosureError,
    ParameterError,
    UnderdeterminedError,
)
from algebra.ncpoly import NCPoly
from algebra.scalar import ONE, Scalar, ZERO
from algebra.words import Alphabet, GenSym, Word
from models.report_models import LemmaReport
from presentations.base import FreeProductPresentation, Presentation
from presentations.factory import make_presentation
from presentations.free_product import an_embedding, unitary_embedding
from services.hopf_service import make_hopf_structure
from services.linear_service import SparseLinearSystem
from services.rewriting_service import normal_form, normal_words

logger = logging.getLogger(__name__)

AnyPresentation = Union[Presentation, FreeProductPresentation]

NON_INNER_CAVEAT = (
    "No witness up to the truncation degree is not a proof of non-innerness: "
    "the coefficient module here is the polynomial algebra, not the algebra of "
    "affiliated operators, so innerness is only decided per truncation degree."
)


@dataclass
class ModuleSpec:
    """The ambient algebra as a bimodule: left multiplication, right action through eps."""
    ambient: AnyPresentation

    @property
    def alphabet(self) -> Alphabet:
        return self.ambient.alphabet

    def act(self, a: NCPoly, m: NCPoly) -> NCPoly:
        return normal_form(a * m, self.ambient)


class Cocycle:
    """Value table on domain generators; everything else follows from the Leibniz rule."""

    def __init__(
        self,
        module: ModuleSpec,
        domain: AnyPresentation,
        counit_table: Mapping[GenSym, Scalar],
        embedding: Mapping[GenSym, NCPoly],
        values: Mapping[GenSym, NCPoly],
        witness: Optional[NCPoly] = None,
    ):
        self.module = module
        self.domain = domain
        self.counit_table: Dict[GenSym, Scalar] = dict(counit_table)
        self.embedding: Dict[GenSym, NCPoly] = dict(embedding)
        for g, v in values.items():
            if g not in domain.alphabet:
                raise AlphabetError(f"Generator {g} is not in the domain {domain.name}")
            if v.alphabet != module.alphabet:
                raise AlphabetError(
                    f"Value on {g} is over {v.alphabet.name}, not the module {module.ambient.name}"
                )
        self.values: Dict[GenSym, NCPoly] = {g: normal_form(v, module.ambient) for g, v in values.items()}
        self.derived_values: Dict[GenSym, NCPoly] = {}
        self.witness = witness
        # word -> (normal form of its image, cocycle value)
        self._word_cache: Dict[Word, Tuple[NCPoly, NCPoly]] = {(): (NCPoly.one(module.alphabet), NCPoly.zero(module.alphabet))}

    @property
    def ambient(self) -> AnyPresentation:
        return self.module.ambient

    def image(self, g: GenSym) -> NCPoly:
        image = self.embedding.get(g)
        if image is None:
            raise AlphabetError(f"Generator {g} has no image in {self.ambient.name}")
        return image

    def counit_of(self, word: Word) -> Scalar:
        value = ONE
        for g in word:
            value = value * self.counit_table[g]
        return value

    # ---------- Values ----------

    def _lookup(self, g: GenSym) -> Optional[NCPoly]:
        hit = self.values.get(g)
        if hit is None:
            hit = self.derived_values.get(g)
        return hit

    def value_of(self, g: GenSym) -> NCPoly:
        hit = self._lookup(g)
        if hit is not None:
            return hit
        derived = self._derive(g)
        self.derived_values[g] = derived
        return derived

    def _require(self, g: GenSym, wanted_for: GenSym) -> NCPoly:
        hit = self._lookup(g)
        if hit is None:
            raise UnderdeterminedError(
                f"Cocycle has no value on {g}, needed to derive its value on {wanted_for}"
            )
        return hit

    def _derive(self, g: GenSym) -> NCPoly:
        ambient = self.ambient
        if g.family == "u":
            n = self.domain.n
            a, b = g.indices
            total = NCPoly.zero(self.module.alphabet)
            if g.star:
                # u*u = 1:  c(u_ab*) = -sum_k u_kb* c(u_ka)
                for k in range(1, n + 1):
                    total = total + self.image(GenSym.of("u", (k, b), True)) * self._require(GenSym.of("u", (k, a)), g)
            else:
                # uu* = 1:  c(u_ab) = -sum_k u_ak c(u_bk*)
                for k in range(1, n + 1):
                    total = total + self.image(GenSym.of("u", (a, k))) * self._require(GenSym.of("u", (b, k), True), g)
            return normal_form(-total, ambient)
        if g.family == "z" and g.adjoint() in self.domain.alphabet:
            # zz* = z*z = 1:  c(z*) = -z* c(z), c(z) = -z c(z*)
            other = self._require(g.adjoint(), g)
            return normal_form(-(self.image(g) * other), ambient)
        raise UnderdeterminedError(f"Cocycle on {self.domain.name} has no value on {g}")

    # ---------- Evaluation ----------

    def eval_word(self, word: Word) -> NCPoly:
        cache = self._word_cache
        hit = cache.get(word)
        if hit is not None:
            return hit[1]
        start = len(word) - 1
        while word[:start] not in cache:
            start -= 1
        image, value = cache[word[:start]]
        for pos in range(start, len(word)):
            g = word[pos]
            # c(w g) = w.c(g) + c(w) eps(g)
            value = self.module.act(image, self.value_of(g)) + value.scale(self.counit_table[g])
            image = normal_form(image * self.image(g), self.ambient)
            cache[word[:pos + 1]] = (image, value)
        return value

    def __repr__(self) -> str:
        return (
            f"Cocycle({self.domain.name} -> {self.ambient.name}, n={self.ambient.n}, "
            f"values={len(self.values)})"
        )


# ---------- Construction ----------

def _identity_embedding(domain: AnyPresentation, target: Alphabet) -> Dict[GenSym, NCPoly]:
    return {g: NCPoly.gen(target, g) for g in domain.alphabet.generators}


def make_cocycle(
    module: ModuleSpec,
    values: Mapping[GenSym, NCPoly],
    domain: Optional[AnyPresentation] = None,
    embedding: Optional[Mapping[GenSym, NCPoly]] = None,
) -> Cocycle:
    """Cocycle from a value table; domain defaults to the ambient algebra itself."""
    domain = domain or module.ambient
    if embedding is None:
        embedding = _identity_embedding(domain, module.alphabet)
    counit_table = make_hopf_structure(domain).counit_table
    return Cocycle(module, domain, counit_table, embedding, values)


def factor_cocycle(module: ModuleSpec, factor_index: int, values: Mapping[GenSym, NCPoly]) -> Cocycle:
    """Cocycle on one factor of a free-product ambient, acting through the inclusion."""
    ambient = module.ambient
    if not isinstance(ambient, FreeProductPresentation):
        raise ParameterError(f"{ambient.name} is not a free product")
    factor = ambient.factors[factor_index]
    return make_cocycle(module, values, domain=factor, embedding=_identity_embedding(factor, module.alphabet))


def eval_cocycle(c: Cocycle, p: NCPoly) -> NCPoly:
    """Leibniz-expanded value of c on p, in normal form. Linear; c(1) = 0."""
    if p.alphabet != c.domain.alphabet:
        raise AlphabetError(f"Element over {p.alphabet.name} is not in the domain {c.domain.name}")
    total = NCPoly.zero(c.module.alphabet)
    for w, coeff in p.items():
        total = total + c.eval_word(w).scale(coeff)
    return total


def inner_value(xi: NCPoly, p: NCPoly, c: Cocycle) -> NCPoly:
    """Closed formula p.xi - eps(p) xi for p in the domain of c."""
    image = p.substitute(c.embedding, c.module.alphabet)
    eps = ZERO
    for w, coeff in p.items():
        eps = eps + coeff * c.counit_of(w)
    return normal_form(image * xi - xi.scale(eps), c.ambient)


def inner_cocycle(
    xi: NCPoly,
    module: ModuleSpec,
    domain: Optional[AnyPresentation] = None,
    embedding: Optional[Mapping[GenSym, NCPoly]] = None,
) -> Cocycle:
    """a -> a.xi - eps(a) xi, tabulated on every domain generator."""
    if xi.alphabet != module.alphabet:
        raise AlphabetError(f"Witness over {xi.alphabet.name} is not in the module {module.ambient.name}")
    shell = make_cocycle(module, {}, domain=domain, embedding=embedding)
    values = {}
    for g in shell.domain.alphabet.generators:
        values[g] = normal_form(shell.image(g) * xi - xi.scale(shell.counit_table[g]), module.ambient)
    return Cocycle(module, shell.domain, shell.counit_table, shell.embedding, values, witness=xi)


def free_product_cocycle(c1: Cocycle, c2: Cocycle, fp: FreeProductPresentation) -> Cocycle:
    """The unique cocycle on the free product restricting to c1 and c2 on the factors."""
    if c1.module.alphabet != c2.module.alphabet:
        raise AlphabetError("Free product of cocycles needs one common module")
    for c, factor in zip((c1, c2), fp.factors):
        if c.domain.alphabet != factor.alphabet:
            raise AlphabetError(f"Cocycle on {c.domain.name} does not live on factor {factor.name}")
    values = {**c1.values, **c2.values}
    embedding = {**c1.embedding, **c2.embedding}
    counit_table = {**c1.counit_table, **c2.counit_table}
    return Cocycle(c1.module, fp, counit_table, embedding, values)


# ---------- Determination ----------

def derive_adjoint_values(c: Cocycle) -> Cocycle:
    """Fill c(u_ji*) = -sum_k u_ki* c(u_kj) (and c(z*) = -z* c(z)). Idempotent."""
    for g in c.domain.alphabet.generators:
        if g.star and c._lookup(g) is None:
            c.value_of(g)
    return c


def derive_values_from_adjoints(c: Cocycle) -> Cocycle:
    """Fill c(u_ij) = -sum_k u_ik c(u_jk*) from the starred values. Idempotent."""
    for g in c.domain.alphabet.generators:
        if not g.star and g.family in ("u", "z") and c._lookup(g) is None:
            c.value_of(g)
    return c


def adjoint_table(c: Cocycle) -> Dict[GenSym, NCPoly]:
    derive_adjoint_values(c)
    return {g: c.value_of(g) for g in c.domain.alphabet.generators if g.star}


# ---------- Checks ----------

def check_relations(c: Cocycle, presentation: Optional[AnyPresentation] = None) -> LemmaReport:
    """eval(c, r) = 0 for every defining relation r and its adjoint."""
    presentation = presentation or c.domain
    report = LemmaReport(
        lemma_id="cocycle-relations",
        parameters={"domain": presentation.name, "module": c.ambient.name, "n": presentation.n},
    )
    for r in presentation.closed_relations():
        r = r.lift(c.domain.alphabet) if r.alphabet != c.domain.alphabet else r
        value = eval_cocycle(c, r)
        report.add(
            f"c({r.to_text()}) = 0",
            value.is_zero(),
            None if value.is_zero() else f"c({r.to_text()}) = {value.to_text()}",
        )
    return report


# ---------- Restriction ----------

def restrict(c: Cocycle, images: Mapping[GenSym, NCPoly], domain: AnyPresentation) -> Cocycle:
    """
    Pull c back along the homomorphism domain -> c.domain given on generators by `images`.

    The image set must be closed under the involution modulo relations:
    images[g*] = images[g]* after normal form in c.domain.
    """
    source = c.domain
    for g in domain.alphabet.generators:
        if g not in images:
            raise ClosureError(f"No image for generator {g} of {domain.name}")
        partner = g.adjoint()
        if partner not in images:
            raise ClosureError(f"Image set is not star-closed: {partner} is missing")
        lhs = normal_form(images[g].adjoint(), source)
        rhs = normal_form(images[partner], source)
        if lhs != rhs:
            raise ClosureError(
                f"Image of {partner} is {rhs.to_text()}, but the adjoint of the image of {g} is {lhs.to_text()}"
            )

    values: Dict[GenSym, NCPoly] = {}
    embedding: Dict[GenSym, NCPoly] = {}
    counit_table: Dict[GenSym, Scalar] = {}
    for g in domain.alphabet.generators:
        image = images[g]
        values[g] = eval_cocycle(c, image)
        embedding[g] = normal_form(image.substitute(c.embedding, c.module.alphabet), c.ambient)
        eps = ZERO
        for w, coeff in image.items():
            eps = eps + coeff * c.counit_of(w)
        counit_table[g] = eps
    logger.debug(f"Restricted cocycle on {source.name} to {domain.name} ({len(values)} generators)")
    return Cocycle(c.module, domain, counit_table, embedding, values)


def restrict_to_unitary(c: Cocycle, n: Optional[int] = None) -> Cocycle:
    """Along u_ij -> z v_ij, u_ij* -> v_ij z*."""
    n = n or c.domain.n
    return restrict(c, unitary_embedding(n), make_presentation("U_plus", n))


def restrict_to_an(c: Cocycle, n: Optional[int] = None) -> Cocycle:
    """Along w_ijkl -> v_ij v_kl."""
    n = n or c.domain.n
    return restrict(c, an_embedding(n, target=c.domain.alphabet), make_presentation("A_n", n))


# ---------- Innerness ----------

def solve_inner(
    c: Cocycle,
    degree_bound: int,
    gens: Optional[Iterable[GenSym]] = None,
) -> Optional[NCPoly]:
    """
    Search for xi with g.xi - eps(g) xi = c(g) on every generator in `gens`,
    xi ranging over normal words of degree <= degree_bound. Returns a verified
    witness or None (see NON_INNER_CAVEAT).
    """
    ambient = c.ambient
    gens = list(gens) if gens is not None else list(c.domain.alphabet.generators)
    max_image = max((c.image(g).degree() for g in gens), default=0)
    needed = degree_bound + max(max_image, 1)
    if needed > ambient.certified_degree:
        raise CertificationError(
            f"solve_inner at degree {degree_bound} needs {ambient.name} certified to {needed}, "
            f"have {ambient.certified_degree}"
        )

    basis: List[Word] = normal_words(ambient, degree_bound)
    alphabet = c.module.alphabet
    # one equation per (generator, output word)
    equations: Dict[Tuple[GenSym, Word], Dict[int, Scalar]] = {}
    targets: Dict[GenSym, NCPoly] = {g: c.value_of(g) for g in gens}
    for col, w in enumerate(basis):
        monomial = NCPoly._trusted(alphabet, {w: ONE})
        for g in gens:
            column = normal_form(c.image(g) * monomial, ambient) - monomial.scale(c.counit_table[g])
            for out, coeff in column.items():
                equations.setdefault((g, out), {})[col] = coeff

    system = SparseLinearSystem(len(basis))
    keys = set(equations)
    for g, target in targets.items():
        keys.update((g, out) for out in target.words())
    rank = {gen: r for r, gen in enumerate(gens)}
    order = ambient.order
    for key in sorted(keys, key=lambda k: (rank[k[0]], order.key(k[1]))):
        g, out = key
        system.add_equation(equations.get(key, {}), targets[g].coefficient(out))

    solution = system.solve()
    if solution is None:
        logger.info(
            f"No inner witness up to degree {degree_bound} in {ambient.name} "
            f"({len(basis)} unknowns, {system.rows_seen} equations)"
        )
        return None

    xi = NCPoly._trusted(alphabet, {basis[col]: v for col, v in solution.items()})
    for g in gens:
        produced = normal_form(c.image(g) * xi - xi.scale(c.counit_table[g]), ambient)
        if produced != targets[g]:
            logger.warning(f"Solver witness failed re-verification on {g}; discarding")
            return None
    logger.info(f"Found inner witness of degree {xi.degree()} in {ambient.name}")
    return xi
