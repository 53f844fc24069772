"""
Rewriting engine: rule orientation, interreduction, degree-bounded overlap
completion, normal forms, and confluence checks.

Reduction strategy is fixed: the redex with the leftmost start position is
rewritten, using the first rule (in rule-list order) whose left side matches
there. Word normal forms are memoized per rule system.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from algebra.errors import AlphabetError, OrientationError, ParameterError
from algebra.ncpoly import NCPoly
from algebra.scalar import ONE, Scalar, ZERO
from algebra.words import MonomialOrder, Word, contains
from presentations.base import (
    FreeProductPresentation,
    Presentation,
    Reduction,
    Rule,
    RuleIndex,
)

logger = logging.getLogger(__name__)

AnyPresentation = Union[Presentation, FreeProductPresentation]


def _accumulate(acc: Dict[Word, Scalar], word: Word, coeff: Scalar) -> None:
    new = acc.get(word, ZERO) + coeff
    if new.is_zero():
        acc.pop(word, None)
    else:
        acc[word] = new


# ---------- Word-level reduction ----------

def _find_redex(word: Word, index: RuleIndex) -> Optional[Tuple[int, Word, Dict[Word, Scalar]]]:
    by_first = index.by_first
    for start in range(len(word)):
        candidates = by_first.get(word[start])
        if not candidates:
            continue
        for lhs, rhs_terms in candidates:
            end = start + len(lhs)
            if end <= len(word) and word[start:end] == lhs:
                return start, lhs, rhs_terms
    return None


def _all_redexes(word: Word, index: RuleIndex) -> List[Tuple[int, Word, Dict[Word, Scalar]]]:
    found = []
    for start in range(len(word)):
        for lhs, rhs_terms in index.by_first.get(word[start], ()):
            end = start + len(lhs)
            if end <= len(word) and word[start:end] == lhs:
                found.append((start, lhs, rhs_terms))
    return found


def _rewrite_at(word: Word, start: int, lhs: Word, rhs_terms: Dict[Word, Scalar]) -> List[Tuple[Word, Scalar]]:
    prefix, suffix = word[:start], word[start + len(lhs):]
    return [(prefix + u + suffix, c) for u, c in rhs_terms.items()]


def word_normal_form(word: Word, index: RuleIndex) -> Dict[Word, Scalar]:
    """Normal form of a single word as a term map. Iterative, memoized in a bounded cache."""
    cache = index.word_cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    # the bottom of the stack is `word`; entries may be evicted at any time
    result: Dict[Word, Scalar] = {}
    stack = [word]
    while stack:
        w = stack[-1]
        known = cache.get(w)
        if known is None:
            redex = _find_redex(w, index)
            if redex is None:
                known = {w: ONE}
            else:
                children = [(cache.get(cw), cw, c) for cw, c in _rewrite_at(w, *redex)]
                missing = [cw for nf, cw, _ in children if nf is None]
                if missing:
                    stack.extend(missing)
                    continue
                known = {}
                for nf, _, c in children:
                    for nw, nc in nf.items():
                        _accumulate(known, nw, c * nc)
            cache[w] = known
        stack.pop()
        if not stack:
            result = known
    return result


def _terms_normal_form(terms, index: RuleIndex) -> Dict[Word, Scalar]:
    acc: Dict[Word, Scalar] = {}
    for w, c in terms:
        for nw, nc in word_normal_form(w, index).items():
            _accumulate(acc, nw, c * nc)
    return acc


# ---------- Public reduction API ----------

def normal_form(p: NCPoly, presentation: AnyPresentation) -> NCPoly:
    """Fixed point of rule application. Linear; unique up to the certified degree."""
    if isinstance(presentation, FreeProductPresentation):
        return free_product_normal_form(p, presentation)
    if p.alphabet != presentation.alphabet:
        raise AlphabetError(
            f"Element over {p.alphabet.name} cannot be reduced in {presentation.name}"
        )
    return NCPoly._trusted(presentation.alphabet, _terms_normal_form(p.items(), presentation.index))


def reduce(p: NCPoly, presentation: AnyPresentation) -> Reduction:
    """normal_form plus a flag saying whether uniqueness is certified at this degree."""
    certified = p.is_zero() or p.degree() <= presentation.certified_degree
    if not certified:
        logger.warning(
            f"Reducing degree {p.degree()} element in {presentation.name} "
            f"above certified degree {presentation.certified_degree}"
        )
    return Reduction(poly=normal_form(p, presentation), certified=certified)


def free_product_normal_form(p: NCPoly, fp: FreeProductPresentation) -> NCPoly:
    """Reduce every maximal single-factor block in its factor; repeat until blocks stop merging."""
    if p.alphabet != fp.alphabet:
        raise AlphabetError(f"Element over {p.alphabet.name} is not over {fp.name}")
    current = p
    while True:
        nxt = current.map_terms(lambda w, c: _reduce_blocks(w, fp).scale(c))
        if nxt == current:
            return current
        current = nxt


def _split_blocks(word: Word, fp: FreeProductPresentation) -> List[Tuple[int, Word]]:
    blocks: List[Tuple[int, Word]] = []
    for g in word:
        owner = fp.factor_of(g)
        if blocks and blocks[-1][0] == owner:
            blocks[-1] = (owner, blocks[-1][1] + (g,))
        else:
            blocks.append((owner, (g,)))
    return blocks


def _reduce_blocks(word: Word, fp: FreeProductPresentation) -> NCPoly:
    cache = fp.index.word_cache
    hit = cache.get(word)
    if hit is not None:
        return NCPoly._trusted(fp.alphabet, hit)
    acc: Dict[Word, Scalar] = {(): ONE}
    for owner, block in _split_blocks(word, fp):
        block_nf = word_normal_form(block, fp.factors[owner].index)
        nxt: Dict[Word, Scalar] = {}
        for w, c in acc.items():
            for bw, bc in block_nf.items():
                _accumulate(nxt, w + bw, c * bc)
        acc = nxt
    cache[word] = acc
    return NCPoly._trusted(fp.alphabet, acc)


# ---------- Orientation and interreduction ----------

def orient(poly: NCPoly, order: MonomialOrder) -> Rule:
    """Turn relation `poly = 0` into a monic rule on its leading word."""
    if poly.is_zero():
        raise OrientationError("Cannot orient the zero relation")
    lead = poly.leading_word(order)
    if not lead:
        raise OrientationError(f"Relation {poly.to_text()} collapses the algebra to zero")
    lc = poly.coefficient(lead)
    rhs = NCPoly.word(poly.alphabet, lead) - poly.scale(ONE / lc)
    return Rule(lead, rhs)


def check_orientation(rules: Sequence[Rule], order: MonomialOrder) -> None:
    for rule in rules:
        lhs_key = order.key(rule.lhs)
        for w in rule.rhs.words():
            if not order.key(w) < lhs_key:
                raise OrientationError(
                    f"Rule {'*'.join(map(str, rule.lhs))} -> {rule.rhs.to_text()} "
                    f"does not decrease: {'*'.join(map(str, w)) or '1'} is not smaller"
                )


def interreduce(polys: Sequence[NCPoly], order: MonomialOrder) -> List[Rule]:
    """Reduced rule system for the ideal generated by `polys` (within the reduction's reach)."""
    if not polys:
        return []
    alphabet = polys[0].alphabet
    pending: List[NCPoly] = [p for p in polys if not p.is_zero()]
    basis: List[Rule] = []
    while pending:
        pending.sort(key=lambda q: order.key(q.leading_word(order)))
        p = pending.pop(0)
        index = RuleIndex(basis)
        reduced = NCPoly._trusted(alphabet, _terms_normal_form(p.items(), index))
        if reduced.is_zero():
            continue
        rule = orient(reduced, order)
        kept: List[Rule] = []
        for b in basis:
            if contains(b.lhs, rule.lhs):
                pending.append(b.as_relation())
            else:
                kept.append(b)
        basis = kept + [rule]

    index = RuleIndex(basis)
    final = [
        Rule(r.lhs, NCPoly._trusted(alphabet, _terms_normal_form(r.rhs.items(), index)))
        for r in basis
    ]
    final.sort(key=lambda r: order.key(r.lhs))
    return final


# ---------- Overlaps and completion ----------

def overlaps(rules: Sequence[Rule], degree_bound: int) -> Iterator[Tuple[Word, Rule, Rule, int]]:
    """Yield (word, r1, r2, k) with r1.lhs = AB, r2.lhs = BC, |B| = k, |ABC| <= degree_bound."""
    by_prefix: Dict[Word, List[Rule]] = defaultdict(list)
    for r in rules:
        for k in range(1, len(r.lhs)):
            by_prefix[r.lhs[:k]].append(r)
    for r1 in rules:
        l1 = r1.lhs
        for k in range(1, len(l1)):
            for r2 in by_prefix.get(l1[len(l1) - k:], ()):
                word = l1 + r2.lhs[k:]
                if len(word) <= degree_bound:
                    yield word, r1, r2, k


def _overlap_difference(word: Word, r1: Rule, r2: Rule, k: int, index: RuleIndex) -> Dict[Word, Scalar]:
    a_part = r1.lhs[:len(r1.lhs) - k]
    c_part = r2.lhs[k:]
    left = [(u + c_part, c) for u, c in r1.rhs.items()]
    right = [(a_part + u, -c) for u, c in r2.rhs.items()]
    return _terms_normal_form(left + right, index)


def initial_system(presentation: Presentation) -> Presentation:
    """Orient and interreduce the *-closed relation set; nothing is certified yet."""
    rules = interreduce(presentation.closed_relations(), presentation.order)
    return presentation.with_rules(rules, certified_degree=0)


def complete(presentation: AnyPresentation, degree_bound: int) -> AnyPresentation:
    """Add rules until every overlap of degree <= degree_bound resolves."""
    if isinstance(presentation, FreeProductPresentation):
        factors = tuple(complete(f, degree_bound) for f in presentation.factors)
        return presentation.with_factors(factors)

    if degree_bound < presentation.max_relation_degree():
        raise ParameterError(
            f"Completion bound {degree_bound} is below the relation degree "
            f"{presentation.max_relation_degree()} of {presentation.name}"
        )
    check_orientation(presentation.rules, presentation.order)
    if presentation.rules and presentation.certified_degree >= degree_bound:
        return presentation

    order = presentation.order
    alphabet = presentation.alphabet
    polys = [r.as_relation() for r in presentation.rules] + presentation.closed_relations()
    rules = interreduce(polys, order)

    round_no = 0
    while True:
        round_no += 1
        index = RuleIndex(rules)
        found: List[NCPoly] = []
        checked = 0
        for word, r1, r2, k in overlaps(rules, degree_bound):
            checked += 1
            diff = _overlap_difference(word, r1, r2, k, index)
            if diff:
                found.append(NCPoly._trusted(alphabet, diff))
        logger.info(
            f"Completion of {presentation.name} (n={presentation.n}) round {round_no}: "
            f"{len(rules)} rules, {checked} overlaps, {len(found)} unresolved"
        )
        if not found:
            break
        rules = interreduce([r.as_relation() for r in rules] + found, order)

    return presentation.with_rules(rules, certified_degree=degree_bound)


def find_unresolved_overlaps(presentation: AnyPresentation, degree_bound: int) -> List[Word]:
    """Overlap words whose two one-step reducts have different normal forms."""
    unresolved: List[Word] = []
    for p in presentation.factors:
        for word, r1, r2, k in overlaps(p.rules, degree_bound):
            if _overlap_difference(word, r1, r2, k, p.index):
                unresolved.append(word)
    return unresolved


def check_confluence(presentation: AnyPresentation, degree_bound: int) -> List[Word]:
    """
    Exhaustive: for every overlap word up to degree_bound, rewrite each redex
    first and compare the resulting normal forms. Returns the words that disagree.
    """
    bad: List[Word] = []
    for p in presentation.factors:
        seen = set()
        for word, _, _, _ in overlaps(p.rules, degree_bound):
            if word in seen:
                continue
            seen.add(word)
            results = []
            for redex in _all_redexes(word, p.index):
                step = _rewrite_at(word, *redex)
                results.append(_terms_normal_form(step, p.index))
            if any(r != results[0] for r in results[1:]):
                bad.append(word)
    return bad


# ---------- Basis words ----------

def normal_words(presentation: AnyPresentation, max_length: int) -> List[Word]:
    """All irreducible words of length <= max_length, shortest first."""
    index = presentation.index
    gens = presentation.alphabet.generators
    layer: List[Word] = [()]
    out: List[Word] = [()]
    for _ in range(max_length):
        nxt: List[Word] = []
        for w in layer:
            for g in gens:
                cand = w + (g,)
                if not index.ends_with_lhs(cand):
                    nxt.append(cand)
        out.extend(nxt)
        layer = nxt
    return out


def is_normal_word(word: Word, presentation: AnyPresentation) -> bool:
    return _find_redex(word, presentation.index) is None
