"""Presentation types: generators, relations, oriented rules, monomial order."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.errors import AlphabetError
from algebra.ncpoly import NCPoly
from algebra.scalar import Scalar
from algebra.words import Alphabet, DegLexOrder, GenSym, MonomialOrder, Word
from utils.lru import BoundedCache
from utils.settings import get_settings


@dataclass(frozen=True)
class Rule:
    """lhs -> rhs, rhs strictly smaller than lhs in the presentation's order."""
    lhs: Word
    rhs: NCPoly

    def as_relation(self) -> NCPoly:
        return NCPoly.word(self.rhs.alphabet, self.lhs) - self.rhs


class RuleIndex:
    """Rules bucketed by first and last letter, plus a bounded per-system word cache."""

    def __init__(self, rules: Sequence[Rule], cache_size: Optional[int] = None):
        self.rules: Tuple[Rule, ...] = tuple(rules)
        self.by_first: Dict[GenSym, List[Tuple[Word, Dict[Word, Scalar]]]] = {}
        self.by_last: Dict[GenSym, List[Word]] = {}
        for rule in self.rules:
            rhs_terms = dict(rule.rhs.items())
            self.by_first.setdefault(rule.lhs[0], []).append((rule.lhs, rhs_terms))
            self.by_last.setdefault(rule.lhs[-1], []).append(rule.lhs)
        # word -> normal form terms; filled by the rewriting service
        self.word_cache: BoundedCache[Word, Dict[Word, Scalar]] = BoundedCache(
            cache_size or get_settings().word_cache_size
        )

    def ends_with_lhs(self, word: Word) -> bool:
        if not word:
            return False
        for lhs in self.by_last.get(word[-1], ()):
            if len(lhs) <= len(word) and word[len(word) - len(lhs):] == lhs:
                return True
        return False


class Presentation:
    """
    A quotient of the free *-algebra on `alphabet`.

    `relations` is the generating list (each read as relation = 0);
    `closed_relations()` adds every adjoint not already present.
    `fundamental` lists the generators whose cocycle values determine a cocycle.
    """

    def __init__(
        self,
        name: str,
        n: int,
        alphabet: Alphabet,
        relations: Sequence[NCPoly],
        order: MonomialOrder,
        rules: Sequence[Rule] = (),
        certified_degree: int = 0,
        fundamental: Sequence[GenSym] = (),
    ):
        self.name = name
        self.n = n
        self.alphabet = alphabet
        self.relations: Tuple[NCPoly, ...] = tuple(relations)
        self.order = order
        self.rules: Tuple[Rule, ...] = tuple(rules)
        self.certified_degree = certified_degree
        self.fundamental: Tuple[GenSym, ...] = tuple(fundamental)
        self.index = RuleIndex(self.rules)

    @property
    def key(self) -> Tuple[str, int]:
        return (self.name, self.n)

    @property
    def factors(self) -> Tuple["Presentation", ...]:
        return (self,)

    def closed_relations(self) -> List[NCPoly]:
        out: List[NCPoly] = list(self.relations)
        for r in self.relations:
            star = r.adjoint()
            if star not in out and (-star) not in out:
                out.append(star)
        return out

    def with_rules(self, rules: Sequence[Rule], certified_degree: int) -> "Presentation":
        return Presentation(
            name=self.name,
            n=self.n,
            alphabet=self.alphabet,
            relations=self.relations,
            order=self.order,
            rules=rules,
            certified_degree=certified_degree,
            fundamental=self.fundamental,
        )

    def max_relation_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)

    def __repr__(self) -> str:
        return (
            f"Presentation({self.name}, n={self.n}, rules={len(self.rules)}, "
            f"certified_degree={self.certified_degree})"
        )


class FreeProductPresentation:
    """A * B over disjoint alphabets; words alternate between factor blocks."""

    def __init__(self, name: str, n: int, factors: Tuple[Presentation, Presentation], alphabet: Alphabet):
        first, second = factors
        overlap = set(first.alphabet.generators) & set(second.alphabet.generators)
        if overlap:
            raise AlphabetError(f"Free product factors share generators: {sorted(map(str, overlap))}")
        self.name = name
        self.n = n
        self.factors: Tuple[Presentation, Presentation] = (first, second)
        self.alphabet = alphabet
        self.order = DegLexOrder(alphabet)
        self.fundamental: Tuple[GenSym, ...] = first.fundamental + second.fundamental
        self.rules: Tuple[Rule, ...] = tuple(
            Rule(r.lhs, r.rhs.lift(alphabet)) for f in self.factors for r in f.rules
        )
        self.index = RuleIndex(self.rules)

    @property
    def key(self) -> Tuple[str, int]:
        return (self.name, self.n)

    @property
    def certified_degree(self) -> int:
        return min(f.certified_degree for f in self.factors)

    @property
    def relations(self) -> Tuple[NCPoly, ...]:
        return tuple(r.lift(self.alphabet) for f in self.factors for r in f.relations)

    def closed_relations(self) -> List[NCPoly]:
        return [r.lift(self.alphabet) for f in self.factors for r in f.closed_relations()]

    def factor_of(self, g: GenSym) -> int:
        for idx, f in enumerate(self.factors):
            if g in f.alphabet:
                return idx
        raise AlphabetError(f"Generator {g} belongs to no factor of {self.name}")

    def max_relation_degree(self) -> int:
        return max(f.max_relation_degree() for f in self.factors)

    def with_factors(self, factors: Tuple[Presentation, Presentation]) -> "FreeProductPresentation":
        return FreeProductPresentation(self.name, self.n, factors, self.alphabet)

    def __repr__(self) -> str:
        names = " * ".join(f.name for f in self.factors)
        return f"FreeProductPresentation({self.name} = {names}, n={self.n})"


@dataclass
class Reduction:
    """Result of a reduction: the normal form and whether it is certified unique."""
    poly: NCPoly
    certified: bool = True

