"""
Generator symbols, words, alphabets and monomial orders.

Symbols are interned: `GenSym.of(...)` always hands back the same object for the
same (family, indices, star).

Text form of a symbol: v[1,2], u[1,2]', z, z', a, a', g, g', w[1,2,3,4].
"""

import re
import threading
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple

from algebra.errors import AlphabetError, ParameterError

# v and w are self-adjoint as families (w_ijkl* = w_klij is handled separately)
SELF_ADJOINT_FAMILIES = {"v", "w"}
FAMILY_ARITY = {"v": 2, "u": 2, "z": 0, "a": 0, "g": 0, "w": 4}

_SYMBOL_RE = re.compile(r"^([vuzagw])(?:\[\s*(\d+(?:\s*,\s*\d+)*)\s*\])?('?)$")


class GenSym:
    """A generator letter. Build through `GenSym.of`, never directly."""

    __slots__ = ("family", "indices", "star", "_hash", "_text")

    _interned: Dict[Tuple[str, Tuple[int, ...], bool], "GenSym"] = {}
    _lock = threading.Lock()

    def __init__(self, family: str, indices: Tuple[int, ...], star: bool):
        self.family = family
        self.indices = indices
        self.star = star
        self._hash = hash((family, indices, star))
        self._text = _symbol_text(family, indices, star)

    @classmethod
    def of(cls, family: str, indices: Iterable[int] = (), star: bool = False) -> "GenSym":
        if family not in FAMILY_ARITY:
            raise ParameterError(f"Unknown generator family: {family}")
        indices = tuple(int(i) for i in indices)
        if len(indices) != FAMILY_ARITY[family]:
            raise ParameterError(
                f"Family {family} takes {FAMILY_ARITY[family]} indices, got {len(indices)}"
            )
        if family in SELF_ADJOINT_FAMILIES:
            star = False
        key = (family, indices, bool(star))
        sym = cls._interned.get(key)
        if sym is None:
            with cls._lock:
                sym = cls._interned.setdefault(key, cls(family, indices, bool(star)))
        return sym

    @classmethod
    def from_text(cls, text: str) -> "GenSym":
        m = _SYMBOL_RE.match(text.strip())
        if not m:
            raise ParameterError(f"Not a generator symbol: {text!r}")
        indices = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
        return cls.of(m.group(1), indices, bool(m.group(3)))

    def adjoint(self) -> "GenSym":
        if self.family == "w":
            i, j, k, l = self.indices
            return GenSym.of("w", (k, l, i, j))
        if self.family in SELF_ADJOINT_FAMILIES:
            return self
        return GenSym.of(self.family, self.indices, not self.star)

    def key(self) -> Tuple[str, Tuple[int, ...], bool]:
        return (self.family, self.indices, self.star)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, GenSym):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (GenSym.of, (self.family, self.indices, self.star))

    def __repr__(self) -> str:
        return self._text

    __str__ = __repr__

    @property
    def text(self) -> str:
        return self._text


def _symbol_text(family: str, indices: Tuple[int, ...], star: bool) -> str:
    idx = f"[{','.join(str(i) for i in indices)}]" if indices else ""
    return f"{family}{idx}{chr(39) if star else ''}"


Word = Tuple[GenSym, ...]
EMPTY_WORD: Word = ()


def word_adjoint(word: Word) -> Word:
    return tuple(g.adjoint() for g in reversed(word))


def word_text(word: Word) -> str:
    return "*".join(g.text for g in word)


def contains(word: Word, sub: Word) -> bool:
    m = len(sub)
    if m == 0:
        return True
    for start in range(len(word) - m + 1):
        if word[start:start + m] == sub:
            return True
    return False


# ---------- Alphabets ----------

class Alphabet:
    """Ordered generator set of one algebra. Two alphabets are the same iff (name, n) match."""

    def __init__(self, name: str, n: int, generators: Sequence[GenSym]):
        self.name = name
        self.n = n
        self.generators: Tuple[GenSym, ...] = tuple(generators)
        self.rank: Dict[GenSym, int] = {g: r for r, g in enumerate(self.generators)}

    @property
    def key(self) -> Tuple[str, int]:
        return (self.name, self.n)

    def __contains__(self, g: GenSym) -> bool:
        return g in self.rank

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Alphabet({self.name}, n={self.n})"

    def check_word(self, word: Word) -> None:
        for g in word:
            if g not in self.rank:
                raise AlphabetError(f"Generator {g} is not in alphabet {self.name} (n={self.n})")

    def is_star_closed(self) -> bool:
        return all(g.adjoint() in self.rank for g in self.generators)

    def union(self, other: "Alphabet", name: str) -> "Alphabet":
        gens: List[GenSym] = list(self.generators)
        gens.extend(g for g in other.generators if g not in self.rank)
        return Alphabet(name, max(self.n, other.n), gens)


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def orthogonal_alphabet(n: int) -> Alphabet:
    return Alphabet("O+", n, [GenSym.of("v", ij) for ij in _pairs(n)])


def unitary_alphabet(n: int) -> Alphabet:
    # ranked by (i, j, star): unstarred before starred at equal index
    gens = []
    for ij in _pairs(n):
        gens.append(GenSym.of("u", ij))
        gens.append(GenSym.of("u", ij, star=True))
    return Alphabet("U+", n, gens)


def circle_alphabet() -> Alphabet:
    return Alphabet("S1", 1, [GenSym.of("z"), GenSym.of("z", star=True)])


def su2_alphabet() -> Alphabet:
    return Alphabet("SU2", 2, [
        GenSym.of("a"), GenSym.of("a", star=True),
        GenSym.of("g"), GenSym.of("g", star=True),
    ])


def free_product_alphabet(n: int) -> Alphabet:
    return circle_alphabet().union(orthogonal_alphabet(n), "H")


def an_alphabet(n: int) -> Alphabet:
    idx = range(1, n + 1)
    return Alphabet("A", n, [GenSym.of("w", ijkl) for ijkl in product(idx, idx, idx, idx)])


# ---------- Monomial orders ----------

class MonomialOrder:
    """Total order on words given by a sort key. Larger key = larger word."""

    name = "abstract"

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def key(self, word: Word) -> tuple:
        raise NotImplementedError

    def less(self, a: Word, b: Word) -> bool:
        return self.key(a) < self.key(b)

    def leading(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)


class DegLexOrder(MonomialOrder):
    """Total degree first, then generator ranks left to right."""

    name = "deglex"

    def key(self, word: Word) -> tuple:
        rank = self.alphabet.rank
        return (len(word),) + tuple(rank[g] for g in word)


class SU2GradedOrder(MonomialOrder):
    """
    Degree, then number of alpha letters, then the number of (gamma-letter,
    alpha-letter) pairs standing in that order, then ranks. Every SU(2) rule
    decreases under this key, including aa' -> 1 - gg'.
    """

    name = "su2-graded"

    def key(self, word: Word) -> tuple:
        rank = self.alphabet.rank
        alphas = 0
        gammas_seen = 0
        inversions = 0
        for g in word:
            if g.family == "a":
                alphas += 1
                inversions += gammas_seen
            else:
                gammas_seen += 1
        return (len(word), alphas, inversions) + tuple(rank[g] for g in word)


def all_words(alphabet: Alphabet, max_length: int, min_length: int = 0) -> List[Word]:
    out: List[Word] = []
    for length in range(min_length, max_length + 1):
        out.extend(product(alphabet.generators, repeat=length))
    return out
