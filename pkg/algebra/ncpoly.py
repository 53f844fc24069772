"""
Sparse noncommutative polynomials over an alphabet, and their tensor powers.

Both types are immutable; every constructor drops zero coefficients.
"""

from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from algebra.errors import AlphabetError
from algebra.scalar import Number, Scalar, ONE, ZERO
from algebra.words import EMPTY_WORD, Alphabet, GenSym, MonomialOrder, Word, word_adjoint


def _add_into(acc: Dict, key, coeff: Scalar) -> None:
    new = acc.get(key, ZERO) + coeff
    if new.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = new


class NCPoly:
    """Element of the free *-algebra on `alphabet`: a finite map Word -> Scalar."""

    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: Alphabet, terms: Optional[Mapping[Word, Number]] = None, check: bool = True):
        self.alphabet = alphabet
        clean: Dict[Word, Scalar] = {}
        for word, coeff in (terms or {}).items():
            c = Scalar.coerce(coeff)
            if c.is_zero():
                continue
            if check:
                alphabet.check_word(word)
            clean[tuple(word)] = c
        self._terms = clean

    # ---------- Constructors ----------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NCPoly":
        return cls(alphabet)

    @classmethod
    def const(cls, alphabet: Alphabet, value: Number = 1) -> "NCPoly":
        return cls(alphabet, {EMPTY_WORD: value})

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NCPoly":
        return cls.const(alphabet, ONE)

    @classmethod
    def word(cls, alphabet: Alphabet, word: Iterable[GenSym], coeff: Number = 1) -> "NCPoly":
        return cls(alphabet, {tuple(word): coeff})

    @classmethod
    def gen(cls, alphabet: Alphabet, g: GenSym) -> "NCPoly":
        return cls(alphabet, {(g,): ONE})

    @classmethod
    def _trusted(cls, alphabet: Alphabet, terms: Dict[Word, Scalar]) -> "NCPoly":
        # terms already clean and alphabet-checked
        p = cls.__new__(cls)
        p.alphabet = alphabet
        p._terms = terms
        return p

    # ---------- Access ----------

    @property
    def terms(self) -> Dict[Word, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, Scalar]]:
        return iter(self._terms.items())

    def words(self) -> List[Word]:
        return list(self._terms.keys())

    def coefficient(self, word: Word) -> Scalar:
        return self._terms.get(tuple(word), ZERO)

    def constant_term(self) -> Scalar:
        return self._terms.get(EMPTY_WORD, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(len(w) == 0 for w in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Longest word length; -1 for zero."""
        return max((len(w) for w in self._terms), default=-1)

    def generators_used(self) -> set:
        return {g for w in self._terms for g in w}

    def leading_word(self, order: MonomialOrder) -> Word:
        return order.leading(self._terms.keys())

    # ---------- Arithmetic ----------

    def _check_same(self, other: "NCPoly") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetError(
                f"Cannot combine elements over {self.alphabet.name} (n={self.alphabet.n}) "
                f"and {other.alphabet.name} (n={other.alphabet.n})"
            )

    def _coerce(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._check_same(other)
            return other
        return NCPoly.const(self.alphabet, Scalar.coerce(other))

    def __add__(self, other) -> "NCPoly":
        o = self._coerce(other)
        acc = dict(self._terms)
        for w, c in o._terms.items():
            _add_into(acc, w, c)
        return NCPoly._trusted(self.alphabet, acc)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._trusted(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "NCPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NCPoly":
        return self._coerce(other) - self

    def scale(self, s: Number) -> "NCPoly":
        s = Scalar.coerce(s)
        if s.is_zero():
            return NCPoly.zero(self.alphabet)
        return NCPoly._trusted(self.alphabet, {w: c * s for w, c in self._terms.items()})

    def __mul__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            return self.scale(other)
        self._check_same(other)
        acc: Dict[Word, Scalar] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                _add_into(acc, w1 + w2, c1 * c2)
        return NCPoly._trusted(self.alphabet, acc)

    def __rmul__(self, other) -> "NCPoly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "NCPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = NCPoly.one(self.alphabet)
        for _ in range(exponent):
            result = result * self
        return result

    def adjoint(self) -> "NCPoly":
        """Antilinear anti-homomorphism: reverse words, flip stars, conjugate."""
        return NCPoly._trusted(
            self.alphabet,
            {word_adjoint(w): c.conj() for w, c in self._terms.items()},
        )

    def substitute(self, images: Mapping[GenSym, "NCPoly"], target: Alphabet) -> "NCPoly":
        """Apply the unital homomorphism that sends g to images[g]."""
        result = NCPoly.zero(target)
        for w, c in self._terms.items():
            term = NCPoly.const(target, c)
            for g in w:
                image = images.get(g)
                if image is None:
                    raise AlphabetError(f"No image given for generator {g}")
                term = term * image
            result = result + term
        return result

    def lift(self, alphabet: Alphabet) -> "NCPoly":
        """Same element viewed over a larger alphabet (e.g. a free product)."""
        if alphabet == self.alphabet:
            return self
        for w in self._terms:
            alphabet.check_word(w)
        return NCPoly._trusted(alphabet, dict(self._terms))

    def map_terms(self, fn: Callable[[Word, Scalar], "NCPoly"]) -> "NCPoly":
        """Linear extension of a word-level map."""
        result: Dict[Word, Scalar] = {}
        alphabet = self.alphabet
        for w, c in self._terms.items():
            image = fn(w, c)
            alphabet = image.alphabet
            for w2, c2 in image._terms.items():
                _add_into(result, w2, c2)
        return NCPoly._trusted(alphabet, result)

    # ---------- Comparison / printing ----------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Scalar)):
            other = NCPoly.const(self.alphabet, other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.alphabet.key, frozenset(self._terms.items())))

    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> List[Tuple[Word, Scalar]]:
        if order is None:
            rank = self.alphabet.rank
            key = lambda item: (len(item[0]),) + tuple(rank[g] for g in item[0])
        else:
            key = lambda item: order.key(item[0])
        return sorted(self._terms.items(), key=key)

    def to_text(self, order: Optional[MonomialOrder] = None) -> str:
        """Canonical text: terms in ascending order, coefficient always written."""
        if not self._terms:
            return "0"
        parts: List[str] = []
        for idx, (w, c) in enumerate(self.sorted_terms(order)):
            negative_real = c.is_real() and c.re < 0
            coeff = (-c).to_text() if (negative_real and idx > 0) else c.to_text()
            body = coeff if not w else f"{coeff}*{'*'.join(g.text for g in w)}"
            if idx == 0:
                parts.append(body)
            else:
                parts.append(f" - {body}" if negative_real else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"NCPoly[{self.alphabet.name}]({self.to_text()})"

    __str__ = to_text


TensorKey = Tuple[Word, ...]


class TensorPoly:
    """Element of the k-fold algebraic tensor power of the free algebra on `alphabet`."""

    __slots__ = ("alphabet", "legs", "_terms")

    def __init__(self, alphabet: Alphabet, legs: int = 2, terms: Optional[Mapping[TensorKey, Number]] = None):
        self.alphabet = alphabet
        self.legs = legs
        clean: Dict[TensorKey, Scalar] = {}
        for key, coeff in (terms or {}).items():
            c = Scalar.coerce(coeff)
            if c.is_zero():
                continue
            if len(key) != legs:
                raise AlphabetError(f"Tensor term has {len(key)} legs, expected {legs}")
            for w in key:
                alphabet.check_word(w)
            _add_into(clean, tuple(tuple(w) for w in key), c)
        self._terms = clean

    @classmethod
    def _trusted(cls, alphabet: Alphabet, legs: int, terms: Dict[TensorKey, Scalar]) -> "TensorPoly":
        t = cls.__new__(cls)
        t.alphabet = alphabet
        t.legs = legs
        t._terms = terms
        return t

    @classmethod
    def one(cls, alphabet: Alphabet, legs: int = 2) -> "TensorPoly":
        return cls._trusted(alphabet, legs, {tuple(EMPTY_WORD for _ in range(legs)): ONE})

    @classmethod
    def pure(cls, *factors: NCPoly) -> "TensorPoly":
        """p1 (x) p2 (x) ... expanded into terms."""
        alphabet = factors[0].alphabet
        acc: Dict[TensorKey, Scalar] = {(): ONE}
        for f in factors:
            if f.alphabet != alphabet:
                raise AlphabetError("Tensor legs must share one alphabet")
            nxt: Dict[TensorKey, Scalar] = {}
            for key, c in acc.items():
                for w, c2 in f.items():
                    _add_into(nxt, key + (w,), c * c2)
            acc = nxt
        return cls._trusted(alphabet, len(factors), acc)

    def items(self) -> Iterator[Tuple[TensorKey, Scalar]]:
        return iter(self._terms.items())

    @property
    def terms(self) -> Dict[TensorKey, Scalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_same(self, other: "TensorPoly") -> None:
        if self.alphabet != other.alphabet or self.legs != other.legs:
            raise AlphabetError(
                f"Cannot combine tensors over {self.alphabet.name}^{self.legs} "
                f"and {other.alphabet.name}^{other.legs}"
            )

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        self._check_same(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, c)
        return TensorPoly._trusted(self.alphabet, self.legs, acc)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly._trusted(self.alphabet, self.legs, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def scale(self, s: Number) -> "TensorPoly":
        s = Scalar.coerce(s)
        acc: Dict[TensorKey, Scalar] = {}
        for k, c in self._terms.items():
            _add_into(acc, k, c * s)
        return TensorPoly._trusted(self.alphabet, self.legs, acc)

    def __mul__(self, other) -> "TensorPoly":
        """Leg-wise product: (p1 (x) q1)(p2 (x) q2) = p1p2 (x) q1q2."""
        if not isinstance(other, TensorPoly):
            return self.scale(other)
        self._check_same(other)
        acc: Dict[TensorKey, Scalar] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                _add_into(acc, key, c1 * c2)
        return TensorPoly._trusted(self.alphabet, self.legs, acc)

    __rmul__ = scale

    def map_legs(self, fns: List[Callable[[Word], NCPoly]]) -> "TensorPoly":
        """Apply one linear word-level map per leg and re-expand."""
        acc: Dict[TensorKey, Scalar] = {}
        legs_out = len(fns)
        alphabet = self.alphabet
        for key, c in self._terms.items():
            images = [fn(w) for fn, w in zip(fns, key)]
            partial: Dict[TensorKey, Scalar] = {(): c}
            for img in images:
                alphabet = img.alphabet
                nxt: Dict[TensorKey, Scalar] = {}
                for pk, pc in partial.items():
                    for w, wc in img.items():
                        _add_into(nxt, pk + (w,), pc * wc)
                partial = nxt
            for pk, pc in partial.items():
                _add_into(acc, pk, pc)
        return TensorPoly._trusted(alphabet, legs_out, acc)

    def contract_leg(self, leg: int, functional: Callable[[Word], Scalar]) -> "TensorPoly | NCPoly":
        """Apply a scalar-valued functional to one leg; a 2-leg tensor becomes an NCPoly."""
        acc: Dict[TensorKey, Scalar] = {}
        for key, c in self._terms.items():
            value = functional(key[leg])
            if value.is_zero():
                continue
            _add_into(acc, key[:leg] + key[leg + 1:], c * value)
        if self.legs == 2:
            return NCPoly._trusted(self.alphabet, {k[0]: c for k, c in acc.items()})
        return TensorPoly._trusted(self.alphabet, self.legs - 1, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.legs == other.legs
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.alphabet.key, self.legs, frozenset(self._terms.items())))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        rank = self.alphabet.rank
        items = sorted(
            self._terms.items(),
            key=lambda kv: tuple((len(w),) + tuple(rank[g] for g in w) for w in kv[0]),
        )
        parts = []
        for key, c in items:
            legs = " (x) ".join("*".join(g.text for g in w) or "1" for w in key)
            parts.append(f"{c.to_text()}*[{legs}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorPoly[{self.alphabet.name}^{self.legs}]({self.to_text()})"


def mul(p: NCPoly, q: NCPoly) -> NCPoly:
    return p * q


def adjoint(p: NCPoly) -> NCPoly:
    return p.adjoint()


def tensor_mul(s: TensorPoly, t: TensorPoly) -> TensorPoly:
    return s * t
