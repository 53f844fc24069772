"""Pol(U_n^+): u = (u_ij) and its conjugate (u_ij*) are both unitary."""

from typing import Callable, List

from algebra.ncpoly import NCPoly
from algebra.words import DegLexOrder, GenSym, unitary_alphabet
from presentations.base import Presentation


def build(n: int) -> Presentation:
    alphabet = unitary_alphabet(n)

    def u(i: int, j: int, star: bool = False) -> NCPoly:
        return NCPoly.gen(alphabet, GenSym.of("u", (i, j), star))

    families: List[Callable[[int, int, int], NCPoly]] = [
        lambda i, j, k: u(k, i, True) * u(k, j),   # u*u = 1
        lambda i, j, k: u(i, k) * u(j, k, True),   # uu* = 1
        lambda i, j, k: u(k, i) * u(k, j, True),   # conj(u)* conj(u) = 1
        lambda i, j, k: u(i, k, True) * u(j, k),   # conj(u) conj(u)* = 1
    ]
    relations = []
    for entry in families:
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                total = NCPoly.zero(alphabet)
                for k in range(1, n + 1):
                    total = total + entry(i, j, k)
                relations.append(total - (1 if i == j else 0))

    return Presentation(
        name="U_plus",
        n=n,
        alphabet=alphabet,
        relations=relations,
        order=DegLexOrder(alphabet),
        fundamental=[g for g in alphabet.generators if not g.star],
    )
