"""Pol(O_n^+): n^2 self-adjoint generators v_ij forming an orthogonal matrix."""

from algebra.ncpoly import NCPoly
from algebra.words import DegLexOrder, GenSym, orthogonal_alphabet
from presentations.base import Presentation


def build(n: int) -> Presentation:
    alphabet = orthogonal_alphabet(n)

    def v(i: int, j: int) -> NCPoly:
        return NCPoly.gen(alphabet, GenSym.of("v", (i, j)))

    relations = []
    # v^t v = 1 and v v^t = 1; the (j, i) entries are adjoints of the (i, j) ones
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            delta = 1 if i == j else 0
            relations.append(sum((v(k, i) * v(k, j) for k in range(1, n + 1)), NCPoly.zero(alphabet)) - delta)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            delta = 1 if i == j else 0
            relations.append(sum((v(i, k) * v(j, k) for k in range(1, n + 1)), NCPoly.zero(alphabet)) - delta)

    return Presentation(
        name="O_plus",
        n=n,
        alphabet=alphabet,
        relations=relations,
        order=DegLexOrder(alphabet),
        fundamental=alphabet.generators,
    )
