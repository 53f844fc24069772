"""Pol(S^1) = C[Z]: one unitary generator z."""

from algebra.ncpoly import NCPoly
from algebra.words import DegLexOrder, GenSym, circle_alphabet
from presentations.base import Presentation


def build(n: int = 1) -> Presentation:
    alphabet = circle_alphabet()
    z = NCPoly.gen(alphabet, GenSym.of("z"))
    zs = NCPoly.gen(alphabet, GenSym.of("z", star=True))
    return Presentation(
        name="S1",
        n=1,
        alphabet=alphabet,
        relations=[z * zs - 1, zs * z - 1],
        order=DegLexOrder(alphabet),
        fundamental=[GenSym.of("z")],
    )
