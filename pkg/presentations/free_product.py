"""Pol(H_n) = Pol(S^1) * Pol(O_n^+), and the embeddings used by the main argument."""

from typing import Dict

from algebra.ncpoly import NCPoly
from algebra.words import GenSym, an_alphabet, free_product_alphabet
from presentations import circle, orthogonal
from presentations.base import FreeProductPresentation, Presentation


def build(n: int, s1: Presentation = None, o_plus: Presentation = None) -> FreeProductPresentation:
    return FreeProductPresentation(
        name="H_n",
        n=n,
        factors=(s1 or circle.build(), o_plus or orthogonal.build(n)),
        alphabet=free_product_alphabet(n),
    )


def unitary_embedding(n: int) -> Dict[GenSym, NCPoly]:
    """u_ij -> z v_ij and u_ij* -> v_ij z*."""
    alphabet = free_product_alphabet(n)
    z = NCPoly.gen(alphabet, GenSym.of("z"))
    zs = NCPoly.gen(alphabet, GenSym.of("z", star=True))
    images: Dict[GenSym, NCPoly] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = NCPoly.gen(alphabet, GenSym.of("v", (i, j)))
            images[GenSym.of("u", (i, j))] = z * v
            images[GenSym.of("u", (i, j), star=True)] = v * zs
    return images


def an_embedding(n: int, target=None) -> Dict[GenSym, NCPoly]:
    """w_ijkl -> v_ij v_kl, inside `target` (H_n alphabet unless given)."""
    alphabet = target or free_product_alphabet(n)
    images: Dict[GenSym, NCPoly] = {}
    for w in an_alphabet(n).generators:
        i, j, k, l = w.indices
        images[w] = NCPoly.gen(alphabet, GenSym.of("v", (i, j))) * NCPoly.gen(alphabet, GenSym.of("v", (k, l)))
    return images
