"""
Pol(A_n) seen through its generating set {v_ij v_kl}: one letter w[i,j,k,l]
per product, with w[i,j,k,l]* = w[k,l,i,j]. No relations are imposed; the
algebra is only used as the domain of restricted cocycles, whose values are
computed through the embedding into Pol(O_n^+).
"""

from algebra.words import DegLexOrder, an_alphabet
from presentations.base import Presentation


def build(n: int) -> Presentation:
    alphabet = an_alphabet(n)
    return Presentation(
        name="A_n",
        n=n,
        alphabet=alphabet,
        relations=[],
        order=DegLexOrder(alphabet),
        fundamental=alphabet.generators,
    )
