"""
Pol(SU_q(2)) at q = -1, generators a (alpha) and g (gamma):

    aa' + gg' = 1,  a'a + g'g = 1,  gg' = g'g,
    ag = q ga,      ag' = q g'a,
and the two star-commutations obtained by applying the involution:
    a'g' = q g'a',  a'g = q ga'.

`sign=+1` gives the same shape with the anticommutation signs dropped; that
presentation is only used as a negative control.
"""

from algebra.ncpoly import NCPoly
from algebra.words import GenSym, SU2GradedOrder, su2_alphabet
from presentations.base import Presentation


def build(n: int = 2, sign: int = -1) -> Presentation:
    alphabet = su2_alphabet()
    a = NCPoly.gen(alphabet, GenSym.of("a"))
    a_s = NCPoly.gen(alphabet, GenSym.of("a", star=True))
    g = NCPoly.gen(alphabet, GenSym.of("g"))
    g_s = NCPoly.gen(alphabet, GenSym.of("g", star=True))

    relations = [
        a * a_s + g * g_s - 1,
        a_s * a + g_s * g - 1,
        g * g_s - g_s * g,
        a * g - (g * a).scale(sign),
        a * g_s - (g_s * a).scale(sign),
        a_s * g_s - (g_s * a_s).scale(sign),
        a_s * g - (g * a_s).scale(sign),
    ]
    return Presentation(
        name="SU_minus1_2" if sign == -1 else "SU_plus1_2",
        n=2,
        alphabet=alphabet,
        relations=relations,
        order=SU2GradedOrder(alphabet),
        fundamental=[GenSym.of("a"), GenSym.of("g")],
    )
