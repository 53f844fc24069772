"""Seeded random elements for property checks."""

import random
from typing import Optional, Sequence

from algebra.ncpoly import NCPoly
from algebra.words import Alphabet, GenSym, Word

COEFF_BOX = range(-3, 4)


def random_word(alphabet: Alphabet, rng: random.Random, max_length: int,
                generators: Optional[Sequence[GenSym]] = None) -> Word:
    gens = list(generators) if generators is not None else list(alphabet.generators)
    length = rng.randint(0, max_length)
    return tuple(rng.choice(gens) for _ in range(length))


def random_poly(
    alphabet: Alphabet,
    rng: random.Random,
    max_degree: int,
    max_terms: int = 4,
    generators: Optional[Sequence[GenSym]] = None,
    nonzero: bool = False,
) -> NCPoly:
    """Up to `max_terms` words of length <= max_degree with coefficients in -3..3."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            w = random_word(alphabet, rng, max_degree, generators)
            terms[w] = rng.choice(COEFF_BOX)
        p = NCPoly(alphabet, terms, check=False)
        if not nonzero or not p.is_zero():
            return p

