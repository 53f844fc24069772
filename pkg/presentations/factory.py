"""Factory for named presentations, plus memoized completion."""

import logging
from typing import Callable, Dict, Optional, Tuple, Union

from algebra.errors import ParameterError
from presentations import circle, even_part, free_product, orthogonal, su2, unitary
from presentations.base import FreeProductPresentation, Presentation
from services.rewriting_service import complete, initial_system
from utils.lru import BoundedCache
from utils.settings import get_settings

logger = logging.getLogger(__name__)

AnyPresentation = Union[Presentation, FreeProductPresentation]

_BUILDERS: Dict[str, Callable[[int], AnyPresentation]] = {
    "O_plus": orthogonal.build,
    "U_plus": unitary.build,
    "S1": circle.build,
    "SU_minus1_2": su2.build,
    "H_n": free_product.build,
    "A_n": even_part.build,
    # negative control only: SU(2) shape with the anticommutation signs dropped
    "SU_plus1_2": lambda n: su2.build(sign=1),
}

_NEEDS_N = {"O_plus", "U_plus", "H_n", "A_n"}

_completed: BoundedCache[Tuple[str, int, int], AnyPresentation] = BoundedCache(
    get_settings().completed_cache_size
)


def available() -> list:
    return list(_BUILDERS.keys())


def base_presentation(name: str, n: int = 2) -> AnyPresentation:
    """Generators, relations and order only; no rules."""
    builder = _BUILDERS.get(name)
    if builder is None:
        raise ParameterError(f"Unknown presentation: {name}. Available: {available()}")
    if name in _NEEDS_N and n < 2:
        raise ParameterError(f"{name} needs n >= 2, got n={n}")
    return builder(n)


def make_presentation(name: str, n: int = 2) -> AnyPresentation:
    """The *-closed presentation with oriented, interreduced rules (not yet completed)."""
    base = base_presentation(name, n)

    if name == "H_n":
        return free_product.build(
            n,
            s1=initial_system(circle.build()),
            o_plus=initial_system(orthogonal.build(n)),
        )
    return initial_system(base)


def effective_n(name: str, n: int) -> int:
    if name in ("S1",):
        return 1
    if name.startswith("SU_"):
        return 2
    return n


def completed_presentation(name: str, n: int = 2, degree: int = 8, store=None) -> AnyPresentation:
    """Completed system, LRU-memoized per (name, n, degree); `store` is an optional PresentationStore."""
    n = effective_n(name, n)
    key = (name, n, degree)
    hit = _completed.get(key)
    if hit is not None:
        return hit

    if name == "H_n":
        fp = free_product.build(
            n,
            s1=completed_presentation("S1", 1, degree, store),
            o_plus=completed_presentation("O_plus", n, degree, store),
        )
        return _completed.setdefault(key, fp)

    presentation: Optional[AnyPresentation] = None
    if store is not None:
        presentation = store.load_presentation(name, n, degree)
        if presentation is not None:
            logger.info(f"Loaded {name} (n={n}) certified to degree {degree} from cache")
    if presentation is None:
        presentation = complete(make_presentation(name, n), degree)
        if store is not None:
            store.save_presentation(presentation)

    return _completed.setdefault(key, presentation)
