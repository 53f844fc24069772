"""Algebra registry: every named presentation, its aliases and default completion degrees."""

from typing import Any, Dict, Optional

from algebra.errors import ParameterError
from presentations.factory import completed_presentation, effective_n

ALGEBRAS: Dict[str, Dict[str, Any]] = {
    "O_plus": {
        "aliases": ["o+", "o_plus", "orthogonal"],
        "description": "Free orthogonal quantum group: v self-adjoint and orthogonal",
        "needs_n": True,
        "order": "deglex",
        "default_degree": {2: 6, 3: 4},
    },
    "U_plus": {
        "aliases": ["u+", "u_plus", "unitary"],
        "description": "Free unitary quantum group: u and its conjugate unitary",
        "needs_n": True,
        "order": "deglex",
        "default_degree": {2: 4, 3: 4},
    },
    "S1": {
        "aliases": ["s1", "circle"],
        "description": "Group algebra of Z: one unitary z",
        "needs_n": False,
        "order": "deglex",
        "default_degree": {1: 8},
    },
    "SU_minus1_2": {
        "aliases": ["su2", "su-1(2)"],
        "description": "Pol(SU_-1(2)) on a, g with the anticommutation table",
        "needs_n": False,
        "order": "su2-graded",
        "default_degree": {2: 6},
    },
    "H_n": {
        "aliases": ["h", "h_n", "hyperoctahedral"],
        "description": "Free product Pol(S1) * Pol(O_n^+)",
        "needs_n": True,
        "order": "deglex",
        "default_degree": {2: 6, 3: 4},
    },
    "A_n": {
        "aliases": ["a", "a_n"],
        "description": "Even part of Pol(O_n^+), generated by w_ijkl = v_ij v_kl",
        "needs_n": True,
        "order": "deglex",
        "default_degree": {2: 4, 3: 4},
    },
    "SU_plus1_2": {
        "aliases": ["su2-control"],
        "description": "Negative control: SU(2) shape with the anticommutation signs dropped",
        "needs_n": False,
        "order": "su2-graded",
        "default_degree": {2: 6},
    },
}

# Flat lookup: alias or canonical name (lowercased) -> canonical name
_ALIAS_INDEX: Dict[str, str] = {}
for _name, _info in ALGEBRAS.items():
    _ALIAS_INDEX[_name.lower()] = _name
    for _alias in _info["aliases"]:
        _ALIAS_INDEX[_alias] = _name


class CatalogService:

    def get_available_algebras(self) -> Dict[str, Any]:
        """All algebras keyed by canonical name."""
        return {"algebras": ALGEBRAS}

    def resolve(self, name: str) -> str:
        """Canonical name for an alias; ParameterError listing the choices otherwise."""
        canonical = _ALIAS_INDEX.get(name.lower())
        if canonical is None:
            raise ParameterError(f"Unknown algebra: {name}. Available: {sorted(_ALIAS_INDEX)}")
        return canonical

    def get_info(self, name: str) -> Optional[Dict[str, Any]]:
        """Catalog entry for a name or alias, or None."""
        canonical = _ALIAS_INDEX.get(name.lower())
        return ALGEBRAS.get(canonical) if canonical else None

    def default_degree(self, name: str, n: int) -> int:
        canonical = self.resolve(name)
        table = ALGEBRAS[canonical]["default_degree"]
        return table.get(effective_n(canonical, n), 4)

    def presentation(self, name: str, n: int = 2, degree: Optional[int] = None, store=None):
        """Completed presentation by alias; degree defaults to the catalog value."""
        canonical = self.resolve(name)
        if degree is None:
            degree = self.default_degree(canonical, n)
        return completed_presentation(canonical, n, degree, store)
