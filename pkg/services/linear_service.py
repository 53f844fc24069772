"""
Exact sparse linear systems over Q(i).

Rows are added one at a time and reduced against the pivot rows seen so far;
each pivot row is normalized so its pivot coefficient is 1. The pivot of a new
row is its smallest nonzero column. Free variables are set to zero.
"""

import logging
from typing import Dict, List, Optional, Tuple

from algebra.scalar import ONE, Scalar, ZERO

logger = logging.getLogger(__name__)

Row = Dict[int, Scalar]


class SparseLinearSystem:
    """Incremental elimination on dict rows keyed by column index."""

    def __init__(self, num_columns: int):
        self.num_columns = num_columns
        self._rows: List[Tuple[Row, Scalar]] = []
        self._pivot_of: Dict[int, int] = {}  # column -> position in _rows
        self._pivot_cols: List[int] = []
        self.inconsistent = False
        self.rows_seen = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add_equation(self, coeffs: Row, rhs: Scalar = ZERO) -> None:
        self.rows_seen += 1
        if self.inconsistent:
            return
        row: Row = {c: v for c, v in coeffs.items() if not v.is_zero()}
        for c in row:
            if not 0 <= c < self.num_columns:
                raise IndexError(f"Column {c} outside 0..{self.num_columns - 1}")

        # oldest pivot first; a pivot row holds no pivot older than itself
        while True:
            hits = [self._pivot_of[c] for c in row if c in self._pivot_of]
            if not hits:
                break
            pos = min(hits)
            prow, prhs = self._rows[pos]
            col = self._pivot_cols[pos]
            factor = row[col]
            for c, v in prow.items():
                new = row.get(c, ZERO) - factor * v
                if new.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = new
            rhs = rhs - factor * prhs

        if not row:
            if not rhs.is_zero():
                self.inconsistent = True
                logger.debug(f"Inconsistent row after {self.rows_seen} equations")
            return

        pivot = min(row)
        inv = ONE / row[pivot]
        normalized = {c: v * inv for c, v in row.items()}
        self._pivot_of[pivot] = len(self._rows)
        self._pivot_cols.append(pivot)
        self._rows.append((normalized, rhs * inv))

    def solve(self) -> Optional[Dict[int, Scalar]]:
        """One solution (free variables zero), or None if the system is inconsistent."""
        if self.inconsistent:
            return None
        x: Dict[int, Scalar] = {}
        for pos in range(len(self._rows) - 1, -1, -1):
            row, rhs = self._rows[pos]
            col = self._pivot_cols[pos]
            value = rhs
            for c, v in row.items():
                if c != col:
                    value = value - v * x.get(c, ZERO)
            if not value.is_zero():
                x[col] = value
        logger.debug(
            f"Solved {self.rows_seen} equations in {self.num_columns} unknowns, rank {self.rank}"
        )
        return x
