"""Exact sparse linear solving over the rationals (small systems only)."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence


def solve_columns(
    columns: Sequence[Mapping[Hashable, Fraction]], target: Mapping[Hashable, Fraction]
) -> list[Fraction] | None:
    """Find ``c`` with ``sum_i c_i * columns[i] == target``.

    Vectors are sparse maps from row keys to coefficients.  Returns one
    solution (free variables set to 0) or ``None`` if the system is
    inconsistent.
    """
    keys = sorted({k for col in columns for k in col} | set(target), key=repr)
    n = len(columns)
    rows = []
    for k in keys:
        row = [Fraction(0)] * (n + 1)
        for j, col in enumerate(columns):
            v = col.get(k)
            if v:
                row[j] = Fraction(v)
        row[n] = Fraction(target.get(k, 0))
        rows.append(row)

    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][n] != 0:
            return None
    solution = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        solution[c] = rows[i][n]
    return solution
