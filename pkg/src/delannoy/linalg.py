"""Fraction-free exact rank computation for small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank is unchanged)."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * scale) for f in fr])
    return out


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals, by Bareiss fraction-free elimination.

    Every intermediate entry is a minor of the integer matrix, so all
    divisions are exact; this is asserted rather than assumed.
    """
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            for c in range(col, ncols):
                num = m[r][c] * pivot - factor * m[rank][c]
                q, rem = divmod(num, prev)
                assert rem == 0, "fraction-free elimination produced a non-exact division"
                m[r][c] = q
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank
