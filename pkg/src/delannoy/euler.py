"""Exact functions on ordered tuples, integrated against Euler characteristic.

The model: a function on the ordered tuples x_1 < ... < x_n is determined,
relative to a finite set of breakpoints b_0 < ... < b_{m-1}, by its value on
each *cell*.  A cell records, for every coordinate, whether it sits on a
breakpoint or in one of the m+1 open gaps between them.  We index slots as

    slot 0      the gap (-inf, b_0)
    slot 2k+1   the point b_k
    slot 2k     the gap (b_{k-1}, b_k),   slot 2m the gap (b_{m-1}, +inf)

and a cell signature is a weakly increasing tuple of n slots, strictly
increasing at point slots (a point hosts at most one coordinate).  A cell with
j coordinates in gap slots is a product of points and open simplices and has
Euler volume (-1)^j: points count 1, open intervals count -1.

Everything is computed over exact rationals.  Functions are stored sparsely
as cell -> coefficient maps; two functions are equal when they agree after
refining to a common breakpoint set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, Optional, Sequence

from .paths import check_weight

Signature = tuple[int, ...]
Scalar = Fraction


def frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def _check_breakpoints(breakpoints: Sequence[Fraction]) -> tuple[Fraction, ...]:
    bp = tuple(Fraction(b) for b in breakpoints)
    if any(not a < b for a, b in zip(bp, bp[1:])):
        raise ValueError(f"breakpoints {bp} are not strictly increasing")
    return bp


def _check_signature(sig: Signature, arity: int, num_breakpoints: int) -> None:
    if len(sig) != arity:
        raise ValueError(f"signature {sig} does not have arity {arity}")
    top = 2 * num_breakpoints
    prev = -1
    for s in sig:
        if not 0 <= s <= top:
            raise ValueError(f"slot {s} out of range for {num_breakpoints} breakpoints")
        if s < prev or (s == prev and s % 2 == 1):
            raise ValueError(f"signature {sig} is not valid (order / repeated point)")
        prev = s
    return


def iter_signatures(arity: int, num_breakpoints: int) -> Iterator[Signature]:
    """All cell signatures of the given arity over 2*num_breakpoints+1 slots."""
    yield from _iter_over_slots(tuple(range(2 * num_breakpoints + 1)), arity)


def _iter_over_slots(slots: tuple[int, ...], count: int) -> Iterator[Signature]:
    """Weakly increasing count-tuples from an ordered slot list, points unrepeated."""
    if count == 0:
        yield ()
        return

    def rec(start: int, k: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for i in range(start, len(slots)):
            s = slots[i]
            nxt = i + 1 if s % 2 == 1 else i
            for rest in rec(nxt, k - 1):
                yield (s,) + rest

    yield from rec(0, count)


@lru_cache(maxsize=None)
def cell_count(arity: int, num_breakpoints: int) -> int:
    """Number of cell signatures, counted by a slot-by-slot recursion."""
    if arity < 0 or num_breakpoints < 0:
        raise ValueError("arguments must be non-negative")

    @lru_cache(maxsize=None)
    def count(slot: int, k: int) -> int:
        if k == 0:
            return 1
        if slot > 2 * num_breakpoints:
            return 0
        if slot % 2 == 1:
            # point slot: used once or skipped
            return count(slot + 1, k - 1) + count(slot + 1, k)
        # gap slot: any number of coordinates may sit here
        return sum(count(slot + 1, k - j) for j in range(k + 1))

    return count(0, arity)


def cell_volume(sig: Signature) -> int:
    """Euler volume of a cell: (-1) for every coordinate in a gap slot."""
    return -1 if sum(1 for s in sig if s % 2 == 0) % 2 else 1


def cell_representative(
    breakpoints: Sequence[Fraction], sig: Signature, variant: int = 0
) -> tuple[Fraction, ...]:
    """A deterministic exact point of the cell.

    Coordinates on point slots sit on the breakpoint itself; k coordinates
    sharing a gap are spread at rational positions inside it.  The variant
    parameter selects a different (equally valid) spread, used to double-check
    that constructions are genuinely constant on cells.
    """
    bp = tuple(breakpoints)
    m = len(bp)
    out: list[Fraction] = []
    i = 0
    step = 1 + variant
    while i < len(sig):
        s = sig[i]
        if s % 2 == 1:
            out.append(bp[(s - 1) // 2])
            i += 1
            continue
        j = i
        while j < len(sig) and sig[j] == s:
            j += 1
        k = j - i
        left = bp[s // 2 - 1] if s > 0 else None
        right = bp[s // 2] if s < 2 * m else None
        if left is None and right is None:
            pts = [Fraction((t + 1) * step) for t in range(k)]
        elif left is None:
            pts = [right - (k - t) * step for t in range(k)]
        elif right is None:
            pts = [left + (t + 1) * step for t in range(k)]
        else:
            width = right - left
            pts = [left + width * Fraction(t + 1, k + step) for t in range(k)]
        out.extend(pts)
        i = j
    return tuple(out)


class SchwartzFn:
    """A finitely presented function on ordered n-tuples: cells + coefficients."""

    __slots__ = ("arity", "breakpoints", "coeffs")

    def __init__(
        self,
        arity: int,
        breakpoints: Sequence[Fraction],
        coeffs: dict[Signature, Fraction],
    ):
        self.arity = int(arity)
        self.breakpoints = _check_breakpoints(breakpoints)
        clean: dict[Signature, Fraction] = {}
        for sig, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            sig = tuple(sig)
            _check_signature(sig, self.arity, len(self.breakpoints))
            clean[sig] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "SchwartzFn":
        return cls(arity, (), {})

    @classmethod
    def constant(cls, value: Fraction, arity: int = 0) -> "SchwartzFn":
        return cls(arity, (), {(0,) * arity: Fraction(value)})

    @classmethod
    def from_predicate(
        cls,
        arity: int,
        breakpoints: Sequence[Fraction],
        pred: Callable[[tuple[Fraction, ...]], bool],
        variant: int = 0,
    ) -> "SchwartzFn":
        """Indicator of the set of tuples satisfying pred.

        Only valid when the set is a union of cells over the given breakpoints;
        membership is tested on one representative per cell.
        """
        bp = _check_breakpoints(breakpoints)
        coeffs = {}
        for sig in iter_signatures(arity, len(bp)):
            if pred(cell_representative(bp, sig, variant)):
                coeffs[sig] = Fraction(1)
        return cls(arity, bp, coeffs)

    # -- basic structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def value_at_cell(self, sig: Signature) -> Fraction:
        return self.coeffs.get(tuple(sig), Fraction(0))

    def scalar_value(self) -> Fraction:
        """The single value of an arity-0 function."""
        if self.arity != 0:
            raise ValueError("scalar_value requires arity 0")
        return self.coeffs.get((), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchwartzFn):
            return NotImplemented
        if self.arity != other.arity:
            return False
        common = tuple(sorted(set(self.breakpoints) | set(other.breakpoints)))
        return refine(self, common).coeffs == refine(other, common).coeffs

    __hash__ = None  # semantic equality is coarser than the representation

    def __add__(self, other: "SchwartzFn") -> "SchwartzFn":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        common = tuple(sorted(set(self.breakpoints) | set(other.breakpoints)))
        a, b = refine(self, common), refine(other, common)
        coeffs = dict(a.coeffs)
        for sig, c in b.coeffs.items():
            coeffs[sig] = coeffs.get(sig, Fraction(0)) + c
        return SchwartzFn(self.arity, common, coeffs)

    def __neg__(self) -> "SchwartzFn":
        return SchwartzFn(self.arity, self.breakpoints, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "SchwartzFn") -> "SchwartzFn":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SchwartzFn):
            return multiply(self, other)
        return SchwartzFn(
            self.arity, self.breakpoints, {s: c * Fraction(other) for s, c in self.coeffs.items()}
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __repr__(self) -> str:
        return (
            f"SchwartzFn(arity={self.arity}, breakpoints={[str(b) for b in self.breakpoints]}, "
            f"{len(self.coeffs)} cells)"
        )

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        cells = [
            {"slots": list(sig), "coeff": frac_str(c)}
            for sig, c in sorted(self.coeffs.items())
        ]
        return {
            "n": self.arity,
            "breakpoints": [frac_str(b) for b in self.breakpoints],
            "cells": cells,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SchwartzFn":
        return cls(
            int(data["n"]),
            tuple(parse_frac(b) for b in data["breakpoints"]),
            {tuple(c["slots"]): parse_frac(c["coeff"]) for c in data["cells"]},
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "SchwartzFn":
        return cls.from_json(json.loads(text))


def point_mass(a: Sequence[Fraction]) -> SchwartzFn:
    """Indicator of the single tuple a (every coordinate on its breakpoint)."""
    bp = _check_breakpoints(a)
    sig = tuple(2 * k + 1 for k in range(len(bp)))
    return SchwartzFn(len(bp), bp, {sig: Fraction(1)})


def indicator_of_cell(
    arity: int, breakpoints: Sequence[Fraction], sig: Signature
) -> SchwartzFn:
    return SchwartzFn(arity, breakpoints, {tuple(sig): Fraction(1)})


def integrate(f: SchwartzFn) -> Fraction:
    """Total Euler integral: sum of coefficient times cell volume."""
    return sum((c * cell_volume(sig) for sig, c in f.coeffs.items()), Fraction(0))


def refine(f: SchwartzFn, finer: Sequence[Fraction]) -> SchwartzFn:
    """Re-express f over a superset of its breakpoints.

    A gap slot splits into the alternating run gap/point/gap/... of new slots
    it contains; coordinates sharing a gap redistribute over the run in all
    weakly increasing ways.
    """
    fine = _check_breakpoints(finer)
    if fine == f.breakpoints:
        return f
    old = f.breakpoints
    if not set(old) <= set(fine):
        raise ValueError("refinement must contain the original breakpoints")
    pos = {b: i for i, b in enumerate(fine)}
    m_old, m_new = len(old), len(fine)

    expansion: dict[int, tuple[int, ...]] = {}
    for k in range(m_old):
        expansion[2 * k + 1] = (2 * pos[old[k]] + 1,)
    for k in range(m_old + 1):
        left = old[k - 1] if k > 0 else None
        right = old[k] if k < m_old else None
        start = 0 if left is None else 2 * pos[left] + 2
        end = 2 * m_new if right is None else 2 * pos[right]
        expansion[2 * k] = tuple(range(start, end + 1))

    coeffs: dict[Signature, Fraction] = {}
    for sig, c in f.coeffs.items():
        groups: list[list[Signature]] = []
        i = 0
        while i < len(sig):
            j = i
            while j < len(sig) and sig[j] == sig[i]:
                j += 1
            groups.append(list(_iter_over_slots(expansion[sig[i]], j - i)))
            i = j
        for combo in product(*groups):
            new_sig = tuple(s for part in combo for s in part)
            coeffs[new_sig] = coeffs.get(new_sig, Fraction(0)) + c
    return SchwartzFn(f.arity, fine, coeffs)


def multiply(f: SchwartzFn, g: SchwartzFn) -> SchwartzFn:
    """Pointwise product, computed cellwise over the common refinement."""
    if f.arity != g.arity:
        raise ValueError("arity mismatch")
    common = tuple(sorted(set(f.breakpoints) | set(g.breakpoints)))
    a, b = refine(f, common), refine(g, common)
    small, large = (a, b) if len(a.coeffs) <= len(b.coeffs) else (b, a)
    coeffs = {}
    for sig, c in small.coeffs.items():
        d = large.coeffs.get(sig)
        if d is not None:
            coeffs[sig] = c * d
    return SchwartzFn(f.arity, common, coeffs)


def pair(f: SchwartzFn, g: SchwartzFn) -> Fraction:
    """The bilinear pairing: integrate the pointwise product."""
    return integrate(multiply(f, g))


def pushforward_coordinate(f: SchwartzFn, i: int) -> SchwartzFn:
    """Integrate out coordinate i (0-based).

    The fiber of a cell over the remaining coordinates is a single point
    (volume 1) or a single open interval (volume -1), so each cell contributes
    its coefficient with that sign to the signature with slot i dropped.
    """
    if not 0 <= i < f.arity:
        raise ValueError(f"coordinate {i} out of range for arity {f.arity}")
    coeffs: dict[Signature, Fraction] = {}
    for sig, c in f.coeffs.items():
        sign = 1 if sig[i] % 2 == 1 else -1
        reduced = sig[:i] + sig[i + 1 :]
        coeffs[reduced] = coeffs.get(reduced, Fraction(0)) + sign * c
    return SchwartzFn(f.arity - 1, f.breakpoints, coeffs)


def integrate_fully(f: SchwartzFn, order: Optional[Sequence[int]] = None) -> Fraction:
    """Integrate by iterated one-coordinate pushforwards, in any order."""
    g = f
    remaining = list(range(f.arity))
    order = list(order) if order is not None else list(range(f.arity))
    if sorted(order) != list(range(f.arity)):
        raise ValueError("order must be a permutation of the coordinates")
    for coord in order:
        g = pushforward_coordinate(g, remaining.index(coord))
        remaining.remove(coord)
    return g.scalar_value()


@dataclass(frozen=True)
class HalfOpenInterval:
    """An interval containing exactly one of its endpoints.

    kind 'b' is (lo, closed] with the right endpoint included (lo may be None
    for -inf); kind 'w' is [closed, hi) with the left endpoint included (hi
    may be None for +inf).
    """

    kind: str
    closed: Fraction
    open_end: Optional[Fraction]

    def __post_init__(self) -> None:
        if self.kind not in ("b", "w"):
            raise ValueError("kind must be 'b' (right-closed) or 'w' (left-closed)")
        object.__setattr__(self, "closed", Fraction(self.closed))
        if self.open_end is not None:
            object.__setattr__(self, "open_end", Fraction(self.open_end))
            if self.kind == "b" and not self.open_end < self.closed:
                raise ValueError("right-closed interval needs open_end < closed")
            if self.kind == "w" and not self.closed < self.open_end:
                raise ValueError("left-closed interval needs closed < open_end")

    def contains(self, x: Fraction) -> bool:
        if self.kind == "b":
            return x <= self.closed and (self.open_end is None or self.open_end < x)
        return self.closed <= x and (self.open_end is None or x < self.open_end)

    def finite_endpoints(self) -> list[Fraction]:
        out = [self.closed]
        if self.open_end is not None:
            out.append(self.open_end)
        return out

    def _sup(self) -> tuple[Optional[Fraction], bool]:
        # (value or None for +inf, attained?)
        return (self.closed, True) if self.kind == "b" else (self.open_end, False)

    def _inf(self) -> tuple[Optional[Fraction], bool]:
        return (self.open_end, False) if self.kind == "b" else (self.closed, True)


def _strictly_before(a: HalfOpenInterval, b: HalfOpenInterval) -> bool:
    sup, sup_in = a._sup()
    inf, inf_in = b._inf()
    if sup is None or inf is None:
        return False
    if sup < inf:
        return True
    return sup == inf and not (sup_in and inf_in)


def interval_indicator(intervals: Sequence[HalfOpenInterval]) -> SchwartzFn:
    """Indicator of an increasing tuple of disjoint half-open intervals.

    The empty tuple gives the constant 1 in arity 0.  Each factor integrates
    to 0 (open part -1, closed endpoint +1), so the total integral vanishes
    for every nonempty tuple.
    """
    for a, b in zip(intervals, intervals[1:]):
        if not _strictly_before(a, b):
            raise ValueError("intervals must be disjoint and increasing")
    n = len(intervals)
    bp = sorted({e for iv in intervals for e in iv.finite_endpoints()})

    def pred(x: tuple[Fraction, ...]) -> bool:
        return all(iv.contains(x[i]) for i, iv in enumerate(intervals))

    return SchwartzFn.from_predicate(n, bp, pred)


def key_indicator(word: str, a: Sequence[Fraction], variant: int = 0) -> SchwartzFn:
    """Indicator of the one-sided region attached to a weight word at basepoints a.

    Coordinate i is tied to a_i on the side named by the letter ('b': x_i <=
    a_i, 'w': a_i <= x_i) and interleaves strictly with the neighboring
    basepoints (x_i < a_{i+1} and a_i < x_{i+1}).
    """
    check_weight(word)
    bp = _check_breakpoints(a)
    if len(word) != len(bp):
        raise ValueError("word length must match the number of basepoints")
    n = len(word)

    def pred(x: tuple[Fraction, ...]) -> bool:
        for i, letter in enumerate(word):
            if letter == "b" and not x[i] <= bp[i]:
                return False
            if letter == "w" and not bp[i] <= x[i]:
                return False
            if i + 1 < n and not (x[i] < bp[i + 1] and bp[i] < x[i + 1]):
                return False
        return True

    return SchwartzFn.from_predicate(n, bp, pred, variant)
