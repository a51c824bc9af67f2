"""Delannoy paths in arbitrary dimension, and the orbit <-> path codec.

A d-dimensional Delannoy path with target a = (a_1, ..., a_d) is a sequence of
nonzero 0-1 step vectors summing to a.  In two dimensions these are the classic
lattice paths with unit, north and diagonal steps; D(n, m) counts them.

Paths of target (n, m) also encode the relative positions of a pair of tuples
x_1 < ... < x_n and y_1 < ... < y_m on a line: scan the merged point set left
to right and emit (1, 0) for a lone x-point, (0, 1) for a lone y-point, and
(1, 1) for a shared point.  Only the order type matters, so each path has a
canonical representative placing the merged points at 1, 2, ..., len(path).

All values here are immutable and hashable; every function is pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

Step = tuple[int, ...]


def _check_step(step: Step, dim: int) -> None:
    if len(step) != dim:
        raise ValueError(f"step {step} does not have dimension {dim}")
    if any(c not in (0, 1) for c in step):
        raise ValueError(f"step {step} is not a 0-1 vector")
    if not any(step):
        raise ValueError("the zero vector is not a valid step")


@dataclass(frozen=True, order=True)
class Path:
    """A Delannoy path: an ordered tuple of nonzero 0-1 steps of fixed dimension."""

    dim: int
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        object.__setattr__(self, "steps", tuple(tuple(s) for s in self.steps))
        for step in self.steps:
            _check_step(step, self.dim)

    @property
    def target(self) -> tuple[int, ...]:
        return tuple(sum(s[i] for s in self.steps) for i in range(self.dim))

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f"Path{list(self.steps)!r}"

    def to_json(self) -> dict:
        return {"d": self.dim, "steps": [list(s) for s in self.steps]}

    @classmethod
    def from_json(cls, data: dict) -> "Path":
        return cls(int(data["d"]), tuple(tuple(int(c) for c in s) for s in data["steps"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "Path":
        return cls.from_json(json.loads(text))


def _nonzero_steps(dim: int) -> list[Step]:
    """All 2^dim - 1 nonzero 0-1 vectors, in lexicographic order."""
    out = []
    for mask in range(1, 1 << dim):
        out.append(tuple((mask >> (dim - 1 - i)) & 1 for i in range(dim)))
    out.sort()
    return out


@lru_cache(maxsize=None)
def enumerate_paths(target: tuple[int, ...]) -> tuple[Path, ...]:
    """All Delannoy paths with the given target, sorted by step sequence.

    The empty target (dimension 0) and the zero target both yield the single
    empty path.
    """
    target = tuple(int(a) for a in target)
    if any(a < 0 for a in target):
        raise ValueError("target entries must be non-negative")
    dim = len(target)
    steps = _nonzero_steps(dim)
    out: list[Path] = []
    prefix: list[Step] = []

    def gen(remaining: tuple[int, ...]) -> None:
        if not any(remaining):
            out.append(Path(dim, tuple(prefix)))
            return
        for s in steps:
            if all(s[i] <= remaining[i] for i in range(dim)):
                prefix.append(s)
                gen(tuple(remaining[i] - s[i] for i in range(dim)))
                prefix.pop()

    gen(target)
    return tuple(out)


@lru_cache(maxsize=None)
def delannoy_number(n: int, m: int) -> int:
    """D(n, m) via the recurrence D(n,m) = D(n-1,m) + D(n,m-1) + D(n-1,m-1)."""
    if n < 0 or m < 0:
        raise ValueError("arguments must be non-negative")
    row = [1] * (m + 1)
    for _ in range(n):
        prev = row
        row = [1] * (m + 1)
        for j in range(1, m + 1):
            row[j] = row[j - 1] + prev[j] + prev[j - 1]
    return row[m]


def project_path(p: Path, axes: Sequence[int]) -> Path:
    """Project onto the listed axes (0-based), dropping steps that become zero."""
    if len(set(axes)) != len(axes):
        raise ValueError(f"axes {tuple(axes)} are not injective")
    for a in axes:
        if not 0 <= a < p.dim:
            raise ValueError(f"axis {a} out of range for dimension {p.dim}")
    steps = []
    for s in p.steps:
        t = tuple(s[a] for a in axes)
        if any(t):
            steps.append(t)
    return Path(len(axes), tuple(steps))


# The seven nonzero 3-bit steps, used by the lift search.
_STEPS3 = _nonzero_steps(3)


def _all_lift3(p12: Path, p23: Path, p13: Path) -> list[Path]:
    """Backtracking search for all 3-dimensional paths with the given projections.

    A candidate step (s1, s2, s3) must, for each of the three coordinate pairs,
    either project to zero or match the head of the corresponding 2-dimensional
    path.  Every nonzero step consumes at least one head, so the search
    terminates.
    """
    s12, s23, s13 = p12.steps, p23.steps, p13.steps
    n12, n23, n13 = len(s12), len(s23), len(s13)
    solutions: list[Path] = []
    prefix: list[Step] = []

    def search(i12: int, i23: int, i13: int) -> None:
        if i12 == n12 and i23 == n23 and i13 == n13:
            solutions.append(Path(3, tuple(prefix)))
            return
        for s1, s2, s3 in _STEPS3:
            j12, j23, j13 = i12, i23, i13
            if s1 or s2:
                if j12 >= n12 or s12[j12] != (s1, s2):
                    continue
                j12 += 1
            if s2 or s3:
                if j23 >= n23 or s23[j23] != (s2, s3):
                    continue
                j23 += 1
            if s1 or s3:
                if j13 >= n13 or s13[j13] != (s1, s3):
                    continue
                j13 += 1
            prefix.append((s1, s2, s3))
            search(j12, j23, j13)
            prefix.pop()

    search(0, 0, 0)
    return solutions


def lift3(p12: Path, p23: Path, p13: Path) -> Optional[Path]:
    """The unique 3-dimensional path projecting to (p12, p23, p13), or None.

    Collects all solutions of the backtracking search and asserts there is at
    most one; uniqueness always holds, but it is checked rather than assumed.
    """
    if p12.dim != 2 or p23.dim != 2 or p13.dim != 2:
        raise ValueError("lift3 expects 2-dimensional paths")
    a1, a2 = p12.target
    b2, b3 = p23.target
    c1, c3 = p13.target
    if a1 != c1 or a2 != b2 or b3 != c3:
        raise ValueError(
            f"inconsistent targets {p12.target}, {p23.target}, {p13.target}"
        )
    solutions = _all_lift3(p12, p23, p13)
    assert len(solutions) <= 1, (p12, p23, p13, solutions)
    return solutions[0] if solutions else None


def encode_orbit(x: Sequence[Fraction], y: Sequence[Fraction]) -> Path:
    """Path of the merged scan of two strictly increasing tuples (x = axis 0)."""
    for t in (x, y):
        if any(not a < b for a, b in zip(t, t[1:])):
            raise ValueError(f"tuple {tuple(t)} is not strictly increasing")
    i = j = 0
    steps: list[Step] = []
    while i < len(x) or j < len(y):
        if j == len(y) or (i < len(x) and x[i] < y[j]):
            steps.append((1, 0))
            i += 1
        elif i == len(x) or y[j] < x[i]:
            steps.append((0, 1))
            j += 1
        else:
            steps.append((1, 1))
            i += 1
            j += 1
    return Path(2, tuple(steps))


def canonical_representative(p: Path) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Place the merged points of a 2-dimensional path at 1, 2, ..., len(p)."""
    if p.dim != 2:
        raise ValueError("canonical representatives exist only in dimension 2")
    x: list[Fraction] = []
    y: list[Fraction] = []
    for pos, (sx, sy) in enumerate(p.steps, start=1):
        if sx:
            x.append(Fraction(pos))
        if sy:
            y.append(Fraction(pos))
    return tuple(x), tuple(y)


# Weights: words over the two-letter alphabet, serialized 'b' (filled) / 'w' (open).
WEIGHT_LETTERS = ("b", "w")


def check_weight(word: str) -> str:
    """Validate a weight word; returns it unchanged."""
    if not all(c in WEIGHT_LETTERS for c in word):
        raise ValueError(f"invalid weight {word!r}: letters must be 'b' or 'w'")
    return word


def all_weights(length: int) -> list[str]:
    """All 2^length weight words of the given length, in lexicographic order."""
    words = [""]
    for _ in range(length):
        words = [w + c for w in words for c in WEIGHT_LETTERS]
    return sorted(words)


def weights_up_to(length: int) -> list[str]:
    """All weight words of length <= the bound, shortest first."""
    out: list[str] = []
    for n in range(length + 1):
        out.extend(all_weights(n))
    return out
