"""The path category: hom spaces spanned by Delannoy paths, signed composition.

A basis path p with target (n, m) stands for the kernel A_p, the indicator of
the set O_p of tuple pairs (x, y) in R^(n) x R^(m) whose merged scan spells p.
Throughout, the FIRST path axis is the output side: A_p(x_out, y_in), rows
first, and a kernel acts by (A f)(x) = integral of A(x, y) f(y) over y.

Composition of basis paths is the signed rule

    [p1] o [p2] = sum over p3 of eps(p1, p2, p3) [p3],

where eps is (-1)^(len(q) + len(p3)) if the unique 3-dimensional path q with
projections p12=p1, p23=p2, p13=p3 exists (axis 1 = output of the first
factor, axis 2 = the shared middle, axis 3 = input of the second), and 0
otherwise.  The same coefficients arise by multiplying the kernels under
Euler-characteristic integration; compose_oracle computes them that way, and
the two routes are checked against each other in the test suite.

Orientation conventions (fixed here once, verified by the oracle tests):

  * encode_orbit lists the output tuple first, so a lone output point is a
    (1, 0) step;
  * the rank-one projector attached to a weight word sums the 2^n
    quasi-diagonal paths that, in square i, either step diagonally or take
    the two-step turn with the *output* point first for letter 'b' (so its
    kernel is the indicator of { x_i <= y_i }) and the *input* point first
    for letter 'w' ({ y_i <= x_i }), with strict interleaving between squares.

With these choices the projectors are idempotent, mutually orthogonal, have
trace (-1)^n, and agree with the kernels extending the one-sided key
indicators; flipping either convention breaks those tests.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .euler import (
    SchwartzFn,
    Signature,
    cell_representative,
    frac_str,
    indicator_of_cell,
    iter_signatures,
    key_indicator,
    pair,
    parse_frac,
)
from .linalg import matrix_rank
from .paths import (
    Path,
    Step,
    canonical_representative,
    check_weight,
    enumerate_paths,
    lift3,
)

_STEPS3 = [
    (s1, s2, s3)
    for s1 in (0, 1)
    for s2 in (0, 1)
    for s3 in (0, 1)
    if s1 or s2 or s3
]


def epsilon(p1: Path, p2: Path, p3: Path) -> int:
    """Structure constant of composition: signed by the unique lift, if any."""
    q = lift3(p1, p2, p3)
    if q is None:
        return 0
    return -1 if (len(q) + len(p3)) % 2 else 1


@lru_cache(maxsize=None)
def _compose_basis(p1: Path, p2: Path) -> tuple[tuple[Path, int], ...]:
    """Row of structure constants for a pair of basis paths.

    Enumerates the 3-dimensional paths lifting (p1, p2) directly; each lift q
    contributes (-1)^(len(q)+len(p13)) to its own projection p13, and distinct
    lifts must land on distinct projections (the uniqueness property, asserted
    here and tested at scale through lift3).
    """
    n, m1 = p1.target
    m2, l = p2.target
    if m1 != m2:
        raise ValueError(f"inner targets differ: {p1.target} vs {p2.target}")
    s1s, s2s = p1.steps, p2.steps
    n1, n2 = len(s1s), len(s2s)
    row: dict[Path, int] = {}
    prefix: list[Step] = []

    def search(i1: int, i2: int) -> None:
        if i1 == n1 and i2 == n2:
            proj = tuple((a, c) for a, _, c in prefix if a or c)
            p3 = Path(2, proj)
            assert p3 not in row, (p1, p2, p3)
            row[p3] = -1 if (len(prefix) + len(proj)) % 2 else 1
            return
        for s in _STEPS3:
            a, b, c = s
            j1, j2 = i1, i2
            if a or b:
                if j1 >= n1 or s1s[j1] != (a, b):
                    continue
                j1 += 1
            if b or c:
                if j2 >= n2 or s2s[j2] != (b, c):
                    continue
                j2 += 1
            prefix.append(s)
            search(j1, j2)
            prefix.pop()

    search(0, 0)
    return tuple(sorted(row.items(), key=lambda kv: kv[0].steps))


class Morphism:
    """A formal rational combination of paths with a common target (n, m)."""

    __slots__ = ("out_arity", "in_arity", "coeffs")

    def __init__(self, out_arity: int, in_arity: int, coeffs: dict[Path, Fraction]):
        self.out_arity = int(out_arity)
        self.in_arity = int(in_arity)
        clean: dict[Path, Fraction] = {}
        for p, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            if p.dim != 2 or p.target != (self.out_arity, self.in_arity):
                raise ValueError(f"path {p} does not lie in hom({in_arity} -> {out_arity})")
            clean[p] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, out_arity: int, in_arity: int) -> "Morphism":
        return cls(out_arity, in_arity, {})

    @classmethod
    def basis(cls, p: Path, coeff: Fraction = Fraction(1)) -> "Morphism":
        n, m = p.target
        return cls(n, m, {p: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.out_arity == other.out_arity
            and self.in_arity == other.in_arity
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __add__(self, other: "Morphism") -> "Morphism":
        if (self.out_arity, self.in_arity) != (other.out_arity, other.in_arity):
            raise ValueError("hom-space mismatch")
        coeffs = dict(self.coeffs)
        for p, c in other.coeffs.items():
            coeffs[p] = coeffs.get(p, Fraction(0)) + c
        return Morphism(self.out_arity, self.in_arity, coeffs)

    def __neg__(self) -> "Morphism":
        return Morphism(self.out_arity, self.in_arity, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def __mul__(self, scalar) -> "Morphism":
        s = Fraction(scalar)
        return Morphism(self.out_arity, self.in_arity, {p: c * s for p, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Morphism({self.out_arity}<-{self.in_arity}, {len(self.coeffs)} terms)"

    def to_json(self) -> dict:
        terms = [
            {"path": p.to_json(), "coeff": frac_str(c)}
            for p, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].steps)
        ]
        return {"n": self.out_arity, "m": self.in_arity, "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "Morphism":
        return cls(
            int(data["n"]),
            int(data["m"]),
            {Path.from_json(t["path"]): parse_frac(t["coeff"]) for t in data["terms"]},
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "Morphism":
        return cls.from_json(json.loads(text))


def compose(f: Morphism, g: Morphism) -> Morphism:
    """Bilinear extension of the signed basis rule."""
    if f.in_arity != g.out_arity:
        raise ValueError(
            f"cannot compose {f.out_arity}<-{f.in_arity} with {g.out_arity}<-{g.in_arity}"
        )
    coeffs: dict[Path, Fraction] = {}
    for p1, c1 in f.coeffs.items():
        for p2, c2 in g.coeffs.items():
            c = c1 * c2
            for p3, sign in _compose_basis(p1, p2):
                coeffs[p3] = coeffs.get(p3, Fraction(0)) + sign * c
    return Morphism(f.out_arity, g.in_arity, coeffs)


def identity(n: int) -> Morphism:
    """The all-diagonal path: the indicator of the diagonal as a kernel."""
    diag = Path(2, ((1, 1),) * n)
    return Morphism.basis(diag)


def _slice_signature(p: Path, axis: int) -> Signature:
    """Cell signature of the slice of O_p at a fixed tuple on one axis.

    Walking the path, a lone step on the fixed axis pins the next breakpoint,
    a lone step on the free axis puts a coordinate in the current gap, and a
    diagonal step puts a coordinate on the current breakpoint.
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 (output side) or 2 (input side)")
    fixed_idx = 0 if axis == 1 else 1
    j = 0
    sig: list[int] = []
    for s in p.steps:
        fixed, free = s[fixed_idx], s[1 - fixed_idx]
        if fixed and free:
            sig.append(2 * j + 1)
            j += 1
        elif fixed:
            j += 1
        else:
            sig.append(2 * j)
    return tuple(sig)


def slice_kernel(p: Path, fixed: Sequence[Fraction], axis: int) -> SchwartzFn:
    """The kernel of p restricted to a fixed tuple on one axis.

    For axis=1 this is the function y -> A_p(fixed, y); for axis=2 it is
    x -> A_p(x, fixed).  The result is the indicator of a single cell over
    the fixed tuple as breakpoints.
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 (output side) or 2 (input side)")
    expected = p.target[0 if axis == 1 else 1]
    if len(fixed) != expected:
        raise ValueError(f"fixed tuple has length {len(fixed)}, axis target is {expected}")
    free_arity = p.target[1 if axis == 1 else 0]
    return indicator_of_cell(free_arity, fixed, _slice_signature(p, axis))


def _cell_to_path(sig: Signature, num_breakpoints: int) -> Path:
    """The path spelled by merging a cell's coordinates with the breakpoints.

    Inverse of _slice_signature with the free coordinates on axis 1: cells of
    arity n over m breakpoints correspond bijectively to paths with target
    (n, m).
    """
    steps: list[Step] = []
    i = 0
    for slot in range(2 * num_breakpoints + 1):
        if slot % 2 == 1:
            if i < len(sig) and sig[i] == slot:
                steps.append((1, 1))
                i += 1
            else:
                steps.append((0, 1))
        else:
            while i < len(sig) and sig[i] == slot:
                steps.append((1, 0))
                i += 1
    return Path(2, tuple(steps))


def compose_oracle(p1: Path, p2: Path) -> Morphism:
    """Composition computed by integration instead of the combinatorial rule.

    The product kernel is constant on each orbit, so its coefficient on a
    basis path p3 is read off at the canonical representative (z, x) of O_p3:
    pair the slice y -> A_p1(z, y) against the slice y -> A_p2(y, x).
    """
    n, m1 = p1.target
    m2, l = p2.target
    if m1 != m2:
        raise ValueError(f"inner targets differ: {p1.target} vs {p2.target}")
    coeffs: dict[Path, Fraction] = {}
    for p3 in enumerate_paths((n, l)):
        z, x = canonical_representative(p3)
        left = slice_kernel(p1, z, axis=1)
        right = slice_kernel(p2, x, axis=2)
        coeffs[p3] = pair(left, right)
    return Morphism(n, l, coeffs)


def apply_kernel(f: Morphism, phi: SchwartzFn) -> SchwartzFn:
    """Act on a function: (A phi)(x) = integral of A(x, y) phi(y) over y.

    The result is constant on cells over phi's breakpoints; it is evaluated
    at one representative per output cell.
    """
    if f.in_arity != phi.arity:
        raise ValueError(f"kernel expects arity {f.in_arity}, function has {phi.arity}")
    bp = phi.breakpoints
    coeffs: dict[Signature, Fraction] = {}
    for sig in iter_signatures(f.out_arity, len(bp)):
        x_out = cell_representative(bp, sig)
        val = Fraction(0)
        for p, c in f.coeffs.items():
            val += c * pair(slice_kernel(p, x_out, axis=1), phi)
        if val:
            coeffs[sig] = val
    return SchwartzFn(f.out_arity, bp, coeffs)


def projector(word: str) -> Morphism:
    """The rank-one idempotent attached to a weight word, in hom(n -> n).

    Sum of the 2^n quasi-diagonal paths choosing, in each diagonal square,
    either the diagonal step or the turn on the side selected by the letter
    (see the module docstring for the orientation convention).
    """
    check_weight(word)
    paths = [()]
    for letter in word:
        turn = ((1, 0), (0, 1)) if letter == "b" else ((0, 1), (1, 0))
        paths = [p + choice for p in paths for choice in (((1, 1),), turn)]
    n = len(word)
    return Morphism(n, n, {Path(2, steps): Fraction(1) for steps in paths})


def trace(f: Morphism) -> Fraction:
    """Categorical trace: integrate the kernel on the diagonal.

    The diagonal meets O_p only for the all-diagonal path, and the diagonal
    copy of R^(n) has volume (-1)^n.
    """
    if f.out_arity != f.in_arity:
        raise ValueError("trace requires a square morphism")
    n = f.out_arity
    diag = Path(2, ((1, 1),) * n)
    sign = -1 if n % 2 else 1
    return sign * f.coeffs.get(diag, Fraction(0))


def invariant_extension(x: SchwartzFn) -> Morphism:
    """The unique invariant kernel whose column at x's breakpoints equals x.

    Cells of arity n over m breakpoints correspond to paths with target
    (n, m); the coefficient of each path is x's value on its cell.
    """
    m = len(x.breakpoints)
    coeffs: dict[Path, Fraction] = {}
    for sig, c in x.coeffs.items():
        coeffs[_cell_to_path(sig, m)] = c
    return Morphism(x.arity, m, coeffs)


@lru_cache(maxsize=None)
def multiplicity_rank(word: str, m: int) -> int:
    """Multiplicity of the simple of a weight word inside arity-m functions.

    Realized as the rank of the idempotent e(x) = apply_kernel(
    invariant_extension(x), key_indicator(word, a)) acting on the span of the
    cells of arity m over n = len(word) breakpoints.  Idempotency is asserted.
    """
    check_weight(word)
    n = len(word)
    a = tuple(Fraction(i) for i in range(1, n + 1))
    psi = key_indicator(word, a)
    basis = sorted(iter_signatures(m, n))
    index = {sig: i for i, sig in enumerate(basis)}
    cols: list[list[Fraction]] = []
    for sig in basis:
        image = apply_kernel(invariant_extension(indicator_of_cell(m, a, sig)), psi)
        col = [Fraction(0)] * len(basis)
        for out_sig, c in image.coeffs.items():
            col[index[out_sig]] = c
        cols.append(col)
    matrix = [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]
    square = [
        [
            sum(matrix[i][k] * matrix[k][j] for k in range(len(basis)))
            for j in range(len(basis))
        ]
        for i in range(len(basis))
    ]
    assert square == matrix, f"operator for {word!r} at arity {m} is not idempotent"
    return matrix_rank(matrix)
