"""The Grothendieck ring on weight words, with all of its products and operators.

Basis elements are words over the two-letter alphabet {'b', 'w'}.  The ring
carries:

  * the concatenation product (word concatenation, non-commutative);
  * the standard product, summing over interleavings of the two words in
    which letters may collide: equal letters keep the letter, and a mixed
    collision expands to b + w + (deletion);
  * induction K (x) K -> K and restriction K -> K (x) K (splitting a word
    between letters, plus splittings that delete one letter);
  * the counit word -> (-1)^length, the antipode defined by its recursion,
    and the involution swapping the two letters;
  * binomial operations binom(x, n), Adams operations via Newton's
    identities, and Schur operations through integer-valued polynomials
    given by the hook content formula.

Coefficients are exact rationals; ring-theoretic outputs are asserted to be
integral where integrality is guaranteed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .euler import frac_str, parse_frac
from .paths import check_weight

_WORD_KEY = lambda w: (len(w), w)  # noqa: E731 - canonical basis order


def _clean(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if v != 0}


class KClass:
    """A finitely supported rational combination of weight words."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[str, Fraction] | None = None):
        clean: dict[str, Fraction] = {}
        for w, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                clean[check_weight(w)] = c
        self.coeffs = clean

    @classmethod
    def unit(cls) -> "KClass":
        return cls({"": Fraction(1)})

    @classmethod
    def word(cls, w: str) -> "KClass":
        return cls({w: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Filtration degree: longest word in the support (-inf for zero)."""
        if not self.coeffs:
            return float("-inf")
        return max(len(w) for w in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({"": Fraction(other)} if other else {})
        if not isinstance(other, KClass):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        other = _promote(other)
        coeffs = dict(self.coeffs)
        for w, c in other.coeffs.items():
            coeffs[w] = coeffs.get(w, Fraction(0)) + c
        return KClass(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return KClass({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_promote(other))

    def __rsub__(self, other):
        return _promote(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, KClass):
            return tensor_mul(self, other)
        s = Fraction(other)
        return KClass({w: c * s for w, c in self.coeffs.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def concat(self, other: "KClass") -> "KClass":
        return concat_mul(self, other)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for w, c in sorted(self.coeffs.items(), key=lambda kv: _WORD_KEY(kv[0])):
            name = w if w else "1"
            bits.append(f"{c}*{name}" if c != 1 or not w else name)
        return " + ".join(bits)

    def to_json(self) -> dict:
        terms = [
            {"word": w, "coeff": frac_str(c)}
            for w, c in sorted(self.coeffs.items(), key=lambda kv: _WORD_KEY(kv[0]))
        ]
        return {"terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "KClass":
        return cls({t["word"]: parse_frac(t["coeff"]) for t in data["terms"]})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "KClass":
        return cls.from_json(json.loads(text))


def _promote(x) -> KClass:
    if isinstance(x, KClass):
        return x
    return KClass({"": Fraction(x)})


class KTensorClass:
    """A finitely supported rational combination of pairs of weight words."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[str, str], Fraction] | None = None):
        clean: dict[tuple[str, str], Fraction] = {}
        for (u, v), c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                clean[(check_weight(u), check_weight(v))] = c
        self.coeffs = clean

    @classmethod
    def pure(cls, x: KClass, y: KClass) -> "KTensorClass":
        return cls(
            {(u, v): cx * cy for u, cx in x.coeffs.items() for v, cy in y.coeffs.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KTensorClass):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "KTensorClass") -> "KTensorClass":
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs.get(k, Fraction(0)) + c
        return KTensorClass(coeffs)

    def __neg__(self) -> "KTensorClass":
        return KTensorClass({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "KTensorClass") -> "KTensorClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, KTensorClass):
            out: dict[tuple[str, str], Fraction] = {}
            for (u1, v1), c1 in self.coeffs.items():
                for (u2, v2), c2 in other.coeffs.items():
                    scale = c1 * c2
                    left = _tensor_basis(u1, u2)
                    right = _tensor_basis(v1, v2)
                    for lu, cl in left.coeffs.items():
                        for rv, cr in right.coeffs.items():
                            key = (lu, rv)
                            out[key] = out.get(key, Fraction(0)) + scale * cl * cr
            return KTensorClass(out)
        s = Fraction(other)
        return KTensorClass({k: c * s for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for (u, v), c in sorted(
            self.coeffs.items(), key=lambda kv: (_WORD_KEY(kv[0][0]), _WORD_KEY(kv[0][1]))
        ):
            bits.append(f"{c}*({u or '1'}(x){v or '1'})")
        return " + ".join(bits)

    def to_json(self) -> dict:
        terms = [
            {"left": u, "right": v, "coeff": frac_str(c)}
            for (u, v), c in sorted(
                self.coeffs.items(),
                key=lambda kv: (_WORD_KEY(kv[0][0]), _WORD_KEY(kv[0][1])),
            )
        ]
        return {"terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "KTensorClass":
        return cls({(t["left"], t["right"]): parse_frac(t["coeff"]) for t in data["terms"]})


def concat_mul(x: KClass, y: KClass) -> KClass:
    """Bilinear extension of word concatenation."""
    coeffs: dict[str, Fraction] = {}
    for u, cu in x.coeffs.items():
        for v, cv in y.coeffs.items():
            w = u + v
            coeffs[w] = coeffs.get(w, Fraction(0)) + cu * cv
    return KClass(coeffs)


def _collision(a: str, b: str) -> KClass:
    """Factor contributed when letters a and b collide in an interleaving."""
    if a == b:
        return KClass.word(a)
    return KClass({"b": Fraction(1), "w": Fraction(1), "": Fraction(1)})


def _prepend(words: KClass, prefix_class: KClass) -> KClass:
    coeffs: dict[str, Fraction] = {}
    for g, cg in prefix_class.coeffs.items():
        for w, c in words.coeffs.items():
            key = g + w
            coeffs[key] = coeffs.get(key, Fraction(0)) + cg * c
    return KClass(coeffs)


@lru_cache(maxsize=None)
def _tensor_basis(lam: str, mu: str) -> KClass:
    """Standard product of two basis words.

    Sums over all interleavings, possibly with collisions, by cases on the
    first emitted letter: from lam, from mu, or a collision of both heads.
    """
    if not lam:
        return KClass.word(mu)
    if not mu:
        return KClass.word(lam)
    out = _prepend(_tensor_basis(lam[1:], mu), KClass.word(lam[0]))
    out = out + _prepend(_tensor_basis(lam, mu[1:]), KClass.word(mu[0]))
    out = out + _prepend(_tensor_basis(lam[1:], mu[1:]), _collision(lam[0], mu[0]))
    return out


def tensor_mul(x: KClass, y: KClass) -> KClass:
    """The standard (tensor) product, extended bilinearly from basis words."""
    coeffs: dict[str, Fraction] = {}
    for u, cu in x.coeffs.items():
        for v, cv in y.coeffs.items():
            scale = cu * cv
            for w, c in _tensor_basis(u, v).coeffs.items():
                coeffs[w] = coeffs.get(w, Fraction(0)) + scale * c
    return KClass(coeffs)


def line_class() -> KClass:
    """The class of functions on the line: b + w + 1."""
    return KClass({"b": Fraction(1), "w": Fraction(1), "": Fraction(1)})


def schwartz_class(n: int) -> KClass:
    """The class of functions on ordered n-tuples: the n-th concat power of b+w+1."""
    out = KClass.unit()
    for _ in range(n):
        out = concat_mul(out, line_class())
    return out


def induce(t: KTensorClass) -> KClass:
    """Induction along the point stabilizer: x (x) y -> x . (b+w+1) . y (concat)."""
    mid = line_class()
    out: dict[str, Fraction] = {}
    for (u, v), c in t.coeffs.items():
        piece = concat_mul(concat_mul(KClass.word(u), mid), KClass.word(v))
        for w, cw in piece.coeffs.items():
            out[w] = out.get(w, Fraction(0)) + c * cw
    return KClass(out)


def restrict(x: KClass) -> KTensorClass:
    """Split each word between letters, plus splits that delete one letter."""
    out: dict[tuple[str, str], Fraction] = {}

    def add(u: str, v: str, c: Fraction) -> None:
        out[(u, v)] = out.get((u, v), Fraction(0)) + c

    for w, c in x.coeffs.items():
        n = len(w)
        for i in range(n + 1):
            add(w[:i], w[i:], c)
        for i in range(1, n + 1):
            add(w[: i - 1], w[i:], c)
    return KTensorClass(out)


def counit(x: KClass) -> Fraction:
    """The ring homomorphism sending every word to (-1)^length."""
    return sum(
        (c * (-1 if len(w) % 2 else 1) for w, c in x.coeffs.items()), Fraction(0)
    )


@lru_cache(maxsize=None)
def _antipode_word(w: str) -> KClass:
    if not w:
        return KClass.unit()
    n = len(w)
    sign = Fraction(-1 if n % 2 else 1)
    out = KClass({"": sign})
    for i in range(1, n + 1):
        head = KClass.word(w[:i]) + KClass.word(w[: i - 1])
        out = out - tensor_mul(head, _antipode_word(w[i:]))
    return out


def antipode(x: KClass) -> KClass:
    """The antipode, computed by its defining recursion on word length."""
    out = KClass()
    for w, c in x.coeffs.items():
        out = out + c * _antipode_word(w)
    return out


def dual(x: KClass) -> KClass:
    """Swap the two letters in every word."""
    table = str.maketrans("bw", "wb")
    return KClass({w.translate(table): c for w, c in x.coeffs.items()})


def inner(x: KClass, y: KClass) -> Fraction:
    """The pairing making the words an orthonormal basis."""
    small, large = (x, y) if len(x.coeffs) <= len(y.coeffs) else (y, x)
    return sum(
        (c * large.coeffs[w] for w, c in small.coeffs.items() if w in large.coeffs),
        Fraction(0),
    )


def inner_tensor(s: KTensorClass, t: KTensorClass) -> Fraction:
    small, large = (s, t) if len(s.coeffs) <= len(t.coeffs) else (t, s)
    return sum(
        (c * large.coeffs[k] for k, c in small.coeffs.items() if k in large.coeffs),
        Fraction(0),
    )


def _binomial_chain(x: KClass, top: int) -> list[KClass]:
    """binom(x, 0), ..., binom(x, top), computed incrementally over rationals."""
    chain = [KClass.unit()]
    for j in range(1, top + 1):
        nxt = tensor_mul(chain[-1], x - (j - 1)) * Fraction(1, j)
        chain.append(nxt)
    return chain


def lambda_binomial(x: KClass, i: int) -> KClass:
    """binom(x, i) = x(x-1)...(x-i+1)/i!; coefficients must come out integral."""
    if i < 0:
        raise ValueError("exterior power index must be non-negative")
    out = _binomial_chain(x, i)[i]
    assert out.is_integral(), f"binom(x, {i}) has non-integral coefficients: {out!r}"
    return out


def adams(x: KClass, i: int) -> KClass:
    """The i-th Adams operation via Newton's identities on binom(x, j).

    The computed value is returned as-is.  In this ring the result always
    works out to x itself; the test suite checks that identity rather than
    this function assuming it.
    """
    if i < 1:
        raise ValueError("Adams operations are indexed by positive integers")
    e = _binomial_chain(x, i)
    p: list[KClass] = [KClass.unit(), e[1]]
    for k in range(2, i + 1):
        acc = KClass()
        for j in range(1, k):
            term = tensor_mul(e[j], p[k - j])
            acc = acc + (term if j % 2 == 1 else -term)
        tail = Fraction(k) * e[k]
        acc = acc + (tail if k % 2 == 1 else -tail)
        p.append(acc)
    return p[i]


# -- integer-valued polynomials and Schur operations -------------------------


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError("partition parts must be weakly decreasing")
    return parts


def binom_at(t: Fraction, i: int) -> Fraction:
    """binom(t, i) for an arbitrary rational t."""
    out = Fraction(1)
    for j in range(i):
        out *= (t - j)
    for j in range(2, i + 1):
        out /= j
    return out


@dataclass(frozen=True)
class IntValuedPoly:
    """A polynomial in the binomial basis with integer coefficients."""

    coeffs: tuple[int, ...]

    def evaluate(self, t) -> Fraction:
        t = Fraction(t)
        return sum(
            (Fraction(c) * binom_at(t, i) for i, c in enumerate(self.coeffs)),
            Fraction(0),
        )

    def degree(self) -> int:
        deg = -1
        for i, c in enumerate(self.coeffs):
            if c:
                deg = i
        return deg


def _hook_content_value(parts: tuple[int, ...], t: Fraction) -> Fraction:
    """Product over the diagram of (t + col - row) / hook length (1-based)."""
    conj = [sum(1 for p in parts if p >= c) for c in range(1, (parts[0] if parts else 0) + 1)]
    out = Fraction(1)
    for r, width in enumerate(parts, start=1):
        for c in range(1, width + 1):
            hook = (width - c) + (conj[c - 1] - r) + 1
            out *= Fraction(t + c - r, hook)
    return out


def schur_dimension_poly(parts: Sequence[int]) -> IntValuedPoly:
    """Dimension of the Schur construction on a t-dimensional space, in t.

    Computed by the hook content formula, then converted to the binomial
    basis by finite differences.
    """
    parts = check_partition(parts)
    size = sum(parts)
    values = [_hook_content_value(parts, Fraction(j)) for j in range(size + 1)]
    assert all(v.denominator == 1 for v in values), "hook content gave non-integers"
    coeffs = []
    for i in range(size + 1):
        c = sum((-1) ** (i - j) * comb(i, j) * int(values[j]) for j in range(i + 1))
        coeffs.append(c)
    return IntValuedPoly(tuple(coeffs))


def schur_apply(parts: Sequence[int], x: KClass) -> KClass:
    """Evaluate the Schur polynomial of a partition at a ring element."""
    poly = schur_dimension_poly(parts)
    chain = _binomial_chain(x, len(poly.coeffs) - 1)
    out = KClass()
    for i, c in enumerate(poly.coeffs):
        if c:
            out = out + c * chain[i]
    assert out.is_integral(), f"Schur value has non-integral coefficients: {out!r}"
    return out


def hilbert_value(x: KClass, n: int) -> Fraction:
    """Dimension of the invariants under an n-point stabilizer, by class."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(
        (c * comb(n, len(w)) for w, c in x.coeffs.items() if len(w) <= n),
        Fraction(0),
    )


def is_lyndon(word: str) -> bool:
    """Nonempty and strictly smaller than every proper suffix ('b' < 'w')."""
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def lyndon_weights(n: int) -> list[str]:
    """All Lyndon words of length n over the ordered alphabet b < w."""
    from .paths import all_weights

    return [w for w in all_weights(n) if is_lyndon(w)]


def shuffle_words(u: str, v: str) -> Iterable[str]:
    """All collision-free interleavings of two words, with multiplicity."""
    if not u:
        yield v
        return
    if not v:
        yield u
        return
    for rest in shuffle_words(u[1:], v):
        yield u[0] + rest
    for rest in shuffle_words(u, v[1:]):
        yield v[0] + rest
