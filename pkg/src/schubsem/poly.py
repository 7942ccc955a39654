"""Sparse multivariate polynomials over the integers.

Monomials are exponent tuples indexed by variable ``x_1, x_2, ...`` with
trailing zeros trimmed, so ``(0, 1)`` is ``x_2`` and ``()`` is the constant
monomial.  Coefficients are Python ints, so arithmetic never overflows.

The term order compares exponents from the highest-indexed variable down;
under it ``x_2 > x_1`` and the leading monomial of a Schubert polynomial is
``x^{L(w)}``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Exponent",
    "Poly",
    "trim_exponent",
    "term_order_key",
    "monomial",
    "var",
    "const",
    "add",
    "mul",
    "scale",
    "swap_action",
    "divided_difference",
    "leading_monomial",
]

Exponent = tuple[int, ...]


def trim_exponent(e: Iterable[int]) -> Exponent:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def term_order_key(e: Exponent):
    """Sort key for the term order (larger key = larger monomial).

    Works on trimmed exponents: a longer exponent has a nonzero entry at an
    index where the shorter one is zero.
    """
    return (len(e), tuple(reversed(e)))


class Poly:
    """Immutable polynomial: a mapping ``exponent -> nonzero int``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        acc: dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[trim_exponent(e)] += int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "Poly":
        # caller guarantees trimmed keys and nonzero values
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def coeff(self, e: Sequence[int]) -> int:
        return self._terms.get(trim_exponent(e), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "Poly":
        return Poly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "Poly":
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return scale(self, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = const(1)
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def nvars(self) -> int:
        return max((len(e) for e in self._terms), default=0)

    def sorted_terms(self, descending: bool = False) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), key=lambda t: term_order_key(t[0]), reverse=descending)

    # -- serialisation --------------------------------------------------------

    def to_json_obj(self) -> list:
        return [[list(e), str(c)] for e, c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "Poly":
        return cls((tuple(e), int(c)) for e, c in obj)

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls.from_json_obj(json.loads(text))

    def to_text(self) -> str:
        """``x1^3*x3 + x1^3*x2`` with terms in descending term order."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(descending=True):
            mono = "*".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e, start=1) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"


def monomial(e: Sequence[int], c: int = 1) -> Poly:
    return Poly({tuple(e): c})


def var(i: int) -> Poly:
    """The variable ``x_i`` (1-based)."""
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    return Poly._raw({(0,) * (i - 1) + (1,): 1})


def const(c: int) -> Poly:
    return Poly._raw({(): c} if c else {})


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def scale(f: Poly, c: int) -> Poly:
    if not c:
        return Poly._raw({})
    return Poly._raw({e: c * v for e, v in f.items()})


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def mul(f: Poly, g: Poly) -> Poly:
    out: dict[Exponent, int] = defaultdict(int)
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            out[_add_exp(e1, e2)] += c1 * c2
    return Poly._raw({e: c for e, c in out.items() if c})


def _swap_exp(e: Exponent, i: int) -> Exponent:
    if len(e) < i:
        return e
    e = list(e) + [0] * (i + 1 - len(e))
    e[i - 1], e[i] = e[i], e[i - 1]
    return trim_exponent(e)


def swap_action(f: Poly, i: int) -> Poly:
    """Exchange ``x_i`` and ``x_{i+1}``."""
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    return Poly._raw({_swap_exp(e, i): c for e, c in f.items()})


def divided_difference(f: Poly, i: int) -> Poly:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed exactly term by term.

    For ``x_i^a x_{i+1}^b`` with ``a > b`` the quotient is
    ``(x_i x_{i+1})^b * sum_t x_i^(a-b-1-t) x_{i+1}^t``; ``a < b`` gives the
    negated mirror image and ``a == b`` gives zero.
    """
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    out: dict[Exponent, int] = defaultdict(int)
    for e, c in f.items():
        padded = list(e) + [0] * max(0, i + 1 - len(e))
        a, b = padded[i - 1], padded[i]
        if a == b:
            continue
        lo, gap, sign = (b, a - b, 1) if a > b else (a, b - a, -1)
        for t in range(gap):
            q = list(padded)
            if sign > 0:
                q[i - 1], q[i] = lo + gap - 1 - t, lo + t
            else:
                q[i - 1], q[i] = lo + t, lo + gap - 1 - t
            out[trim_exponent(q)] += sign * c
    return Poly._raw({e: c for e, c in out.items() if c})


def leading_monomial(f: Poly) -> tuple[Exponent, int]:
    """Greatest monomial of ``f`` in the term order, with its coefficient."""
    if not f:
        raise ValueError("the zero polynomial has no leading monomial")
    e = max(f, key=term_order_key)
    return e, f.coeff(e)
