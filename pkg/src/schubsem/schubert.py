"""Schubert polynomials, Schubert-basis expansion and Monk's rule.

``schubert_divdiff`` walks from ``w`` up to the longest element by always
taking the smallest ascent, then applies divided differences back down from
the staircase monomial.  Every intermediate polynomial is memoised under
``(n, w)``, so a full scan of S_n costs one divided difference per element.
"""

from __future__ import annotations

import json
import random
import threading
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .perm import (
    Permutation,
    embed,
    is_length_cover,
    longest_element,
    perm_from_code,
    transpose,
    trim,
)
from .pipedream import schubert_from_pipedreams
from .poly import Poly, divided_difference, leading_monomial, monomial, scale

__all__ = [
    "CrossMethodMismatch",
    "SchubertExpansion",
    "schubert_divdiff",
    "schubert_divdiff_random_word",
    "schubert",
    "seed_cache",
    "cached_items",
    "clear_cache",
    "expand_schubert_basis",
    "monk_products",
    "verify_monk",
]

_CACHE: dict[tuple[int, Permutation], Poly] = {}
_CACHE_LOCK = threading.Lock()


class CrossMethodMismatch(AssertionError):
    def __init__(self, w, divdiff: Poly, pipedream: Poly):
        self.w = tuple(w)
        self.divdiff = divdiff
        self.pipedream = pipedream
        super().__init__(f"S_{self.w}: divided differences give {divdiff.to_text()}, "
                         f"pipe dreams give {pipedream.to_text()}")


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def seed_cache(n: int, polys: Mapping[Sequence[int], Poly]) -> None:
    with _CACHE_LOCK:
        for w, p in polys.items():
            _CACHE.setdefault((n, tuple(w)), p)


def cached_items(n: int) -> dict[Permutation, Poly]:
    with _CACHE_LOCK:
        return {w: p for (m, w), p in _CACHE.items() if m == n}


def _staircase(n: int) -> Poly:
    return monomial(tuple(range(n - 1, 0, -1)))


def _smallest_ascent(w: Sequence[int]) -> int | None:
    for i in range(1, len(w)):
        if w[i - 1] < w[i]:
            return i
    return None


def schubert_divdiff(w: Sequence[int], n: int | None = None) -> Poly:
    """Schubert polynomial of ``w`` by divided differences from ``w_0`` in S_n.

    ``n`` defaults to ``len(w)``; a larger ``n`` embeds ``w`` first (the
    result does not change).
    """
    w = tuple(w) if n is None else embed(w, n)
    n = len(w)
    with _CACHE_LOCK:
        hit = _CACHE.get((n, w))
    if hit is not None:
        return hit

    # climb to w_0 (or a cached ancestor), remembering the ascents used
    chain: list[tuple[Permutation, int]] = []
    cur = w
    top = longest_element(n)
    found = None
    while True:
        with _CACHE_LOCK:
            found = _CACHE.get((n, cur))
        if found is not None:
            break
        if cur == top:
            found = _staircase(n)
            break
        i = _smallest_ascent(cur)
        chain.append((cur, i))
        cur = cur[: i - 1] + (cur[i], cur[i - 1]) + cur[i + 1:]

    poly = found
    new = {(n, cur): poly}
    for u, i in reversed(chain):
        poly = divided_difference(poly, i)
        new[(n, u)] = poly
    with _CACHE_LOCK:
        for k, v in new.items():
            _CACHE.setdefault(k, v)
    return poly


def schubert_divdiff_random_word(w: Sequence[int], rng: random.Random | None = None) -> Poly:
    """Uncached divided-difference computation along a random reduced word."""
    rng = rng or random.Random()
    w = tuple(w)
    n = len(w)
    top = longest_element(n)
    steps = []
    cur = w
    while cur != top:
        i = rng.choice([i for i in range(1, n) if cur[i - 1] < cur[i]])
        steps.append(i)
        cur = cur[: i - 1] + (cur[i], cur[i - 1]) + cur[i + 1:]
    poly = _staircase(n)
    for i in reversed(steps):
        poly = divided_difference(poly, i)
    return poly


def schubert(w: Sequence[int], method: str = "divdiff") -> Poly:
    """Dispatch on ``method``: ``divdiff``, ``pipedream`` or ``checked``."""
    if method == "divdiff":
        return schubert_divdiff(w)
    if method == "pipedream":
        return schubert_from_pipedreams(w)
    if method == "checked":
        a = schubert_divdiff(w)
        b = schubert_from_pipedreams(w)
        if a != b:
            raise CrossMethodMismatch(w, a, b)
        return a
    raise ValueError(f"unknown method {method!r}; expected divdiff, pipedream or checked")


@dataclass
class SchubertExpansion:
    n: int
    terms: dict[Permutation, int] = field(default_factory=dict)

    def to_json_obj(self) -> list:
        return [{"w": list(w), "coeff": str(c)} for w, c in sorted(self.terms.items())]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj, n: int) -> "SchubertExpansion":
        return cls(n, {tuple(t["w"]): int(t["coeff"]) for t in obj})

    def reconstruct(self) -> Poly:
        out = Poly()
        for w, c in self.terms.items():
            out = out + scale(schubert_divdiff(w, self.n), c)
        return out


def _check_staircase(f: Poly, n: int) -> None:
    for e in f:
        for i, k in enumerate(e, start=1):
            if k > n - i:
                raise ValueError(f"monomial {e} exceeds the staircase bound x_{i}^{n - i} for n = {n}")


def expand_schubert_basis(f: Poly, n: int) -> SchubertExpansion:
    """Write ``f`` as an integer combination of Schubert polynomials of S_n.

    Greedy: the leading monomial ``x^c`` of the remainder is the leading
    monomial of exactly one Schubert polynomial, the one with code ``c``.
    """
    _check_staircase(f, n)
    rest = f
    terms: dict[Permutation, int] = {}
    while rest:
        e, c = leading_monomial(rest)
        code = tuple(e) + (0,) * (n - len(e))
        w = perm_from_code(code)
        terms[w] = terms.get(w, 0) + c
        rest = rest - scale(schubert_divdiff(w), c)
    terms = {w: c for w, c in terms.items() if c}
    exp = SchubertExpansion(n, terms)
    if exp.reconstruct() != f:
        raise AssertionError("Schubert expansion does not reproduce its input")
    return exp


def monk_products(w: Sequence[int], k: int) -> list[Permutation]:
    """Permutations ``w (i1, i2)`` with ``i1 <= k < i2`` covering ``w`` in length.

    ``w`` is first embedded into S_{n+1} so covers reaching past position n are
    included; results have trailing fixed points trimmed and are sorted.
    """
    n = len(w)
    if not 1 <= k:
        raise ValueError(f"k must be >= 1, got {k}")
    m = max(n, k) + 1
    v = embed(w, m)
    out = []
    for i1 in range(1, k + 1):
        for i2 in range(k + 1, m + 1):
            if is_length_cover(v, i1, i2):
                out.append(trim(transpose(v, i1, i2)))
    return sorted(out)


def verify_monk(w: Sequence[int], k: int) -> bool:
    """Compare the combinatorial rule with the algebraic product ``e^k_1 S_w``."""
    from .bases import elementary_poly

    m = max(len(w), k) + 1
    product = elementary_poly(k, 1) * schubert_divdiff(w, m)
    algebraic = expand_schubert_basis(product, m)
    expected = {trim(u): c for u, c in algebraic.terms.items()}
    combinatorial: dict[Permutation, int] = {}
    for u in monk_products(w, k):
        combinatorial[u] = combinatorial.get(u, 0) + 1
    return expected == combinatorial
