"""Elementary and complete homogeneous monomial bases.

``e^i_j`` is the degree-j elementary symmetric polynomial in ``x_1..x_i`` and
``h^i_j`` the complete homogeneous one.  A standard elementary monomial (SEM)
is ``e_a = e^1_{a_1} e^2_{a_2} ...``; vectors are tuples with trailing zeros
trimmed, so ``(0, 1, 3)`` is ``e^2_1 e^3_3``.

SEM expansions are computed by an exact solve on each graded piece of the
staircase space, not by peeling leading monomials: distinct SEMs can share a
leading monomial (``e^1_1 e^2_1`` and ``e^2_2`` both lead with ``x_1 x_2``).
Graded pieces too large to invert (n >= 8) are handled in the Schubert
basis instead, where the SEMs are unitriangular.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Sequence

from .linalg import SingularMatrixError, bareiss_rank, integer_inverse
from .perm import (
    Permutation,
    PermutationError,
    descent_set,
    lehmer_code,
    lehmer_rules_check,
    length,
)
from .poly import Exponent, Poly, const, term_order_key, trim_exponent
from .schubert import expand_schubert_basis, schubert_divdiff

__all__ = [
    "SemVector",
    "ChmVector",
    "SemExpansion",
    "elementary_poly",
    "homogeneous_poly",
    "sem_product",
    "chm_product",
    "sem_vectors",
    "staircase_monomials",
    "sem_matrix",
    "sem_expand",
    "pivot_permutation",
    "pivot_sem_vector",
    "sem_rank_deficit",
    "constructive_sem",
    "single_sem_of",
    "single_chm_of",
    "single_chm_bruteforce",
    "single_monomial_of",
    "format_sem",
    "format_chm",
]

SemVector = tuple[int, ...]
ChmVector = tuple[int, ...]


@lru_cache(maxsize=None)
def elementary_poly(i: int, j: int) -> Poly:
    if i < 0 or j < 0:
        raise ValueError(f"e^{i}_{j}: indices must be nonnegative")
    if j == 0:
        return const(1)
    terms = []
    for cols in combinations(range(i), j):
        e = [0] * i
        for c in cols:
            e[c] = 1
        terms.append((e, 1))
    return Poly(terms)


@lru_cache(maxsize=None)
def homogeneous_poly(i: int, j: int) -> Poly:
    if i < 0 or j < 0:
        raise ValueError(f"h^{i}_{j}: indices must be nonnegative")
    if j == 0:
        return const(1)
    terms = []
    for cols in combinations_with_replacement(range(i), j):
        e = [0] * i
        for c in cols:
            e[c] += 1
        terms.append((e, 1))
    return Poly(terms)


@lru_cache(maxsize=None)
def sem_product(a: Sequence[int]) -> Poly:
    out = const(1)
    for i, j in enumerate(a, start=1):
        if j:
            out = out * elementary_poly(i, j)
    return out


@lru_cache(maxsize=None)
def chm_product(a: Sequence[int]) -> Poly:
    out = const(1)
    for i, j in enumerate(a, start=1):
        if j:
            out = out * homogeneous_poly(i, j)
    return out


def format_sem(a: Sequence[int]) -> str:
    return "*".join(f"e[{i},{j}]" for i, j in enumerate(a, start=1) if j) or "1"


def format_chm(a: Sequence[int]) -> str:
    return "*".join(f"h[{i},{j}]" for i, j in enumerate(a, start=1) if j) or "1"


# -- the graded staircase space ---------------------------------------------


@lru_cache(maxsize=None)
def sem_vectors(n: int, d: int) -> tuple[SemVector, ...]:
    """SEM vectors with ``a_i <= i`` for ``i <= n-1`` and total degree d, sorted."""
    out = [trim_exponent(a) for a in product(*(range(i + 1) for i in range(1, n))) if sum(a) == d]
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def staircase_monomials(n: int, d: int) -> tuple[Exponent, ...]:
    """Exponents with ``c_i <= n-i`` and total degree d, ascending in term order."""
    out = [trim_exponent(c) for c in product(*(range(n - i + 1) for i in range(1, n))) if sum(c) == d]
    return tuple(sorted(out, key=term_order_key))


def sem_matrix(n: int, d: int) -> list[list[int]]:
    """Rows: staircase monomials of degree d; columns: SEMs of degree d."""
    rows = staircase_monomials(n, d)
    index = {e: r for r, e in enumerate(rows)}
    cols = sem_vectors(n, d)
    m = [[0] * len(cols) for _ in rows]
    for c, a in enumerate(cols):
        for e, v in sem_product(a).items():
            m[index[e]][c] = v
    return m


_INVERSES: dict[tuple[int, int], list[list[int]]] = {}
_INVERSE_LOCK = threading.Lock()


def _sem_inverse(n: int, d: int) -> list[list[int]]:
    with _INVERSE_LOCK:
        inv = _INVERSES.get((n, d))
    if inv is not None:
        return inv
    m = sem_matrix(n, d)
    if len(m) != len(sem_vectors(n, d)):
        raise AssertionError(f"degree-{d} staircase piece of H_{n} is not square")
    try:
        inv = integer_inverse(m)
    except SingularMatrixError as exc:
        raise AssertionError(f"SEM matrix for n={n}, d={d} is singular") from exc
    with _INVERSE_LOCK:
        _INVERSES.setdefault((n, d), inv)
    return inv


def sem_rank_deficit(n: int, d: int) -> int:
    """``dimension - rank`` of the degree-d SEM matrix; 0 means a basis."""
    m = sem_matrix(n, d)
    return len(m) - bareiss_rank(m)


@dataclass
class SemExpansion:
    n: int
    degree: int
    terms: dict[SemVector, int] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": [{"a": list(a), "coeff": str(c)} for a, c in sorted(self.terms.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "SemExpansion":
        return cls(obj["n"], obj["degree"], {tuple(t["a"]): int(t["coeff"]) for t in obj["terms"]})

    def reconstruct(self) -> Poly:
        out = Poly()
        for a, c in self.terms.items():
            out = out + sem_product(a) * c
        return out

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a, c in sorted(self.terms.items(), reverse=True):
            body = format_sem(a)
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out


SOLVE_MAX_DIMENSION = 600


def pivot_permutation(a: Sequence[int], n: int) -> Permutation:
    """Permutation ``w`` with ``a_i = #{j <= i : w_j > w_{i+1}}``.

    This is the largest Schubert term of ``e_a`` when permutations are
    compared by their one-line words read right to left, and it appears
    with coefficient 1; see :func:`pivot_sem_vector` for the inverse.
    """
    a = tuple(a) + (0,) * (n - 1 - len(a))
    if len(a) != n - 1 or any(not 0 <= v <= i for i, v in enumerate(a, start=1)):
        raise ValueError(f"{a} is not a standard SEM vector for n = {n}")
    w = [1]
    for i, k in enumerate(a, start=1):
        # new entry sits below exactly k of the first i values
        rank = i + 1 - k
        w = [v + 1 if v >= rank else v for v in w] + [rank]
    return tuple(w)


def pivot_sem_vector(w: Sequence[int]) -> SemVector:
    return trim_exponent(sum(1 for j in range(i) if w[j] > w[i]) for i in range(1, len(w)))


@lru_cache(maxsize=None)
def _sem_in_schubert(a: SemVector, n: int) -> dict:
    return expand_schubert_basis(sem_product(a), n).terms


def _reversed_word(w):
    return tuple(reversed(w))


def _expand_by_solve(f: Poly, n: int, d: int) -> dict:
    rows = staircase_monomials(n, d)
    cols = sem_vectors(n, d)
    inv = _sem_inverse(n, d)
    rhs = [f.coeff(e) for e in rows]
    support = [r for r, v in enumerate(rhs) if v]
    terms = {}
    for c, a in enumerate(cols):
        row = inv[c]
        v = sum(row[r] * rhs[r] for r in support)
        if v:
            terms[a] = v
    return terms


def _expand_by_peeling(f: Poly, n: int) -> dict:
    rest = dict(expand_schubert_basis(f, n).terms)
    terms = {}
    while rest:
        w = max(rest, key=_reversed_word)
        c = rest[w]
        a = pivot_sem_vector(w)
        column = _sem_in_schubert(a, n)
        if column.get(w) != 1 or max(column, key=_reversed_word) != w:
            raise AssertionError(f"e_{a} does not have pivot {w}")
        terms[a] = c
        for u, v in column.items():
            x = rest.get(u, 0) - c * v
            if x:
                rest[u] = x
            else:
                rest.pop(u, None)
    return terms


def sem_expand(f: Poly, n: int, method: str = "auto") -> SemExpansion:
    """Expand a homogeneous staircase polynomial into SEMs of H_n.

    ``solve`` inverts the degree-d SEM matrix exactly (cached per (n, d));
    ``peel`` goes through the Schubert basis, where each ``e_a`` is
    unitriangular with pivot :func:`pivot_permutation`.  ``auto`` solves
    while the graded piece has at most ``SOLVE_MAX_DIMENSION`` elements.
    Either way the result is checked by reconstructing ``f``.
    """
    if not f:
        return SemExpansion(n, 0, {})
    if not f.is_homogeneous():
        raise ValueError("sem_expand needs a homogeneous polynomial")
    for e in f:
        for i, k in enumerate(e, start=1):
            if k > n - i:
                raise ValueError(f"monomial {e} exceeds the staircase bound x_{i}^{n - i} for n = {n}")
    d = f.degree()
    if method == "auto":
        method = "solve" if len(sem_vectors(n, d)) <= SOLVE_MAX_DIMENSION else "peel"
    if method == "solve":
        terms = _expand_by_solve(f, n, d)
    elif method == "peel":
        terms = _expand_by_peeling(f, n)
    else:
        raise ValueError(f"unknown method {method!r}; expected auto, solve or peel")
    out = SemExpansion(n, d, terms)
    if out.reconstruct() != f:
        raise AssertionError("SEM expansion does not reproduce its input")
    return out


# -- single-term detection ----------------------------------------------------


def constructive_sem(w: Sequence[int]) -> SemVector:
    """SEM vector of ``S_w`` read off the bottom pipe dream.

    Rows entered by a code increase, and the plateau rows after them up to
    the next decrease, each carry one outer cross at the end of the row.
    Removing those leaves a dominant code with unit drops, contributing
    ``e^i_i`` at each of its drops; each vertical run of outer crosses ending
    at row i with j crosses contributes ``e^i_j``.
    """
    code = lehmer_code(w)
    report = lehmer_rules_check(code)
    if not report.ok:
        raise PermutationError(f"{tuple(w)} breaks the Lehmer rules: {report.violations}")
    n = len(code)
    outer = [False] * n
    raised = False
    for i in range(1, n):
        if code[i] > code[i - 1]:
            raised = True
        elif code[i] < code[i - 1]:
            raised = False
        outer[i] = raised
    core = [c - int(o) for c, o in zip(code, outer)]
    a = [0] * n
    for i in range(1, n):
        if core[i - 1] > core[i]:
            a[i - 1] = i
    i = 0
    while i < n:
        if outer[i]:
            j = i
            while j + 1 < n and outer[j + 1]:
                j += 1
            a[j] = j - i + 1
            i = j + 1
        else:
            i += 1
    return trim_exponent(a)


def single_sem_of(w: Sequence[int]) -> SemVector | None:
    """The SEM vector if ``S_w`` is one SEM with coefficient 1, else None."""
    n = len(w)
    exp = sem_expand(schubert_divdiff(w), n)
    if len(exp.terms) != 1:
        return None
    (a, c), = exp.terms.items()
    if c != 1:
        return None
    if lehmer_rules_check(lehmer_code(w)).ok and constructive_sem(w) != a:
        raise AssertionError(f"constructive SEM disagrees with the expansion for {tuple(w)}")
    return a


def single_chm_of(w: Sequence[int]) -> ChmVector | None:
    """``L(w)`` if ``S_w == h_{L(w)}``, else None.

    ``h_{L(w)}`` is the only candidate since it carries the leading monomial
    ``x^{L(w)}``; :func:`single_chm_bruteforce` checks that claim.
    """
    code = trim_exponent(lehmer_code(w))
    if chm_product(code) == schubert_divdiff(w):
        return code
    return None


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def single_chm_bruteforce(w: Sequence[int]) -> list[ChmVector]:
    """Every CHM vector with ``n-1`` parts equal to ``S_w`` (exhaustive)."""
    n = len(w)
    target = schubert_divdiff(w)
    return [trim_exponent(a) for a in _compositions(length(w), max(n - 1, 0))
            if chm_product(trim_exponent(a)) == target]


def single_monomial_of(w: Sequence[int]) -> Exponent | None:
    """``L(w)`` if ``S_w`` is the single monomial ``x^{L(w)}``, else None."""
    code = trim_exponent(lehmer_code(w))
    p = schubert_divdiff(w)
    if len(p) == 1 and p.coeff(code) == 1:
        return code
    return None


def dominant_sem(code: Sequence[int]) -> SemVector:
    """``prod_{i in drops} e^i_i`` for a nonincreasing code with unit drops."""
    a = [0] * len(code)
    for i in range(1, len(code)):
        if code[i - 1] > code[i]:
            a[i - 1] = i
    if code and code[-1]:
        a[len(code) - 1] = len(code)
    return trim_exponent(a)


def is_descent_support(w: Permutation, a: Sequence[int]) -> bool:
    """True iff ``a_i != 0`` exactly at the descents of ``w``."""
    desc = descent_set(w)
    return all((i in desc) == bool(a[i - 1] if i <= len(a) else 0) for i in range(1, len(w)))
