"""Permutations in one-line notation, Lehmer codes and pattern containment.

A permutation is a plain tuple of the integers ``1..n`` in one-line notation.
Positions, descents and rows are 1-based everywhere in the public API.

>>> lehmer_code((4, 1, 3, 2))
(3, 0, 1, 0)
>>> perm_from_code((3, 0, 1, 0))
(4, 1, 3, 2)
>>> sorted(descent_set((4, 1, 3, 2)))
[1, 3]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "PermutationError",
    "perm_from_word",
    "parse_word",
    "format_word",
    "identity",
    "longest_element",
    "all_permutations",
    "perm_array",
    "embed",
    "trim",
    "inverse",
    "length",
    "lehmer_code",
    "perm_from_code",
    "descent_set",
    "ascent_set",
    "swap_adjacent",
    "contains_pattern",
    "avoids",
    "RuleReport",
    "lehmer_rules_check",
    "transpose",
    "is_length_cover",
    "MeanderPath",
    "motzkin_path",
]

# a permutation of 1..n in one-line notation
Permutation = tuple[int, ...]


class PermutationError(ValueError):
    """Raised for words or codes that do not describe a permutation."""


def perm_from_word(word: Iterable[int]) -> Permutation:
    """Validate ``word`` and return it as a permutation tuple.

    The error message names the 1-based index of the first offending entry.
    """
    w = tuple(int(v) for v in word)
    n = len(w)
    if n == 0:
        raise PermutationError("empty word")
    seen: dict[int, int] = {}
    for idx, v in enumerate(w, start=1):
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} at index {idx} is out of range 1..{n}")
        if v in seen:
            raise PermutationError(f"duplicate value {v} at index {idx} (first seen at index {seen[v]})")
        seen[v] = idx
    return w


def parse_word(text: str) -> Permutation:
    """Parse ``"4132"`` or ``"10,2,3,..."``.

    Contiguous digits are only unambiguous for n <= 9; anything larger must be
    comma separated.
    """
    text = text.strip()
    if not text:
        raise PermutationError("empty word")
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = list(text)
    values = []
    for idx, tok in enumerate(tokens, start=1):
        if not tok.isdigit():
            raise PermutationError(f"token {tok!r} at index {idx} is not a positive integer")
        values.append(int(tok))
    return perm_from_word(values)


def format_word(w: Sequence[int]) -> str:
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    return _itertools_permutations(range(1, n + 1))


def perm_array(n: int) -> np.ndarray:
    """S_n as an ``(n!, n)`` int64 array, rows in lexicographic order."""
    return np.array(list(all_permutations(n)), dtype=np.int64).reshape(-1, n)


def embed(w: Sequence[int], n: int) -> Permutation:
    """Append fixed points so that ``w`` lives in S_n."""
    if n < len(w):
        raise PermutationError(f"cannot embed a word of size {len(w)} into S_{n}")
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


def trim(w: Sequence[int]) -> Permutation:
    """Drop trailing fixed points (keeps at least one entry)."""
    w = list(w)
    while len(w) > 1 and w[-1] == len(w):
        w.pop()
    return tuple(w)


def inverse(w: Sequence[int]) -> Permutation:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def lehmer_code(w: Sequence[int]) -> tuple[int, ...]:
    """``L_i = #{j > i : w(j) < w(i)}``."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def perm_from_code(code: Sequence[int]) -> Permutation:
    """Inverse of :func:`lehmer_code`.

    The code is padded with zeros if it is shorter than its natural size;
    entries must satisfy ``L_i <= n - i``.
    """
    code = list(code)
    n = len(code)
    for i, c in enumerate(code, start=1):
        if c < 0 or c > n - i:
            raise PermutationError(f"code entry L_{i} = {c} violates 0 <= L_i <= {n - i}")
    available = list(range(1, n + 1))
    return tuple(available.pop(c) for c in code)


def descent_set(w: Sequence[int]) -> set[int]:
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def ascent_set(w: Sequence[int]) -> set[int]:
    return {i for i in range(1, len(w)) if w[i - 1] < w[i]}


def swap_adjacent(w: Sequence[int], i: int) -> Permutation:
    """Right multiplication by s_i: swap positions i and i+1."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def contains_pattern(w: Sequence[int], p: Sequence[int]) -> bool:
    """True iff some subsequence of ``w`` is order-isomorphic to ``p``.

    Depth-first scan with prefix pruning; fine for the short patterns used
    here.
    """
    k = len(p)
    n = len(w)
    if k > n:
        return False
    if k == 0:
        return True
    chosen: list[int] = []

    def extend(start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        for pos in range(start, n - (k - depth) + 1):
            v = w[pos]
            if all((w[chosen[q]] < v) == (p[q] < p[depth]) for q in range(depth)):
                chosen.append(pos)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids(w: Sequence[int], *patterns: Sequence[int]) -> bool:
    return not any(contains_pattern(w, p) for p in patterns)


@dataclass(frozen=True)
class RuleReport:
    """Outcome of the three Lehmer rules; violations are (rule, position)."""

    rule1_ok: bool
    rule2_ok: bool
    rule3_ok: bool
    violations: tuple[tuple[int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.rule1_ok and self.rule2_ok and self.rule3_ok


def lehmer_rules_check(code: Sequence[int]) -> RuleReport:
    """Check the Lehmer rules on a code.

    1. ``L_i - L_{i+1} <= 1``
    2. ``L_i - L_{i+1} >= -1``
    3. between two strict increases there is a strict decrease

    Works on any integer sequence, valid Lehmer code or not.  A rule 3
    violation is reported at the position of the second increase.
    """
    violations: list[tuple[int, int]] = []
    pending_increase = False
    for i in range(1, len(code)):
        step = code[i - 1] - code[i]
        if step > 1:
            violations.append((1, i))
        if step < -1:
            violations.append((2, i))
        if step < 0:
            if pending_increase:
                violations.append((3, i))
            pending_increase = True
        elif step > 0:
            pending_increase = False
    rules = {r for r, _ in violations}
    return RuleReport(1 not in rules, 2 not in rules, 3 not in rules, tuple(violations))


def transpose(w: Sequence[int], i1: int, i2: int) -> Permutation:
    """``w * (i1, i2)``: the values at positions i1 and i2 swapped."""
    n = len(w)
    if not (1 <= i1 < i2 <= n):
        raise PermutationError(f"positions ({i1}, {i2}) must satisfy 1 <= i1 < i2 <= {n}")
    w = list(w)
    w[i1 - 1], w[i2 - 1] = w[i2 - 1], w[i1 - 1]
    return tuple(w)


def is_length_cover(w: Sequence[int], i1: int, i2: int) -> bool:
    """True iff ``l(w (i1,i2)) == l(w) + 1``."""
    a, b = w[i1 - 1], w[i2 - 1]
    if a > b:
        return False
    return not any(a < w[j] < b for j in range(i1, i2 - 1))


@dataclass(frozen=True)
class MeanderPath:
    """Lattice path through ``(0, L_n), (1, L_{n-1}), ..., (n-1, L_1)``."""

    steps: str
    heights: tuple[int, ...]
    is_meander: bool = field(init=False)
    d_steps_separated_by_u: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "is_meander", bool(self.heights) and self.heights[0] == 0
                           and min(self.heights) >= 0)
        sep = True
        last = None
        for s in self.steps:
            if s == "D" and last == "D":
                sep = False
                break
            if s in "UD":
                last = s
        object.__setattr__(self, "d_steps_separated_by_u", sep)


def motzkin_path(code: Sequence[int]) -> MeanderPath:
    """Read a Lehmer code right to left as a U/D/H lattice path.

    Steps are U = (1, 1), D = (1, -1), H = (1, 0).  A height change of more
    than one has no step and raises :class:`PermutationError`; that happens
    exactly when Lehmer rule 1 or 2 fails.
    """
    heights = tuple(reversed(tuple(code)))
    steps = []
    for x, (a, b) in enumerate(zip(heights, heights[1:]), start=1):
        d = b - a
        if d == 1:
            steps.append("U")
        elif d == -1:
            steps.append("D")
        elif d == 0:
            steps.append("H")
        else:
            raise PermutationError(f"height change {d} at step {x} is not a unit step")
    return MeanderPath("".join(steps), heights)
