"""Reduced pipe dreams (rc-graphs) and ladder moves.

A pipe dream of size n is the set of cells ``(row, col)`` (1-based) holding a
cross; every other cell holds a pair of elbows.  Crosses only ever sit inside
the staircase ``row + col <= n``.  The wire entering the left edge of row i
leaves through the top of column ``w(i)``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .perm import Permutation, lehmer_code
from .poly import Exponent, Poly, trim_exponent

__all__ = [
    "PipeDream",
    "LadderMove",
    "EnumerationLimitError",
    "bottom_pipe_dream",
    "permutation_of",
    "is_reduced",
    "ladder_moves",
    "apply_ladder_move",
    "enumerate_reduced",
    "ladder_graph",
    "ladder_graph_dot",
    "weight",
    "schubert_from_pipedreams",
    "is_left_justified",
    "diagonal_clearance",
]

DEFAULT_LIMIT = 10**6


class EnumerationLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class PipeDream:
    n: int
    crossings: frozenset[tuple[int, int]]

    def __init__(self, n: int, crossings: Iterable[tuple[int, int]] = ()):
        cells = frozenset((int(r), int(c)) for r, c in crossings)
        for r, c in cells:
            if r < 1 or c < 1 or r + c > n:
                raise ValueError(f"crossing {(r, c)} lies outside the staircase of size {n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "crossings", cells)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.crossings

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.crossings))

    def row_counts(self) -> list[int]:
        counts = [0] * self.n
        for r, _ in self.crossings:
            counts[r - 1] += 1
        return counts

    def grid(self) -> np.ndarray:
        g = np.zeros((self.n, self.n), dtype=np.uint8)
        for r, c in self.crossings:
            g[r - 1, c - 1] = 1
        return g

    def to_json_obj(self) -> dict:
        return {"n": self.n, "crossings": [list(rc) for rc in self.key()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "PipeDream":
        return cls(obj["n"], (tuple(rc) for rc in obj["crossings"]))

    def render(self) -> str:
        """ASCII picture: ``+`` for a cross, ``.`` for elbows."""
        lines = []
        for r in range(1, self.n + 1):
            lines.append(" ".join("+" if (r, c) in self.crossings else "." for c in range(1, self.n + 1 - r + 1)))
        return "\n".join(lines)


@dataclass(frozen=True)
class LadderMove:
    source: tuple[int, int]
    order: int

    @property
    def target(self) -> tuple[int, int]:
        r, c = self.source
        return (r - self.order - 1, c + 1)


def bottom_pipe_dream(w: Sequence[int]) -> PipeDream:
    """Left-justified dream with ``L_i`` crosses in row i."""
    code = lehmer_code(w)
    return PipeDream(len(w), ((i, j) for i, l in enumerate(code, start=1) for j in range(1, l + 1)))


def _trace(D: PipeDream) -> tuple[Permutation, bool]:
    perms, reduced = kernels.trace_grids(D.grid()[None, :, :])
    return tuple(int(v) for v in perms[0]), bool(reduced[0])


def permutation_of(D: PipeDream) -> Permutation:
    return _trace(D)[0]


def is_reduced(D: PipeDream) -> bool:
    return _trace(D)[1]


def _is_cross(D: PipeDream, r: int, c: int) -> bool:
    return (r, c) in D.crossings


def ladder_moves(D: PipeDream) -> list[LadderMove]:
    """Every applicable ladder move, at most one per crossing.

    A cross at (i, j) with elbows at (i, j+1) climbs past k rows that have
    crosses at both j and j+1, landing at (i-k-1, j+1) where both cells are
    elbows.  Targets outside the staircase are rejected.
    """
    moves = []
    for i, j in sorted(D.crossings):
        if _is_cross(D, i, j + 1):
            continue
        r = i - 1
        while r >= 1:
            a, b = _is_cross(D, r, j), _is_cross(D, r, j + 1)
            if a and b:
                r -= 1
                continue
            if not a and not b and r + j + 1 <= D.n:
                moves.append(LadderMove((i, j), i - 1 - r))
            break
    return moves


def apply_ladder_move(D: PipeDream, move: LadderMove) -> PipeDream:
    if move.source not in D.crossings:
        raise ValueError(f"no crossing at {move.source}")
    return PipeDream(D.n, (D.crossings - {move.source}) | {move.target})


def _closure(w: Sequence[int], limit: int, edges: list | None = None) -> dict:
    start = bottom_pipe_dream(w)
    seen = {start.key(): start}
    queue = deque([start])
    while queue:
        D = queue.popleft()
        for mv in ladder_moves(D):
            E = apply_ladder_move(D, mv)
            k = E.key()
            if edges is not None:
                edges.append((D.key(), k, mv.order))
            if k not in seen:
                if len(seen) >= limit:
                    raise EnumerationLimitError(f"more than {limit} pipe dreams for {tuple(w)}")
                seen[k] = E
                queue.append(E)
    return seen


def enumerate_reduced(w: Sequence[int], limit: int = DEFAULT_LIMIT) -> list[PipeDream]:
    """All reduced pipe dreams of ``w``, by BFS from the bottom dream.

    Sorted by canonical crossing list, so the result does not depend on
    traversal order.
    """
    seen = _closure(w, limit)
    return [seen[k] for k in sorted(seen)]


def ladder_graph(w: Sequence[int], limit: int = DEFAULT_LIMIT):
    """``(dreams, edges)`` with edges ``(source_index, target_index, order)``."""
    edges: list = []
    seen = _closure(w, limit, edges)
    keys = sorted(seen)
    index = {k: i for i, k in enumerate(keys)}
    out = sorted({(index[a], index[b], k) for a, b, k in edges})
    return [seen[k] for k in keys], out


def ladder_graph_dot(w: Sequence[int], limit: int = DEFAULT_LIMIT) -> str:
    dreams, edges = ladder_graph(w, limit)
    name = "".join(map(str, w)) if len(w) <= 9 else "_".join(map(str, w))
    lines = [f'digraph "RC_{name}" {{', "  node [shape=box, fontname=monospace];"]
    for i, D in enumerate(dreams):
        label = D.render().replace("\n", "\\l") + "\\l"
        x = "*".join(f"x{r}^{k}" if k > 1 else f"x{r}" for r, k in enumerate(weight(D), start=1) if k) or "1"
        lines.append(f'  d{i} [label="{label}{x}\\l"];')
    for a, b, k in edges:
        lines.append(f'  d{a} -> d{b} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def weight(D: PipeDream) -> Exponent:
    return trim_exponent(D.row_counts())


def schubert_from_pipedreams(w: Sequence[int], limit: int = DEFAULT_LIMIT) -> Poly:
    return Poly((weight(D), 1) for D in enumerate_reduced(w, limit))


def is_left_justified(D: PipeDream) -> bool:
    counts = D.row_counts()
    return all((r, c) in D.crossings for r in range(1, D.n + 1) for c in range(1, counts[r - 1] + 1))


def diagonal_clearance(D: PipeDream) -> bool:
    """Check the diagonal rays out of a bottom pipe dream.

    For each nonempty row i the ray from (i, 1) through (i-t, 1+t) must avoid
    crosses, and so must the cells (i-t, t) just left of it.
    """
    if not is_left_justified(D):
        raise ValueError("diagonal clearance is defined for left-justified pipe dreams only")
    counts = D.row_counts()
    for i in range(1, D.n + 1):
        if not counts[i - 1]:
            continue
        for t in range(1, i):
            if (i - t, 1 + t) in D.crossings or (i - t, t) in D.crossings:
                return False
    return True
