"""Exhaustive checks over S_n and the JSON scan report.

The scan classifies every permutation twice over: algebraically (is the
Schubert polynomial a single monomial / SEM / CHM) and combinatorially
(pattern containment, Lehmer rules, diagonal clearance), then records every
disagreement as a counterexample.  Failures are data; nothing here raises on
a failed check.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import comb
from pathlib import Path
from typing import Sequence

import numpy as np

from . import kernels
from .bases import sem_expand, single_chm_of, single_monomial_of, single_sem_of
from .perm import (
    Permutation,
    all_permutations,
    contains_pattern,
    lehmer_code,
    lehmer_rules_check,
    perm_array,
)
from .pipedream import bottom_pipe_dream, diagonal_clearance
from .poly import Poly
from .schubert import cached_items, schubert_divdiff, seed_cache

__all__ = [
    "PATTERNS",
    "ASSUMPTIONS",
    "ClassificationRecord",
    "SuiteConfig",
    "CacheError",
    "classify",
    "classify_all",
    "theorem_scan",
    "count_scan",
    "conjecture_scan",
    "run_suite",
    "report_digest",
    "load_cache",
    "write_cache",
    "catalan",
    "fibonacci",
    "meander_count",
    "EXIT_OK",
    "EXIT_CHECK_FAILED",
    "EXIT_USAGE",
    "EXIT_CONJECTURE_COUNTEREXAMPLE",
]

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CONJECTURE_COUNTEREXAMPLE = 3

PATTERNS: dict[str, Permutation] = {
    "132": (1, 3, 2),
    "312": (3, 1, 2),
    "1432": (1, 4, 3, 2),
    "321": (3, 2, 1),
    "231": (2, 3, 1),
}

ASSUMPTIONS = [
    "Meander steps are U=(1,1), D=(1,-1), H=(1,0); a down step written as (-1,1) is read as (1,-1).",
    "Fibonacci numbers use F_1 = F_2 = 1; single-SEM counts are compared with F_(2n-1), "
    "which is F_(2n) under the shifted convention F_0 = F_1 = 1.",
    "The meander count is evaluated as sum_{k=0}^{n-1} C(n-1,k) F_(n-k) with F_1 = F_2 = 1: "
    "paths through n vertices have n-1 steps, k of them H.",
    "Monk covers use the length criterion l(w t) = l(w) + 1 for a transposition t; this is a strong "
    "Bruhat cover, not a weak-order cover.",
    "Monk products embed w into S_(n+1) before applying the rule and trim trailing fixed points from the covers.",
    "Bottom pipe dream rows follow L_i = #{j > i : w(j) < w(i)}; for 1427356 the nonempty rows are 2 and 4, "
    "so a description using rows 3 and 5 is read one row lower; 473 is confirmed to be a 231 pattern.",
    "Diagonal clearance: for each nonempty row i and t >= 1, neither (i-t, 1+t) on the ray nor (i-t, t) "
    "just left of it holds a crossing.",
    "Single-SEM construction: the 'row with more crossings than the next row' test for outer crossings is "
    "applied to the dominant core (outer crossings removed), not to the full bottom pipe dream.",
]

CACHE_FORMAT = "schubsem-schubert-cache"
CACHE_VERSION = 1


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class ClassificationRecord:
    w: Permutation
    code: tuple[int, ...]
    is_monomial: bool
    is_sem: bool | None
    is_chm: bool
    sem_terms: int | None
    sem_nonneg: bool | None
    pattern_flags: dict[str, bool]
    lehmer_rules_ok: bool
    nonincreasing_code: bool
    diagonal_clearance: bool

    def to_json_obj(self) -> dict:
        d = asdict(self)
        d["w"] = list(self.w)
        d["code"] = list(self.code)
        return d


def classify(w: Sequence[int], with_sem: bool = True) -> ClassificationRecord:
    """Populate every flag for ``w``; pattern flags never look at polynomials."""
    w = tuple(w)
    code = lehmer_code(w)
    flags = {name: contains_pattern(w, p) for name, p in PATTERNS.items()}
    sem_terms = sem_nonneg = is_sem = None
    if with_sem:
        exp = sem_expand(schubert_divdiff(w), len(w))
        sem_terms = len(exp.terms)
        sem_nonneg = all(c > 0 for c in exp.terms.values())
        is_sem = single_sem_of(w) is not None
    return ClassificationRecord(
        w=w,
        code=code,
        is_monomial=single_monomial_of(w) is not None,
        is_sem=is_sem,
        is_chm=single_chm_of(w) is not None,
        sem_terms=sem_terms,
        sem_nonneg=sem_nonneg,
        pattern_flags=flags,
        lehmer_rules_ok=lehmer_rules_check(code).ok,
        nonincreasing_code=all(a >= b for a, b in zip(code, code[1:])),
        diagonal_clearance=diagonal_clearance(bottom_pipe_dream(w)),
    )


def _classify_chunk(args) -> list[ClassificationRecord]:
    n, items, with_sem = args
    seed_cache(n, {tuple(w): Poly.from_json_obj(p) for w, p in items})
    return [classify(w, with_sem) for w, _ in items]


def classify_all(n: int, with_sem: bool = True, jobs: int = 1) -> list[ClassificationRecord]:
    """Classify all of S_n, sorted by one-line word regardless of ``jobs``."""
    perms = list(all_permutations(n))
    for w in perms:
        schubert_divdiff(w)
    if jobs <= 1 or len(perms) < 64:
        records = [classify(w, with_sem) for w in perms]
    else:
        polys = cached_items(n)
        size = max(1, len(perms) // (jobs * 4))
        chunks = [
            (n, [(w, polys[w].to_json_obj()) for w in perms[i:i + size]], with_sem)
            for i in range(0, len(perms), size)
        ]
        records = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_classify_chunk, chunks):
                records.extend(part)
    return sorted(records, key=lambda r: r.w)


# -- closed forms ---------------------------------------------------------------


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def fibonacci(k: int) -> int:
    """F_k with F_1 = F_2 = 1 (and F_0 = 0)."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def meander_count(n: int) -> int:
    """Number of U/D/H meanders of n-1 steps with D steps separated by U steps."""
    if n < 1:
        return 0
    m = n - 1
    return sum(comb(m, k) * fibonacci(m - k + 1) for k in range(m + 1))


# -- pattern side, via the batch kernels --------------------------------------


def _pattern_masks(n: int) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    perms = perm_array(n)
    masks = {name: kernels.contains_pattern_batch(perms, p) for name, p in PATTERNS.items()}
    return perms, masks


def _check(name: str, records, predicate) -> dict:
    bad = []
    for r in records:
        detail = predicate(r)
        if detail:
            bad.append({"w": list(r.w), "detail": detail})
    return {"checked": len(records), "counterexamples": bad, "pass": not bad}


def theorem_scan(n: int, records: list[ClassificationRecord] | None = None,
                 sem_max: int = 6, jobs: int = 1) -> dict:
    """Check the three characterisations and the two combinatorial lemmas on S_n."""
    if records is None:
        records = classify_all(n, with_sem=n <= sem_max, jobs=jobs)
    out = {}

    def monomial(r):
        avoid = not r.pattern_flags["132"]
        if not (r.is_monomial == avoid == r.nonincreasing_code):
            return f"single monomial={r.is_monomial}, avoids 132={avoid}, nonincreasing code={r.nonincreasing_code}"
        return None

    def sem(r):
        avoid = not (r.pattern_flags["312"] or r.pattern_flags["1432"])
        if not (r.is_sem == avoid == r.lehmer_rules_ok):
            return f"single SEM={r.is_sem}, avoids 312/1432={avoid}, Lehmer rules={r.lehmer_rules_ok}"
        return None

    def chm(r):
        avoid = not (r.pattern_flags["321"] or r.pattern_flags["231"])
        if r.is_chm != avoid:
            return f"single CHM={r.is_chm}, avoids 321/231={avoid}"
        return None

    def rules(r):
        avoid = not (r.pattern_flags["312"] or r.pattern_flags["1432"])
        if r.lehmer_rules_ok != avoid:
            return f"Lehmer rules={r.lehmer_rules_ok}, avoids 312/1432={avoid}"
        return None

    def clearance(r):
        avoid = not (r.pattern_flags["321"] or r.pattern_flags["231"])
        if r.diagonal_clearance != avoid:
            return f"diagonal clearance={r.diagonal_clearance}, avoids 321/231={avoid}"
        return None

    out["single_monomial"] = _check("single_monomial", records, monomial)
    if n <= sem_max:
        out["single_sem"] = _check("single_sem", records, sem)
    else:
        out["single_sem"] = {"skipped": True, "reason": f"n = {n} exceeds the SEM ceiling {sem_max}", "pass": True}
    out["single_chm"] = _check("single_chm", records, chm)
    out["lehmer_rules"] = _check("lehmer_rules", records, rules)
    out["diagonal_clearance"] = _check("diagonal_clearance", records, clearance)

    # two independent routes to the pattern flags must agree
    _, masks = _pattern_masks(n)
    mismatched = [
        {"w": list(r.w), "detail": f"pattern {name}: scalar={r.pattern_flags[name]}, batch={bool(masks[name][i])}"}
        for i, r in enumerate(records)
        for name in PATTERNS
        if r.pattern_flags[name] != bool(masks[name][i])
    ]
    out["pattern_kernels"] = {"checked": len(records), "counterexamples": mismatched, "pass": not mismatched}
    return out


def count_scan(n: int, records: list[ClassificationRecord] | None = None, sem_max: int = 6) -> dict:
    """Brute-force class sizes against Catalan, Fibonacci and powers of two."""
    if records is None:
        records = classify_all(n, with_sem=n <= sem_max)
    _, masks = _pattern_masks(n)
    avoid_132 = int(np.count_nonzero(~masks["132"]))
    avoid_sem = int(np.count_nonzero(~(masks["312"] | masks["1432"])))
    avoid_chm = int(np.count_nonzero(~(masks["321"] | masks["231"])))

    monomial = sum(r.is_monomial for r in records)
    chm = sum(r.is_chm for r in records)
    if n <= sem_max:
        sem = sum(bool(r.is_sem) for r in records)
        sem_source = "expansion"
    else:
        sem = avoid_sem
        sem_source = "patterns"

    fib_index = 2 * n - 1
    table = {
        "monomial": monomial,
        "sem": sem,
        "sem_source": sem_source,
        "chm": chm,
        "pattern_avoiders": {"132": avoid_132, "312,1432": avoid_sem, "321,231": avoid_chm},
        "catalan": catalan(n),
        "fibonacci": fibonacci(fib_index),
        "fibonacci_index": fib_index,
        "fibonacci_convention": "F_1 = F_2 = 1",
        "power_of_two": 2 ** (n - 1),
        "meander_sum": meander_count(n),
    }
    table["matches"] = {
        "monomial_catalan": monomial == catalan(n),
        "sem_fibonacci": sem == fibonacci(fib_index),
        "chm_power_of_two": chm == 2 ** (n - 1),
        "meander_sum_fibonacci": meander_count(n) == fibonacci(fib_index),
        "monomial_patterns": monomial == avoid_132,
        "sem_patterns": sem == avoid_sem,
        "chm_patterns": chm == avoid_chm,
    }
    table["pass"] = all(table["matches"].values())
    return table


def conjecture_scan(n: int, records: list[ClassificationRecord] | None = None) -> dict:
    """Look for SEM-nonnegative Schubert polynomials that are not a single SEM."""
    if records is None:
        records = classify_all(n, with_sem=True)
    nonneg = [r for r in records if r.sem_nonneg]
    witnesses = [
        {"w": list(r.w), "sem_terms": r.sem_terms}
        for r in nonneg
        if not r.is_sem
    ]
    return {
        "checked": len(records),
        "nonnegative": len(nonneg),
        "single_sem": sum(bool(r.is_sem) for r in records),
        "counterexamples": witnesses,
        "status": "counterexample found" if witnesses else "no counterexample",
    }


# -- cache ----------------------------------------------------------------------


class CacheError(OSError):
    pass


def _cache_path(cache_dir: Path, n: int) -> Path:
    return Path(cache_dir) / f"schubert_S{n}.json"


def _payload_checksum(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def load_cache(cache_dir: Path, n: int) -> dict[Permutation, Poly] | None:
    """Read the cache for S_n; ``None`` when missing, stale or corrupt."""
    path = _cache_path(cache_dir, n)
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise CacheError(f"cannot read cache file {path}: {exc}") from exc
    except ValueError:
        log.warning("cache file %s is not valid JSON; recomputing", path)
        return None
    if not isinstance(doc, dict) or doc.get("format") != CACHE_FORMAT or doc.get("version") != CACHE_VERSION \
            or doc.get("n") != n:
        log.warning("cache file %s has an unexpected header; recomputing", path)
        return None
    payload = doc.get("polys")
    if _payload_checksum(payload) != doc.get("checksum"):
        log.warning("cache file %s failed its checksum; recomputing", path)
        return None
    try:
        return {tuple(item["w"]): Poly.from_json_obj(item["poly"]) for item in payload}
    except (KeyError, TypeError, ValueError):
        log.warning("cache file %s has malformed entries; recomputing", path)
        return None


def write_cache(cache_dir: Path, n: int, polys: dict[Permutation, Poly]) -> Path:
    cache_dir = Path(cache_dir)
    path = _cache_path(cache_dir, n)
    payload = [{"w": list(w), "poly": polys[w].to_json_obj()} for w in sorted(polys)]
    doc = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "n": n,
        "checksum": _payload_checksum(payload),
        "polys": payload,
    }
    try:
        cache_dir.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, separators=(",", ":"))
        os.replace(tmp, path)
    except OSError as exc:
        raise CacheError(f"cannot write cache file {path}: {exc}") from exc
    return path


# -- suite ------------------------------------------------------------------------

CHECKS = ("theorems", "counts", "conjecture")


@dataclass
class SuiteConfig:
    n_max: int = 6
    checks: tuple[str, ...] = CHECKS
    jobs: int = 1
    cache_dir: Path | None = None
    report_path: Path | None = None
    sem_max: int = 6
    mono_max: int = 7
    n_min: int = 1

    def __post_init__(self):
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")


def _strip_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing_ms"}


def report_digest(report: dict) -> str:
    """sha256 of the report without its timing block."""
    return _payload_checksum(_strip_timing(report))


def run_suite(config: SuiteConfig) -> dict:
    """Run the configured scans for n = n_min..n_max and return the report.

    Scans run up to ``mono_max`` (monomial/CHM/lemmas) and ``sem_max`` (SEM
    expansions, counts and conjecture use SEM data up to there).
    """
    timing: dict[str, float] = {}
    theorems: dict[str, dict] = {}
    counts: dict[str, dict] = {}
    conjecture: dict[str, dict] = {}
    cache_events: dict[str, str] = {}

    top = min(config.n_max, max(config.mono_max, config.sem_max))
    for n in range(config.n_min, top + 1):
        with_sem = n <= config.sem_max
        t0 = time.perf_counter()
        cached = load_cache(config.cache_dir, n) if config.cache_dir else None
        if cached is not None:
            seed_cache(n, cached)
            cache_events[str(n)] = "hit"
        for w in all_permutations(n):
            schubert_divdiff(w)
        t1 = time.perf_counter()
        timing[f"schubert_S{n}"] = round((t1 - t0) * 1000, 3)

        records = classify_all(n, with_sem=with_sem, jobs=config.jobs)
        t2 = time.perf_counter()
        timing[f"classify_S{n}"] = round((t2 - t1) * 1000, 3)

        if "theorems" in config.checks:
            theorems[str(n)] = theorem_scan(n, records, sem_max=config.sem_max)
        if "counts" in config.checks:
            counts[str(n)] = count_scan(n, records, sem_max=config.sem_max)
        if "conjecture" in config.checks and with_sem:
            conjecture[str(n)] = conjecture_scan(n, records)
        timing[f"checks_S{n}"] = round((time.perf_counter() - t2) * 1000, 3)

        if config.cache_dir and cached is None:
            write_cache(config.cache_dir, n, cached_items(n))
            cache_events[str(n)] = "written"

    asserted = all(sec.get("pass", True) for per_n in theorems.values() for sec in per_n.values())
    asserted = asserted and all(t["pass"] for t in counts.values())
    found = sum(len(c["counterexamples"]) for c in conjecture.values())
    if not asserted:
        code = EXIT_CHECK_FAILED
    elif found:
        code = EXIT_CONJECTURE_COUNTEREXAMPLE
    else:
        code = EXIT_OK

    report = {
        "n": config.n_max,
        "config": {
            "n_min": config.n_min,
            "n_max": config.n_max,
            "checks": sorted(config.checks),
            "sem_max": config.sem_max,
            "mono_max": config.mono_max,
        },
        "theorems": theorems,
        "counts": counts,
        "conjecture": conjecture,
        "assumptions": list(ASSUMPTIONS),
        "status": {
            "asserted_checks_pass": asserted,
            "conjecture_counterexamples": found,
            "exit_code": code,
        },
        "timing_ms": timing,
    }
    report["timing_ms"]["total"] = round(sum(timing.values()), 3)
    # cache hits only change timing; keep them out of the digest
    report["timing_ms"]["cache"] = cache_events
    if config.report_path:
        path = Path(config.report_path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        except OSError as exc:
            raise CacheError(f"cannot write report {path}: {exc}") from exc
    return report
