"""Acceptance criteria, one test each.

Every test appends a ``PASS``/``FAIL`` line with elapsed and budgeted wall
time; the lines are printed in the terminal summary (see conftest.py) and by
``python tests/test_acceptance.py``.
"""

import json
import random
import subprocess
import sys
import tempfile
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from schubsem.bases import (
    constructive_sem,
    elementary_poly,
    homogeneous_poly,
    sem_expand,
    sem_product,
    sem_rank_deficit,
    sem_vectors,
    single_sem_of,
)
from schubsem.perm import all_permutations, lehmer_code, lehmer_rules_check, trim
from schubsem.pipedream import enumerate_reduced, schubert_from_pipedreams
from schubsem.poly import divided_difference, monomial, swap_action
from schubsem.schubert import clear_cache, expand_schubert_basis, monk_products, schubert_divdiff
from schubsem.verify import (
    catalan,
    classify_all,
    conjecture_scan,
    fibonacci,
    theorem_scan,
)

sys.path.insert(0, str(Path(__file__).parent))
from conftest import random_poly  # noqa: E402

RESULTS: list[str] = []

# wall-clock budgets in seconds
BUDGET = {1: 1, 2: 60, 3: 120, 4: 600, 5: 120, 6: 120, 7: 30, 8: 120, 9: 120, 10: 600, 11: 600}


@contextmanager
def criterion(num: int, title: str):
    clear_cache()
    notes: list[str] = []
    start = time.perf_counter()
    status = "FAIL"
    reason = ""
    try:
        yield notes.append
        elapsed = time.perf_counter() - start
        if elapsed < BUDGET[num]:
            status = "PASS"
        else:
            reason = " (over budget)"
    except AssertionError as exc:
        reason = f" ({exc})" if str(exc) else ""
        raise
    finally:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"[{status}] {num:2d}. {title}: {elapsed:.2f} s / {BUDGET[num]} s{reason}")
        RESULTS.extend(f"      {line}" for line in notes)
    assert elapsed < BUDGET[num], f"criterion {num} took {elapsed:.1f} s, budget {BUDGET[num]} s"


def test_01_figure_reproduction():
    with criterion(1, "figure reproduction"):
        assert schubert_divdiff((4, 1, 3, 2)) == monomial((3, 0, 1)) + monomial((3, 1))
        assert len(enumerate_reduced((4, 1, 3, 2))) == 2
        w = (3, 5, 4, 2, 7, 8, 6, 1)
        a = (0, 1, 3, 0, 0, 2, 7)
        assert schubert_divdiff(w) == sem_product(a)
        assert sem_expand(schubert_divdiff(w), 8).terms == {a: 1}


def test_02_cross_method_oracle():
    with criterion(2, "divided differences == pipe dreams on S_6") as note:
        bad = [w for w in all_permutations(6) if schubert_divdiff(w) != schubert_from_pipedreams(w)]
        note(f"720 permutations, {len(bad)} mismatches")
        assert not bad, bad[:3]


def test_03_theorem_single_monomial():
    with criterion(3, "single monomial <=> 132-avoiding <=> nonincreasing code, n <= 7") as note:
        for n in range(1, 8):
            records = classify_all(n, with_sem=False)
            th = theorem_scan(n, records, sem_max=0)
            assert th["single_monomial"]["pass"], th["single_monomial"]["counterexamples"][:3]
            count = sum(r.is_monomial for r in records)
            assert count == catalan(n), (n, count)
        note("counts 1, 2, 5, 14, 42, 132, 429 match Catalan")


def test_04_theorem_single_sem():
    with criterion(4, "single SEM <=> avoids 312,1432 <=> Lehmer rules, n <= 6") as note:
        counts = []
        for n in range(1, 7):
            records = classify_all(n, with_sem=True)
            th = theorem_scan(n, records, sem_max=6)
            assert th["single_sem"]["pass"], th["single_sem"]["counterexamples"][:3]
            assert th["lehmer_rules"]["pass"]
            counts.append(sum(bool(r.is_sem) for r in records))
        assert counts == [fibonacci(2 * n - 1) for n in range(1, 7)], counts
        note(f"counts {counts} = F_(2n-1) with F_1 = F_2 = 1")


def test_05_theorem_single_chm():
    with criterion(5, "single CHM <=> avoids 321,231, n <= 7; clearance n <= 6") as note:
        for n in range(1, 8):
            records = classify_all(n, with_sem=False)
            th = theorem_scan(n, records, sem_max=0)
            assert th["single_chm"]["pass"], th["single_chm"]["counterexamples"][:3]
            if n <= 6:
                assert th["diagonal_clearance"]["pass"], th["diagonal_clearance"]["counterexamples"][:3]
            assert sum(r.is_chm for r in records) == 2 ** (n - 1)
        note("counts match 2^(n-1)")


def test_06_monk_rule():
    with criterion(6, "Monk's rule on S_5, 1 <= k <= 4") as note:
        checked = 0
        for w in all_permutations(5):
            for k in range(1, 5):
                m = max(5, k) + 1
                exp = expand_schubert_basis(elementary_poly(k, 1) * schubert_divdiff(w, m), m)
                assert all(c == 1 for c in exp.terms.values()), (w, k)
                assert sorted(trim(u) for u in exp.terms) == monk_products(w, k), (w, k)
                checked += 1
        note(f"{checked} products")


def test_07_divided_difference_identities():
    with criterion(7, "divided-difference identities") as note:
        for i in range(1, 7):
            for k in range(1, 7):
                for j in range(0, 7):
                    de = divided_difference(elementary_poly(k, j), i)
                    dh = divided_difference(homogeneous_poly(k, j), i)
                    if i != k:
                        assert de == 0 and dh == 0, (i, k, j)
                    elif j >= 1:
                        assert de == elementary_poly(i - 1, j - 1), (i, j)
                        assert dh == homogeneous_poly(i + 1, j - 1), (i, j)
                    else:
                        assert de == 0 and dh == 0
        rng = random.Random(11)
        for _ in range(200):
            p, q = random_poly(rng), random_poly(rng)
            i = rng.randint(1, 4)
            assert divided_difference(p * q, i) == \
                divided_difference(p, i) * q + swap_action(p, i) * divided_difference(q, i)
            assert divided_difference(divided_difference(p, i), i) == 0
        note("grid 6 x 6 x 7 for e and h; 200 twisted Leibniz and dd^2 instances")


def test_08_sem_basis_soundness():
    with criterion(8, "SEM basis soundness, n <= 5") as note:
        pieces = 0
        for n in range(1, 6):
            for d in range(0, n * (n - 1) // 2 + 1):
                assert sem_rank_deficit(n, d) == 0, (n, d)
                pieces += 1
                if d <= 6:
                    for a in sem_vectors(n, d):
                        assert sem_expand(sem_product(a), n).terms == {a: 1}, a
            for w in all_permutations(n):
                exp = sem_expand(schubert_divdiff(w), n)
                assert all(isinstance(c, int) for c in exp.terms.values())
        note(f"{pieces} graded pieces full rank")


def test_09_constructive_sem():
    with criterion(9, "constructive SEM on Lehmer-rules permutations of S_6") as note:
        count = 0
        for w in all_permutations(6):
            if lehmer_rules_check(lehmer_code(w)).ok:
                a = constructive_sem(w)
                assert sem_product(a) == schubert_divdiff(w), w
                assert single_sem_of(w) == a, w
                count += 1
        note(f"{count} permutations")


def test_10_conjecture_scan():
    with criterion(10, "conjecture scan, n <= 6 (reported)") as note:
        for n in range(1, 7):
            out = conjecture_scan(n)
            found = len(out["counterexamples"])
            note(f"n={n}: {out['nonnegative']} nonnegative, {found} counterexamples")
            if found:
                note(f"COUNTEREXAMPLES at n={n}: {out['counterexamples'][:5]}")


def _scan(cache: Path, report: Path, jobs: int) -> dict:
    cmd = [sys.executable, "-m", "schubsem", "scan", "--n", "6", "--jobs", str(jobs),
           "--cache-dir", str(cache), "--report", str(report)]
    subprocess.run(cmd, check=True, capture_output=True)
    data = json.loads(report.read_text())
    data.pop("timing_ms")
    return data


def test_11_determinism():
    with criterion(11, "scan report identical across --jobs and cache states") as note:
        with tempfile.TemporaryDirectory() as tmp:
            tmp = Path(tmp)
            cold = _scan(tmp / "c1", tmp / "a.json", 1)
            warm = _scan(tmp / "c1", tmp / "b.json", 1)
            parallel = _scan(tmp / "c2", tmp / "c.json", 2)
            warm_parallel = _scan(tmp / "c1", tmp / "d.json", 2)
            assert cold == warm == parallel == warm_parallel
            blobs = {json.dumps(r, sort_keys=True) for r in (cold, warm, parallel, warm_parallel)}
            assert len(blobs) == 1
        note("cold/warm x jobs 1/2: byte-identical without timing_ms")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
