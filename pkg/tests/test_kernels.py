import os
import subprocess
import sys

import numpy as np
import pytest

from schubsem import kernels
from schubsem._accel import HAS_NUMBA, backend
from schubsem.perm import contains_pattern, lehmer_code, perm_array
from schubsem.pipedream import PipeDream, permutation_of

PATTERNS = [(1, 3, 2), (3, 1, 2), (1, 4, 3, 2), (3, 2, 1), (2, 3, 1), (1,), (2, 1)]


def random_grids(rng, n, m):
    mask = np.add.outer(np.arange(n), np.arange(n)) < n - 1
    return (rng.random((m, n, n)) < 0.4).astype(np.uint8) * mask


@pytest.mark.parametrize("n", range(1, 8))
def test_lehmer_codes_agree(n):
    P = perm_array(n)
    want = np.array([lehmer_code(tuple(r)) for r in P]).reshape(-1, n)
    assert (kernels.lehmer_codes(P) == want).all()
    assert (kernels.lehmer_codes_numpy(P) == want).all()


@pytest.mark.parametrize("p", PATTERNS)
def test_patterns_agree(p):
    for n in range(1, 8):
        P = perm_array(n)
        a = kernels.contains_pattern_batch(P, p)
        b = kernels.contains_pattern_numpy(P, p)
        assert (a == b).all()
        if n <= 6:
            assert a.tolist() == [contains_pattern(tuple(r), p) for r in P]


def test_trace_agree():
    rng = np.random.default_rng(5)
    for n in range(1, 8):
        G = random_grids(rng, n, 200)
        pa, ra = kernels.trace_grids(G)
        pb, rb = kernels.trace_grids_numpy(G)
        assert (pa == pb).all() and (ra == rb).all()
        for g, w in zip(G[:20], pa[:20]):
            cells = [(int(r) + 1, int(c) + 1) for r, c in zip(*np.nonzero(g))]
            assert permutation_of(PipeDream(n, cells)) == tuple(int(v) for v in w)


def test_backend_reports_flag():
    assert backend() == ("numba" if HAS_NUMBA else "numpy")


def test_env_flag_forces_numpy():
    code = "from schubsem._accel import backend; print(backend())"
    env = dict(os.environ, SCHUBSEM_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
