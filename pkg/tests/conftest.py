import random

import pytest

from schubsem.poly import Poly


def random_poly(rng: random.Random, nvars: int = 5, max_deg: int = 5, terms: int = 6, span: int = 9) -> Poly:
    out = {}
    for _ in range(rng.randint(0, terms)):
        deg = rng.randint(0, max_deg)
        e = [0] * nvars
        for _ in range(deg):
            e[rng.randrange(nvars)] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + rng.randint(-span, span)
    return Poly(out)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
