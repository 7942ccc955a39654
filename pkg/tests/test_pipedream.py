import json

import pytest

from schubsem.perm import all_permutations, avoids, lehmer_code, length
from schubsem.pipedream import (
    EnumerationLimitError,
    LadderMove,
    PipeDream,
    apply_ladder_move,
    bottom_pipe_dream,
    diagonal_clearance,
    enumerate_reduced,
    is_reduced,
    ladder_graph,
    ladder_graph_dot,
    ladder_moves,
    permutation_of,
    schubert_from_pipedreams,
    weight,
)
from schubsem.poly import Poly


def all_reduced_bruteforce(w):
    """Every reduced dream of w, by trying every subset of staircase cells of size l(w)."""
    from itertools import combinations

    n = len(w)
    cells = [(r, c) for r in range(1, n) for c in range(1, n) if r + c <= n]
    out = []
    for S in combinations(cells, length(w)):
        D = PipeDream(n, S)
        if is_reduced(D) and permutation_of(D) == tuple(w):
            out.append(D.key())
    return sorted(out)


def test_fig1_two_dreams():
    dreams = enumerate_reduced((4, 1, 3, 2))
    assert len(dreams) == 2
    assert [weight(D) for D in dreams] == [(3, 1), (3, 0, 1)]


def test_trivial_counts():
    assert len(enumerate_reduced((1,))) == 1
    assert enumerate_reduced((1,))[0].crossings == frozenset()
    assert len(enumerate_reduced((3, 1, 2))) == 1
    assert ladder_moves(bottom_pipe_dream((3, 1, 2))) == []


def test_bottom_dream_rows_follow_code():
    w = (1, 4, 2, 7, 3, 5, 6)
    D = bottom_pipe_dream(w)
    assert D.row_counts() == list(lehmer_code(w))
    assert {r for r, _ in D.crossings} == {2, 4}
    assert permutation_of(D) == w and is_reduced(D)


def test_tracing_identity_and_longest():
    assert permutation_of(PipeDream(3)) == (1, 2, 3)
    full = PipeDream(4, [(r, c) for r in range(1, 4) for c in range(1, 4) if r + c <= 4])
    assert permutation_of(full) == (4, 3, 2, 1) and is_reduced(full)


def test_non_reduced_grid():
    # wires 2 and 3 cross at (2,1) and again at (1,2)
    D = PipeDream(3, [(1, 2), (2, 1)])
    assert not is_reduced(D)
    assert is_reduced(PipeDream(3, [(1, 1), (2, 1)]))


def test_crossing_outside_staircase_rejected():
    with pytest.raises(ValueError, match="outside"):
        PipeDream(3, [(2, 2)])


def test_ladder_move_example():
    D = bottom_pipe_dream((4, 1, 3, 2))
    moves = ladder_moves(D)
    assert moves == [LadderMove((3, 1), 0)]
    E = apply_ladder_move(D, moves[0])
    assert E.crossings == frozenset({(1, 1), (1, 2), (1, 3), (2, 2)})
    assert permutation_of(E) == (4, 1, 3, 2)


def test_ladder_moves_preserve_permutation():
    for n in range(1, 6):
        for w in all_permutations(n):
            for D in enumerate_reduced(w):
                assert permutation_of(D) == w and is_reduced(D)
                assert len(D.crossings) == length(w)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumeration_complete_against_bruteforce(n):
    for w in all_permutations(n):
        assert [D.key() for D in enumerate_reduced(w)] == all_reduced_bruteforce(w)


def test_enumeration_limit():
    with pytest.raises(EnumerationLimitError):
        enumerate_reduced((1, 5, 4, 3, 2), limit=3)


def test_weight_sum_example():
    f = schubert_from_pipedreams((1, 3, 2))
    assert f == Poly({(1,): 1, (0, 1): 1})


def test_json_roundtrip():
    for D in enumerate_reduced((1, 4, 3, 2)):
        text = D.to_json()
        assert PipeDream.from_json_obj(json.loads(text)).to_json() == text


def test_ladder_graph_and_dot():
    dreams, edges = ladder_graph((1, 4, 3, 2))
    assert len(dreams) == 5
    assert all(0 <= a < 5 and 0 <= b < 5 for a, b, _ in edges)
    dot = ladder_graph_dot((1, 4, 3, 2))
    assert dot.startswith('digraph "RC_1432"') and dot.rstrip().endswith("}")
    assert dot.count("->") == len(edges)


def test_diagonal_clearance_example():
    assert not diagonal_clearance(bottom_pipe_dream((1, 4, 2, 7, 3, 5, 6)))
    assert diagonal_clearance(bottom_pipe_dream((1, 3, 2)))
    with pytest.raises(ValueError):
        diagonal_clearance(PipeDream(3, [(1, 2)]))


def test_diagonal_clearance_matches_patterns():
    for n in range(1, 7):
        for w in all_permutations(n):
            assert diagonal_clearance(bottom_pipe_dream(w)) == avoids(w, (3, 2, 1), (2, 3, 1)), w
