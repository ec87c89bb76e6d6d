import numpy as np
import pytest

from swapmc import (
    BipartiteDegreeSequence,
    BipartiteRealization,
    DirectedDegreeBiSequence,
    IllegalMoveError,
    InfeasibleSequenceError,
    SwapMove,
    construct_bipartite,
    construct_directed,
    from_bipartite_representation,
    hamming_distance,
    to_bipartite_representation,
    try_c4_swap,
    try_c6_swap,
)

DIAG3 = tuple((i, i) for i in range(3))


def test_construct_bipartite_matching():
    r = construct_bipartite(BipartiteDegreeSequence((1, 1), (1, 1)))
    assert sorted(r.edges()) in ([(0, 0), (1, 1)], [(0, 1), (1, 0)])


def test_construct_bipartite_with_forbidden_diagonal():
    seq = BipartiteDegreeSequence((1, 1, 1), (1, 1, 1))
    r = construct_bipartite(seq, DIAG3)
    # a derangement permutation matrix
    assert all(u != v for u, v in r.edges())
    r.validate()


def test_construct_bipartite_margins():
    seq = BipartiteDegreeSequence((2, 1, 1), (2, 1, 1))
    r = construct_bipartite(seq)
    assert tuple(r.matrix.sum(axis=1).tolist()) == (2, 1, 1)
    assert tuple(r.matrix.sum(axis=0).tolist()) == (2, 1, 1)


def test_construct_infeasible_is_distinct_error():
    with pytest.raises(InfeasibleSequenceError):
        construct_bipartite(BipartiteDegreeSequence((2,), (2,)))
    with pytest.raises(InfeasibleSequenceError):
        # perfect matching demanded but one position forbidden on a 1x1 grid
        construct_bipartite(BipartiteDegreeSequence((1,), (1,)), ((0, 0),))
    with pytest.raises(InfeasibleSequenceError):
        construct_directed(DirectedDegreeBiSequence((2, 0), (0, 2)))


def test_construct_directed_examples():
    tri = construct_directed(DirectedDegreeBiSequence((1, 1, 1), (1, 1, 1)))
    arcs = set(tri.arcs())
    assert arcs in ({(0, 1), (1, 2), (2, 0)}, {(0, 2), (1, 0), (2, 1)})

    empty = construct_directed(DirectedDegreeBiSequence((0, 0), (0, 0)))
    assert empty.arcs() == []

    d = construct_directed(DirectedDegreeBiSequence((2, 1, 1), (1, 2, 1)))
    assert tuple(d.matrix.sum(axis=1).tolist()) == (2, 1, 1)
    assert tuple(d.matrix.sum(axis=0).tolist()) == (1, 2, 1)


def test_representation_of_triangle():
    d = construct_directed(DirectedDegreeBiSequence((1, 1, 1), (1, 1, 1)))
    b = to_bipartite_representation(d)
    assert b.forbidden == DIAG3
    assert set(b.edges()) == set(d.arcs())
    assert from_bipartite_representation(b) == d


def test_representation_round_trip_random():
    rng = np.random.default_rng(42)
    for _ in range(100):
        n = int(rng.integers(1, 6))
        M = (rng.random((n, n)) < 0.4).astype(np.uint8)
        np.fill_diagonal(M, 0)
        seq = DirectedDegreeBiSequence(
            tuple(M.sum(axis=1).tolist()), tuple(M.sum(axis=0).tolist())
        )
        from swapmc import DirectedRealization

        d = DirectedRealization(seq, M)
        assert from_bipartite_representation(to_bipartite_representation(d)) == d


def test_from_representation_rejects_bad_shapes():
    seq = BipartiteDegreeSequence((1, 1), (1, 1))
    r = construct_bipartite(seq)
    with pytest.raises(ValueError):
        from_bipartite_representation(r)  # no diagonal forbidden matching


def test_apply_c4_on_perfect_matching():
    seq = BipartiteDegreeSequence((1, 1), (1, 1))
    r = BipartiteRealization(seq, [[1, 0], [0, 1]])
    mv = SwapMove.c4((0, 1), (0, 1))
    r2 = r.apply_move(mv)
    assert sorted(r2.edges()) == [(0, 1), (1, 0)]
    # original untouched (copy-on-write)
    assert sorted(r.edges()) == [(0, 0), (1, 1)]
    # the inverse restores the original
    assert r2.apply_move(mv.inverse()) == r


def test_apply_c6_on_triangle_representation():
    seq = BipartiteDegreeSequence((1, 1, 1), (1, 1, 1))
    fwd = BipartiteRealization(seq, [[0, 1, 0], [0, 0, 1], [1, 0, 0]], DIAG3)
    mv = try_c6_swap(fwd, (0, 1, 2), (0, 1, 2))
    assert mv is not None and mv.kind == "c6"
    back = fwd.apply_move(mv)
    assert set(back.edges()) == {(0, 2), (1, 0), (2, 1)}
    assert back.apply_move(mv.inverse()) == fwd


def test_apply_move_rejects_illegal():
    seq = BipartiteDegreeSequence((2, 2), (2, 2))
    r = BipartiteRealization(seq, [[1, 1], [1, 1]])
    with pytest.raises(IllegalMoveError):
        r.apply_move(SwapMove.c4((0, 1), (0, 1)))  # all four are edges


def test_move_respects_forbidden():
    seq = BipartiteDegreeSequence((1, 1), (1, 1))
    r = BipartiteRealization(seq, [[1, 0], [0, 1]], ((0, 1),))
    assert try_c4_swap(r, 0, 1, 0, 1) is None
    with pytest.raises(IllegalMoveError):
        r.apply_move(SwapMove.c4((0, 1), (0, 1)))


def test_inplace_and_copy_agree():
    seq = BipartiteDegreeSequence((1, 1), (1, 1))
    r = BipartiteRealization(seq, [[1, 0], [0, 1]])
    mv = SwapMove.c4((0, 1), (0, 1))
    out_copy = r.apply_move(mv)
    out_inplace = r.copy().apply_move(mv, inplace=True)
    assert out_copy == out_inplace


def test_moves_preserve_margins_and_forbidden():
    rng = np.random.default_rng(7)
    seq = BipartiteDegreeSequence((2, 2, 2, 1), (2, 2, 2, 1))
    r = construct_bipartite(seq)
    for _ in range(200):
        i, i2 = rng.choice(4, 2, replace=False)
        j, j2 = rng.choice(4, 2, replace=False)
        mv = try_c4_swap(r, int(i), int(i2), int(j), int(j2))
        if mv is not None:
            r = r.apply_move(mv)
            r.validate()


def test_hamming_distance():
    seq = BipartiteDegreeSequence((1, 1), (1, 1))
    a = BipartiteRealization(seq, [[1, 0], [0, 1]])
    b = a.apply_move(SwapMove.c4((0, 1), (0, 1)))
    assert hamming_distance(a, a) == 0
    assert hamming_distance(a, b) == 4

    tri = BipartiteDegreeSequence((1, 1, 1), (1, 1, 1))
    x = BipartiteRealization(tri, [[0, 1, 0], [0, 0, 1], [1, 0, 0]], DIAG3)
    y = x.apply_move(try_c6_swap(x, (0, 1, 2), (0, 1, 2)))
    assert hamming_distance(x, y) == 6

    with pytest.raises(ValueError):
        hamming_distance(a, x)


def test_forbidden_must_be_partial_matching():
    seq = BipartiteDegreeSequence((1, 1), (1, 1))
    with pytest.raises(ValueError):
        BipartiteRealization(seq, [[0, 1], [1, 0]], ((0, 0), (0, 1)))


def test_switch_move_on_realization():
    seq = BipartiteDegreeSequence((1, 1), (1, 1))
    r = BipartiteRealization(seq, [[1, 0], [0, 1]])
    sw = SwapMove.switch((0, 1), (0, 1), sign=-1)  # same effect as the c4 here
    r2 = r.apply_move(sw)
    assert sorted(r2.edges()) == [(0, 1), (1, 0)]
    with pytest.raises(IllegalMoveError):
        r2.apply_move(sw)  # would leave 0/1 range
