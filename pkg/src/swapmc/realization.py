"""Concrete graph states and swap moves.

A bipartite realization is an n x m 0/1 incidence matrix with prescribed row
and column sums, optionally constrained by a *forbidden partial matching*: a
set of (u, v) positions, each row and each column occurring at most once,
that may never hold an edge.  Loop-free digraphs are n x n 0/1 adjacency
matrices with zero diagonal; their bipartite representation is the square
incidence matrix with the diagonal as forbidden matching, which puts digraph
realizations in one-to-one correspondence with restricted bipartite ones.

Moves come in three kinds:

* ``c4`` -- exchange edges (ua,va), (ub,vb) for (ua,vb), (ub,va);
* ``c6`` -- exchange three edges for three non-edges around an alternating
  hexagon whose three "opposite" vertex pairs are all forbidden;
* ``switch`` -- a +-1 update on the four corners of a 2 x 2 submatrix of an
  integer matrix, preserving all margins (used by the repair machinery).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .degrees import (
    BipartiteDegreeSequence,
    DirectedDegreeBiSequence,
    kleitman_wang_arcs,
)
from .errors import IllegalMoveError, InfeasibleSequenceError

__all__ = [
    "SwapMove",
    "BipartiteRealization",
    "DirectedRealization",
    "construct_bipartite",
    "construct_directed",
    "to_bipartite_representation",
    "from_bipartite_representation",
    "try_c4_swap",
    "try_c6_swap",
    "hamming_distance",
    "canonical_forbidden",
    "partner_arrays",
]


# ---------------------------------------------------------------------------
# Forbidden partial matchings
# ---------------------------------------------------------------------------


def canonical_forbidden(forbidden, n: int, m: int) -> tuple[tuple[int, int], ...]:
    """Validate and sort a forbidden set; it must be a partial matching."""
    pairs = sorted((int(u), int(v)) for (u, v) in forbidden)
    seen_u: set[int] = set()
    seen_v: set[int] = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < m):
            raise ValueError(f"forbidden position ({u},{v}) outside {n}x{m} grid")
        if u in seen_u or v in seen_v:
            raise ValueError("forbidden positions must form a partial matching")
        seen_u.add(u)
        seen_v.add(v)
    return tuple(pairs)


def partner_arrays(
    forbidden: tuple[tuple[int, int], ...], n: int, m: int
) -> tuple[np.ndarray, np.ndarray]:
    """Per-row / per-column forbidden partner index, -1 where unconstrained."""
    fu = np.full(n, -1, dtype=np.int64)
    fv = np.full(m, -1, dtype=np.int64)
    for u, v in forbidden:
        fu[u] = v
        fv[v] = u
    return fu, fv


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SwapMove:
    """A c4-swap, c6-swap, or margin-preserving switch.

    Conventions:

    * ``c4``: ``us = (ua, ub)``, ``vs = (va, vb)``; edges (ua,va), (ub,vb)
      are deleted and (ua,vb), (ub,va) inserted.
    * ``c6``: ``us = (u1, u2, u3)``, ``vs = (v1, v2, v3)`` walk the hexagon
      u1,v1,u2,v2,u3,v3; edges (ui,vi) are deleted and (u_{i+1},vi) inserted;
      the opposite pairs (u1,v2), (u2,v3), (u3,v1) must be forbidden.
    * ``switch``: ``us = (r1, r2)``, ``vs = (c1, c2)``; ``sign`` is added at
      (r1,c1), (r2,c2) and subtracted at (r1,c2), (r2,c1).
    """

    kind: str
    us: tuple[int, ...]
    vs: tuple[int, ...]
    sign: int = 1

    @classmethod
    def c4(cls, us, vs) -> "SwapMove":
        return cls("c4", (int(us[0]), int(us[1])), (int(vs[0]), int(vs[1])))

    @classmethod
    def c6(cls, us, vs) -> "SwapMove":
        return cls(
            "c6",
            (int(us[0]), int(us[1]), int(us[2])),
            (int(vs[0]), int(vs[1]), int(vs[2])),
        )

    @classmethod
    def switch(cls, us, vs, sign: int = 1) -> "SwapMove":
        if sign not in (-1, 1):
            raise ValueError("switch sign must be +1 or -1")
        return cls("switch", (int(us[0]), int(us[1])), (int(vs[0]), int(vs[1])), sign)

    def inverse(self) -> "SwapMove":
        if self.kind == "c4":
            return SwapMove.c4(self.us, (self.vs[1], self.vs[0]))
        if self.kind == "c6":
            # Reversed traversal of the same hexagon: the inserted triple
            # becomes the deleted one and opposite pairs are preserved.
            u1, u2, u3 = self.us
            v1, v2, v3 = self.vs
            return SwapMove.c6((u1, u3, u2), (v3, v2, v1))
        return SwapMove.switch(self.us, self.vs, -self.sign)

    def positions(self) -> list[tuple[int, int]]:
        """All matrix cells touched by the move."""
        if self.kind == "c6":
            u1, u2, u3 = self.us
            v1, v2, v3 = self.vs
            return [(u1, v1), (u2, v2), (u3, v3), (u2, v1), (u3, v2), (u1, v3)]
        (ua, ub), (va, vb) = self.us, self.vs
        return [(ua, va), (ub, vb), (ua, vb), (ub, va)]


# ---------------------------------------------------------------------------
# Bipartite realizations
# ---------------------------------------------------------------------------


class BipartiteRealization:
    """A 0/1 incidence matrix realizing a bipartite degree sequence.

    Value-semantic: ``apply_move`` returns a fresh realization by default;
    the sampler's hot loop uses ``inplace=True``.  Both paths perform the
    same legality checks and produce identical states.
    """

    __slots__ = ("seq", "matrix", "forbidden", "_fu", "_fv")

    def __init__(self, seq, matrix, forbidden=(), *, validate=True, _partners=None):
        self.seq = seq
        self.matrix = np.array(matrix, dtype=np.uint8, copy=True)
        self.forbidden = canonical_forbidden(forbidden, seq.n, seq.m)
        if _partners is not None:
            self._fu, self._fv = _partners
        else:
            self._fu, self._fv = partner_arrays(self.forbidden, seq.n, seq.m)
        if validate:
            self.validate()

    # -- basic queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return self.seq.n

    @property
    def m(self) -> int:
        return self.seq.m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.matrix[u, v])

    def is_chord(self, u: int, v: int) -> bool:
        """A position that may hold an edge in some realization."""
        return self._fu[u] != v

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(self.matrix)
        return list(zip(us.tolist(), vs.tolist()))

    def key(self) -> bytes:
        """Canonical hashable identity of the state (fixed degrees/forbidden)."""
        return self.matrix.tobytes()

    def copy(self) -> "BipartiteRealization":
        return BipartiteRealization(
            self.seq,
            self.matrix,
            self.forbidden,
            validate=False,
            _partners=(self._fu, self._fv),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BipartiteRealization)
            and self.seq == other.seq
            and self.forbidden == other.forbidden
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self):
        return hash((self.seq, self.forbidden, self.key()))

    def __repr__(self):
        return (
            f"BipartiteRealization(n={self.n}, m={self.m}, "
            f"edges={int(self.matrix.sum())}, forbidden={len(self.forbidden)})"
        )

    def validate(self) -> None:
        M = self.matrix
        if M.shape != (self.seq.n, self.seq.m):
            raise ValueError(f"matrix shape {M.shape} does not match degrees")
        if not np.isin(M, (0, 1)).all():
            raise ValueError("incidence entries must be 0 or 1")
        rows = M.sum(axis=1)
        cols = M.sum(axis=0)
        if tuple(rows.tolist()) != self.seq.u_degrees:
            raise ValueError(f"row sums {rows.tolist()} != u_degrees")
        if tuple(cols.tolist()) != self.seq.v_degrees:
            raise ValueError(f"column sums {cols.tolist()} != v_degrees")
        for u, v in self.forbidden:
            if M[u, v]:
                raise ValueError(f"edge on forbidden position ({u},{v})")

    # -- moves ----------------------------------------------------------------

    def apply_move(self, mv: SwapMove, inplace: bool = False) -> "BipartiteRealization":
        """Apply a legal move; raises IllegalMoveError otherwise.

        Degree margins are preserved by construction and forbidden positions
        are never set.
        """
        target = self if inplace else self.copy()
        M = target.matrix
        if mv.kind == "c4":
            (ua, ub), (va, vb) = mv.us, mv.vs
            if ua == ub or va == vb:
                raise IllegalMoveError("c4 vertices must be distinct")
            if not (M[ua, va] and M[ub, vb]) or M[ua, vb] or M[ub, va]:
                raise IllegalMoveError("c4 positions are not alternating")
            if not (self.is_chord(ua, vb) and self.is_chord(ub, va)):
                raise IllegalMoveError("c4 would set a forbidden position")
            M[ua, va] = 0
            M[ub, vb] = 0
            M[ua, vb] = 1
            M[ub, va] = 1
        elif mv.kind == "c6":
            u1, u2, u3 = mv.us
            v1, v2, v3 = mv.vs
            if len({u1, u2, u3}) < 3 or len({v1, v2, v3}) < 3:
                raise IllegalMoveError("c6 vertices must be distinct")
            if self.is_chord(u1, v2) or self.is_chord(u2, v3) or self.is_chord(u3, v1):
                raise IllegalMoveError("c6 opposite pairs must all be forbidden")
            deleted = ((u1, v1), (u2, v2), (u3, v3))
            inserted = ((u2, v1), (u3, v2), (u1, v3))
            if not all(M[p] for p in deleted) or any(M[p] for p in inserted):
                raise IllegalMoveError("c6 hexagon is not alternating")
            for p in deleted:
                M[p] = 0
            for p in inserted:
                M[p] = 1
        elif mv.kind == "switch":
            (r1, r2), (c1, c2) = mv.us, mv.vs
            if r1 == r2 or c1 == c2:
                raise IllegalMoveError("switch corners must span two rows and columns")
            work = M.astype(np.int16)
            s = mv.sign
            work[r1, c1] += s
            work[r2, c2] += s
            work[r1, c2] -= s
            work[r2, c1] -= s
            if not np.isin(work[[r1, r1, r2, r2], [c1, c2, c1, c2]], (0, 1)).all():
                raise IllegalMoveError("switch leaves the 0/1 range")
            for u, v in ((r1, c1), (r2, c2)) if s == 1 else ((r1, c2), (r2, c1)):
                if not self.is_chord(u, v):
                    raise IllegalMoveError("switch would set a forbidden position")
            M[r1, c1] = work[r1, c1]
            M[r2, c2] = work[r2, c2]
            M[r1, c2] = work[r1, c2]
            M[r2, c1] = work[r2, c1]
        else:
            raise IllegalMoveError(f"unknown move kind {mv.kind!r}")
        return target


# ---------------------------------------------------------------------------
# Directed realizations
# ---------------------------------------------------------------------------


class DirectedRealization:
    """A loop-free digraph with prescribed out/in degrees (0/1 adjacency)."""

    __slots__ = ("seq", "matrix")

    def __init__(self, seq: DirectedDegreeBiSequence, matrix, *, validate=True):
        self.seq = seq
        self.matrix = np.array(matrix, dtype=np.uint8, copy=True)
        if validate:
            self.validate()

    @property
    def n(self) -> int:
        return self.seq.n

    def arcs(self) -> list[tuple[int, int]]:
        src, dst = np.nonzero(self.matrix)
        return list(zip(src.tolist(), dst.tolist()))

    def key(self) -> bytes:
        return self.matrix.tobytes()

    def copy(self) -> "DirectedRealization":
        return DirectedRealization(self.seq, self.matrix, validate=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirectedRealization)
            and self.seq == other.seq
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self):
        return hash((self.seq, self.key()))

    def __repr__(self):
        return f"DirectedRealization(n={self.n}, arcs={int(self.matrix.sum())})"

    def validate(self) -> None:
        n = self.seq.n
        M = self.matrix
        if M.shape != (n, n):
            raise ValueError(f"adjacency shape {M.shape} does not match n={n}")
        if not np.isin(M, (0, 1)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        if np.diagonal(M).any():
            raise ValueError("loops are not allowed")
        if tuple(M.sum(axis=1).tolist()) != self.seq.out_degrees:
            raise ValueError("row sums do not match out_degrees")
        if tuple(M.sum(axis=0).tolist()) != self.seq.in_degrees:
            raise ValueError("column sums do not match in_degrees")


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def _greedy_fill(seq: BipartiteDegreeSequence) -> np.ndarray:
    """Gale-style greedy: row by row, take the columns of largest residual."""
    caps = list(seq.v_degrees)
    M = np.zeros((seq.n, seq.m), dtype=np.uint8)
    for i, d in enumerate(seq.u_degrees):
        if d == 0:
            continue
        order = sorted(range(seq.m), key=lambda j: (-caps[j], j))
        chosen = order[:d]
        if d > seq.m or caps[chosen[-1]] <= 0:
            raise InfeasibleSequenceError(
                f"no bipartite realization: row {i} cannot place degree {d}"
            )
        for j in chosen:
            caps[j] -= 1
            M[i, j] = 1
    return M


def _flow_fill(seq: BipartiteDegreeSequence, forbidden) -> np.ndarray:
    """Exact construction avoiding a forbidden set, via max-flow."""
    n, m = seq.n, seq.m
    total = seq.edge_count
    M = np.zeros((n, m), dtype=np.uint8)
    if total == 0:
        return M
    blocked = set(forbidden)
    src, snk = 0, n + m + 1
    rows, cols, caps = [], [], []
    for i, d in enumerate(seq.u_degrees):
        rows.append(src)
        cols.append(1 + i)
        caps.append(d)
    for j, d in enumerate(seq.v_degrees):
        rows.append(1 + n + j)
        cols.append(snk)
        caps.append(d)
    for i in range(n):
        for j in range(m):
            if (i, j) not in blocked:
                rows.append(1 + i)
                cols.append(1 + n + j)
                caps.append(1)
    graph = csr_matrix((caps, (rows, cols)), shape=(snk + 1, snk + 1), dtype=np.int32)
    result = maximum_flow(graph, src, snk)
    if result.flow_value != total:
        raise InfeasibleSequenceError(
            "no realization avoids the forbidden matching "
            f"(flow {result.flow_value} < {total})"
        )
    flow = result.flow.tocoo()
    for r, c, f in zip(flow.row, flow.col, flow.data):
        if f == 1 and 1 <= r <= n and n + 1 <= c <= n + m:
            M[r - 1, c - n - 1] = 1
    return M


def construct_bipartite(
    seq: BipartiteDegreeSequence, forbidden=()
) -> BipartiteRealization:
    """Build some realization of ``seq`` avoiding ``forbidden``.

    Without forbidden positions this is the classical greedy construction;
    with a forbidden matching feasibility and construction are settled
    exactly by a unit-capacity max-flow.  Deterministic output either way.

    Raises
    ------
    InfeasibleSequenceError
        If no realization exists (reported distinctly from malformed input,
        which raises ValueError at sequence construction).
    """
    forb = canonical_forbidden(forbidden, seq.n, seq.m)
    if not seq.fits_class_sizes:
        raise InfeasibleSequenceError("a degree exceeds the opposite class size")
    matrix = _greedy_fill(seq) if not forb else _flow_fill(seq, forb)
    return BipartiteRealization(seq, matrix, forb)


def construct_directed(seq: DirectedDegreeBiSequence) -> DirectedRealization:
    """Build a loop-free realization via the Kleitman-Wang reduction."""
    arcs = kleitman_wang_arcs(seq)
    if arcs is None:
        raise InfeasibleSequenceError("bi-sequence has no loop-free realization")
    M = np.zeros((seq.n, seq.n), dtype=np.uint8)
    for i, j in arcs:
        M[i, j] = 1
    return DirectedRealization(seq, M)


# ---------------------------------------------------------------------------
# Digraph <-> restricted bipartite representation
# ---------------------------------------------------------------------------


def to_bipartite_representation(d: DirectedRealization) -> BipartiteRealization:
    """Square incidence matrix with the diagonal forbidden; arc i->j = edge (i,j).

    Vertices with zero out- or in-degree keep their (empty) row/column so
    that indices are stable under round-tripping.
    """
    seq = BipartiteDegreeSequence(d.seq.out_degrees, d.seq.in_degrees)
    diag = tuple((i, i) for i in range(d.n))
    return BipartiteRealization(seq, d.matrix, diag)


def from_bipartite_representation(b: BipartiteRealization) -> DirectedRealization:
    """Inverse of :func:`to_bipartite_representation`."""
    if b.n != b.m:
        raise ValueError("representation must be square")
    if b.forbidden != tuple((i, i) for i in range(b.n)):
        raise ValueError("representation must forbid exactly the diagonal")
    seq = DirectedDegreeBiSequence(b.seq.u_degrees, b.seq.v_degrees)
    return DirectedRealization(seq, b.matrix)


# ---------------------------------------------------------------------------
# Proposal helpers (shared by the chain kernels)
# ---------------------------------------------------------------------------


def try_c4_swap(r: BipartiteRealization, i, i2, j, j2) -> SwapMove | None:
    """The unique legal c4-swap on rows {i,i2} x columns {j,j2}, if any.

    At most one of the two pairings alternates, so the returned move is
    unique; ``None`` means the proposal is rejected.
    """
    M = r.matrix
    a, b = M[i, j], M[i2, j2]
    c, d = M[i, j2], M[i2, j]
    if a and b and not c and not d:
        if r.is_chord(i, j2) and r.is_chord(i2, j):
            return SwapMove.c4((i, i2), (j, j2))
        return None
    if c and d and not a and not b:
        if r.is_chord(i, j) and r.is_chord(i2, j2):
            return SwapMove.c4((i, i2), (j2, j))
    return None


def try_c6_swap(r: BipartiteRealization, us, vs) -> SwapMove | None:
    """The unique legal c6-swap on a 3+3 vertex choice, if any.

    The chosen u's and v's must pair into three forbidden positions (the
    forbidden matching itself provides the pairing); the hexagon's traversal
    direction is then determined and at most one direction alternates.
    """
    x, y, z = sorted(us)
    if len({x, y, z}) < 3:
        return None
    px, py, pz = (r._fu[x], r._fu[y], r._fu[z])
    if px < 0 or py < 0 or pz < 0:
        return None
    if {int(px), int(py), int(pz)} != {int(v) for v in vs} or len(set(vs)) < 3:
        return None
    M = r.matrix
    # Hexagon x, pz, y, px, z, py; opposite pairs (x,px), (y,py), (z,pz).
    if (
        M[x, pz]
        and M[y, px]
        and M[z, py]
        and not M[y, pz]
        and not M[z, px]
        and not M[x, py]
    ):
        return SwapMove.c6((x, y, z), (pz, px, py))
    if (
        M[x, py]
        and M[z, px]
        and M[y, pz]
        and not M[z, py]
        and not M[y, px]
        and not M[x, pz]
    ):
        return SwapMove.c6((x, z, y), (py, px, pz))
    return None


# ---------------------------------------------------------------------------
# Hamming distance
# ---------------------------------------------------------------------------


def _matrix_and_forbidden(obj):
    if isinstance(obj, np.ndarray):
        return obj, None
    matrix = getattr(obj, "matrix", None)
    if matrix is None:
        return np.asarray(obj), None
    return matrix, getattr(obj, "forbidden", None)


def hamming_distance(a, b) -> int:
    """Number of positions where two matrix-like states differ.

    Accepts realizations, auxiliary matrices, or plain arrays.  Forbidden
    (starred) positions are excluded from the count; if both operands carry
    a forbidden set the sets must agree.
    """
    ma, fa = _matrix_and_forbidden(a)
    mb, fb = _matrix_and_forbidden(b)
    if ma.shape != mb.shape:
        raise ValueError(f"shape mismatch: {ma.shape} vs {mb.shape}")
    if fa is not None and fb is not None and tuple(fa) != tuple(fb):
        raise ValueError("forbidden sets differ")
    diff = ma.astype(np.int16) != mb.astype(np.int16)
    for u, v in fa if fa is not None else (fb if fb is not None else ()):
        diff[u, v] = False
    return int(diff.sum())
