"""Lazy swap Markov chains on realization sets, and a sampling driver.

Two kernels are provided.  The *bipartite* kernel acts on unrestricted
bipartite realizations: with probability 1/2 it holds, otherwise it draws an
unordered vertex pair from each class and performs the unique alternating
c4-swap on those four vertices when one exists.  The one-step probability to
any neighbour is therefore ``1 / (2 C(n,2) C(m,2))``.

The *restricted* (directed) kernel acts on realizations carrying a forbidden
partial matching, e.g. the diagonal of a digraph's bipartite representation:
it holds with probability 1/2, proposes a c4-swap from a 2+2 vertex draw with
probability 1/4, and with the remaining 1/4 draws 3+3 vertices, checks that
they pair into three forbidden positions, and performs the c6-swap when the
induced hexagon alternates.  One-step probabilities are
``1/4 / (C(n,2) C(m,2))`` to a c4-neighbour and ``1/4 / (C(n,3) C(m,3))`` to
a c6-neighbour.  Both kernels are symmetric, so the uniform distribution on
the realization set is stationary.

RNG stream contract (bit-reproducibility): every step consumes, in order,

* one ``rng.random()`` draw deciding the branch (omitted when ``lazy`` is
  disabled for the bipartite kernel);
* for a c4 proposal, four ``rng.integers`` draws selecting the unordered row
  pair and column pair (i, then j over the remaining indices, per class);
* for a c6 proposal, six ``rng.integers`` draws selecting unordered triples.

Any generator with ``random`` / ``integers`` works; the package uses
``numpy.random.default_rng`` (PCG64) and derives independent per-chain
streams with ``numpy.random.SeedSequence(seed).spawn``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .degrees import DirectedDegreeBiSequence
from .realization import (
    BipartiteRealization,
    SwapMove,
    construct_bipartite,
    construct_directed,
    to_bipartite_representation,
    try_c4_swap,
    try_c6_swap,
)

__all__ = [
    "ChainConfig",
    "StepOutcome",
    "ChainStats",
    "SampleResult",
    "step_bipartite",
    "step_directed",
    "sample",
    "derive_chain_seeds",
]

CHAIN_KINDS = ("bipartite", "directed")


@dataclass(frozen=True)
class ChainConfig:
    """Sampling parameters.

    ``burn_in=None`` selects the default heuristic ``10 * |E| * max(n, m)``.
    This is NOT a rigorous mixing bound -- the chains are known to mix in
    polynomial time under the degree-spread conditions of
    :mod:`swapmc.conditions`, but no usable constants exist; calibrate with
    :func:`swapmc.oracle.tv_curve` on small instances when in doubt.
    """

    seed: int
    samples: int
    burn_in: int | None = None
    thinning: int = 1
    chain_kind: str = "bipartite"
    lazy: bool = True

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.thinning < 1:
            raise ValueError("thinning must be >= 1")
        if self.burn_in is not None and self.burn_in < 0:
            raise ValueError("burn_in must be >= 0")
        if self.chain_kind not in CHAIN_KINDS:
            raise ValueError(f"chain_kind must be one of {CHAIN_KINDS}")


@dataclass(frozen=True)
class StepOutcome:
    moved: bool
    move: SwapMove | None
    reason: str  # "lazy" | "proposal_illegal" | "applied_c4" | "applied_c6"


@dataclass
class ChainStats:
    """Acceptance statistics accumulated over chain steps."""

    steps: int = 0
    lazy: int = 0
    illegal: int = 0
    applied_c4: int = 0
    applied_c6: int = 0

    def record(self, outcome: StepOutcome) -> None:
        self.steps += 1
        if outcome.reason == "lazy":
            self.lazy += 1
        elif outcome.reason == "proposal_illegal":
            self.illegal += 1
        elif outcome.reason == "applied_c4":
            self.applied_c4 += 1
        else:
            self.applied_c6 += 1

    def as_dict(self) -> dict:
        return {
            "steps": self.steps,
            "lazy": self.lazy,
            "proposal_illegal": self.illegal,
            "applied_c4": self.applied_c4,
            "applied_c6": self.applied_c6,
        }


def _draw_pair(rng, n: int) -> tuple[int, int]:
    """Uniform unordered pair of distinct indices in range(n); two draws."""
    i = int(rng.integers(0, n))
    j = int(rng.integers(0, n - 1))
    if j >= i:
        j += 1
    return i, j


def _draw_triple(rng, n: int) -> tuple[int, int, int]:
    """Uniform unordered triple of distinct indices in range(n); three draws."""
    i, j = _draw_pair(rng, n)
    a, b = (i, j) if i < j else (j, i)
    k = int(rng.integers(0, n - 2))
    if k >= a:
        k += 1
    if k >= b:
        k += 1
    return i, j, k


def step_bipartite(
    r: BipartiteRealization, rng, *, lazy: bool = True, inplace: bool = False
) -> tuple[BipartiteRealization, StepOutcome]:
    """One step of the bipartite kernel; requires an empty forbidden set."""
    if r.forbidden:
        raise ValueError("bipartite kernel requires an empty forbidden set")
    if r.n < 2 or r.m < 2:
        raise ValueError("bipartite kernel needs at least two vertices per class")
    if lazy and rng.random() < 0.5:
        return r, StepOutcome(False, None, "lazy")
    u1, u2 = _draw_pair(rng, r.n)
    v1, v2 = _draw_pair(rng, r.m)
    mv = try_c4_swap(r, u1, u2, v1, v2)
    if mv is None:
        return r, StepOutcome(False, None, "proposal_illegal")
    return r.apply_move(mv, inplace=inplace), StepOutcome(True, mv, "applied_c4")


def step_directed(
    r: BipartiteRealization, rng, *, lazy: bool = True, inplace: bool = False
) -> tuple[BipartiteRealization, StepOutcome]:
    """One step of the restricted kernel (c4 + c6 branches).

    ``r`` must carry a non-empty forbidden partial matching -- the diagonal
    when it represents a digraph.  With fewer than three vertices per class
    the c6 branch keeps its proposal mass but always rejects.
    """
    if not r.forbidden:
        raise ValueError("restricted kernel requires a forbidden matching")
    if r.n < 2 or r.m < 2:
        raise ValueError("restricted kernel needs at least two vertices per class")
    x = rng.random()
    if lazy:
        if x < 0.5:
            return r, StepOutcome(False, None, "lazy")
        use_c4 = x < 0.75
    else:
        use_c4 = x < 0.5
    if use_c4:
        u1, u2 = _draw_pair(rng, r.n)
        v1, v2 = _draw_pair(rng, r.m)
        mv = try_c4_swap(r, u1, u2, v1, v2)
        if mv is None:
            return r, StepOutcome(False, None, "proposal_illegal")
        return r.apply_move(mv, inplace=inplace), StepOutcome(True, mv, "applied_c4")
    if r.n < 3 or r.m < 3:
        return r, StepOutcome(False, None, "proposal_illegal")
    us = _draw_triple(rng, r.n)
    vs = _draw_triple(rng, r.m)
    mv = try_c6_swap(r, us, vs)
    if mv is None:
        return r, StepOutcome(False, None, "proposal_illegal")
    return r.apply_move(mv, inplace=inplace), StepOutcome(True, mv, "applied_c6")


@dataclass
class SampleResult:
    realizations: list = field(default_factory=list)
    stats: ChainStats = field(default_factory=ChainStats)


def default_burn_in(r: BipartiteRealization) -> int:
    return 10 * int(r.matrix.sum()) * max(r.n, r.m)


def initial_state(seq, forbidden=(), chain_kind: str = "bipartite"):
    """Deterministic starting realization for a sampling run."""
    if isinstance(seq, DirectedDegreeBiSequence):
        if chain_kind != "directed":
            raise ValueError("directed bi-sequences require chain_kind='directed'")
        return to_bipartite_representation(construct_directed(seq))
    r = construct_bipartite(seq, forbidden)
    if chain_kind == "bipartite" and r.forbidden:
        raise ValueError("bipartite kernel requires an empty forbidden set")
    if chain_kind == "directed" and not r.forbidden:
        raise ValueError("restricted kernel requires a forbidden matching")
    return r


def sample(seq, forbidden=(), config: ChainConfig | None = None, rng=None) -> SampleResult:
    """Run one chain: burn in, then emit states separated by thinning steps.

    The first retained state is the one reached right after burn-in, so
    ``burn_in=0`` emits the deterministic initial realization first.
    Identical configs produce bit-identical output.  ``rng`` overrides the
    generator derived from ``config.seed`` (used for multi-chain runs).
    """
    if config is None:
        raise ValueError("a ChainConfig is required")
    r = initial_state(seq, forbidden, config.chain_kind)
    step = step_directed if config.chain_kind == "directed" else step_bipartite
    if rng is None:
        rng = np.random.default_rng(config.seed)
    stats = ChainStats()
    burn = config.burn_in if config.burn_in is not None else default_burn_in(r)
    for _ in range(burn):
        r, out = step(r, rng, lazy=config.lazy, inplace=True)
        stats.record(out)
    result = SampleResult(stats=stats)
    for k in range(config.samples):
        if k:
            for _ in range(config.thinning):
                r, out = step(r, rng, lazy=config.lazy, inplace=True)
                stats.record(out)
        result.realizations.append(r.copy())
    return result


def derive_chain_seeds(seed: int, count: int) -> list[int]:
    """Deterministic per-chain seeds for independent parallel chains.

    Chain ``i`` receives the 64-bit state generated by the ``i``-th child of
    ``numpy.random.SeedSequence(seed)``, so streams are independent and the
    derivation is part of the reproducibility contract.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]
