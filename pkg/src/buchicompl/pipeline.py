"""End-to-end complementation of a Buchi automaton.

``complement`` normalizes the input, partitions its accepting SCCs into
blocks, instantiates a partial algorithm per block, and runs them under
the selected orchestration:

* ``sync``: all blocks advance in lockstep in one product automaton.
* ``postponed``: each block is complemented on its own copy of the input
  (accepting marks restricted to that block), the pieces are trimmed and
  then intersected.
* ``rr``: one block is active at a time; the others track coarse
  passive summaries until the token reaches them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .automata import BA, TELA, complete, restrict_accepting, universal_tela
from .blocks import (
    DetBlock,
    DetBlockRR,
    InitialDetBlock,
    InitialDetBlockRR,
    RankBlockRR,
    SharedBreakpoint,
    UnionAlgorithm,
    WeakBlock,
    WeakBlockRR,
)
from .framework import add_accepting_sink, mod_compl_rr, mod_compl_sync
from .langops import intersect, reduce_tela
from .scc import (
    BlockClass,
    Decomposition,
    PartitionBlock,
    Partitioning,
    PartitionPolicy,
    compute_sccs,
    make_partitioning,
    reachable_sets,
    strip_extra_scc_accepting,
)
from .simulation import StepView

__all__ = ["ComplementOptions", "ComplementResult", "complement"]

STRATEGIES = ("sync", "postponed", "rr")
SINK_MODES = ("complete-input", "accepting-sink")

DEFAULT_RANK_CAP = 12


@dataclass(frozen=True)
class ComplementOptions:
    strategy: str = "sync"
    partition: str = "default"
    shared_breakpoint: bool = False
    sim_pruning: bool = True
    sink: str = "complete-input"
    use_idac: bool = True
    rank_cap: int = DEFAULT_RANK_CAP

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy: {self.strategy!r}")
        if self.sink not in SINK_MODES:
            raise ValueError(f"unknown sink mode: {self.sink!r}")
        PartitionPolicy(self.partition)
        if self.strategy == "rr" and self.shared_breakpoint:
            raise ValueError("shared breakpoint is not available under rr")


@dataclass(frozen=True)
class ComplementResult:
    tela: TELA
    partitioning: Partitioning
    strategy: str
    # Macrostate keys per output state; None for postponed (its states
    # come from an intersection, not a single macrostate space).
    macros: tuple[Hashable, ...] | None = None


def _sync_alg(block: PartitionBlock, view: StepView, reach, cap: int):
    if block.kind is BlockClass.IWC:
        return WeakBlock(view, block.states)
    if block.kind is BlockClass.DAC:
        return DetBlock(view, block.states)
    if block.kind is BlockClass.IDAC:
        return InitialDetBlock(view, block.states)
    return UnionAlgorithm(RankBlockRR(view, block.states, reach, cap))


def _rr_alg(block: PartitionBlock, view: StepView, reach, cap: int):
    if block.kind is BlockClass.IWC:
        return WeakBlockRR(view, block.states)
    if block.kind is BlockClass.DAC:
        return DetBlockRR(view, block.states)
    if block.kind is BlockClass.IDAC:
        return InitialDetBlockRR(view, block.states)
    return RankBlockRR(view, block.states, reach, cap)


def _shared_member(block: PartitionBlock) -> tuple[str, frozenset[int]]:
    kind = "weak" if block.kind is BlockClass.IWC else "det"
    return (kind, block.states)


def _group_for_shared(
    partitioning: Partitioning,
) -> tuple[tuple[PartitionBlock, ...], tuple[PartitionBlock, ...]]:
    """Split blocks into the breakpoint-sharing group and the rest."""
    shared = tuple(
        b
        for b in partitioning.blocks
        if b.kind in (BlockClass.IWC, BlockClass.DAC)
    )
    rest = tuple(
        b
        for b in partitioning.blocks
        if b.kind not in (BlockClass.IWC, BlockClass.DAC)
    )
    return shared, rest


def complement(
    ba: BA, options: ComplementOptions = ComplementOptions()
) -> ComplementResult:
    if options.sink == "complete-input":
        A = complete(ba)
    else:
        A = ba
    decomp = compute_sccs(A)
    # Accepting marks outside their SCC can fire only finitely often and
    # every block algorithm assumes marks are internal, so drop them.
    A = strip_extra_scc_accepting(A, decomp)
    partitioning = make_partitioning(
        A,
        PartitionPolicy(options.partition),
        idac_upgrade=options.use_idac,
        decomp=decomp,
    )
    if not partitioning.blocks:
        # No accepting SCC at all: the input is empty, its complement
        # is everything.
        return ComplementResult(
            universal_tela(A.alphabet), partitioning, options.strategy
        )

    needs_reach = any(b.kind is BlockClass.NAC for b in partitioning.blocks)
    reach = reachable_sets(A) if needs_reach else None

    if options.strategy == "postponed":
        tela = _postponed(A, partitioning, decomp, reach, options)
        return ComplementResult(tela, partitioning, options.strategy)

    view = StepView(A, pruning=options.sim_pruning, decomp=decomp)
    if options.strategy == "sync":
        if options.shared_breakpoint:
            grouped, rest = _group_for_shared(partitioning)
            algs = []
            placed = False
            for b in partitioning.blocks:
                if b in rest:
                    algs.append(_sync_alg(b, view, reach, options.rank_cap))
                elif not placed:
                    algs.append(
                        SharedBreakpoint(
                            view, tuple(_shared_member(g) for g in grouped)
                        )
                    )
                    placed = True
        else:
            algs = [
                _sync_alg(b, view, reach, options.rank_cap)
                for b in partitioning.blocks
            ]
        result = mod_compl_sync(algs, A, view)
    else:
        algs = [
            _rr_alg(b, view, reach, options.rank_cap)
            for b in partitioning.blocks
        ]
        result = mod_compl_rr(algs, A, view)

    if options.sink == "accepting-sink":
        result = add_accepting_sink(result, A)
    return ComplementResult(
        result.tela, partitioning, options.strategy, result.macros
    )


def _postponed(
    A: BA,
    partitioning: Partitioning,
    decomp: Decomposition,
    reach,
    options: ComplementOptions,
) -> TELA:
    """Complement each block against its own restriction of the input and
    intersect the trimmed pieces."""
    if options.shared_breakpoint:
        grouped, rest = _group_for_shared(partitioning)
        pieces: list[tuple] = []
        if grouped:
            union = frozenset().union(*(g.states for g in grouped))
            pieces.append(("shared", union, grouped))
        for b in rest:
            pieces.append(("plain", b.states, b))
    else:
        pieces = [("plain", b.states, b) for b in partitioning.blocks]

    out: TELA | None = None
    for tag, states, payload in pieces:
        A_i = restrict_accepting(A, states)
        # The SCC structure is untouched by mark changes, but direct
        # simulation is not, so the view is rebuilt per piece.
        view_i = StepView(A_i, pruning=options.sim_pruning, decomp=decomp)
        if tag == "shared":
            alg = SharedBreakpoint(
                view_i, tuple(_shared_member(g) for g in payload)
            )
        else:
            alg = _sync_alg(payload, view_i, reach, options.rank_cap)
        r_i = mod_compl_sync([alg], A_i, view_i)
        if options.sink == "accepting-sink":
            r_i = add_accepting_sink(r_i, A_i)
        piece = reduce_tela(r_i.tela)
        out = piece if out is None else intersect(out, piece)
    assert out is not None
    return out
