"""SCC decomposition and classification of Buchi automata.

The complementation framework partitions the accepting strongly connected
components into blocks and picks a specialised algorithm per block class:

* IWC  - accepting inherently weak components (every internal cycle
         accepting, or none),
* DAC  - deterministic accepting components that are not inherently weak,
* IDAC - a block of DACs that the whole automaton can only enter and
         traverse deterministically,
* NAC  - everything else.

An automaton without NACs is called an elevator automaton.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .automata import BA, Transition

__all__ = [
    "SccInfo",
    "Decomposition",
    "compute_sccs",
    "is_elevator",
    "BlockClass",
    "PartitionBlock",
    "Partitioning",
    "PartitionPolicy",
    "make_partitioning",
    "is_initial_deterministic_block",
    "delta_scc",
    "strip_extra_scc_accepting",
    "reachable_sets",
]

# is_initial_deterministic_block falls back to an exact subset-construction
# sweep; beyond this many states we conservatively classify as DAC instead.
_EXACT_IDAC_STATE_LIMIT = 24


@dataclass(frozen=True)
class SccInfo:
    """One SCC with its classification flags.

    ``index`` is the topological position (sources first).  A trivial SCC
    is a single state without a self-loop.  ``accepting`` means some
    internal transition is accepting.  ``inherently_weak`` means the
    internal cycles are all accepting or all rejecting; ``deterministic``
    means no state has two internal successors over one symbol.
    """

    index: int
    states: frozenset[int]
    trivial: bool
    accepting: bool
    inherently_weak: bool
    deterministic: bool

    @property
    def block_class(self) -> "BlockClass | None":
        """Class of this SCC when used as its own block; None if not accepting."""
        if not self.accepting:
            return None
        if self.inherently_weak:
            return BlockClass.IWC
        if self.deterministic:
            return BlockClass.DAC
        return BlockClass.NAC


@dataclass(frozen=True)
class Decomposition:
    sccs: tuple[SccInfo, ...]
    scc_of: tuple[int, ...]

    def accepting_sccs(self) -> tuple[SccInfo, ...]:
        return tuple(s for s in self.sccs if s.accepting)


def _tarjan(n_states: int, succs) -> list[list[int]]:
    """Iterative Tarjan; returns SCCs in reverse topological order."""
    index_of = [-1] * n_states
    low = [0] * n_states
    on_stack = [False] * n_states
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(n_states):
        if index_of[root] != -1:
            continue
        work = [(root, iter(succs(root)))]
        index_of[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index_of[w] == -1:
                    index_of[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(succs(w))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def compute_sccs(ba: BA) -> Decomposition:
    """Decompose into SCCs, topologically ordered sources first."""

    adjacency: list[set[int]] = [set() for _ in range(ba.n_states)]
    for src, _sym, dst, _acc in ba.edges():
        adjacency[src].add(dst)
    adj_sorted = [sorted(s) for s in adjacency]

    comps = _tarjan(ba.n_states, lambda q: adj_sorted[q])
    comps.reverse()

    scc_of = [0] * ba.n_states
    for i, comp in enumerate(comps):
        for q in comp:
            scc_of[q] = i

    # Internal edges per SCC, partitioned by whether they are accepting.
    internal: list[list[tuple[int, int, int, bool]]] = [[] for _ in comps]
    for src, sym, dst, acc in ba.edges():
        if scc_of[src] == scc_of[dst]:
            internal[scc_of[src]].append((src, sym, dst, acc))

    infos = []
    for i, comp in enumerate(comps):
        states = frozenset(comp)
        edges = internal[i]
        trivial = len(comp) == 1 and not edges
        accepting = any(acc for _, _, _, acc in edges)
        deterministic = True
        per_state_sym: set[tuple[int, int]] = set()
        for src, sym, dst, _acc in edges:
            if (src, sym) in per_state_sym:
                deterministic = False
                break
            per_state_sym.add((src, sym))
        inherently_weak = not accepting or not _has_cycle(
            states, [(s, d) for s, _y, d, acc in edges if not acc]
        )
        infos.append(
            SccInfo(
                index=i,
                states=states,
                trivial=trivial,
                accepting=accepting,
                inherently_weak=inherently_weak,
                deterministic=deterministic,
            )
        )
    return Decomposition(tuple(infos), tuple(scc_of))


def _has_cycle(states: frozenset[int], arcs: list[tuple[int, int]]) -> bool:
    """Cycle test on a subgraph (self-loops count)."""
    if any(s == d for s, d in arcs):
        return True
    nodes = sorted(states)
    pos = {q: i for i, q in enumerate(nodes)}
    adjacency: list[list[int]] = [[] for _ in nodes]
    for s, d in arcs:
        adjacency[pos[s]].append(pos[d])
    comps = _tarjan(len(nodes), lambda q: adjacency[q])
    return any(len(c) > 1 for c in comps)


def is_elevator(ba: BA, decomp: Decomposition | None = None) -> bool:
    """True iff no accepting SCC falls into the NAC class."""
    decomp = decomp or compute_sccs(ba)
    return all(s.block_class is not BlockClass.NAC for s in decomp.accepting_sccs())


class BlockClass(enum.Enum):
    IWC = "IWC"
    DAC = "DAC"
    IDAC = "IDAC"
    NAC = "NAC"


class PartitionPolicy(enum.Enum):
    DEFAULT = "default"
    PER_SCC = "per-scc"
    MERGE_ALL = "merge-all"


@dataclass(frozen=True)
class PartitionBlock:
    states: frozenset[int]
    kind: BlockClass


@dataclass(frozen=True)
class Partitioning:
    blocks: tuple[PartitionBlock, ...]

    def covered_states(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for b in self.blocks:
            out |= b.states
        return out


def make_partitioning(
    ba: BA,
    policy: PartitionPolicy = PartitionPolicy.DEFAULT,
    *,
    idac_upgrade: bool = True,
    decomp: Decomposition | None = None,
) -> Partitioning:
    """Group the accepting SCCs into ordered partition blocks.

    DEFAULT merges all IWCs into one block and all DACs into another,
    keeping each NAC separate; PER_SCC keeps every accepting SCC its own
    block; MERGE_ALL builds a single block tagged by the weakest class
    that covers all members.  A DAC block is upgraded to IDAC when the
    whole automaton can hold at most one run inside it (skippable via
    idac_upgrade).  Blocks are ordered by their smallest state, which
    fixes the colour renumbering downstream.
    """
    decomp = decomp or compute_sccs(ba)
    accepting = decomp.accepting_sccs()
    blocks: list[PartitionBlock] = []

    def dac_kind(states: frozenset[int]) -> BlockClass:
        if idac_upgrade and is_initial_deterministic_block(ba, states):
            return BlockClass.IDAC
        return BlockClass.DAC

    if policy is PartitionPolicy.PER_SCC:
        for s in accepting:
            kind = s.block_class
            if kind is BlockClass.DAC:
                kind = dac_kind(s.states)
            blocks.append(PartitionBlock(s.states, kind))
    elif policy is PartitionPolicy.DEFAULT:
        weak = [s.states for s in accepting if s.block_class is BlockClass.IWC]
        det = [s.states for s in accepting if s.block_class is BlockClass.DAC]
        if weak:
            blocks.append(PartitionBlock(frozenset().union(*weak), BlockClass.IWC))
        if det:
            states = frozenset().union(*det)
            blocks.append(PartitionBlock(states, dac_kind(states)))
        for s in accepting:
            if s.block_class is BlockClass.NAC:
                blocks.append(PartitionBlock(s.states, BlockClass.NAC))
    elif policy is PartitionPolicy.MERGE_ALL:
        if accepting:
            states = frozenset().union(*(s.states for s in accepting))
            classes = {s.block_class for s in accepting}
            if classes == {BlockClass.IWC}:
                kind = BlockClass.IWC
            elif classes == {BlockClass.DAC}:
                kind = dac_kind(states)
            else:
                # A mixed-class union satisfies no specialised condition.
                kind = BlockClass.NAC
            blocks.append(PartitionBlock(states, kind))
    else:
        raise ValueError(f"unknown partition policy: {policy!r}")

    blocks.sort(key=lambda b: min(b.states))
    return Partitioning(tuple(blocks))


def is_initial_deterministic_block(ba: BA, block: Iterable[int]) -> bool:
    """Can the automaton ever hold more than one run inside the block?

    True iff along every input the subset construction of the automaton
    contains at most one state of the block.  A cheap structural check
    (at most one transition target inside the block per symbol, anywhere)
    answers most instances; otherwise the reachable subsets are swept
    exactly, which is exponential but bounded, and past the size limit we
    conservatively answer False.
    """
    block = frozenset(block)
    if len(ba.initial & block) > 1:
        return False
    internal_det = True
    seen_pairs: set[tuple[int, int]] = set()
    for src, sym, dst, _acc in ba.edges():
        if src in block and dst in block:
            if (src, sym) in seen_pairs:
                internal_det = False
                break
            seen_pairs.add((src, sym))
    if not internal_det:
        return False
    quick = True
    for a in ba.alphabet.symbols():
        targets = {dst for src, sym, dst, _acc in ba.edges() if sym == a and dst in block}
        if len(targets) > 1:
            quick = False
            break
    if quick:
        return True
    if ba.n_states > _EXACT_IDAC_STATE_LIMIT:
        return False
    seen = {ba.initial}
    work = [ba.initial]
    while work:
        H = work.pop()
        if len(H & block) > 1:
            return False
        for a in ba.alphabet.symbols():
            nxt = ba.delta(H, a)
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    return True


def delta_scc(
    ba: BA, U: Iterable[int], a: int, decomp: Decomposition | None = None
) -> frozenset[int]:
    """Successors over a that stay within the source state's SCC."""
    decomp = decomp or compute_sccs(ba)
    scc_of = decomp.scc_of
    out: set[int] = set()
    for q in U:
        for q2 in ba.succs(q, a):
            if scc_of[q2] == scc_of[q]:
                out.add(q2)
    return frozenset(out)


def strip_extra_scc_accepting(ba: BA, decomp: Decomposition | None = None) -> BA:
    """Drop accepting marks from transitions that leave their SCC.

    Such marks never lie on a cycle and cannot influence the language;
    the complementation constructions assume they are gone.
    """
    decomp = decomp or compute_sccs(ba)
    scc_of = decomp.scc_of
    if all(scc_of[src] == scc_of[dst] for src, _a, dst in ba.acc_edge_triples()):
        return ba
    trans = [
        Transition(
            src,
            sym,
            dst,
            frozenset((0,)) if acc and scc_of[src] == scc_of[dst] else frozenset(),
        )
        for src, sym, dst, acc in ba.edges()
    ]
    return BA(ba.n_states, ba.alphabet, trans, ba.initial)


def reachable_sets(ba: BA) -> tuple[frozenset[int], ...]:
    """reach(q) for every state, including q itself."""
    adjacency: list[set[int]] = [set() for _ in range(ba.n_states)]
    for src, _sym, dst, _acc in ba.edges():
        adjacency[src].add(dst)
    out = []
    for q in range(ba.n_states):
        seen = {q}
        work = [q]
        while work:
            v = work.pop()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    work.append(w)
        out.append(frozenset(seen))
    return tuple(out)
