"""Top-level complement constructions.

The synchronous builder runs every block algorithm in lockstep: a
macrostate is the reached set H of the input automaton together with one
component per block, successors are the Cartesian product of the
per-block successor sets, and the per-block colours are renumbered into
disjoint ranges.  The round-robin builder instead keeps a single block
active at a time and advances a token whenever the active block's
successor falls back to its passive form.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Sequence

from .acceptance import Inf, conjoin, disjoin, shift
from .automata import BA, TELA, Transition
from .blocks.base import BlockAlgorithm, RRBlockAlgorithm, fmt_set
from .simulation import StepView

__all__ = [
    "BuildResult",
    "colour_offsets",
    "renumber",
    "mod_compl_sync",
    "mod_compl_rr",
    "add_accepting_sink",
]


@dataclass(frozen=True)
class BuildResult:
    """A complement TELA plus the macrostate key of every state.

    Keys are (H, parts) for the synchronous construction and
    (H, parts, active) for the round-robin one; key[0] is always H.
    """

    tela: TELA
    macros: tuple[Hashable, ...]


def colour_offsets(algs: Sequence) -> tuple[int, ...]:
    offsets = []
    total = 0
    for alg in algs:
        offsets.append(total)
        total += alg.n_colours
    return tuple(offsets)


def renumber(colours: frozenset[int], offset: int) -> frozenset[int]:
    return frozenset(c + offset for c in colours) if offset else colours


def _combined_acceptance(algs):
    offsets = colour_offsets(algs)
    return conjoin(
        [shift(alg.acceptance(), off) for alg, off in zip(algs, offsets)]
    )


def _merge_colours(combo, offsets) -> frozenset[int]:
    out: set[int] = set()
    for (_m, colours), off in zip(combo, offsets):
        for c in colours:
            out.add(c + off)
    return frozenset(out)


def mod_compl_sync(
    algs: Sequence[BlockAlgorithm], ba: BA, view: StepView
) -> BuildResult:
    if not algs:
        raise ValueError("need at least one block algorithm")
    offsets = colour_offsets(algs)
    H0 = view.initial()
    index: dict = {}
    order: list = []
    work: deque = deque()

    def intern(macro) -> int:
        got = index.get(macro)
        if got is None:
            got = len(order)
            index[macro] = got
            order.append(macro)
            work.append(macro)
        return got

    initial = []
    for combo in itertools.product(*(alg.initial() for alg in algs)):
        initial.append(intern((H0, combo)))

    transitions: list[Transition] = []
    seen_edges: set[Transition] = set()
    while work:
        macro = work.popleft()
        src = index[macro]
        H, parts = macro
        for a in ba.alphabet.symbols():
            Hn = view.universe(H, a)
            succ_lists = [
                alg.successors(H, m, a) for alg, m in zip(algs, parts)
            ]
            if any(not lst for lst in succ_lists):
                continue
            for combo in itertools.product(*succ_lists):
                target = (Hn, tuple(m for m, _c in combo))
                t = Transition(src, a, intern(target), _merge_colours(combo, offsets))
                if t not in seen_edges:
                    seen_edges.add(t)
                    transitions.append(t)

    names = tuple(
        "(" + fmt_set(H) + ","
        + ",".join(alg.describe(m) for alg, m in zip(algs, parts))
        + ")"
        for H, parts in order
    )
    tela = TELA(
        n_states=len(order),
        alphabet=ba.alphabet,
        transitions=tuple(transitions),
        initial=frozenset(initial),
        n_colours=sum(alg.n_colours for alg in algs),
        acceptance=_combined_acceptance(algs),
        state_names=names,
    )
    return BuildResult(tela, tuple(order))


def mod_compl_rr(
    algs: Sequence[RRBlockAlgorithm], ba: BA, view: StepView
) -> BuildResult:
    if not algs:
        raise ValueError("need at least one block algorithm")
    n = len(algs)
    offsets = colour_offsets(algs)
    H0 = view.initial()
    index: dict = {}
    order: list = []
    work: deque = deque()

    def intern(macro) -> int:
        got = index.get(macro)
        if got is None:
            got = len(order)
            index[macro] = got
            order.append(macro)
            work.append(macro)
        return got

    initial = []
    for combo in itertools.product(*(alg.initial() for alg in algs)):
        for lifted in algs[0].lift(combo[0]):
            initial.append(intern((H0, (lifted,) + combo[1:], 0)))

    transitions: list[Transition] = []
    seen_edges: set[Transition] = set()
    while work:
        macro = work.popleft()
        src = index[macro]
        H, parts, active = macro
        for a in ba.alphabet.symbols():
            Hn = view.universe(H, a)
            succ_lists = [
                algs[i].succ_active(H, parts[i], a)
                if i == active
                else algs[i].succ_passive(H, parts[i], a)
                for i in range(n)
            ]
            if any(not lst for lst in succ_lists):
                continue
            for combo in itertools.product(*succ_lists):
                colours = _merge_colours(combo, offsets)
                parts2 = [m for m, _c in combo]
                if algs[active].is_active(parts2[active]):
                    t = Transition(
                        src, a, intern((Hn, tuple(parts2), active)), colours
                    )
                    if t not in seen_edges:
                        seen_edges.add(t)
                        transitions.append(t)
                    continue
                # The active block fell back to passive: rotate the token
                # and lift the next block's component (branching).
                nxt = (active + 1) % n
                for lifted in algs[nxt].lift(parts2[nxt]):
                    parts3 = list(parts2)
                    parts3[nxt] = lifted
                    t = Transition(
                        src, a, intern((Hn, tuple(parts3), nxt)), colours
                    )
                    if t not in seen_edges:
                        seen_edges.add(t)
                        transitions.append(t)

    names = tuple(
        "(" + fmt_set(H) + ","
        + ",".join(alg.describe(m) for alg, m in zip(algs, parts))
        + f",{active})"
        for H, parts, active in order
    )
    tela = TELA(
        n_states=len(order),
        alphabet=ba.alphabet,
        transitions=tuple(transitions),
        initial=frozenset(initial),
        n_colours=sum(alg.n_colours for alg in algs),
        acceptance=_combined_acceptance(algs),
        state_names=names,
    )
    return BuildResult(tela, tuple(order))


def add_accepting_sink(result: BuildResult, ba: BA) -> BuildResult:
    """Collapse the macrostates whose reached set is empty into one
    accepting sink.

    A word leading there has no run in the input at all, so the
    complement must accept its every continuation.  The sink gets a fresh
    colour on its self-loops and the acceptance becomes alpha or Inf(k).
    Returns the result unchanged when no reached set is empty.
    """
    tela = result.tela
    empty = {i for i, macro in enumerate(result.macros) if not macro[0]}
    if not empty:
        return result
    keep = [i for i in range(tela.n_states) if i not in empty]
    remap = {old: new for new, old in enumerate(keep)}
    sink = len(keep)
    k = tela.n_colours

    transitions: list[Transition] = []
    seen: set[Transition] = set()
    for t in tela.transitions:
        if t.src in empty:
            continue
        dst = sink if t.dst in empty else remap[t.dst]
        t2 = Transition(remap[t.src], t.sym, dst, t.colours)
        if t2 not in seen:
            seen.add(t2)
            transitions.append(t2)
    for a in ba.alphabet.symbols():
        transitions.append(Transition(sink, a, sink, frozenset((k,))))

    initial = frozenset(
        sink if i in empty else remap[i] for i in tela.initial
    )
    names = None
    if tela.state_names is not None:
        names = tuple(tela.state_names[i] for i in keep) + ("(sink)",)
    out = TELA(
        n_states=sink + 1,
        alphabet=tela.alphabet,
        transitions=tuple(transitions),
        initial=initial,
        n_colours=k + 1,
        acceptance=disjoin([tela.acceptance, Inf(k)]),
        state_names=names,
    )
    macros = tuple(result.macros[i] for i in keep) + ((frozenset(), "sink"),)
    return BuildResult(out, macros)
