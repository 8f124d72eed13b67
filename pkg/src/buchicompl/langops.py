"""Language-level operations on TELAs.

Everything here works on the explicit transition graph: product
intersection, reachability trimming, emptiness via a good-SCC check per
DNF disjunct, and lasso-word membership.  These are the tools the test
harness and the `check` command lean on, so they are written for
clarity over speed.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator, Sequence

from .acceptance import And, Inf, shift, to_dnf
from .automata import TELA, Alphabet, Transition

__all__ = [
    "intersect",
    "reduce_tela",
    "accepting_state_mask",
    "is_empty",
    "lasso_tela",
    "member_lasso",
    "enumerate_lassos",
    "lasso_signature",
]


def intersect(t1: TELA, t2: TELA) -> TELA:
    """Synchronous product; the second automaton's colours are shifted
    past the first's so both acceptance conditions survive verbatim."""
    if t1.alphabet != t2.alphabet:
        raise ValueError("alphabet mismatch")
    k1 = t1.n_colours
    succ1: dict[tuple[int, int], list[Transition]] = {}
    for t in t1.transitions:
        succ1.setdefault((t.src, t.sym), []).append(t)
    succ2: dict[tuple[int, int], list[Transition]] = {}
    for t in t2.transitions:
        succ2.setdefault((t.src, t.sym), []).append(t)

    index: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []
    work: deque = deque()

    def intern(pair: tuple[int, int]) -> int:
        got = index.get(pair)
        if got is None:
            got = len(order)
            index[pair] = got
            order.append(pair)
            work.append(pair)
        return got

    initial = [
        intern((p, q))
        for p in sorted(t1.initial)
        for q in sorted(t2.initial)
    ]
    transitions: list[Transition] = []
    while work:
        pair = work.popleft()
        src = index[pair]
        p, q = pair
        for a in t1.alphabet.symbols():
            for e1 in succ1.get((p, a), ()):
                for e2 in succ2.get((q, a), ()):
                    colours = e1.colours | frozenset(
                        c + k1 for c in e2.colours
                    )
                    transitions.append(
                        Transition(src, a, intern((e1.dst, e2.dst)), colours)
                    )
    return TELA(
        n_states=max(len(order), 1),
        alphabet=t1.alphabet,
        transitions=tuple(transitions),
        initial=frozenset(initial),
        n_colours=k1 + t2.n_colours,
        acceptance=And(t1.acceptance, shift(t2.acceptance, k1)),
    )


def _succ_map(tela: TELA) -> dict[int, list[int]]:
    succ: dict[int, list[int]] = {q: [] for q in range(tela.n_states)}
    for t in tela.transitions:
        succ[t.src].append(t.dst)
    return succ


def _sccs_of(n: int, succ: dict[int, list[int]]) -> list[list[int]]:
    # Iterative Tarjan over an arbitrary successor map.
    indices = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if indices[root] != -1:
            continue
        frames: list[tuple[int, int]] = [(root, 0)]
        while frames:
            v, pi = frames[-1]
            if pi == 0:
                indices[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            edges = succ[v]
            while pi < len(edges):
                w = edges[pi]
                pi += 1
                if indices[w] == -1:
                    frames[-1] = (v, pi)
                    frames.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], indices[w])
            if advanced:
                continue
            frames.pop()
            if frames:
                pv = frames[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == indices[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def reduce_tela(tela: TELA) -> TELA:
    """Keep the states reachable from an initial state that can still
    reach a nontrivial SCC; drop the rest."""
    succ = _succ_map(tela)
    reachable: set[int] = set()
    work = deque(sorted(tela.initial))
    reachable.update(work)
    while work:
        q = work.popleft()
        for r in succ[q]:
            if r not in reachable:
                reachable.add(r)
                work.append(r)

    self_loops = {t.src for t in tela.transitions if t.src == t.dst}
    live: set[int] = set()
    for comp in _sccs_of(tela.n_states, succ):
        if len(comp) > 1 or comp[0] in self_loops:
            live.update(comp)
    pred: dict[int, list[int]] = {q: [] for q in range(tela.n_states)}
    for t in tela.transitions:
        pred[t.dst].append(t.src)
    work = deque(sorted(live))
    while work:
        q = work.popleft()
        for p in pred[q]:
            if p not in live:
                live.add(p)
                work.append(p)

    keep = sorted(reachable & live)
    if len(keep) == tela.n_states:
        return tela
    remap = {old: new for new, old in enumerate(keep)}
    kept = set(keep)
    transitions = tuple(
        Transition(remap[t.src], t.sym, remap[t.dst], t.colours)
        for t in tela.transitions
        if t.src in kept and t.dst in kept
    )
    names = None
    if tela.state_names is not None:
        names = tuple(tela.state_names[i] for i in keep)
    return TELA(
        n_states=max(len(keep), 1),
        alphabet=tela.alphabet,
        transitions=transitions,
        initial=frozenset(remap[q] for q in tela.initial if q in kept),
        n_colours=tela.n_colours,
        acceptance=tela.acceptance,
        state_names=names,
    )


def accepting_state_mask(tela: TELA) -> tuple[bool, ...]:
    """mask[q] is True iff some accepting run starts at q.

    Per DNF disjunct (fins, infs): remove every edge carrying a Fin
    colour, find the nontrivial SCCs of what is left whose internal
    colour union covers infs, then close backwards over the full graph
    (the prefix may use any edge).
    """
    mask = [False] * tela.n_states
    pred: dict[int, list[int]] = {q: [] for q in range(tela.n_states)}
    for t in tela.transitions:
        pred[t.dst].append(t.src)

    for fins, infs in to_dnf(tela.acceptance):
        allowed = [t for t in tela.transitions if not (t.colours & fins)]
        succ: dict[int, list[int]] = {q: [] for q in range(tela.n_states)}
        for t in allowed:
            succ[t.src].append(t.dst)
        internal: dict[int, set[int]] = {}
        comp_of = {}
        comps = _sccs_of(tela.n_states, succ)
        for ci, comp in enumerate(comps):
            for q in comp:
                comp_of[q] = ci
        nontrivial = set()
        colour_union: dict[int, set[int]] = {ci: set() for ci in range(len(comps))}
        for t in allowed:
            if comp_of[t.src] == comp_of[t.dst]:
                nontrivial.add(comp_of[t.src])
                colour_union[comp_of[t.src]].update(t.colours)
        good: set[int] = set()
        for ci in nontrivial:
            if infs <= colour_union[ci]:
                good.update(comps[ci])
        work = deque(sorted(good))
        seen = set(good)
        while work:
            q = work.popleft()
            if not mask[q]:
                mask[q] = True
            for p in pred[q]:
                if p not in seen:
                    seen.add(p)
                    work.append(p)
    return tuple(mask)


def is_empty(tela: TELA) -> bool:
    mask = accepting_state_mask(tela)
    return not any(mask[q] for q in tela.initial)


def lasso_tela(
    alphabet: Alphabet, prefix: Sequence[int], loop: Sequence[int]
) -> TELA:
    """The single-word automaton for prefix . loop^omega, with every
    edge coloured 0 so it composes with `intersect`."""
    if not loop:
        raise ValueError("loop must be nonempty")
    n = len(prefix) + len(loop)
    transitions = []
    for i, a in enumerate(prefix):
        transitions.append(Transition(i, a, i + 1, frozenset((0,))))
    base = len(prefix)
    for j, a in enumerate(loop):
        dst = base + (j + 1) % len(loop)
        transitions.append(Transition(base + j, a, dst, frozenset((0,))))
    return TELA(
        n_states=n,
        alphabet=alphabet,
        transitions=tuple(transitions),
        initial=frozenset((0,)),
        n_colours=1,
        acceptance=Inf(0),
    )


def member_lasso(
    tela: TELA, prefix: Sequence[int], loop: Sequence[int]
) -> bool:
    word = lasso_tela(tela.alphabet, prefix, loop)
    return not is_empty(intersect(tela, word))


def enumerate_lassos(
    alphabet: Alphabet, max_prefix: int, max_loop: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    syms = list(alphabet.symbols())
    for plen in range(max_prefix + 1):
        for prefix in itertools.product(syms, repeat=plen):
            for llen in range(1, max_loop + 1):
                for loop in itertools.product(syms, repeat=llen):
                    yield prefix, loop


def lasso_signature(
    tela: TELA,
    lassos: Iterable[tuple[Sequence[int], Sequence[int]]],
) -> tuple[bool, ...]:
    """Batch membership for many lasso words over the same automaton.

    For each distinct loop v, take the product of the TELA with the
    |v|-state cycle reading v over all states (the prefix may land
    anywhere), compute its accepting-state mask once, and answer every
    (u, v) query with a subset walk over u from the initial states.
    """
    succ: dict[tuple[int, int], list[int]] = {}
    for t in tela.transitions:
        succ.setdefault((t.src, t.sym), []).append(t.dst)

    cache: dict[tuple[int, ...], frozenset[int]] = {}

    def loop_winners(loop: tuple[int, ...]) -> frozenset[int]:
        """States q from which reading loop^omega accepts; product state
        q*m+j means "at q with j loop letters consumed"."""
        got = cache.get(loop)
        if got is not None:
            return got
        m = len(loop)
        n = tela.n_states
        transitions = []
        for t in tela.transitions:
            for j in range(m):
                if t.sym == loop[j]:
                    transitions.append(
                        Transition(
                            t.src * m + j,
                            t.sym,
                            t.dst * m + (j + 1) % m,
                            t.colours,
                        )
                    )
        prod = TELA(
            n_states=n * m,
            alphabet=tela.alphabet,
            transitions=tuple(transitions),
            initial=frozenset(q * m for q in range(n)),
            n_colours=tela.n_colours,
            acceptance=tela.acceptance,
        )
        mask = accepting_state_mask(prod)
        got = frozenset(q for q in range(n) if mask[q * m])
        cache[loop] = got
        return got

    results = []
    for prefix, loop in lassos:
        winners = loop_winners(tuple(loop))
        cur = set(tela.initial)
        for a in prefix:
            nxt: set[int] = set()
            for q in cur:
                nxt.update(succ.get((q, a), ()))
            cur = nxt
            if not cur:
                break
        results.append(bool(cur & winners))
    return tuple(results)
