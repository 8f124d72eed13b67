"""Transition-based omega-automata.

States are dense integers ``0..n_states-1``.  The alphabet is the set of
valuations of a tuple of atomic propositions: with k propositions there
are 2**k symbols and symbol s is the valuation whose i-th bit gives the
truth of proposition i.  A two-letter alphabet is therefore modelled with
one proposition.

Transitions carry a set of colours.  A TELA pairs such a transition
system with an Emerson-Lei acceptance condition over the colours; a Buchi
automaton (BA) is the special case with one colour and condition Inf(0),
whose accepting transitions are exactly the ones coloured {0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .acceptance import Acc, Inf, leaf_colours

__all__ = [
    "MAX_AP",
    "Alphabet",
    "Transition",
    "TELA",
    "BA",
    "complete",
    "restrict_accepting",
    "universal_tela",
]

# Guard against label expansion blow-up when ingesting HOA.
MAX_AP = 12


@dataclass(frozen=True)
class Alphabet:
    """Explicit alphabet: all valuations of a tuple of propositions."""

    ap: tuple[str, ...]

    def __post_init__(self):
        if len(self.ap) > MAX_AP:
            raise ValueError(f"too many atomic propositions ({len(self.ap)} > {MAX_AP})")
        if len(set(self.ap)) != len(self.ap):
            raise ValueError("duplicate atomic proposition names")

    @property
    def size(self) -> int:
        return 1 << len(self.ap)

    def symbols(self) -> range:
        return range(self.size)

    def symbol_name(self, sym: int) -> str:
        """Minterm over the propositions, e.g. ``a&!b``; ``t`` if no APs."""
        if not self.ap:
            return "t"
        parts = []
        for i, name in enumerate(self.ap):
            parts.append(name if sym >> i & 1 else "!" + name)
        return "&".join(parts)

    def symbol_label(self, sym: int) -> str:
        """Minterm over AP indices in HOA label syntax, e.g. ``0&!1``."""
        if not self.ap:
            return "t"
        parts = []
        for i in range(len(self.ap)):
            parts.append(str(i) if sym >> i & 1 else f"!{i}")
        return "&".join(parts)


@dataclass(frozen=True)
class Transition:
    src: int
    sym: int
    dst: int
    colours: frozenset[int] = frozenset()


@dataclass(frozen=True)
class TELA:
    """Transition-based Emerson-Lei automaton.

    ``transitions`` preserves construction order, which serialization
    relies on; two entries may share (src, sym, dst) with different colour
    sets and then denote distinct transitions.
    """

    n_states: int
    alphabet: Alphabet
    transitions: tuple[Transition, ...]
    initial: frozenset[int]
    n_colours: int
    acceptance: Acc
    state_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n_states < 0:
            raise ValueError("negative state count")
        for t in self.transitions:
            if not (0 <= t.src < self.n_states and 0 <= t.dst < self.n_states):
                raise ValueError(f"transition endpoint out of range: {t}")
            if not (0 <= t.sym < self.alphabet.size):
                raise ValueError(f"transition symbol out of range: {t}")
            if any(c < 0 or c >= self.n_colours for c in t.colours):
                raise ValueError(f"transition colour out of range: {t}")
        if any(q < 0 or q >= self.n_states for q in self.initial):
            raise ValueError("initial state out of range")
        if any(c < 0 or c >= self.n_colours for c in leaf_colours(self.acceptance)):
            raise ValueError("acceptance refers to an undeclared colour")
        if self.state_names is not None and len(self.state_names) != self.n_states:
            raise ValueError("state_names length mismatch")


class BA:
    """Nondeterministic transition-based Buchi automaton.

    Immutable after construction; successor tables are precomputed so the
    complementation constructions can query delta and delta_F cheaply.
    """

    def __init__(
        self,
        n_states: int,
        alphabet: Alphabet,
        transitions: Iterable[Transition],
        initial: Iterable[int],
    ):
        self.n_states = n_states
        self.alphabet = alphabet
        self.initial = frozenset(initial)
        if any(q < 0 or q >= n_states for q in self.initial):
            raise ValueError("initial state out of range")
        seen: set[tuple[int, int, int]] = set()
        order: list[tuple[int, int, int]] = []
        acc_edges: set[tuple[int, int, int]] = set()
        for t in transitions:
            if t.colours not in (frozenset(), frozenset((0,))):
                raise ValueError(f"BA transition colours must be {{}} or {{0}}: {t}")
            if not (0 <= t.src < n_states and 0 <= t.dst < n_states):
                raise ValueError(f"transition endpoint out of range: {t}")
            if not (0 <= t.sym < alphabet.size):
                raise ValueError(f"transition symbol out of range: {t}")
            key = (t.src, t.sym, t.dst)
            if key not in seen:
                seen.add(key)
                order.append(key)
            # Duplicates merge; a marked copy subsumes an unmarked one.
            if t.colours:
                acc_edges.add(key)
        self._edges = tuple((src, sym, dst, (src, sym, dst) in acc_edges) for src, sym, dst in order)
        self._acc_edges = frozenset(acc_edges)
        n_syms = alphabet.size
        succ = [[[] for _ in range(n_syms)] for _ in range(n_states)]
        acc_succ = [[[] for _ in range(n_syms)] for _ in range(n_states)]
        for src, sym, dst, acc in self._edges:
            succ[src][sym].append(dst)
            if acc:
                acc_succ[src][sym].append(dst)
        self._succ = tuple(tuple(frozenset(row) for row in per_state) for per_state in succ)
        self._acc_succ = tuple(
            tuple(frozenset(row) for row in per_state) for per_state in acc_succ
        )

    def edges(self) -> tuple[tuple[int, int, int, bool], ...]:
        """All transitions as (src, sym, dst, accepting) tuples."""
        return self._edges

    def succs(self, q: int, a: int) -> frozenset[int]:
        return self._succ[q][a]

    def acc_succs(self, q: int, a: int) -> frozenset[int]:
        return self._acc_succ[q][a]

    def delta(self, U: Iterable[int], a: int) -> frozenset[int]:
        out: set[int] = set()
        for q in U:
            out |= self._succ[q][a]
        return frozenset(out)

    def delta_f(self, U: Iterable[int], a: int) -> frozenset[int]:
        out: set[int] = set()
        for q in U:
            out |= self._acc_succ[q][a]
        return frozenset(out)

    def is_acc_edge(self, p: int, a: int, q: int) -> bool:
        return (p, a, q) in self._acc_edges

    def acc_edge_triples(self) -> frozenset[tuple[int, int, int]]:
        return self._acc_edges

    def is_complete(self) -> bool:
        if not self.initial:
            return False
        return all(
            self._succ[q][a] for q in range(self.n_states) for a in self.alphabet.symbols()
        )

    def to_tela(self) -> TELA:
        trans = tuple(
            Transition(src, sym, dst, frozenset((0,)) if acc else frozenset())
            for src, sym, dst, acc in self._edges
        )
        return TELA(
            n_states=self.n_states,
            alphabet=self.alphabet,
            transitions=trans,
            initial=self.initial,
            n_colours=1,
            acceptance=Inf(0),
        )

    @classmethod
    def from_tela(cls, t: TELA) -> "BA":
        """Reads a TELA as a BA; requires one colour and acceptance Inf(0).

        Duplicate (src, sym, dst) entries are merged, keeping the mark if
        any copy carries it (the Buchi language is unchanged by this).
        """
        if t.n_colours != 1 or t.acceptance != Inf(0):
            raise ValueError("not a Buchi automaton: need 1 colour and acceptance Inf(0)")
        return cls(t.n_states, t.alphabet, t.transitions, t.initial)

    def __repr__(self):
        return (
            f"BA(n_states={self.n_states}, |delta|={len(self._edges)}, "
            f"|F|={len(self._acc_edges)}, initial={sorted(self.initial)})"
        )


def complete(ba: BA) -> BA:
    """Complete a BA by adding a rejecting sink if needed.

    Missing (state, symbol) successors are routed to a fresh sink with
    self-loops on every symbol; if there is no initial state, the sink
    becomes initial.  A BA that is already complete is returned unchanged.
    The language is preserved.
    """
    missing = [
        (q, a)
        for q in range(ba.n_states)
        for a in ba.alphabet.symbols()
        if not ba.succs(q, a)
    ]
    if not missing and ba.initial:
        return ba
    sink = ba.n_states
    trans = [
        Transition(src, sym, dst, frozenset((0,)) if acc else frozenset())
        for src, sym, dst, acc in ba.edges()
    ]
    trans.extend(Transition(q, a, sink) for q, a in missing)
    trans.extend(Transition(sink, a, sink) for a in ba.alphabet.symbols())
    initial = ba.initial if ba.initial else frozenset((sink,))
    return BA(ba.n_states + 1, ba.alphabet, trans, initial)


def restrict_accepting(ba: BA, keep: Iterable[int]) -> BA:
    """Keep accepting marks only on transitions with both endpoints in keep."""
    keep = frozenset(keep)
    trans = [
        Transition(
            src,
            sym,
            dst,
            frozenset((0,)) if acc and src in keep and dst in keep else frozenset(),
        )
        for src, sym, dst, acc in ba.edges()
    ]
    return BA(ba.n_states, ba.alphabet, trans, ba.initial)


def universal_tela(alphabet: Alphabet) -> TELA:
    """One-state TELA accepting every word over the alphabet."""
    trans = tuple(Transition(0, a, 0, frozenset((0,))) for a in alphabet.symbols())
    return TELA(
        n_states=1,
        alphabet=alphabet,
        transitions=trans,
        initial=frozenset((0,)),
        n_colours=1,
        acceptance=Inf(0),
        state_names=("(true)",),
    )
