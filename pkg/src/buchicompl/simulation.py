"""Direct simulation pruning of macrostate components.

States dominated under direct simulation by a state in a strictly later
SCC can be dropped from every reached set without changing the language
of the complement.  The Pruner computes the relation once; StepView
wraps a BA so that block algorithms see only the pruned successor sets.
"""

from __future__ import annotations

from .automata import BA
from .scc import Decomposition, compute_sccs

__all__ = ["direct_simulation", "Pruner", "StepView"]


def direct_simulation(ba: BA) -> frozenset[tuple[int, int]]:
    """Greatest direct simulation: pairs (p, q) with p simulated by q.

    Computed as a greatest fixpoint from the full relation: remove
    (p, q) when p has a transition that q cannot match with the same
    symbol and at least the same accepting mark.
    """
    n = ba.n_states
    rel = {(p, q) for p in range(n) for q in range(n)}
    changed = True
    while changed:
        changed = False
        for p in range(n):
            for q in range(n):
                if (p, q) not in rel:
                    continue
                ok = True
                for a in ba.alphabet.symbols():
                    for p2 in ba.succs(p, a):
                        acc = ba.is_acc_edge(p, a, p2)
                        if not any(
                            (p2, q2) in rel
                            and (not acc or ba.is_acc_edge(q, a, q2))
                            for q2 in ba.succs(q, a)
                        ):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    rel.discard((p, q))
                    changed = True
    return frozenset(rel)


class Pruner:
    """Removes states dominated by a simulator in a strictly later SCC."""

    def __init__(self, ba: BA, decomp: Decomposition | None = None):
        decomp = decomp or compute_sccs(ba)
        sim = direct_simulation(ba)
        scc_of = decomp.scc_of
        # p is dominated by q: q simulates p and sits strictly deeper in
        # the SCC order, so q's runs outlive p's.
        self._dominated = frozenset(
            (p, q) for (p, q) in sim if scc_of[p] < scc_of[q]
        )

    def prune(self, S: frozenset[int]) -> frozenset[int]:
        dropped = {
            p for p in S if any(q != p and (p, q) in self._dominated for q in S)
        }
        return S - dropped if dropped else S


class StepView:
    """Successor queries restricted to the pruned reachable universe.

    universe(H, a) is the pruned set of all successors of a macrostate's
    reached set; the per-block delta variants intersect with it so every
    algorithm sees the same trimmed automaton.  With pruning disabled the
    view is the identity.
    """

    def __init__(
        self,
        ba: BA,
        *,
        pruning: bool = True,
        decomp: Decomposition | None = None,
    ):
        self.ba = ba
        self.decomp = decomp or compute_sccs(ba)
        self._pruner = Pruner(ba, self.decomp) if pruning else None
        self._universe_cache: dict[tuple[frozenset[int], int], frozenset[int]] = {}

    def universe(self, H: frozenset[int], a: int) -> frozenset[int]:
        key = (H, a)
        got = self._universe_cache.get(key)
        if got is None:
            got = self.ba.delta(H, a)
            if self._pruner is not None:
                got = self._pruner.prune(got)
            self._universe_cache[key] = got
        return got

    def initial(self) -> frozenset[int]:
        I = self.ba.initial
        return self._pruner.prune(I) if self._pruner is not None else I

    def delta(self, H: frozenset[int], a: int, U: frozenset[int], P: frozenset[int]) -> frozenset[int]:
        """delta(U, a) cut to the universe and block P."""
        return self.ba.delta(U, a) & self.universe(H, a) & P

    def delta_f(self, H: frozenset[int], a: int, U: frozenset[int], P: frozenset[int]) -> frozenset[int]:
        return self.ba.delta_f(U, a) & self.universe(H, a) & P

    def delta_scc(self, H: frozenset[int], a: int, U: frozenset[int], P: frozenset[int]) -> frozenset[int]:
        scc_of = self.decomp.scc_of
        uni = self.universe(H, a)
        out: set[int] = set()
        for q in U:
            for q2 in self.ba.succs(q, a):
                if scc_of[q2] == scc_of[q] and q2 in uni and q2 in P:
                    out.add(q2)
        return frozenset(out)
