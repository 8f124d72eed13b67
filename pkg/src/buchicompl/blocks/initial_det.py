"""Complementation of initial deterministic blocks into co-Buchi form.

When the whole automaton can hold at most one run inside a deterministic
block, it suffices to follow that single run and flag its accepting
transitions: a word belongs to the complement iff the flag is raised
only finitely often (a Fin condition).  The macrostate is the block
state currently visited, or None while no run is inside the block.
"""

from __future__ import annotations

from ..acceptance import Acc, Fin
from .base import COLOUR0, NOCOLOUR, BlockAlgorithm, RRBlockAlgorithm

__all__ = ["BlockConditionError", "InitialDetBlock", "InitialDetBlockRR"]


class BlockConditionError(Exception):
    """The tracked block held several runs at once; the block was
    misclassified as initial deterministic."""


class InitialDetBlock(BlockAlgorithm):
    def initial(self):
        inside = self.ba.initial & self.block
        return [self._only(inside)]

    def _only(self, inside: frozenset[int]):
        if len(inside) > 1:
            raise BlockConditionError(
                f"block {sorted(self.block)} reached as {sorted(inside)}"
            )
        return next(iter(inside)) if inside else None

    def step(self, H, q, a):
        qn = self._only(self.view.universe(H, a) & self.block)
        accepting = (
            q is not None and qn is not None and self.ba.is_acc_edge(q, a, qn)
        )
        return qn, (COLOUR0 if accepting else NOCOLOUR)

    def successors(self, H, M, a):
        return [self.step(H, M, a)]

    def acceptance(self) -> Acc:
        return Fin(0)

    def describe(self, M) -> str:
        return f"({M if M is not None else '-'})"


class InitialDetBlockRR(RRBlockAlgorithm):
    """Round-robin wrapper: behaviour is mode-independent because there is
    nothing to sample, so the active phase lasts a single step and the
    token moves on."""

    def __init__(self, view, block):
        super().__init__(view, block)
        self._sync = InitialDetBlock(view, block)

    def initial(self):
        return [("t", q) for q in self._sync.initial()]

    def succ_passive(self, H, M, a):
        qn, colours = self._sync.step(H, M[1], a)
        return [(("t", qn), colours)]

    def succ_active(self, H, M, a):
        return self.succ_passive(H, M, a)

    def lift(self, M):
        return [("a", M[1])]

    def is_active(self, M) -> bool:
        return M[0] == "a"

    def acceptance(self) -> Acc:
        return Fin(0)

    def describe(self, M) -> str:
        return self._sync.describe(M[1])
