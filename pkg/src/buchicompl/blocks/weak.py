"""Complementation of blocks of accepting inherently weak SCCs.

Every run that stays inside such a block forever is accepting, so the
complement must check that all runs entering the block eventually leave
it.  Macrostates are breakpoint pairs (C, B): C holds all runs currently
in the block, B the sampled runs still being watched.  When B drains,
the colour is emitted and B is resampled from C; the complement accepts
iff the colour occurs infinitely often.
"""

from __future__ import annotations

from ..acceptance import Acc, Inf
from .base import COLOUR0, NOCOLOUR, BlockAlgorithm, RRBlockAlgorithm, fmt_set

__all__ = ["WeakBlock", "WeakBlockRR"]


class WeakBlock(BlockAlgorithm):
    def initial(self):
        c0 = self.ba.initial & self.block
        return [(c0, c0)]

    def successors(self, H, M, a):
        _C, B = M
        Cn = self.view.universe(H, a) & self.block
        Bs = self.ba.delta(B, a) & Cn
        if not Bs:
            return [((Cn, Cn), COLOUR0)]
        return [((Cn, Bs), NOCOLOUR)]

    def acceptance(self) -> Acc:
        return Inf(0)

    def describe(self, M) -> str:
        C, B = M
        return f"({fmt_set(C)},{fmt_set(B)})"


class WeakBlockRR(RRBlockAlgorithm):
    """Round-robin variant: the breakpoint set exists only while active."""

    def initial(self):
        return [("t", self.ba.initial & self.block)]

    def succ_passive(self, H, M, a):
        Cn = self.view.universe(H, a) & self.block
        return [(("t", Cn), NOCOLOUR)]

    def succ_active(self, H, M, a):
        _tag, _C, B = M
        Cn = self.view.universe(H, a) & self.block
        Bn = self.ba.delta(B, a) & Cn
        if not Bn:
            return [(("t", Cn), COLOUR0)]
        return [(("a", Cn, Bn), NOCOLOUR)]

    def lift(self, M):
        _tag, C = M
        return [("a", C, C)]

    def is_active(self, M) -> bool:
        return M[0] == "a"

    def acceptance(self) -> Acc:
        return Inf(0)

    def describe(self, M) -> str:
        if M[0] == "t":
            return f"({fmt_set(M[1])})"
        return f"({fmt_set(M[1])},{fmt_set(M[2])})"
