"""Complementation of blocks of deterministic accepting SCCs.

Runs inside such SCCs never branch, so a run is non-accepting iff it
eventually stops seeing accepting transitions ("becomes safe") or leaves
its SCC.  Macrostates (C, S, B) split the tracked runs into candidates
C, runs guessed safe S (a safe run crossing an accepting transition
kills the macrorun), and the breakpoint B.  Successors of S and B follow
SCC-internal transitions only: a run jumping between SCCs of the block
counts as leaving and entering fresh.
"""

from __future__ import annotations

from ..acceptance import Acc, Inf
from .base import COLOUR0, NOCOLOUR, BlockAlgorithm, RRBlockAlgorithm, fmt_set

__all__ = ["DetBlock", "DetBlockRR"]


class DetBlock(BlockAlgorithm):
    def initial(self):
        c0 = self.ba.initial & self.block
        return [(c0, frozenset(), c0)]

    def successors(self, H, M, a):
        _C, S, B = M
        view = self.view
        P = self.block
        if view.delta_f(H, a, S, P):
            return []
        U = view.universe(H, a) & P
        Sn = view.delta_scc(H, a, S, P)
        Cn = U - Sn
        Bs = view.delta_scc(H, a, B, P)
        out = []
        if not Bs:
            Bn = Cn
            out.append(((Cn, Sn, Cn), COLOUR0))
        else:
            Bn = Bs
            out.append(((Cn, Sn, Bs), NOCOLOUR))
        # The breakpoint runs may be declared safe when none of them takes
        # an accepting transition inside its SCC on this step.
        if not (view.delta_f(H, a, B, P) & Bs):
            S2 = Sn | Bn
            C2 = Cn - S2
            guess = ((C2, S2, C2), COLOUR0)
            if guess not in out:
                out.append(guess)
        return out

    def acceptance(self) -> Acc:
        return Inf(0)

    def describe(self, M) -> str:
        C, S, B = M
        return f"({fmt_set(C)},{fmt_set(S)},{fmt_set(B)})"


class DetBlockRR(RRBlockAlgorithm):
    """Round-robin variant.

    The passive mode tracks C and S through the full transition relation
    (runs that entered meanwhile are recaptured when the block next turns
    active, since the active candidate set is rebuilt from H).
    """

    def initial(self):
        return [("t", self.ba.initial & self.block, frozenset())]

    def succ_passive(self, H, M, a):
        _tag, C, S = M
        view = self.view
        P = self.block
        if view.delta_f(H, a, S, P):
            return []
        Sn = view.delta(H, a, S, P)
        Cn = view.delta(H, a, C, P) - Sn
        return [(("t", Cn, Sn), NOCOLOUR)]

    def succ_active(self, H, M, a):
        _tag, _C, S, B = M
        view = self.view
        P = self.block
        if view.delta_f(H, a, S, P):
            return []
        U = view.universe(H, a) & P
        Sn = view.delta_scc(H, a, S, P)
        Cn = U - Sn
        Bs = view.delta_scc(H, a, B, P)
        out = []
        if not Bs:
            Bn = Cn
            out.append((("t", Cn, Sn), COLOUR0))
        else:
            Bn = Bs
            out.append((("a", Cn, Sn, Bs), NOCOLOUR))
        if not (view.delta_f(H, a, B, P) & Bs):
            S2 = Sn | Bn
            C2 = Cn - S2
            guess = (("t", C2, S2), COLOUR0)
            if guess not in out:
                out.append(guess)
        return out

    def lift(self, M):
        _tag, C, S = M
        return [("a", C, S, C)]

    def is_active(self, M) -> bool:
        return M[0] == "a"

    def acceptance(self) -> Acc:
        return Inf(0)

    def describe(self, M) -> str:
        parts = ",".join(fmt_set(x) for x in M[1:])
        return f"({parts})"
