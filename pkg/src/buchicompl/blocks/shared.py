"""Composite block algorithm sharing one breakpoint across members.

Wraps several breakpoint-style blocks (weak and deterministic) into a
single partial algorithm over the union of their state sets.  Only one
breakpoint set and one colour survive: the colour is emitted when the
shared breakpoint drains, and every member then contributes its own
resampling set.  Deterministic members keep their safe sets and may
still move their breakpoint portion into them, which empties that
portion's contribution.
"""

from __future__ import annotations

import itertools

from ..acceptance import Acc, Inf
from .base import COLOUR0, NOCOLOUR, BlockAlgorithm, fmt_set

__all__ = ["SharedBreakpoint"]


class SharedBreakpoint(BlockAlgorithm):
    """members: (kind, states) pairs with kind 'weak' or 'det'."""

    def __init__(self, view, members: tuple[tuple[str, frozenset[int]], ...]):
        if not members:
            raise ValueError("shared breakpoint needs at least one member block")
        for kind, _states in members:
            if kind not in ("weak", "det"):
                raise ValueError(f"unsupported member kind: {kind!r}")
        union = frozenset().union(*(states for _k, states in members))
        super().__init__(view, union)
        self.members = tuple(members)

    def initial(self):
        comps = []
        for kind, P in self.members:
            inside = self.ba.initial & P
            comps.append(inside if kind == "weak" else (inside, frozenset()))
        return [(tuple(comps), self.ba.initial & self.block)]

    def successors(self, H, M, a):
        comps, B = M
        view = self.view
        U = view.universe(H, a)

        # Precompute per-member data; deterministic members may die.
        weak_next: dict[int, tuple[frozenset[int], frozenset[int]]] = {}
        det_next: dict[int, tuple] = {}
        for idx, (kind, P) in enumerate(self.members):
            if kind == "weak":
                Cn = U & P
                Bs = self.ba.delta(B & P, a) & Cn
                weak_next[idx] = (Cn, Bs)
            else:
                _C, S = comps[idx]
                if view.delta_f(H, a, S, P):
                    return []
                Sn = view.delta_scc(H, a, S, P)
                Cn = (U & P) - Sn
                Bs = view.delta_scc(H, a, B & P, P)
                movable = not (view.delta_f(H, a, B & P, P) & Bs)
                det_next[idx] = (Cn, Sn, Bs, movable)

        det_idxs = sorted(det_next)
        choice_space = [
            ((False, True) if det_next[j][3] else (False,)) for j in det_idxs
        ]
        out = []
        for moves in itertools.product(*choice_space):
            move_of = dict(zip(det_idxs, moves))
            comps2 = []
            shared: frozenset[int] = frozenset()
            resample: frozenset[int] = frozenset()
            for idx, (kind, _P) in enumerate(self.members):
                if kind == "weak":
                    Cn, Bs = weak_next[idx]
                    comps2.append(Cn)
                    shared |= Bs
                    resample |= Cn
                else:
                    Cn, Sn, Bs, _mv = det_next[idx]
                    if move_of[idx]:
                        S2 = Sn | Bs
                        C2 = Cn - S2
                        comps2.append((C2, S2))
                        resample |= C2
                    else:
                        comps2.append((Cn, Sn))
                        shared |= Bs
                        resample |= Cn
            if not shared:
                succ = ((tuple(comps2), resample), COLOUR0)
            else:
                succ = ((tuple(comps2), shared), NOCOLOUR)
            if succ not in out:
                out.append(succ)
        return out

    def acceptance(self) -> Acc:
        return Inf(0)

    def describe(self, M) -> str:
        comps, B = M
        parts = []
        for (kind, _P), comp in zip(self.members, comps):
            if kind == "weak":
                parts.append(fmt_set(comp))
            else:
                parts.append(f"({fmt_set(comp[0])},{fmt_set(comp[1])})")
        return "(" + ",".join(parts) + f";B={fmt_set(B)})"
