"""Rank-based complementation of nondeterministic accepting blocks.

Runs in and around the block are organised in a run DAG extended with a
virtual state, the box, standing for all runs currently outside the
block that may still enter it.  A macrorun first waits (subset
tracking), then guesses a tight ranking: a partial map assigning each
run a rank that never increases along edges and drops to an even value
across accepting transitions, with every odd value up to the odd maximum
covered and the box, when present, strictly on top.  The complement
accepts iff the breakpoint set of even-ranked runs is flushed at the top
even level infinitely often, or the block eventually holds no run at
all.
"""

from __future__ import annotations

import itertools

from ..acceptance import Acc, Inf
from .base import COLOUR0, NOCOLOUR, RRBlockAlgorithm

__all__ = [
    "BOX",
    "Ranking",
    "RankCapError",
    "rank_of",
    "level",
    "is_tight",
    "is_box_tight",
    "maximal_tight_rankings",
    "RankBlockRR",
]

BOX = -1

# A ranking is a canonical partial map: sorted (state, rank) pairs, with
# BOX sorting first.
Ranking = tuple[tuple[int, int], ...]


class RankCapError(Exception):
    """A waiting set grew past the rank enumeration cap."""


def _rk(f: dict[int, int]) -> Ranking:
    return tuple(sorted(f.items()))


def rank_of(f: Ranking) -> int:
    return max(r for _q, r in f)


def level(f: Ranking, i: int) -> frozenset[int]:
    return frozenset(q for q, r in f if r == i)


def is_tight(f: Ranking) -> bool:
    if not f:
        return False
    r = rank_of(f)
    if r % 2 == 0:
        return False
    covered = {rv for _q, rv in f}
    return all(o in covered for o in range(1, r + 1, 2))


def is_box_tight(f: Ranking) -> bool:
    if not is_tight(f):
        return False
    fd = dict(f)
    if BOX not in fd:
        return True
    r = rank_of(f)
    return fd[BOX] == r and all(rv < r for q, rv in f if q != BOX)


def maximal_tight_rankings(S: frozenset[int], cap: int) -> list[Ranking]:
    """All pointwise-maximal box-tight rankings with domain S.

    For each odd rank r, the maximal rankings place one state on each odd
    value below r (any injection) and everything else as high as allowed:
    at r, or at r - 1 when the box occupies r exclusively.
    """
    if not S:
        return []
    if len(S) > cap:
        raise RankCapError(
            f"waiting set of size {len(S)} exceeds the rank enumeration cap {cap}"
        )
    has_box = BOX in S
    others = sorted(S - {BOX})
    out: list[Ranking] = []
    for r in range(1, 2 * len(S), 2):
        k = (r - 1) // 2
        if has_box:
            if k > len(others):
                continue
            for chosen in itertools.permutations(others, k):
                f = {BOX: r}
                for j, q in enumerate(chosen):
                    f[q] = 2 * j + 1
                for q in others:
                    if q not in f:
                        f[q] = r - 1
                out.append(_rk(f))
        else:
            if k > len(others) - 1:
                continue
            for chosen in itertools.permutations(others, k):
                f = {}
                for j, q in enumerate(chosen):
                    f[q] = 2 * j + 1
                for q in others:
                    if q not in f:
                        f[q] = r
                out.append(_rk(f))
    return out


def _fmt_state(q: int) -> str:
    return "#" if q == BOX else str(q)


def _fmt_dom(S) -> str:
    return "{" + ",".join(_fmt_state(q) for q in sorted(S)) + "}"


def _fmt_ranking(f: Ranking) -> str:
    return "{" + ",".join(f"{_fmt_state(q)}:{r}" for q, r in f) + "}"


class RankBlockRR(RRBlockAlgorithm):
    """Tight-ranking complementation of one nondeterministic block.

    Natively round-robin: waiting macrostates are the passive form and
    ranked macrostates carry the breakpoint sweep while active.  reach
    gives, per automaton state, the set of states reachable from it; it
    decides when the box must be kept.
    """

    def __init__(self, view, block, reach, cap: int = 12):
        super().__init__(view, block)
        self.reach = reach
        self.cap = cap

    def initial(self):
        S0 = set(self.ba.initial & self.block)
        if any(self.reach[q] & self.block for q in self.ba.initial):
            S0.add(BOX)
        return [("W", frozenset(S0))]

    def _dext_one(self, H, q, a) -> frozenset[int]:
        """Box-extended successors of one ranking domain element."""
        view = self.view
        if q == BOX:
            out = set(view.delta(H, a, H - self.block, self.block))
            uni = view.universe(H, a)
            if any(self.reach[p] & self.block for p in uni - self.block):
                out.add(BOX)
            return frozenset(out)
        return view.delta(H, a, frozenset((q,)), self.block)

    def _dext(self, H, dom, a) -> frozenset[int]:
        out: set[int] = set()
        for q in dom:
            out |= self._dext_one(H, q, a)
        return frozenset(out)

    def maxrank(self, H, f: Ranking, a) -> Ranking | None:
        """Pointwise-maximal successor ranking, or None when the rank
        drops or tightness is lost (the macrorun dies)."""
        box_succ: frozenset[int] = frozenset()
        if any(q == BOX for q, _fq in f):
            box_succ = self._dext_one(H, BOX, a)
        g: dict[int, int] = {}
        for q, fq in f:
            succs = box_succ if q == BOX else self._dext_one(H, q, a)
            for q2 in succs:
                # Runs materialising from the box must stay strictly
                # below it for as long as it persists.
                bound = fq - 1 if q == BOX and q2 != BOX and BOX in box_succ else fq
                if q2 not in g or bound < g[q2]:
                    g[q2] = bound
        for q, fq in f:
            if q == BOX:
                continue
            cap = fq - (fq % 2)
            for q2 in self.view.delta_f(H, a, frozenset((q,)), self.block):
                if cap < g[q2]:
                    g[q2] = cap
        if not g:
            return None
        gr = _rk(g)
        if rank_of(gr) != rank_of(f) or not is_box_tight(gr):
            return None
        return gr

    def succ_passive(self, H, M, a):
        if M[0] == "W":
            return [(("W", self._dext(H, M[1], a)), NOCOLOUR)]
        g = self.maxrank(H, M[1], a)
        if g is None:
            return []
        return [(("T", g), NOCOLOUR)]

    def lift(self, M):
        if M[0] == "W":
            S = M[1]
            out = [("AW", S)]
            for g in maximal_tight_rankings(S, self.cap):
                out.append(("AT", g, level(g, 0), 0))
            return out
        f = M[1]
        return [("AT", f, level(f, 0), 0)]

    def succ_active(self, H, M, a):
        if M[0] == "AW":
            S = M[1]
            U = self._dext(H, S, a)
            if S <= frozenset((BOX,)):
                return [(("W", U), COLOUR0)]
            out = [(("AW", U), NOCOLOUR)]
            for g in maximal_tight_rankings(U, self.cap):
                out.append((("AT", g, level(g, 0), 0), NOCOLOUR))
            return out
        _tag, f, O, i = M
        g = self.maxrank(H, f, a)
        if g is None:
            return []
        r = rank_of(g)
        items: list[tuple[Ranking, frozenset[int], int]] = []
        if O:
            items.append((g, self._dext(H, O, a) & level(g, i), i))
        else:
            i2 = (i + 2) % (r + 1)
            items.append((g, level(g, i2), i2))
        # Variant move: push the tracked even-level successors down to the
        # odd value below, discharging them early.
        Mset = self._dext(H, O, a) & level(g, i)
        if i != 0:
            gd = dict(g)
            for q in Mset:
                gd[q] = i - 1
            g2 = _rk(gd)
            assert rank_of(g2) == r and is_box_tight(g2)
            items.append((g2, Mset, i))
        else:
            items.append((g, Mset, i))
        out = []
        for f2, O2, i2 in items:
            if not O2 and i2 == r - 1:
                succ = (("T", f2), COLOUR0)
            else:
                succ = (("AT", f2, O2, i2), NOCOLOUR)
            if succ not in out:
                out.append(succ)
        return out

    def is_active(self, M) -> bool:
        return M[0] in ("AW", "AT")

    def acceptance(self) -> Acc:
        return Inf(0)

    def describe(self, M) -> str:
        tag = M[0]
        if tag in ("W", "AW"):
            return f"{tag}{_fmt_dom(M[1])}"
        if tag == "T":
            return f"T{_fmt_ranking(M[1])}"
        _tag, f, O, i = M
        return f"AT({_fmt_ranking(f)},{_fmt_dom(O)},{i})"
