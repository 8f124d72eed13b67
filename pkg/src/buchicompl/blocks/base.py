"""Contracts for per-block partial complementation algorithms.

A block algorithm complements one partition block: it tracks just enough
information about the runs touching its block to decide that none of
them is accepting there.  The top-level construction runs all block
algorithms in lockstep over the shared reached set H and combines their
colours and acceptance conditions.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Hashable

from ..acceptance import Acc
from ..simulation import StepView

__all__ = [
    "Macro",
    "COLOUR0",
    "NOCOLOUR",
    "BlockAlgorithm",
    "RRBlockAlgorithm",
    "UnionAlgorithm",
    "fmt_set",
]

Macro = Hashable

COLOUR0 = frozenset((0,))
NOCOLOUR: frozenset[int] = frozenset()


def fmt_set(states: Any) -> str:
    return "{" + ",".join(str(q) for q in sorted(states)) + "}"


class BlockAlgorithm(ABC):
    """One partition block's complementation procedure (synchronous form).

    A macrostate is any hashable value.  ``successors(H, M, a)`` returns
    (successor, emitted colours) pairs, where H is the set of automaton
    states reached over the prefix read so far; an empty list kills the
    macrorun.  Colours are local, 0 .. n_colours-1, and renumbered by the
    top level.
    """

    n_colours: int = 1

    def __init__(self, view: StepView, block: frozenset[int]):
        self.view = view
        self.block = block
        self.ba = view.ba

    @abstractmethod
    def initial(self) -> list[Macro]: ...

    @abstractmethod
    def successors(
        self, H: frozenset[int], M: Macro, a: int
    ) -> list[tuple[Macro, frozenset[int]]]: ...

    @abstractmethod
    def acceptance(self) -> Acc: ...

    def describe(self, M: Macro) -> str:
        return repr(M)


class RRBlockAlgorithm(ABC):
    """Block algorithm split into a passive and an active mode.

    In the round-robin construction only one block at a time is active;
    the others track their runs passively without emitting progress
    colours.  ``lift`` turns a passive macrostate into its active
    counterparts (possibly several) when the token arrives.
    """

    n_colours: int = 1

    def __init__(self, view: StepView, block: frozenset[int]):
        self.view = view
        self.block = block
        self.ba = view.ba

    @abstractmethod
    def initial(self) -> list[Macro]:
        """Passive initial macrostates."""

    @abstractmethod
    def succ_passive(
        self, H: frozenset[int], M: Macro, a: int
    ) -> list[tuple[Macro, frozenset[int]]]: ...

    @abstractmethod
    def succ_active(
        self, H: frozenset[int], M: Macro, a: int
    ) -> list[tuple[Macro, frozenset[int]]]: ...

    @abstractmethod
    def lift(self, M: Macro) -> list[Macro]: ...

    @abstractmethod
    def is_active(self, M: Macro) -> bool: ...

    @abstractmethod
    def acceptance(self) -> Acc: ...

    def describe(self, M: Macro) -> str:
        return repr(M)


class UnionAlgorithm(BlockAlgorithm):
    """Synchronous adapter over a round-robin algorithm.

    Successors of a passive macrostate additionally branch into their
    lifted active counterparts, so a macrorun may enter and leave the
    active mode at any point rather than on a rotating token.
    """

    def __init__(self, rr: RRBlockAlgorithm):
        super().__init__(rr.view, rr.block)
        self.rr = rr
        self.n_colours = rr.n_colours

    def initial(self) -> list[Macro]:
        return self.rr.initial()

    def successors(self, H, M, a):
        rr = self.rr
        if rr.is_active(M):
            return rr.succ_active(H, M, a)
        out = list(rr.succ_passive(H, M, a))
        for M2, colours in list(out):
            for lifted in rr.lift(M2):
                item = (lifted, colours)
                if item not in out:
                    out.append(item)
        return out

    def acceptance(self) -> Acc:
        return self.rr.acceptance()

    def describe(self, M: Macro) -> str:
        return self.rr.describe(M)
