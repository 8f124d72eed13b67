"""Per-block partial complementation algorithms."""

from .base import BlockAlgorithm, RRBlockAlgorithm, UnionAlgorithm
from .det import DetBlock, DetBlockRR
from .initial_det import BlockConditionError, InitialDetBlock, InitialDetBlockRR
from .rank import BOX, RankBlockRR, RankCapError, maximal_tight_rankings
from .shared import SharedBreakpoint
from .weak import WeakBlock, WeakBlockRR

__all__ = [
    "BlockAlgorithm",
    "RRBlockAlgorithm",
    "UnionAlgorithm",
    "WeakBlock",
    "WeakBlockRR",
    "DetBlock",
    "DetBlockRR",
    "InitialDetBlock",
    "InitialDetBlockRR",
    "BlockConditionError",
    "RankBlockRR",
    "RankCapError",
    "maximal_tight_rankings",
    "BOX",
    "SharedBreakpoint",
]
