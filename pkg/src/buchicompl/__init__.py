"""Complementation of nondeterministic Buchi automata.

The input's accepting SCCs are partitioned into blocks by how hard they
are to complement (inherently weak, deterministic, initial
deterministic, general), a partial complementation algorithm runs per
block, and the partial results combine into one transition-based
Emerson-Lei automaton, either in lockstep, postponed per block, or
round-robin.
"""

from .acceptance import Acc, And, Fin, Inf, Or, format_acc, parse_acc, satisfies
from .automata import (
    BA,
    TELA,
    Alphabet,
    Transition,
    complete,
    restrict_accepting,
    universal_tela,
)
from .blocks import BlockConditionError, RankCapError
from .hoa import HoaParseError, parse_hoa, serialize_hoa
from .langops import intersect, is_empty, member_lasso, reduce_tela
from .pipeline import ComplementOptions, ComplementResult, complement
from .scc import (
    BlockClass,
    Partitioning,
    PartitionPolicy,
    compute_sccs,
    is_elevator,
    make_partitioning,
)

__version__ = "0.1.0"

__all__ = [
    "Acc",
    "And",
    "Fin",
    "Inf",
    "Or",
    "format_acc",
    "parse_acc",
    "satisfies",
    "BA",
    "TELA",
    "Alphabet",
    "Transition",
    "complete",
    "restrict_accepting",
    "universal_tela",
    "BlockConditionError",
    "RankCapError",
    "HoaParseError",
    "parse_hoa",
    "serialize_hoa",
    "intersect",
    "is_empty",
    "member_lasso",
    "reduce_tela",
    "ComplementOptions",
    "ComplementResult",
    "complement",
    "BlockClass",
    "Partitioning",
    "PartitionPolicy",
    "compute_sccs",
    "is_elevator",
    "make_partitioning",
    "__version__",
]
