import pytest

from buchicompl.acceptance import Fin
from buchicompl.blocks.base import COLOUR0, NOCOLOUR
from buchicompl.blocks.initial_det import (
    BlockConditionError,
    InitialDetBlock,
    InitialDetBlockRR,
)
from buchicompl.simulation import StepView
from conftest import SA, SB


def mk(ba, block):
    return StepView(ba, pruning=False), frozenset(block)


def test_idet_follows_single_run(b2):
    alg = InitialDetBlock(*mk(b2, (1, 2)))
    assert alg.initial() == [None]
    assert alg.acceptance() == Fin(0)
    assert alg.successors(frozenset((0,)), None, SB) == [(1, NOCOLOUR)]
    # 1-a->2 is the accepting edge; crossing it raises the flag.
    assert alg.successors(frozenset((1,)), 1, SA) == [(2, COLOUR0)]
    assert alg.successors(frozenset((2,)), 2, SB) == [(2, NOCOLOUR)]
    assert alg.successors(frozenset((2,)), 2, SA) == [(1, NOCOLOUR)]


def test_idet_run_outside_block_stays_none(b2):
    alg = InitialDetBlock(*mk(b2, (1, 2)))
    assert alg.successors(frozenset((0,)), None, SA) == [(None, NOCOLOUR)]


def test_idet_describe(b2):
    alg = InitialDetBlock(*mk(b2, (1, 2)))
    assert alg.describe(None) == "(-)"
    assert alg.describe(2) == "(2)"


def test_idet_detects_misclassified_block(n1):
    alg = InitialDetBlock(*mk(n1, (0, 1)))
    assert alg.initial() == [0]
    # 0 -a-> {0, 1} puts two runs inside the block at once.
    with pytest.raises(BlockConditionError):
        alg.successors(frozenset((0,)), 0, SA)


def test_idet_rr_is_mode_independent(d2):
    alg = InitialDetBlockRR(*mk(d2, (3, 4)))
    assert alg.initial() == [("t", None)]
    assert alg.lift(("t", 3)) == [("a", 3)]
    assert alg.is_active(("a", 3))
    passive = alg.succ_passive(frozenset((3,)), ("t", 3), SB)
    active = alg.succ_active(frozenset((3,)), ("a", 3), SB)
    assert passive == active == [(("t", 4), COLOUR0)]
