from buchicompl.acceptance import Inf
from buchicompl.blocks.base import COLOUR0, NOCOLOUR
from buchicompl.blocks.det import DetBlock, DetBlockRR
from buchicompl.simulation import StepView
from conftest import SA, SB

E = frozenset()
S1 = frozenset((1,))
S2 = frozenset((2,))


def mk(b2):
    return StepView(b2, pruning=False), frozenset((1, 2))


def test_det_initial_and_acceptance(b2):
    alg = DetBlock(*mk(b2))
    assert alg.initial() == [(E, E, E)]
    assert alg.acceptance() == Inf(0)


def test_det_entry_branches_into_safe_guess(b2):
    alg = DetBlock(*mk(b2))
    # A run enters on b.  Either it stays a candidate (with a drained
    # breakpoint) or it is guessed safe immediately.
    assert alg.successors(frozenset((0,)), (E, E, E), SB) == [
        ((S1, E, S1), COLOUR0),
        ((E, S1, E), COLOUR0),
    ]


def test_det_candidate_tracking(b2):
    alg = DetBlock(*mk(b2))
    # Reading b keeps the candidate cycling; the breakpoint survives, and
    # the guess branch stays available since 1-b->1 is not accepting.
    assert alg.successors(S1, (S1, E, S1), SB) == [
        ((S1, E, S1), NOCOLOUR),
        ((E, S1, E), COLOUR0),
    ]
    # Reading a crosses the accepting edge 1-a->2, so the breakpoint runs
    # cannot be declared safe on this step.
    assert alg.successors(S1, (S1, E, S1), SA) == [((S2, E, S2), NOCOLOUR)]


def test_det_safe_run_accepting_edge_kills(b2):
    alg = DetBlock(*mk(b2))
    assert alg.successors(S1, (E, S1, E), SA) == []


def test_det_safe_run_survives_rejecting_edge(b2):
    alg = DetBlock(*mk(b2))
    assert alg.successors(S1, (E, S1, E), SB) == [((E, S1, E), COLOUR0)]


def test_det_describe(b2):
    alg = DetBlock(*mk(b2))
    assert alg.describe((S1, E, S2)) == "({1},{},{2})"


def test_det_rr_modes(b2):
    alg = DetBlockRR(*mk(b2))
    assert alg.initial() == [("t", E, E)]
    assert alg.lift(("t", S1, E)) == [("a", S1, E, S1)]
    assert alg.is_active(("a", S1, E, S1))
    assert not alg.is_active(("t", S1, E))
    # Active successors mirror the synchronous algorithm but fall back to
    # passive on a drained or safe-guessed breakpoint.
    assert alg.succ_active(S1, ("a", S1, E, S1), SB) == [
        (("a", S1, E, S1), NOCOLOUR),
        (("t", E, S1), COLOUR0),
    ]
    assert alg.succ_active(S1, ("a", E, S1, E), SA) == []


def test_det_rr_passive_recaptures_via_full_delta(b2):
    alg = DetBlockRR(*mk(b2))
    # Passive tracking follows the full relation, not just SCC-internal
    # moves, so candidates are not silently dropped between turns.
    assert alg.succ_passive(S1, ("t", S1, E), SA) == [(("t", S2, E), NOCOLOUR)]
    assert alg.succ_passive(S1, ("t", E, S1), SA) == []
