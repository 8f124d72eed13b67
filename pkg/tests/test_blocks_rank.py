import itertools

import pytest

from buchicompl.acceptance import Inf
from buchicompl.automata import complete
from buchicompl.blocks.base import COLOUR0, NOCOLOUR
from buchicompl.blocks.rank import (
    BOX,
    RankBlockRR,
    RankCapError,
    is_box_tight,
    is_tight,
    level,
    maximal_tight_rankings,
    rank_of,
)
from buchicompl.scc import reachable_sets
from buchicompl.simulation import StepView
from conftest import SA, SB, mk_ba
from oracles import brute_maximal_tight_rankings


def test_is_tight():
    assert not is_tight(())
    assert is_tight(((0, 1),))
    assert not is_tight(((0, 2),))
    assert not is_tight(((0, 3),))  # odd 1 uncovered
    assert is_tight(((0, 1), (1, 3)))
    assert is_tight(((0, 1), (1, 2), (2, 3)))


def test_is_box_tight():
    assert is_box_tight(((0, 1),))
    assert is_box_tight(((BOX, 1),))
    assert is_box_tight(((BOX, 3), (0, 1), (1, 2)))
    # The box must hold the rank alone.
    assert not is_box_tight(((BOX, 3), (0, 3), (1, 1)))
    assert not is_box_tight(((BOX, 2), (0, 1)))
    assert not is_box_tight(((BOX, 1), (0, 1)))


def test_level_and_rank():
    f = ((BOX, 3), (0, 1), (1, 2), (2, 2))
    assert rank_of(f) == 3
    assert level(f, 2) == frozenset((1, 2))
    assert level(f, 0) == frozenset()


@pytest.mark.parametrize("with_box", [False, True])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_maximal_tight_rankings_match_brute_force(n, with_box):
    S = frozenset(range(n)) | (frozenset((BOX,)) if with_box else frozenset())
    got = maximal_tight_rankings(S, cap=12)
    assert len(got) == len(set(got))
    assert set(got) == brute_maximal_tight_rankings(S)


def test_rank_cap():
    with pytest.raises(RankCapError):
        maximal_tight_rankings(frozenset(range(13)), cap=12)
    # The cap bounds the domain size, not the size minus one.
    with pytest.raises(RankCapError):
        maximal_tight_rankings(frozenset(range(5)), cap=4)
    assert maximal_tight_rankings(frozenset(range(4)), cap=4)


# A complete automaton whose single accepting SCC {1,2} is
# nondeterministic; state 3 is the rejecting sink, and state 0 feeds the
# block forever, so the box never dies on the reached set {0,1,2,3}.
@pytest.fixture(scope="module")
def nba():
    return complete(
        mk_ba(
            3,
            [
                (0, SA, 2, False),
                (0, SA, 0, False),
                (0, SA, 1, True),
                (0, SB, 1, False),
                (0, SB, 0, False),
                (1, SB, 2, False),
                (1, SB, 1, False),
                (2, SA, 2, True),
                (2, SB, 1, False),
            ],
            [0, 2],
        )
    )


P = frozenset((1, 2))
H = frozenset((0, 1, 2, 3))


def mk_alg(nba, cap=12):
    view = StepView(nba, pruning=False)
    return RankBlockRR(view, P, reachable_sets(nba), cap=cap)


def test_rank_initial_includes_box(nba):
    alg = mk_alg(nba)
    assert alg.initial() == [("W", frozenset((BOX, 2)))]
    assert alg.acceptance() == Inf(0)


def test_rank_waiting_tracks_box_extended_successors(nba):
    alg = mk_alg(nba)
    assert alg.succ_passive(H, ("W", frozenset((BOX, 2))), SA) == [
        (("W", frozenset((BOX, 1, 2))), NOCOLOUR)
    ]


def test_rank_box_entrant_capped_below_box(nba):
    alg = mk_alg(nba)
    # From {#:1, 2:0} on a, state 1 is reachable only through the box.
    # While the box persists the entrant must sit strictly below it, so
    # it lands on 0 and the ranking stays box-tight.
    f = ((BOX, 1), (2, 0))
    g = alg.maxrank(H, f, SA)
    assert g == ((BOX, 1), (1, 0), (2, 0))


def test_rank_maxrank_fixpoint(nba):
    alg = mk_alg(nba)
    f = ((BOX, 1), (1, 0), (2, 0))
    assert alg.maxrank(H, f, SA) == f
    assert alg.maxrank(H, f, SB) == f


def test_rank_maxrank_higher_rank(nba):
    alg = mk_alg(nba)
    assert alg.maxrank(H, ((BOX, 3), (1, 2), (2, 1)), SB) == (
        (BOX, 3),
        (1, 1),
        (2, 2),
    )


def test_rank_maxrank_dies_on_rank_drop(nba):
    alg = mk_alg(nba)
    # Without the box the even cap kills the top: state 2's accepting
    # self-loop caps its successor at 0 and state 1 escapes to the sink.
    assert alg.maxrank(H, ((1, 1), (2, 0)), SA) is None


def test_rank_lift_enumerates_every_odd_rank(nba):
    alg = mk_alg(nba)
    S = frozenset((BOX, 1, 2))
    out = alg.lift(("W", S))
    assert out[0] == ("AW", S)
    rankings = [m[1] for m in out[1:]]
    assert rankings == maximal_tight_rankings(S, cap=12)
    assert sorted(rank_of(f) for f in rankings) == [1, 3, 3, 5, 5]
    # Every lifted tracker starts its sweep at level 0.
    assert all(m[2] == level(m[1], 0) and m[3] == 0 for m in out[1:])


def test_rank_lift_of_ranked_macro_restarts_sweep(nba):
    alg = mk_alg(nba)
    f = ((BOX, 1), (1, 0), (2, 0))
    assert alg.lift(("T", f)) == [("AT", f, frozenset((1, 2)), 0)]


def test_rank_active_waiting_drains_to_colour(nba):
    alg = mk_alg(nba)
    out = alg.succ_active(H, ("AW", frozenset((BOX,))), SB)
    assert out == [(("W", frozenset((BOX, 1))), COLOUR0)]


def test_rank_active_waiting_branches_into_rankings(nba):
    alg = mk_alg(nba)
    S = frozenset((BOX, 1, 2))
    out = alg.succ_active(H, ("AW", S), SB)
    assert out[0] == (("AW", S), NOCOLOUR)
    assert len(out) == 1 + len(maximal_tight_rankings(S, cap=12))


def test_rank_tracker_follows_levels(nba):
    alg = mk_alg(nba)
    f = ((BOX, 1), (1, 0), (2, 0))
    out = alg.succ_active(H, ("AT", f, frozenset((1, 2)), 0), SB)
    assert out == [(("AT", f, frozenset((1, 2)), 0), NOCOLOUR)]


def test_rank_tracker_drain_at_top_falls_to_passive(nba):
    alg = mk_alg(nba)
    f = ((BOX, 1), (1, 0), (2, 0))
    # State 1 escapes to the sink on a, draining the tracked set at the
    # topmost even level; that is the breakpoint and emits the colour.
    assert alg.succ_active(H, ("AT", f, frozenset((1,)), 0), SA) == [
        (("T", f), COLOUR0)
    ]


def test_rank_tracker_early_discharge(nba):
    alg = mk_alg(nba)
    f = ((BOX, 3), (1, 2), (2, 1))
    g = ((BOX, 3), (1, 1), (2, 2))
    out = alg.succ_active(H, ("AT", f, frozenset((1,)), 2), SB)
    # Either keep tracking at level 2, or push the tracked state down to
    # the odd value below and discharge it there.
    g2 = ((BOX, 3), (1, 1), (2, 1))
    assert out == [
        (("AT", g, frozenset((2,)), 2), NOCOLOUR),
        (("AT", g2, frozenset((2,)), 2), NOCOLOUR),
    ]


def test_rank_tracker_dies_with_ranking(nba):
    alg = mk_alg(nba)
    assert alg.succ_active(H, ("AT", ((1, 1), (2, 0)), frozenset((2,)), 0), SA) == []


def test_rank_cap_applies_to_lift():
    ba = complete(
        mk_ba(
            4,
            [(q, SA, (q + 1) % 4, q == 0) for q in range(4)]
            + [(q, SB, q, False) for q in range(4)],
            [0, 1, 2, 3],
        )
    )
    view = StepView(ba, pruning=False)
    alg = RankBlockRR(view, frozenset(range(4)), reachable_sets(ba), cap=3)
    with pytest.raises(RankCapError):
        alg.lift(("W", frozenset(range(4))))


def test_rank_describe(nba):
    alg = mk_alg(nba)
    assert alg.describe(("W", frozenset((BOX, 2)))) == "W{#,2}"
    assert alg.describe(("AW", frozenset((1,)))) == "AW{1}"
    f = ((BOX, 1), (1, 0), (2, 0))
    assert alg.describe(("T", f)) == "T{#:1,1:0,2:0}"
    assert alg.describe(("AT", f, frozenset((1,)), 0)) == "AT({#:1,1:0,2:0},{1},0)"
