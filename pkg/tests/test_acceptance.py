"""Release-gate checks, one test per criterion.

Each test is marked with ``acceptance(n, ...)`` and contributes a
PASS/FAIL line to the summary block the session prints at the end.
The corpora are seeded, so every run exercises identical inputs.
"""

import random
import time

import pytest

from buchicompl.acceptance import And, Fin, Inf, format_acc, leaf_colours
from buchicompl.automata import complete
from buchicompl.blocks.rank import is_box_tight, rank_of
from buchicompl.hoa import parse_hoa, serialize_hoa
from buchicompl.langops import enumerate_lassos, is_empty, lasso_signature
from buchicompl.pipeline import ComplementOptions, complement
from buchicompl.scc import BlockClass, compute_sccs
from conftest import SA
from gen import (
    ALPH2,
    block_kinds,
    random_complete_ba,
    random_det_single_idac,
    random_elevator,
    random_single_nac,
    random_tela,
)
from oracles import oracle_is_empty

LASSOS = list(enumerate_lassos(ALPH2, 3, 3))

VARIANTS = {
    "sync": ComplementOptions(),
    "sync-nopruning": ComplementOptions(sim_pruning=False),
    "per-scc": ComplementOptions(partition="per-scc"),
    "merge-all": ComplementOptions(partition="merge-all"),
    "no-idac": ComplementOptions(use_idac=False),
    "shared": ComplementOptions(shared_breakpoint=True),
    "accepting-sink": ComplementOptions(sink="accepting-sink"),
    "postponed": ComplementOptions(strategy="postponed"),
    "postponed-shared": ComplementOptions(
        strategy="postponed", shared_breakpoint=True
    ),
    "rr": ComplementOptions(strategy="rr"),
    "rr-nopruning": ComplementOptions(strategy="rr", sim_pruning=False),
}


@pytest.fixture(scope="session")
def corpus():
    """200 seeded random complete automata with at most 6 states, plus
    lazily cached lasso signatures per option variant."""
    rng = random.Random(777)
    bas = []
    while len(bas) < 200:
        ba = random_complete_ba(rng, n_max=6)
        if ba.n_states <= 6:
            bas.append(ba)
    input_sigs = [lasso_signature(ba.to_tela(), LASSOS) for ba in bas]
    return {"bas": bas, "input_sigs": input_sigs, "sigs": {}}


def sigs_for(corpus, name):
    got = corpus["sigs"].get(name)
    if got is None:
        options = VARIANTS[name]
        got = [
            lasso_signature(complement(ba, options).tela, LASSOS)
            for ba in corpus["bas"]
        ]
        corpus["sigs"][name] = got
    return got


@pytest.mark.acceptance(
    1, "every strategy complements 200 random complete inputs exactly"
)
def test_criterion_1_strategies_complement_exactly(corpus):
    t0 = time.monotonic()
    covered = set()
    for ba in corpus["bas"]:
        covered |= block_kinds(ba)
    assert covered == {
        BlockClass.IWC,
        BlockClass.DAC,
        BlockClass.IDAC,
        BlockClass.NAC,
    }
    for name in ("sync", "postponed", "rr"):
        sigs = sigs_for(corpus, name)
        for inp, out in zip(corpus["input_sigs"], sigs):
            for w_in, w_out in zip(inp, out):
                assert w_in != w_out
    assert time.monotonic() - t0 < 300


@pytest.mark.acceptance(
    2, "elevator inputs stay within the weak/det macrostate budget"
)
def test_criterion_2_elevator_bound():
    rng = random.Random(97)
    options = ComplementOptions(
        sim_pruning=False, use_idac=False, shared_breakpoint=False
    )
    for _ in range(100):
        ba = random_elevator(rng, n_max=7)
        assert ba.n_states <= 8
        decomp = compute_sccs(ba)
        qw = qd = 0
        for s in decomp.sccs:
            if s.inherently_weak:
                qw += len(s.states)
            else:
                assert s.deterministic
                qd += len(s.states)
        res = complement(ba, options)
        assert res.tela.n_states <= 3**qw * 4**qd


@pytest.mark.acceptance(
    3, "deterministic one-block inputs give a co-Buchi complement of size n+1"
)
def test_criterion_3_idac_complement_size():
    rng = random.Random(555)
    for _ in range(50):
        ba = random_det_single_idac(rng)
        res = complement(ba)
        t = res.tela
        assert t.n_states <= ba.n_states + 1
        assert t.n_colours == 1
        assert t.acceptance == Fin(0)
        inp = lasso_signature(ba.to_tela(), LASSOS)
        out = lasso_signature(t, LASSOS)
        assert all(a != b for a, b in zip(inp, out))


@pytest.mark.acceptance(4, "all option variants agree pairwise on the corpus")
def test_criterion_4_variants_agree(corpus):
    reference = sigs_for(corpus, "sync")
    for name in VARIANTS:
        if name == "sync":
            continue
        assert sigs_for(corpus, name) == reference


@pytest.mark.acceptance(
    5, "worked examples: exact language and combined acceptance shape"
)
def test_criterion_5_worked_examples(b1, b1_b2):
    res = complement(b1)
    for member, (prefix, loop) in zip(lasso_signature(res.tela, LASSOS), LASSOS):
        assert member == all(s == SA for s in prefix + loop)

    res2 = complement(b1_b2, ComplementOptions(use_idac=False))
    t = res2.tela
    assert t.acceptance == And(Inf(0), Inf(1))
    assert t.n_colours == 2
    assert leaf_colours(t.acceptance) == frozenset((0, 1))
    # One colour per block, in block order.
    assert [b.kind for b in res2.partitioning.blocks] == [
        BlockClass.IWC,
        BlockClass.DAC,
    ]


@pytest.mark.acceptance(6, "rank macrostates stay box-tight within the rank bound")
def test_criterion_6_rank_invariants():
    rng = random.Random(31337)
    ranked_seen = 0
    for _ in range(100):
        ba = random_single_nac(rng)
        res = complement(ba)
        block = res.partitioning.blocks[0]
        assert block.kind is BlockClass.NAC
        bound = 2 * (len(block.states) + 1) - 1
        for macro in res.macros:
            part = macro[1][0]
            if part[0] in ("T", "AT"):
                f = part[1]
                ranked_seen += 1
                assert is_box_tight(f)
                assert rank_of(f) <= bound
        inp = lasso_signature(ba.to_tela(), LASSOS)
        out = lasso_signature(res.tela, LASSOS)
        assert all(a != b for a, b in zip(inp, out))
    assert ranked_seen > 0


@pytest.mark.acceptance(
    7, "HOA round-trip is structurally exact and byte-deterministic"
)
def test_criterion_7_hoa_round_trip(b1, b2, n1, d2, nac13):
    def roundtrip(t):
        s1 = serialize_hoa(t)
        assert serialize_hoa(t) == s1
        t1 = parse_hoa(s1)
        assert t1.n_states == t.n_states
        assert t1.alphabet == t.alphabet
        assert t1.initial == t.initial
        assert t1.transitions == t.transitions
        assert t1.n_colours == t.n_colours
        # The condition lives in the header as text, so compare formulas
        # textually; `&` chains reassociate but print identically.
        assert format_acc(t1.acceptance) == format_acc(t.acceptance)
        assert serialize_hoa(t1) == s1

    for ba in (b1, b2, n1, d2, nac13):
        roundtrip(ba.to_tela())
        roundtrip(complete(ba).to_tela())
    roundtrip(complement(b2).tela)

    rng = random.Random(20240817)
    for _ in range(1000):
        roundtrip(random_tela(rng))


@pytest.mark.acceptance(8, "emptiness decisions match the brute-force oracle")
def test_criterion_8_emptiness_oracle():
    rng = random.Random(4087)
    for _ in range(500):
        t = random_tela(rng, n_max=6, k_max=3, depth=3)
        assert is_empty(t) == oracle_is_empty(t)
