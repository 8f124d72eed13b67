"""Shared fixtures and the acceptance report.

Tests marked ``@pytest.mark.acceptance(n, "...")`` feed the summary block
printed at the end of the run, one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import pytest

from buchicompl.automata import BA, Alphabet, Transition

ALPH = Alphabet(("a",))
SA = 1  # symbol index of the letter a
SB = 0  # symbol index of the letter b (= !a)


def mk_ba(n, edges, initial, ap=("a",)):
    """edges as (src, sym, dst, acc) quadruples."""
    trans = [
        Transition(s, a, d, frozenset((0,)) if acc else frozenset())
        for s, a, d, acc in edges
    ]
    return BA(n, Alphabet(ap), trans, initial)


def disjoint_union(x: BA, y: BA) -> BA:
    if x.alphabet != y.alphabet:
        raise ValueError("alphabets differ")
    k = x.n_states
    trans = [
        Transition(t.src, t.sym, t.dst, t.colours) for t in x.to_tela().transitions
    ] + [
        Transition(t.src + k, t.sym, t.dst + k, t.colours)
        for t in y.to_tela().transitions
    ]
    return BA(
        x.n_states + y.n_states,
        x.alphabet,
        trans,
        sorted(x.initial) + [q + k for q in sorted(y.initial)],
    )


@pytest.fixture(scope="session")
def b1():
    """Weak: accepts every word containing a b; complement is {a^w}."""
    return mk_ba(
        2,
        [(0, SA, 0, False), (0, SB, 1, False), (1, SA, 1, True), (1, SB, 1, True)],
        [0],
    )


@pytest.fixture(scope="session")
def b2():
    """Deterministic, one accepting SCC {1,2} reached deterministically."""
    return mk_ba(
        3,
        [
            (0, SA, 0, False),
            (0, SB, 1, False),
            (1, SA, 2, True),
            (1, SB, 1, False),
            (2, SA, 1, False),
            (2, SB, 2, False),
        ],
        [0],
    )


@pytest.fixture(scope="session")
def n1():
    """Nondeterministic accepting SCC {0,1} with mixed cycles."""
    return mk_ba(
        2,
        [
            (0, SA, 0, True),
            (0, SA, 1, False),
            (0, SB, 0, False),
            (1, SA, 0, False),
            (1, SB, 1, False),
        ],
        [0],
    )


@pytest.fixture(scope="session")
def d2():
    """Two deterministic accepting SCCs; {1,2} entered nondeterministically
    (plain DAC), {3,4} deterministically (IDAC-eligible)."""
    return mk_ba(
        5,
        [
            (0, SA, 1, False),
            (0, SA, 2, False),
            (0, SB, 3, False),
            (1, SA, 2, True),
            (1, SB, 1, False),
            (2, SA, 1, False),
            (2, SB, 2, False),
            (3, SA, 3, False),
            (3, SB, 4, True),
            (4, SA, 4, False),
            (4, SB, 3, False),
        ],
        [0],
    )


@pytest.fixture(scope="session")
def b1_b2(b1, b2):
    return disjoint_union(b1, b2)


@pytest.fixture(scope="session")
def nac13():
    """One 13-state NAC; its first lift overflows the default rank cap."""
    edges = []
    for q in range(13):
        edges.append((q, SA, (q + 1) % 13, q == 0))
        edges.append((q, SA, q, False))
        edges.append((q, SB, q, False))
    return mk_ba(13, edges, list(range(13)))


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(n, desc): acceptance criterion gate test"
    )
    config._acceptance = {}


def pytest_collection_modifyitems(config, items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            n, desc = mark.args
            config._acceptance[item.nodeid] = [n, desc, None]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    table = getattr(item.config, "_acceptance", None)
    if table is None or item.nodeid not in table:
        return
    entry = table[item.nodeid]
    if report.when == "call":
        entry[2] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        entry[2] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = getattr(config, "_acceptance", {})
    if not table:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, desc, outcome in sorted(table.values()):
        if outcome == "passed":
            verdict = "PASS"
        elif outcome is None:
            verdict = "NOT RUN"
        else:
            verdict = outcome.upper() if outcome != "failed" else "FAIL"
        tr.write_line(f"ACCEPTANCE {n}: {verdict} - {desc}")
