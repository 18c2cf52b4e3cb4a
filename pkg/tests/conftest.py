import itertools
import random

import pytest
from hypothesis import strategies as st

from frugal.election import Election, RuleSpec, Vote


def election(votes, tiebreak=None, candidates=None):
    """Build an election from ``"a>b>p"`` strings or ``(ranking, weight[, price])`` tuples."""
    parsed = []
    for v in votes:
        if isinstance(v, str):
            parsed.append(Vote(tuple(v.split(">"))))
        else:
            r, *rest = v
            parsed.append(Vote(tuple(r.split(">")), *rest))
    cands = candidates or tuple(sorted(parsed[0].ranking))
    tb = tuple(tiebreak.split(">")) if isinstance(tiebreak, str) else (tiebreak or ())
    return Election(tuple(cands), tuple(parsed), tb)


def rules_for(m):
    out = [RuleSpec(k) for k in ("plurality", "veto", "borda", "maximin", "bucklin", "runoff", "stv")]
    out.append(RuleSpec("copeland", alpha=__import__("fractions").Fraction(1, 2)))
    out += [RuleSpec("k_approval", k=k) for k in range(2, m)]
    out += [RuleSpec("k_veto", k=k) for k in range(2, m)]
    return out


@st.composite
def elections(draw, m_max=4, n_max=4, w_max=1, priced=False):
    m = draw(st.integers(3, m_max))
    cands = tuple("pabcdefg"[:m])
    perms = list(itertools.permutations(cands))
    n = draw(st.integers(1, n_max))
    votes = []
    for _ in range(n):
        r = draw(st.sampled_from(perms))
        w = draw(st.integers(1, w_max))
        price = draw(st.integers(0, 3)) if priced else None
        votes.append(Vote(r, w, price))
    tb = draw(st.permutations(cands))
    return Election(cands, tuple(votes), tuple(tb))


def random_election(rng: random.Random, m, n, w_max=1, priced=False, price_max=3):
    cands = tuple("pabcdefg"[:m])
    votes = []
    for _ in range(n):
        r = list(cands)
        rng.shuffle(r)
        price = rng.randint(0, price_max) if priced else None
        votes.append(Vote(tuple(r), rng.randint(1, w_max), price))
    tb = list(cands)
    rng.shuffle(tb)
    return Election(cands, tuple(votes), tuple(tb))


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
