import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frugal.election import INFINITE, Election, RuleSpec, compute_winner
from frugal.vulnerability import (
    MissingPrice,
    NonUniformPrices,
    UnknownTarget,
    Variant,
    build_instance,
    classify_vulnerable,
)

from conftest import election, elections, rules_for

PLU = RuleSpec("plurality")


def test_labels_example():
    e = election(["a>b>p", "a>b>p", "b>p>a"], "a>b>p", ("p", "a", "b"))
    assert classify_vulnerable(e, PLU, "p") == [False, False, True]


def test_unknown_target():
    e = election(["a>b>p"], candidates=("p", "a", "b"))
    with pytest.raises(UnknownTarget):
        classify_vulnerable(e, PLU, "z")
    with pytest.raises(UnknownTarget):
        build_instance(e, PLU, "z")


def test_build_instance_price_checks():
    e = election(["a>b>p", "b>p>a", "a>p>b", "p>a>b"], "a>b>p", ("p", "a", "b"))
    inst = build_instance(e, PLU, "p")
    assert inst.vulnerable == (1, 3)
    assert inst.variant is Variant.FRUGAL and inst.price(1) == 0
    with pytest.raises(MissingPrice):
        build_instance(e, PLU, "p", prices={1: 1}, budget=1, variant=Variant.DOLLAR_NONUNIFORM)
    inst = build_instance(e, PLU, "p", prices={1: 1, 3: INFINITE}, budget=2, variant=Variant.DOLLAR_UNIFORM)
    assert inst.price(3) == INFINITE
    with pytest.raises(NonUniformPrices):
        build_instance(e, PLU, "p", prices={1: 1, 3: 2}, budget=2, variant=Variant.DOLLAR_UNIFORM)


def test_prices_on_non_vulnerable_votes_are_ignored():
    e = election([("a>b>p", 1, 5), "b>p>a"], "a>b>p", ("p", "a", "b"))
    inst = build_instance(e, PLU, "p", prices={1: 2}, budget=0, variant=Variant.DOLLAR_NONUNIFORM)
    assert inst.vulnerable == (1,)


@settings(max_examples=150, deadline=None)
@given(elections(m_max=4, n_max=5, w_max=2), st.data())
def test_label_soundness(e, data):
    rule = data.draw(st.sampled_from(rules_for(e.m)))
    target = data.draw(st.sampled_from(e.candidates))
    labels = classify_vulnerable(e, rule, target)
    w = compute_winner(e, rule)
    for v, flag in zip(e.votes, labels):
        if w == target:
            assert not flag
        else:
            assert flag == (v.ranking.index(target) < v.ranking.index(w))


@settings(max_examples=100, deadline=None)
@given(elections(m_max=4, n_max=5), st.data())
def test_labels_follow_vote_permutation(e, data):
    rule = data.draw(st.sampled_from(rules_for(e.m)))
    order = data.draw(st.permutations(range(len(e.votes))))
    shuffled = Election(e.candidates, tuple(e.votes[i] for i in order), e.tiebreak)
    labels = classify_vulnerable(e, rule, "p")
    assert classify_vulnerable(shuffled, rule, "p") == [labels[i] for i in order]
