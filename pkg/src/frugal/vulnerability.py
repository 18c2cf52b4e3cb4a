"""Vulnerable votes and bribery instances."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import List, Mapping, Optional, Tuple

from .election import INFINITE, Election, ElectionError, RuleSpec, Vote, compute_winner


class Variant(enum.Enum):
    FRUGAL = "frugal"
    DOLLAR_UNIFORM = "uniform"
    DOLLAR_NONUNIFORM = "nonuniform"

    @property
    def priced(self) -> bool:
        return self is not Variant.FRUGAL


class InstanceError(ElectionError):
    pass


class UnknownTarget(InstanceError):
    pass


class MissingPrice(InstanceError):
    pass


class NonUniformPrices(InstanceError):
    pass


def classify_vulnerable(election: Election, rule: RuleSpec, target: str) -> List[bool]:
    """``True`` for each vote ranking ``target`` strictly above the current winner."""
    if target not in election.candidates:
        raise UnknownTarget(f"unknown target {target!r}")
    winner = compute_winner(election, rule)
    if winner == target:
        return [False] * len(election.votes)
    return [v.ranking.index(target) < v.ranking.index(winner) for v in election.votes]


@dataclass(frozen=True)
class BriberyInstance:
    election: Election
    rule: RuleSpec
    target: str
    variant: Variant = Variant.FRUGAL
    budget: Optional[int] = None

    @cached_property
    def vulnerable(self) -> Tuple[int, ...]:
        flags = classify_vulnerable(self.election, self.rule, self.target)
        return tuple(i for i, f in enumerate(flags) if f)

    def price(self, i: int) -> float:
        """Cost of changing vote ``i``; 0 for every vote under FRUGAL."""
        if not self.variant.priced:
            return 0
        p = self.election.votes[i].price
        return INFINITE if p is None else p

    @property
    def effective_budget(self) -> float:
        return 0 if not self.variant.priced else self.budget


def build_instance(
    election: Election,
    rule: RuleSpec,
    target: str,
    prices: Optional[Mapping[int, float]] = None,
    budget: Optional[int] = None,
    variant: Variant = Variant.FRUGAL,
) -> BriberyInstance:
    """Validate and assemble an instance.

    ``prices`` maps vote indices to naturals or ``INFINITE`` and overrides any
    price stored on the votes.  Prices on non-vulnerable votes are ignored.
    """
    if target not in election.candidates:
        raise UnknownTarget(f"unknown target {target!r}")
    if prices:
        election = _with_prices(election, prices)
    inst = BriberyInstance(election, rule, target, variant, budget)
    if variant.priced:
        if budget is None or budget < 0:
            raise InstanceError("priced variants need a nonnegative budget")
        vuln = inst.vulnerable
        missing = [i for i in vuln if election.votes[i].price is None]
        if missing:
            raise MissingPrice(f"vulnerable votes without a price: {missing}")
        if variant is Variant.DOLLAR_UNIFORM:
            finite = {election.votes[i].price for i in vuln} - {INFINITE}
            if len(finite) > 1:
                raise NonUniformPrices(f"uniform variant with prices {sorted(finite)}")
    return inst


def _with_prices(election: Election, prices: Mapping[int, float]) -> Election:
    votes = list(election.votes)
    for i, p in prices.items():
        v = votes[i]
        votes[i] = Vote(v.ranking, v.weight, p)
    return Election(election.candidates, tuple(votes), election.tiebreak)
