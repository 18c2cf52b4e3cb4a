"""Elections, voting rules and tie-broken winner determination.

Every rule is evaluated on a *tally*, a mapping from ranking to total weight.
A weighted vote and ``weight`` identical unit votes produce the same tally, so
weighted and unweighted elections share one code path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

INFINITE = math.inf

Ranking = Tuple[str, ...]
Tally = Mapping[Ranking, int]

RULE_KINDS = (
    "plurality",
    "veto",
    "k_approval",
    "k_veto",
    "borda",
    "scoring",
    "maximin",
    "copeland",
    "bucklin",
    "runoff",
    "stv",
)
POSITIONAL_KINDS = ("plurality", "veto", "k_approval", "k_veto", "borda", "scoring")


class ElectionError(ValueError):
    """Invalid election, rule, or rule/election combination."""


@dataclass(frozen=True)
class Vote:
    ranking: Ranking
    weight: int = 1
    price: Optional[float] = None  # None: not purchasable

    def __post_init__(self):
        object.__setattr__(self, "ranking", tuple(self.ranking))
        if not isinstance(self.weight, int) or self.weight < 1:
            raise ElectionError(f"vote weight must be a positive integer, got {self.weight!r}")
        if self.price is not None and self.price != INFINITE:
            if int(self.price) != self.price or self.price < 0:
                raise ElectionError(f"price must be a natural number or inf, got {self.price!r}")
            object.__setattr__(self, "price", int(self.price))


@dataclass(frozen=True)
class Election:
    candidates: Tuple[str, ...]
    votes: Tuple[Vote, ...]
    tiebreak: Tuple[str, ...] = ()

    def __post_init__(self):
        cands = tuple(self.candidates)
        object.__setattr__(self, "candidates", cands)
        object.__setattr__(self, "votes", tuple(self.votes))
        object.__setattr__(self, "tiebreak", tuple(self.tiebreak) or cands)
        if not cands or any(not isinstance(c, str) or not c for c in cands):
            raise ElectionError("candidates must be nonempty strings")
        if len(set(cands)) != len(cands):
            raise ElectionError("duplicate candidate names")
        if sorted(self.tiebreak) != sorted(cands):
            raise ElectionError("tiebreak must be a permutation of the candidates")
        if not self.votes:
            raise ElectionError("an election needs at least one vote")
        cset = set(cands)
        for i, v in enumerate(self.votes):
            if len(v.ranking) != len(cands) or set(v.ranking) != cset:
                raise ElectionError(f"vote {i} does not rank exactly the candidate set")

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def total_weight(self) -> int:
        return sum(v.weight for v in self.votes)

    def tally(self) -> Dict[Ranking, int]:
        out: Dict[Ranking, int] = {}
        for v in self.votes:
            out[v.ranking] = out.get(v.ranking, 0) + v.weight
        return out

    def with_rankings(self, changes: Mapping[int, Ranking]) -> "Election":
        """Return a copy where vote ``i`` is re-ranked as ``changes[i]``."""
        votes = list(self.votes)
        for i, r in changes.items():
            old = votes[i]
            votes[i] = Vote(tuple(r), old.weight, old.price)
        return Election(self.candidates, tuple(votes), self.tiebreak)

    def expanded(self) -> "Election":
        """Unweighted copy: each vote repeated weight-many times."""
        votes = [Vote(v.ranking, 1, v.price) for v in self.votes for _ in range(v.weight)]
        return Election(self.candidates, tuple(votes), self.tiebreak)


@dataclass(frozen=True)
class RuleSpec:
    kind: str
    k: Optional[int] = None
    alpha: Fraction = Fraction(0)
    vector: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ElectionError(f"unknown rule {self.kind!r}")
        if self.kind in ("k_approval", "k_veto"):
            if not isinstance(self.k, int) or self.k < 1:
                raise ElectionError(f"{self.kind} needs a positive integer k")
        alpha = Fraction(self.alpha)
        if not 0 <= alpha <= 1:
            raise ElectionError("copeland alpha must lie in [0, 1]")
        object.__setattr__(self, "alpha", alpha)
        if self.kind == "scoring":
            if self.vector is None:
                raise ElectionError("scoring rule needs a score vector")
            vec = tuple(int(a) for a in self.vector)
            _check_vector(vec)
            object.__setattr__(self, "vector", vec)

    @property
    def positional(self) -> bool:
        return self.kind in POSITIONAL_KINDS

    def score_vector(self, m: int) -> Tuple[int, ...]:
        """The integer score vector this rule uses with ``m`` candidates."""
        kind = self.kind
        if kind == "plurality":
            return (1,) + (0,) * (m - 1)
        if kind == "veto":
            return (0,) * (m - 1) + (-1,)
        if kind in ("k_approval", "k_veto"):
            if self.k >= m:
                raise ElectionError(f"{kind} needs k < m (k={self.k}, m={m})")
            if kind == "k_approval":
                return (1,) * self.k + (0,) * (m - self.k)
            return (0,) * (m - self.k) + (-1,) * self.k
        if kind == "borda":
            return tuple(range(m - 1, -1, -1))
        if kind == "scoring":
            if len(self.vector) != m:
                raise ElectionError(f"score vector has length {len(self.vector)}, election has {m} candidates")
            return self.vector
        raise ElectionError(f"{kind} is not a positional scoring rule")

    def __str__(self) -> str:
        if self.kind in ("k_approval", "k_veto"):
            return f"{self.kind.replace('_', '')}:{self.k}"
        if self.kind == "copeland":
            return f"copeland:{self.alpha.numerator}/{self.alpha.denominator}"
        if self.kind == "scoring":
            return "scoring:" + ",".join(map(str, self.vector))
        return self.kind


def _check_vector(vec: Sequence[int]) -> None:
    if len(vec) < 2:
        raise ElectionError("score vector needs at least two entries")
    if any(a < b for a, b in zip(vec, vec[1:])):
        raise ElectionError("score vector must be nonincreasing")
    if vec[0] <= vec[-1]:
        raise ElectionError("score vector must have first entry > last entry")


def normalize_score_vector(vector: Sequence[int]) -> Tuple[int, ...]:
    """Positive affine representative of ``vector`` with a zero tail.

    The minimum is subtracted, then everything is divided by the last nonzero
    gap, which leaves a unit gap followed only by zeros (``(4, 2, 0) ->
    (2, 1, 0)``).  When that division is not exact over the integers the
    vector is divided by the gcd of its gaps instead.
    """
    vec = [int(a) for a in vector]
    _check_vector(vec)
    shifted = [a - vec[-1] for a in vec]
    gaps = [a - b for a, b in zip(shifted, shifted[1:])]
    last = next(g for g in reversed(gaps) if g)
    if any(a % last for a in shifted):
        last = reduce(math.gcd, gaps, 0)
    return tuple(a // last for a in shifted)


def positional_scores(election: Election, vector: Sequence[int]) -> Dict[str, int]:
    if len(vector) != election.m:
        raise ElectionError(f"score vector length {len(vector)} != {election.m} candidates")
    return tally_positional_scores(election.candidates, election.tally(), vector)


def tally_positional_scores(candidates: Iterable[str], tally: Tally, vector: Sequence[int]) -> Dict[str, int]:
    scores = {c: 0 for c in candidates}
    for ranking, w in tally.items():
        for pos, c in enumerate(ranking):
            scores[c] += w * vector[pos]
    return scores


def tally_margins(candidates: Sequence[str], tally: Tally) -> Dict[Tuple[str, str], int]:
    """D(x, y) = weight preferring x to y minus weight preferring y to x."""
    margins = {(x, y): 0 for x in candidates for y in candidates}
    for ranking, w in tally.items():
        for i, x in enumerate(ranking):
            for y in ranking[i + 1:]:
                margins[x, y] += w
                margins[y, x] -= w
    return margins


def majority_graph(election: Election) -> Dict[Tuple[str, str], int]:
    return tally_margins(election.candidates, election.tally())


def _first_choices(candidates: Iterable[str], tally: Tally, alive) -> Dict[str, int]:
    counts = {c: 0 for c in candidates if c in alive}
    for ranking, w in tally.items():
        for c in ranking:
            if c in alive:
                counts[c] += w
                break
    return counts


def _tb_max(cands: Iterable[str], tiebreak: Sequence[str]) -> str:
    order = {c: i for i, c in enumerate(tiebreak)}
    return min(cands, key=order.__getitem__)


def rule_scores(candidates: Sequence[str], tally: Tally, rule: RuleSpec) -> Dict[str, object]:
    """Per-candidate score used to pick co-winners (higher is better).

    Bucklin reports the negated depth; runoff and STV report first-round
    plurality, which does not by itself determine the winner.
    """
    m = len(candidates)
    if rule.positional:
        return tally_positional_scores(candidates, tally, rule.score_vector(m))
    if rule.kind == "maximin":
        if m == 1:
            return {candidates[0]: 0}
        d = tally_margins(candidates, tally)
        return {x: min(d[x, y] for y in candidates if y != x) for x in candidates}
    if rule.kind == "copeland":
        d = tally_margins(candidates, tally)
        return {
            x: sum(1 for y in candidates if y != x and d[x, y] > 0)
            + rule.alpha * sum(1 for y in candidates if y != x and d[x, y] == 0)
            for x in candidates
        }
    if rule.kind == "bucklin":
        return {c: -d for c, d in bucklin_depths(candidates, tally).items()}
    return _first_choices(candidates, tally, set(candidates))


def bucklin_depths(candidates: Sequence[str], tally: Tally) -> Dict[str, int]:
    total = sum(tally.values())
    m = len(candidates)
    reach = {c: [0] * m for c in candidates}
    for ranking, w in tally.items():
        for pos, c in enumerate(ranking):
            reach[c][pos] += w
    depths = {}
    for c in candidates:
        acc = 0
        for level in range(m):
            acc += reach[c][level]
            if 2 * acc > total:
                depths[c] = level + 1
                break
    return depths


def tally_winner(candidates: Sequence[str], tiebreak: Sequence[str], tally: Tally, rule: RuleSpec) -> str:
    if rule.kind == "stv":
        return _stv(candidates, tiebreak, tally)
    if rule.kind == "runoff":
        return _runoff(candidates, tiebreak, tally)
    scores = rule_scores(candidates, tally, rule)
    best = max(scores.values())
    return _tb_max([c for c in candidates if scores[c] == best], tiebreak)


def co_winners(election: Election, rule: RuleSpec) -> Tuple[str, ...]:
    """Winner set before tie-breaking (runoff/STV: the resolved winner only)."""
    tally = election.tally()
    if rule.kind in ("stv", "runoff"):
        return (tally_winner(election.candidates, election.tiebreak, tally, rule),)
    scores = rule_scores(election.candidates, tally, rule)
    best = max(scores.values())
    return tuple(c for c in election.candidates if scores[c] == best)


def compute_winner(election: Election, rule: RuleSpec) -> str:
    if rule.positional:
        rule.score_vector(election.m)  # arity check
    return tally_winner(election.candidates, election.tiebreak, election.tally(), rule)


def _runoff(candidates, tiebreak, tally) -> str:
    rank = {c: i for i, c in enumerate(tiebreak)}
    first = _first_choices(candidates, tally, set(candidates))
    if len(candidates) == 1:
        return candidates[0]
    x, y = sorted(candidates, key=lambda c: (-first[c], rank[c]))[:2]
    d = 0
    for ranking, w in tally.items():
        d += w if ranking.index(x) < ranking.index(y) else -w
    if d != 0:
        return x if d > 0 else y
    return _tb_max((x, y), tiebreak)


def _stv(candidates, tiebreak, tally) -> str:
    rank = {c: i for i, c in enumerate(tiebreak)}
    alive = set(candidates)
    while len(alive) > 1:
        first = _first_choices(candidates, tally, alive)
        low = min(first.values())
        # among tied-lowest, drop the one ranked lowest in the tie-break order
        loser = max((c for c in alive if first[c] == low), key=rank.__getitem__)
        alive.discard(loser)
    return next(iter(alive))
