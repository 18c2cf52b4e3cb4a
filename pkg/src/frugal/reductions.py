"""Instance generators for the hardness reductions, with certificates.

Each generator returns a :class:`ReductionOutput`: the bribery instance, a
JSON-serialisable certificate (which generated votes encode which source
object, which votes are expected to be vulnerable, the score relations the
construction promises) and a ``forward`` callable turning a source solution
into a bribery witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .election import INFINITE, Election, ElectionError, Ranking, RuleSpec, Vote, normalize_score_vector, tally_positional_scores
from .vulnerability import BriberyInstance, Variant


class ReductionError(ElectionError):
    pass


class EmptyDummySet(ReductionError):
    pass


class ConditionViolated(ReductionError):
    pass


class TrivialInstance(ReductionError):
    """Source instance whose answer is known without reduction."""

    def __init__(self, message: str, decision: bool):
        super().__init__(message)
        self.decision = decision


@dataclass(frozen=True)
class X3CInstance:
    universe: Tuple[str, ...]
    sets: Tuple[Tuple[str, str, str], ...]

    def __post_init__(self):
        universe = tuple(str(u) for u in self.universe)
        sets = tuple(tuple(str(x) for x in s) for s in self.sets)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "sets", sets)
        if not universe or len(universe) % 3:
            raise ReductionError("X3C universe size must be a positive multiple of 3")
        if len(set(universe)) != len(universe):
            raise ReductionError("duplicate universe elements")
        for s in sets:
            if len(set(s)) != 3 or not set(s) <= set(universe):
                raise ReductionError(f"{s} is not a 3-subset of the universe")


@dataclass(frozen=True)
class PartitionInstance:
    weights: Tuple[int, ...]
    variant: str = "half"  # "half": target total/2, "quarter": target total/4

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights or any(w <= 0 for w in weights):
            raise ReductionError("partition weights must be positive integers")
        divisor = {"half": 2, "quarter": 4}.get(self.variant)
        if divisor is None:
            raise ReductionError(f"unknown partition variant {self.variant!r}")
        if sum(weights) % divisor:
            raise ReductionError(f"total {sum(weights)} is not divisible by {divisor}")

    @property
    def total(self) -> int:
        return sum(self.weights)

    @property
    def target(self) -> int:
        return self.total // (2 if self.variant == "half" else 4)


@dataclass(frozen=True)
class CMInstance:
    """Coalitional manipulation: truthful votes, ``manipulators`` free voters, target."""

    candidates: Tuple[str, ...]
    votes: Tuple[Vote, ...]
    manipulators: int
    target: str
    tiebreak: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(self, "votes", tuple(self.votes))
        object.__setattr__(self, "tiebreak", tuple(self.tiebreak) or tuple(self.candidates))
        if self.target not in self.candidates:
            raise ReductionError(f"unknown target {self.target!r}")
        if self.manipulators < 0:
            raise ReductionError("negative number of manipulators")


@dataclass
class ReductionOutput:
    name: str
    instance: BriberyInstance
    certificate: dict
    forward: Callable[[object], Dict[int, Ranking]] = field(repr=False)


# -- score realisation -------------------------------------------------------


@dataclass
class ScoreRealization:
    votes: List[Ranking]
    lam: int


def _unit_gap(vector: Sequence[int]) -> int:
    for g in range(len(vector) - 1):
        if vector[g] - vector[g + 1] == 1:
            return g
    raise ReductionError("score vector has no unit gap; normalise it first")


def _rotation_block(candidates, up, down, gap):
    """``len(candidates)`` cyclic votes; ``up`` gains 1, ``down`` loses 1."""
    return _rotations(tuple(candidates), up, down, gap)


@lru_cache(maxsize=4096)
def _rotations(candidates, up, down, gap):
    order = [down, up] + [c for c in candidates if c not in (up, down)]
    m = len(order)
    votes = []
    for shift in range(m):
        vote = [order[(i - shift) % m] for i in range(m)]
        if shift == gap:
            vote[gap], vote[gap + 1] = vote[gap + 1], vote[gap]
        votes.append(tuple(vote))
    return tuple(votes)


def _pair_block(frame, up, down, center=None, avoid=None):
    """Two Borda votes; ``up`` gains 1, ``down`` loses 1 relative to the rest.

    The remaining candidates keep their ``frame`` order in the first vote and
    are reversed in the second.  With ``center`` given, the split point and
    the slot of ``center`` are searched so that it sits within one position
    of the middle of both votes and is never directly followed by ``avoid``.
    """
    rest = [c for c in frame if c not in (up, down, center)]

    def build(order, h):
        first = tuple(order[:h]) + (up, down) + tuple(order[h:])
        second = tuple(reversed(order[h:])) + (up, down) + tuple(reversed(order[:h]))
        return [first, second]

    if center is None:
        return build(rest, len(rest))
    slots = [None] if center in (up, down) else range(len(rest) + 1)
    best = None
    for slot in slots:
        order = list(rest)
        if slot is not None:
            order.insert(slot, center)
        for h in range(len(order) + 1):
            pair = build(order, h)
            if not all(_centered(v, center, avoid) for v in pair):
                continue
            spread = sum(abs(2 * v.index(center) + 1 - len(v)) for v in pair)
            if best is None or spread < best[0]:
                best = (spread, pair)
    if best is None:
        raise ReductionError(f"no paired layout keeps {center} central for transfer {up}->{down}")
    return best[1]


def _centered(vote, center, avoid):
    m = len(vote)
    pos = vote.index(center) + 1
    if abs(2 * pos - (m + 1)) > 2:
        return False
    return pos == m or vote[pos] != avoid


def realize_scores(
    candidates: Sequence[str],
    targets: Dict[str, int],
    dummies: Sequence[str],
    vector: Sequence[int],
    base: Optional[Dict[str, int]] = None,
    dummy_gap: int = 0,
    frame: Optional[Sequence[str]] = None,
    center: Optional[str] = None,
    avoid: Optional[str] = None,
) -> ScoreRealization:
    """Votes giving each named candidate ``lam + targets[c]`` and every dummy less than ``lam - dummy_gap``.

    ``base`` holds scores already contributed by other votes; the returned
    votes top them up.  Each unit transfer is a block of cyclic rotations
    with one adjacent swap at a unit gap of ``vector``.  If ``frame`` is
    given the vector must be Borda and transfers use two-vote mirrored pairs
    laid out on ``frame`` instead, keeping ``center`` mid-ballot.
    """
    if not dummies:
        raise EmptyDummySet("score realisation needs at least one dummy candidate")
    base = base or {}
    candidates = list(candidates)
    named = [c for c in candidates if c in targets]
    pivot = dummies[0]
    need = {c: targets[c] - base.get(c, 0) for c in named}

    rounds = 0
    spill = base.get(pivot, 0) - sum(need.values()) + dummy_gap
    if spill >= 0:
        rounds = spill // (len(named) + 1) + 1
    for d in dummies[1:]:
        rounds = max(rounds, base.get(d, 0) + dummy_gap + 1)

    transfers = []
    for c in named:
        transfers += [(c, pivot)] * max(need[c], 0) + [(pivot, c)] * max(-need[c], 0)
    transfers += [(c, pivot) for _ in range(rounds) for c in named]

    votes: List[Ranking] = []
    if frame is None:
        gap = _unit_gap(vector)
        for up, down in transfers:
            votes += _rotation_block(candidates, up, down, gap)
    else:
        if tuple(vector) != tuple(range(len(candidates) - 1, -1, -1)):
            raise ReductionError("paired transfer blocks need the Borda vector")
        for up, down in transfers:
            votes += _pair_block(frame, up, down, center, avoid)

    scores = tally_positional_scores(candidates, _count(votes), vector)
    for c, s in base.items():
        scores[c] += s
    lam = scores[named[0]] - targets[named[0]] if named else 0
    return ScoreRealization(votes, lam)


def _count(rankings):
    out = {}
    for r in rankings:
        r = tuple(r)
        out[r] = out.get(r, 0) + 1
    return out


# -- shared helpers ----------------------------------------------------------


def _universe_names(src: X3CInstance) -> Dict[str, str]:
    return {u: f"u{u}" for u in src.universe}


def _dummies(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def _relation(kind: str, x: str, y: str, delta: int) -> list:
    """``s(x) - s(y) == delta`` (kind "eq") or ``< delta`` (kind "lt")."""
    return [kind, x, y, delta]


def check_relations(election: Election, vector: Sequence[int], relations) -> List[str]:
    """Messages for every violated score relation; empty when all hold."""
    scores = tally_positional_scores(election.candidates, election.tally(), vector)
    bad = []
    for kind, x, y, delta in relations:
        diff = scores[x] - scores[y]
        ok = diff == delta if kind == "eq" else diff < delta
        if not ok:
            bad.append(f"s({x}) - s({y}) = {diff}, expected {'==' if kind == 'eq' else '<'} {delta}")
    return bad


def _gadget_votes(rankings, target, winner, price=INFINITE):
    made = {}
    out = []
    for r in rankings:
        r = tuple(r)
        if r not in made:
            made[r] = Vote(r, 1, price if r.index(target) < r.index(winner) else None)
        out.append(made[r])
    return out


def _relations_for(named_targets, dummies, gap, ref):
    rel = [_relation("eq", c, ref, t - named_targets[ref]) for c, t in named_targets.items() if c != ref]
    rel += [_relation("lt", d, ref, -gap - named_targets[ref]) for d in dummies]
    return rel


# -- unweighted X3C reductions ----------------------------------------------


def gen_borda_x3c(src: X3CInstance, as_printed: bool = False) -> ReductionOutput:
    """Borda, FRUGAL: an exact cover lets ``p`` overtake ``c``.

    With the literal dummy block sizes every universe candidate ties ``p``
    before bribery and ends one point ahead after the cover is applied.  By
    default the block between ``p`` and ``U`` in the first gadget vote gets
    one extra dummy, which puts ``U`` one point below ``p``.
    ``as_printed=True`` keeps the literal sizes.
    """
    m = len(src.universe)
    names = _universe_names(src)
    U = [names[u] for u in src.universe]
    D = _dummies("d", 5 * m)
    sizes = [4 * m // 3 - 2, m - 1 if as_printed else m, m - 2, 5 * m // 3 - 1]
    cuts = [sum(sizes[:i]) for i in range(5)]
    Da, Db, Dc, Dd = (D[cuts[i]:cuts[i + 1]] for i in range(4))
    candidates = ["p", "c", "z"] + U + D
    fixed = U + D

    def rest(*used):
        taken = set().union(*map(set, used))
        return [x for x in fixed if x not in taken]

    votes: List[Ranking] = []
    source: Dict[str, list] = {}
    for i, s in enumerate(src.sets, 1):
        S = [names[u] for u in src.universe if u in s]
        notS = [x for x in U if x not in S]
        v1 = ["p"] + D + notS + ["c", "z"] + S
        v2 = S[::-1] + ["z", "c"] + notS[::-1] + D[::-1] + ["p"]
        source[f"S{i}"] = [len(votes), len(votes) + 1]
        votes += [tuple(v1), tuple(v2)]
    mu1 = ["z", "c"] + Da + ["p"] + Db + U + rest(Da, Db, U)
    mu2 = U[::-1] + Dc + ["c", "p"] + Dd + ["z"] + rest(Dc, Dd, U)
    source["gadget"] = [len(votes), len(votes) + 1]
    votes += [tuple(mu1), tuple(mu2)]

    tiebreak = ["p"] + fixed + ["c", "z"]
    election = Election(tuple(candidates), tuple(Vote(v) for v in votes), tuple(tiebreak))
    instance = BriberyInstance(election, RuleSpec("borda"), "p", Variant.FRUGAL)
    designated = [source[f"S{i}"][0] for i in range(1, len(src.sets) + 1)]

    def forward(cover):
        witness = {}
        for i in cover:
            r = list(votes[designated[i]])
            r.remove("c")
            witness[designated[i]] = tuple(r + ["c"])
        return witness

    u_gap = 0 if as_printed else -1
    relations = [_relation("eq", "c", "p", 4 * m // 3), _relation("eq", "z", "p", -(m // 3))]
    relations += [_relation("eq", x, "p", u_gap) for x in U]
    relations += [_relation("lt", d, "p", 0) for d in D]
    cert = {
        "source_votes": source,
        "designated": designated,
        "exact_vulnerable": True,
        "stated_winner": "c",
        "lambda": None,
        "relations": relations,
        "vector": list(range(len(candidates) - 1, -1, -1)),
    }
    return ReductionOutput("borda-x3c", instance, cert, forward)


def _priced_x3c(name, candidates, tiebreak, rule, vector, priced_votes, targets, dummies, gap, winner, budget, forward_vote, frame=None, order=None):
    """Shared tail of the dollar X3C reductions: score gadget, prices, certificate."""
    base = tally_positional_scores(candidates, _count(priced_votes), vector)
    named = {c: t for c, t in targets.items()}
    real = realize_scores(order or candidates, named, dummies, vector, base=base, dummy_gap=gap, frame=frame)
    votes = [Vote(tuple(v), 1, 1) for v in priced_votes]
    votes += _gadget_votes(real.votes, "p", winner)
    election = Election(tuple(candidates), tuple(votes), tuple(tiebreak))
    instance = BriberyInstance(election, rule, "p", Variant.DOLLAR_NONUNIFORM, budget)
    designated = list(range(len(priced_votes)))

    def forward(cover):
        return {designated[i]: tuple(forward_vote(i)) for i in cover}

    cert = {
        "source_votes": {f"S{i + 1}": [i] for i in designated},
        "designated": designated,
        "exact_vulnerable": False,
        "stated_winner": winner,
        "lambda": real.lam,
        "relations": _relations_for(named, dummies, gap, "p"),
        "vector": list(vector),
    }
    return ReductionOutput(name, instance, cert, forward)


def gen_kapproval_x3c(src: X3CInstance, k: int = 5) -> ReductionOutput:
    """k-approval (k >= 5), priced: covering sets push ``p`` past ``q``."""
    if k < 5:
        raise ReductionError("k-approval reduction needs k >= 5")
    names = _universe_names(src)
    U = [names[u] for u in src.universe]
    D = _dummies("d", k - 1)
    candidates = ["p", "q"] + U + D
    third = len(U) // 3
    rule = RuleSpec("k_approval", k=k)
    vector = rule.score_vector(len(candidates))
    priced = []
    for s in src.sets:
        S = [names[u] for u in src.universe if u in s]
        priced.append(["p", "q"] + S + D + [x for x in U if x not in S])
    targets = {"p": 0, "q": third, **{x: 1 for x in U}}

    def forward_vote(i):
        return ["p"] + D + U + ["q"]

    return _priced_x3c(
        "kapproval-x3c", candidates, ["p", "q"] + U + D, rule, vector, priced,
        targets, D, third, "q", third, forward_vote,
    )


def gen_kveto_x3c(src: X3CInstance, k: int = 3) -> ReductionOutput:
    """k-veto (k >= 3), priced: vetoing ``a1..a3`` instead of covered elements."""
    if k < 3:
        raise ReductionError("k-veto reduction needs k >= 3")
    names = _universe_names(src)
    U = [names[u] for u in src.universe]
    Q = _dummies("q", k - 3)
    A = ["a1", "a2", "a3"]
    candidates = ["p"] + A + U + Q + ["d"]
    third = len(U) // 3
    rule = RuleSpec("k_veto", k=k)
    vector = rule.score_vector(len(candidates))
    priced = []
    for s in src.sets:
        S = [names[u] for u in src.universe if u in s]
        priced.append(["p"] + A + [x for x in U if x not in S] + ["d"] + S + Q)
    targets = {"p": 0, **{a: third - 1 for a in A}, **{x: -2 for x in U}, **{q: -1 for q in Q}}

    def forward_vote(i):
        return ["p"] + U + ["d"] + A + Q

    return _priced_x3c(
        "kveto-x3c", candidates, A + U + Q + ["d", "p"], rule, vector, priced,
        targets, ["d"], 0, "a1", third, forward_vote,
    )


def borda_family(multiplier: int = 2) -> Callable[[int], Tuple[int, ...]]:
    """Borda vectors of length ``multiplier * n`` for a universe of size ``n``."""

    def f(n: int) -> Tuple[int, ...]:
        length = multiplier * n
        return tuple(range(length - 1, -1, -1))

    return f


def scoring_positions(vector: Sequence[int], universe_size: int) -> List[int]:
    """1-based positions ``l`` usable by :func:`gen_scoring_x3c` for this vector.

    ``l`` needs three consecutive unit gaps after normalisation, two slots
    above it and room below for the rest of the universe.
    """
    vec = normalize_score_vector(vector)
    out = []
    for l in range(3, len(vec) - universe_size + 1):
        if all(vec[i - 1] - vec[i] == 1 for i in range(l, l + 3)):
            out.append(l)
    return out


def gen_scoring_x3c(
    src: X3CInstance,
    family: Optional[Callable[[int], Sequence[int]]] = None,
    l: Optional[int] = None,
) -> ReductionOutput:
    """Positional scoring rule given by ``family``, priced.

    Each set vote reads ``p d F a x y z Q (U - S)``, ``a`` at position ``l``.
    Buying a vote moves ``a`` below ``z``: ``a`` loses 3, ``x, y, z`` gain 1.
    """
    family = family or borda_family()
    n = len(src.universe)
    raw = tuple(family(n))
    if len(raw) < 2 * n:
        raise ConditionViolated(f"vector length {len(raw)} is below twice the universe size {n}")
    if len(set(raw)) == 1:
        raise ConditionViolated("constant score vector")
    vector = normalize_score_vector(raw)
    allowed = scoring_positions(vector, n)
    if l is None:
        if not allowed:
            raise ConditionViolated("no position with three consecutive unit gaps")
        l = allowed[0]
    elif l not in allowed:
        raise ConditionViolated(f"position {l} does not qualify; allowed: {allowed}")

    names = _universe_names(src)
    U = [names[u] for u in src.universe]
    M = len(vector)
    F = _dummies("f", l - 3)
    Q = _dummies("q", M - l - n)
    candidates = ["p", "d"] + F + ["a"] + U + Q
    rule = RuleSpec("scoring", vector=vector)
    priced, forwarded = [], []
    for s in src.sets:
        S = [names[u] for u in src.universe if u in s]
        rest = [x for x in U if x not in S]
        priced.append(["p", "d"] + F + ["a"] + S + Q + rest)
        forwarded.append(["p", "d"] + F + S + ["a"] + Q + rest)
    targets = {"p": 0, "a": n - 1, **{x: -2 for x in U}, **{q: -1 for q in Q}}

    out = _priced_x3c(
        "scoring-x3c", candidates, ["a"] + U + Q + ["d"] + F + ["p"], rule, vector, priced,
        targets, ["d"] + F, 0, "a", n // 3, lambda i: forwarded[i],
    )
    out.certificate["position"] = l
    return out


# -- manipulation reductions -------------------------------------------------


def cm_scores(cm: CMInstance) -> Dict[str, int]:
    m = len(cm.candidates)
    tally = {}
    for v in cm.votes:
        tally[v.ranking] = tally.get(v.ranking, 0) + v.weight
    return tally_positional_scores(cm.candidates, tally, range(m - 1, -1, -1))


def gen_uniform_borda_cm(cm: CMInstance) -> ReductionOutput:
    """Borda CM with two manipulators to uniform-price bribery with budget 2.

    The two slot votes ``nu1, nu2`` stand in for the manipulators.  Score
    offsets are laid down so that, ignoring the slot votes, every ``x`` in
    ``C - {p}`` sits at ``lam + s(x)`` and ``p`` at ``lam + s(p) - 2``.
    """
    if cm.manipulators != 2:
        raise ReductionError("this reduction needs exactly two manipulators")
    p = cm.target
    C = list(cm.candidates)
    m = len(C)
    M = m + 2
    if m < 3:
        raise ReductionError("need at least three candidates")
    vector = tuple(range(M - 1, -1, -1))
    s = cm_scores(cm)
    others = [x for x in C if x != p]
    lifted = [v.ranking + ("d", "q") for v in cm.votes for _ in range(v.weight)]
    slot = tuple(others + ["d", p, "q"])
    fixed = lifted + [slot, slot]
    base = tally_positional_scores(C + ["d", "q"], _count(fixed), vector)
    on_slots = {c: 2 * (M - 1 - slot.index(c)) for c in slot}

    targets = {x: s[x] + on_slots[x] for x in others}
    targets[p] = s[p] - 2 + on_slots[p]
    targets["q"] = s[p] - 2 - 2 * m + 1
    gap = -(s[p] - 2 - 2 * m + on_slots["d"])
    frame = ["q"] + others + ["d"]
    candidates = C + ["d", "q"]
    real = realize_scores(candidates, targets, ["d"], vector, base=base, dummy_gap=gap, frame=frame + [p], center=p, avoid="q")
    bad = [v for v in real.votes if not _centered(v, p, "q")]
    if bad:
        raise ReductionError(f"gadget vote breaks the layout around {p}: {bad[0]}")

    tiebreak = [x for x in cm.tiebreak if x != p] + ["d", "q", p]
    rankings = fixed + real.votes
    election = Election(tuple(candidates), tuple(Vote(r, 1, 1) for r in rankings), tuple(tiebreak))
    instance = BriberyInstance(election, RuleSpec("borda"), p, Variant.DOLLAR_UNIFORM, 2)
    slots = [len(lifted), len(lifted) + 1]

    def forward(manipulation):
        out = {}
        for idx, u in zip(slots, manipulation):
            out[idx] = (p, "d") + tuple(x for x in u if x != p) + ("q",)
        return out

    ref = targets[p]
    relations = [_relation("eq", c, p, t - ref) for c, t in targets.items() if c != p]
    relations.append(_relation("lt", "d", p, -gap - ref))
    cert = {
        "source_votes": {"nu1": [slots[0]], "nu2": [slots[1]], "lifted": list(range(len(lifted)))},
        "designated": slots,
        "exact_vulnerable": False,
        "stated_winner": None,
        "lambda": real.lam,
        "relations": relations,
        "vector": list(vector),
        "layout": "paired swap blocks; p within one slot of the middle, q never right after p",
    }
    return ReductionOutput("uniform-borda-cm", instance, cert, forward)


def embed_cm_dollar(cm: CMInstance, rule: Optional[RuleSpec] = None) -> BriberyInstance:
    """CM as zero-budget priced bribery: manipulator votes cost 0, the rest 1."""
    rule = rule or RuleSpec("borda")
    p = cm.target
    top = (p,) + tuple(x for x in cm.candidates if x != p)
    votes = [Vote(v.ranking, v.weight, 1) for v in cm.votes]
    votes += [Vote(top, 1, 0) for _ in range(cm.manipulators)]
    election = Election(cm.candidates, tuple(votes), cm.tiebreak)
    return BriberyInstance(election, rule, p, Variant.DOLLAR_NONUNIFORM, 0)


# -- weighted Partition reductions -------------------------------------------


def partition_to_quarter(src: PartitionInstance) -> PartitionInstance:
    """Append ``2K`` so that a half-split of ``W`` becomes a quarter-split."""
    if src.variant != "half":
        raise ReductionError("expected a HALF instance")
    k = src.target
    if 2 * k in src.weights:
        # W = {2K}: no proper subset reaches K
        raise TrivialInstance(f"{2 * k} in W makes the instance trivially NO", decision=False)
    return PartitionInstance(src.weights + (2 * k,), "quarter")


def _weighted(name, candidates, tiebreak, rule, per_weight, fixed, variant, src, forward_map, budget=None, prices=None, winner=None):
    """Votes ``per_weight`` (one per w_i) followed by ``fixed`` (ranking, weight, price)."""
    votes = []
    for i, w in enumerate(src.weights):
        price = prices(w) if prices else None
        votes.append(Vote(tuple(per_weight), w, price))
    extra = [Vote(tuple(r), w, p) for r, w, p in fixed]
    election = Election(tuple(candidates), tuple(votes + extra), tuple(tiebreak))
    instance = BriberyInstance(election, rule, "p", variant, budget)
    n = len(src.weights)
    designated = list(range(n)) + [n + j for j, (_, _, p) in enumerate(fixed) if p is not None]

    def forward(subset):
        chosen = set(subset)
        out = {}
        for i in range(n):
            r = forward_map(i in chosen)
            if r is not None and tuple(r) != election.votes[i].ranking:
                out[i] = tuple(r)
        return out

    cert = {
        "source_votes": {f"w{i + 1}": [i] for i in range(n)},
        "designated": designated,
        "exact_vulnerable": True,
        "stated_winner": winner,
        "lambda": None,
        "relations": [],
        "vector": None,
    }
    return ReductionOutput(name, instance, cert, forward)


def _need(src, variant):
    if src.variant != variant:
        raise ReductionError(f"expected a {variant.upper()} partition instance")
    return src.target


def gen_wplurality_partition(src: PartitionInstance) -> ReductionOutput:
    """Weighted plurality, priced: buy weight exactly ``K`` of the a-votes."""
    k = _need(src, "half")
    fixed = [(("b", "p", "a"), 3 * k, None), (("p", "a", "b"), 2 * k + 1, 2 * k + 1)]
    return _weighted(
        "wplurality-partition", "pab", "abp", RuleSpec("plurality"), ("a", "p", "b"), fixed,
        Variant.DOLLAR_NONUNIFORM, src, lambda chosen: ("p", "a", "b") if chosen else None,
        budget=k, prices=lambda w: w, winner="b",
    )


def gen_wmaximin_partition(src: PartitionInstance) -> ReductionOutput:
    k = _need(src, "half")
    fixed = [(r, k, None) for r in (("c", "a", "b", "p"), ("b", "c", "a", "p"), ("a", "c", "b", "p"))]
    return _weighted(
        "wmaximin-partition", "pabc", "pabc", RuleSpec("maximin"), ("p", "a", "b", "c"), fixed,
        Variant.FRUGAL, src, lambda chosen: ("p", "a", "b", "c") if chosen else ("p", "b", "c", "a"),
    )


def gen_wcopeland_partition(src: PartitionInstance, alpha: Fraction = Fraction(0)) -> ReductionOutput:
    k = _need(src, "half")
    fixed = [(("a", "p", "b", "c"), k + 1, None), (("c", "b", "a", "p"), k + 1, None)]
    return _weighted(
        "wcopeland-partition", "pabc", "abcp", RuleSpec("copeland", alpha=Fraction(alpha)), ("p", "a", "b", "c"), fixed,
        Variant.FRUGAL, src, lambda chosen: ("p", "c", "b", "a") if chosen else ("p", "b", "c", "a"),
    )


def gen_wbucklin_partition(src: PartitionInstance) -> ReductionOutput:
    k = _need(src, "half")
    fixed = [(("a", "b", "p", "c"), k, None), (("c", "b", "a", "p"), k, None)]
    return _weighted(
        "wbucklin-partition", "pabc", "pabc", RuleSpec("bucklin"), ("p", "a", "b", "c"), fixed,
        Variant.FRUGAL, src, lambda chosen: ("p", "a", "b", "c") if chosen else ("p", "c", "b", "a"),
    )


def gen_wstv_quarter(src: PartitionInstance, rule: str = "stv") -> ReductionOutput:
    """Weighted STV (or runoff, identical at three candidates) from 1/4-Partition."""
    if rule not in ("stv", "runoff"):
        raise ReductionError("rule must be stv or runoff")
    k = _need(src, "quarter")
    fixed = [(("a", "p", "b"), 3 * k - 1, None), (("b", "a", "p"), 2 * k, None)]
    name = "wstv-quarter" if rule == "stv" else "wrunoff-quarter"
    return _weighted(
        name, "pab", "abp", RuleSpec(rule), ("p", "a", "b"), fixed,
        Variant.FRUGAL, src, lambda chosen: ("b", "p", "a") if chosen else None,
    )
