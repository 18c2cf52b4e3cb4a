"""Exact and polynomial-time solvers for frugal bribery.

All solvers return a :class:`Solution`.  ``solve_exact`` is the exhaustive
ground truth; every other solver is a specialised route that must agree with
it on decisions.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .election import (
    INFINITE,
    Election,
    ElectionError,
    Ranking,
    RuleSpec,
    Vote,
    bucklin_depths,
    compute_winner,
    tally_margins,
    tally_positional_scores,
    tally_winner,
)
from .vulnerability import BriberyInstance, Variant, classify_vulnerable


class UnsupportedRule(ElectionError):
    pass


class LimitExceeded(RuntimeError):
    pass


class BudgetTooLarge(LimitExceeded):
    pass


@dataclass(frozen=True)
class Limits:
    max_m: int = 4
    max_vulnerable: int = 6
    max_budget: int = 3


@dataclass
class Solution:
    decision: bool
    witness: Dict[int, Ranking] = field(default_factory=dict)
    cost: float = 0
    algorithm: str = ""

    def to_dict(self) -> dict:
        return {
            "decision": "YES" if self.decision else "NO",
            "witness": {str(i): ">".join(r) for i, r in sorted(self.witness.items())},
            "cost": self.cost,
            "algorithm": self.algorithm,
        }


def _no(algorithm: str) -> Solution:
    return Solution(False, {}, 0, algorithm)


def witness_cost(instance: BriberyInstance, witness: Dict[int, Ranking]) -> float:
    votes = instance.election.votes
    return sum(instance.price(i) for i, r in witness.items() if tuple(r) != votes[i].ranking)


def validate_solution(instance: BriberyInstance, solution: Solution) -> List[str]:
    """Independent recheck of a solution; returns a list of problems (empty if valid)."""
    if not solution.decision:
        return [] if not solution.witness else ["NO answer carries a witness"]
    problems = []
    vuln = set(instance.vulnerable)
    votes = instance.election.votes
    for i, r in solution.witness.items():
        if not 0 <= i < len(votes):
            problems.append(f"witness names unknown vote {i}")
            continue
        if tuple(r) != votes[i].ranking and i not in vuln:
            problems.append(f"vote {i} is not vulnerable but was changed")
    if problems:
        return problems
    try:
        after = instance.election.with_rankings(solution.witness)
    except ElectionError as exc:
        return [f"witness is not a valid profile: {exc}"]
    if compute_winner(after, instance.rule) != instance.target:
        problems.append("target does not win after applying the witness")
    cost = witness_cost(instance, solution.witness)
    if instance.variant.priced:
        if cost > instance.budget:
            problems.append(f"cost {cost} exceeds budget {instance.budget}")
        if cost != solution.cost:
            problems.append(f"reported cost {solution.cost} != actual {cost}")
    return problems


def _finish(instance: BriberyInstance, rankings: Dict[int, Ranking], algorithm: str) -> Solution:
    votes = instance.election.votes
    witness = {i: tuple(r) for i, r in sorted(rankings.items()) if tuple(r) != votes[i].ranking}
    cost = witness_cost(instance, witness) if instance.variant.priced else 0
    return Solution(True, witness, cost, algorithm)


def _target_wins(instance: BriberyInstance) -> bool:
    return compute_winner(instance.election, instance.rule) == instance.target


# -- exhaustive search -------------------------------------------------------


def solve_exact(instance: BriberyInstance, limits: Limits = Limits()) -> Solution:
    """Exhaustive search over every re-ranking of every affordable set of vulnerable votes.

    Among YES witnesses the one returned has minimum cost, then fewest changed
    votes, then the smallest vote indices.  Rules are anonymous, so for a
    fixed change set only multisets of new rankings (per weight class) are
    enumerated.
    """
    e = instance.election
    if _target_wins(instance):
        return Solution(True, {}, 0, "exact")
    vuln = instance.vulnerable
    if e.m > limits.max_m:
        raise LimitExceeded(f"{e.m} candidates exceeds exact-search cap {limits.max_m}")
    if len(vuln) > limits.max_vulnerable:
        raise LimitExceeded(f"{len(vuln)} vulnerable votes exceeds exact-search cap {limits.max_vulnerable}")

    budget = instance.effective_budget
    price = {i: instance.price(i) for i in vuln}
    movable = [i for i in vuln if price[i] <= budget]
    perms = list(itertools.permutations(e.candidates))
    full = e.tally()

    def feasible(subset: Tuple[int, ...]) -> Optional[Dict[int, Ranking]]:
        base = dict(full)
        groups: Dict[int, List[int]] = defaultdict(list)
        for i in subset:
            v = e.votes[i]
            base[v.ranking] -= v.weight
            groups[v.weight].append(i)
        weights = sorted(groups)
        choices = [itertools.combinations_with_replacement(perms, len(groups[w])) for w in weights]
        for combo in itertools.product(*(list(c) for c in choices)):
            tally = dict(base)
            for w, rankings in zip(weights, combo):
                for r in rankings:
                    tally[r] = tally.get(r, 0) + w
            if tally_winner(e.candidates, e.tiebreak, tally, instance.rule) == instance.target:
                out = {}
                for w, rankings in zip(weights, combo):
                    out.update(zip(groups[w], rankings))
                return out
        return None

    def cost(s):
        return sum(price[i] for i in s)

    subsets = [
        s for r in range(len(movable) + 1) for s in itertools.combinations(movable, r) if cost(s) <= budget
    ]
    # maximal affordable sets decide the answer (any superset can keep votes unchanged)
    maximal = [s for s in subsets if not any(set(s) < set(t) for t in subsets)]
    infeasible: List[frozenset] = []
    for s in maximal:
        if feasible(s) is None:
            infeasible.append(frozenset(s))
    if len(infeasible) == len(maximal):
        return _no("exact")

    subsets.sort(key=lambda s: (cost(s), len(s), s))
    for s in subsets:
        fs = frozenset(s)
        if any(fs <= bad for bad in infeasible):
            continue
        found = feasible(s)
        if found is None:
            infeasible.append(fs)
            continue
        return _finish(instance, found, "exact")
    raise AssertionError("a maximal affordable set was feasible but no subset was found")


# -- coalitional manipulation ------------------------------------------------

CM_UNWEIGHTED = ("plurality", "veto", "k_approval", "k_veto", "bucklin", "runoff")
CM_WEIGHTED_3 = ("maximin", "copeland")


def _approvals(rule: RuleSpec, m: int) -> int:
    """Number of approved positions of the approval rule equivalent to ``rule``."""
    if rule.kind == "plurality":
        return 1
    if rule.kind == "veto":
        return m - 1
    if rule.k >= m:
        raise ElectionError(f"{rule.kind} needs k < m")
    return rule.k if rule.kind == "k_approval" else m - rule.k


def _fill_slots(n_votes, per_vote, caps, bonus=()):
    """Choose ``per_vote`` distinct candidates for each of ``n_votes`` votes.

    Candidate ``x`` may be chosen at most ``caps[x]`` times, except that each
    vote may hold one candidate from ``bonus`` without charging its cap.
    Returns ``[(charged, bonus_pick), ...]`` or ``None`` if impossible.
    """
    if per_vote == 0:
        return [([], None) for _ in range(n_votes)]
    g = nx.DiGraph()
    for x, cap in caps.items():
        g.add_edge("s", ("cap", x), capacity=min(cap, n_votes))
    for j in range(n_votes):
        g.add_edge(("vote", j), "t", capacity=per_vote)
        if bonus:
            g.add_edge("s", ("free", j), capacity=1)
        for x in caps:
            g.add_edge(("cap", x), ("slot", j, x), capacity=1)
            if x in bonus:
                g.add_edge(("free", j), ("slot", j, x), capacity=1)
            g.add_edge(("slot", j, x), ("vote", j), capacity=1)
    value, flow = nx.maximum_flow(g, "s", "t")
    if value < n_votes * per_vote:
        return None
    out = []
    for j in range(n_votes):
        charged = [x for x in caps if flow[("cap", x)][("slot", j, x)]]
        extra = None
        if bonus:
            extra = next((x for x in caps if x in bonus and flow[("free", j)][("slot", j, x)]), None)
        out.append((charged, extra))
    return out


def cm_greedy(
    candidates: Sequence[str],
    tiebreak: Sequence[str],
    fixed: Sequence[Vote],
    rule: RuleSpec,
    free,
    target: str,
) -> Optional[List[Ranking]]:
    """Rankings for the free voters that make ``target`` the tie-broken winner.

    ``free`` is a number of unit-weight voters or a list of weights.  Returns
    one ranking per free voter, or ``None`` when no assignment exists.
    Supported: the approval/veto family, Bucklin and runoff (unit weights),
    and maximin/Copeland with three candidates (any weights).
    """
    weights = [1] * free if isinstance(free, int) else list(free)
    candidates = tuple(candidates)
    tally: Dict[Ranking, int] = {}
    for v in fixed:
        tally[v.ranking] = tally.get(v.ranking, 0) + v.weight
    if rule.kind in CM_WEIGHTED_3:
        if len(candidates) != 3:
            raise UnsupportedRule(f"{rule.kind} manipulation is only polynomial for three candidates")
        return _cm_threecand(candidates, tiebreak, tally, rule, weights, target)
    if rule.kind not in CM_UNWEIGHTED:
        raise UnsupportedRule(f"no polynomial manipulation routine for {rule.kind}")
    if any(w != 1 for w in weights):
        raise UnsupportedRule(f"{rule.kind} manipulation is only supported for unweighted voters")
    n_free = len(weights)
    if n_free == 0:
        return [] if tally and tally_winner(candidates, tiebreak, tally, rule) == target else None
    if rule.kind == "runoff":
        return _cm_runoff(candidates, tiebreak, tally, n_free, target)
    if rule.kind == "bucklin":
        return _cm_bucklin(candidates, tiebreak, tally, n_free, target)
    return _cm_approval(candidates, tiebreak, tally, _approvals(rule, len(candidates)), n_free, target)


def _beats_target(tiebreak: Sequence[str], target: str):
    rank = {c: i for i, c in enumerate(tiebreak)}
    return lambda x: rank[x] < rank[target]


def _complete(candidates, head) -> Ranking:
    seen = set(head)
    return tuple(head) + tuple(c for c in candidates if c not in seen)


def _cm_approval(candidates, tiebreak, tally, k, n_free, target):
    m = len(candidates)
    vec = (1,) * k + (0,) * (m - k)
    scores = tally_positional_scores(candidates, tally, vec)
    ahead = _beats_target(tiebreak, target)
    final_target = scores[target] + n_free
    caps = {}
    for x in candidates:
        if x == target:
            continue
        cap = final_target - ahead(x) - scores[x]
        if cap < 0:
            return None
        caps[x] = cap
    filled = _fill_slots(n_free, k - 1, caps)
    if filled is None:
        return None
    return [_complete(candidates, [target] + charged) for charged, _ in filled]


def _cm_bucklin(candidates, tiebreak, tally, n_free, target):
    m = len(candidates)
    total = sum(tally.values()) + n_free
    reach = {c: [0] * (m + 1) for c in candidates}  # reach[c][l]: weight ranking c in top l
    for ranking, w in tally.items():
        for pos, c in enumerate(ranking):
            for level in range(pos + 1, m + 1):
                reach[c][level] += w
    depth = next(l for l in range(1, m + 1) if 2 * (reach[target][l] + n_free) > total)
    ahead = _beats_target(tiebreak, target)
    caps, bonus = {}, set()
    for x in candidates:
        if x == target:
            continue
        # x must not reach a majority at ``depth`` (if it beats the target on
        # ties) or at ``depth - 1`` (otherwise)
        level = depth if ahead(x) else depth - 1
        cap = (total - 2 * reach[x][level]) // 2
        if cap < 0:
            return None
        caps[x] = cap
        if not ahead(x):
            bonus.add(x)
    filled = _fill_slots(n_free, depth - 1, caps, bonus)
    if filled is None:
        return None
    out = []
    for charged, extra in filled:
        head = [target] + [x for x in charged]
        if extra is not None:
            head.append(extra)
        out.append(_complete(candidates, head))
    return out


def _cm_runoff(candidates, tiebreak, tally, n_free, target):
    rank = {c: i for i, c in enumerate(tiebreak)}
    first = tally_positional_scores(candidates, tally, (1,) + (0,) * (len(candidates) - 1))
    margins = tally_margins(candidates, tally)
    for y in sorted((c for c in candidates if c != target), key=rank.__getitem__):
        for f in range(n_free + 1):
            score = dict(first)
            score[target] += n_free - f
            score[y] += f
            finalists = sorted(candidates, key=lambda c: (-score[c], rank[c]))[:2]
            if set(finalists) != {target, y}:
                continue
            d = margins[target, y] + (n_free - f) - f
            if d > 0 or (d == 0 and rank[target] < rank[y]):
                return [_complete(candidates, [y, target])] * f + [_complete(candidates, [target, y])] * (n_free - f)
    return None


def _winner_from_margins(candidates, tiebreak, margins, rule):
    if rule.kind == "maximin":
        scores = {x: min(margins[x, y] for y in candidates if y != x) for x in candidates}
    else:
        scores = {
            x: sum(1 for y in candidates if y != x and margins[x, y] > 0)
            + rule.alpha * sum(1 for y in candidates if y != x and margins[x, y] == 0)
            for x in candidates
        }
    best = max(scores.values())
    return next(c for c in tiebreak if scores[c] == best)


def _subset_sums(weights):
    """Dense reachability table over sums 0..sum(weights) with back-pointers."""
    total = sum(weights)
    parent: List[Optional[Tuple[int, int]]] = [None] * (total + 1)
    reachable = [False] * (total + 1)
    reachable[0] = True
    for idx, w in enumerate(weights):
        for s in range(total, w - 1, -1):
            if not reachable[s] and reachable[s - w]:
                reachable[s] = True
                parent[s] = (idx, s - w)
    return reachable, parent


def _pick_subset(parent, s):
    chosen = set()
    while s:
        idx, s = parent[s]
        chosen.add(idx)
    return chosen


def _cm_threecand(candidates, tiebreak, tally, rule, weights, target):
    a, b = [c for c in candidates if c != target]
    margins = tally_margins(candidates, tally)
    total = sum(weights)
    for x in (a, b):
        margins[target, x] += total
        margins[x, target] -= total
    reachable, parent = _subset_sums(weights)
    for s in range(total + 1):
        if not reachable[s]:
            continue
        d = dict(margins)
        d[a, b] += 2 * s - total  # weight s ranks a over b, the rest b over a
        d[b, a] = -d[a, b]
        if _winner_from_margins(candidates, tiebreak, d, rule) == target:
            chosen = _pick_subset(parent, s)
            return [(target, a, b) if i in chosen else (target, b, a) for i in range(len(weights))]
    return None


# -- specialised bribery solvers ----------------------------------------------


def _unweighted(e: Election) -> bool:
    return all(v.weight == 1 for v in e.votes)


def _split(instance: BriberyInstance, freed: Iterable[int]):
    freed = set(freed)
    fixed = [v for i, v in enumerate(instance.election.votes) if i not in freed]
    return fixed, sorted(freed)


def _assign(instance: BriberyInstance, freed: Sequence[int], rankings: Sequence[Ranking]) -> Dict[int, Ranking]:
    """Hand rankings to freed votes, keeping votes unchanged where possible."""
    votes = instance.election.votes
    pool = list(rankings)
    out: Dict[int, Ranking] = {}
    rest = []
    for i in freed:
        if votes[i].ranking in pool:
            pool.remove(votes[i].ranking)
            out[i] = votes[i].ranking
        else:
            rest.append(i)
    out.update(zip(rest, pool))
    return out


def solve_frugal_poly(instance: BriberyInstance) -> Solution:
    """FRUGAL-BRIBERY by freeing every vulnerable vote and solving manipulation."""
    name = "frugal-manipulation"
    if instance.variant is not Variant.FRUGAL:
        raise UnsupportedRule("solve_frugal_poly handles the frugal variant only")
    if instance.rule.kind not in CM_UNWEIGHTED or not _unweighted(instance.election):
        raise UnsupportedRule(f"no polynomial frugal route for weighted or {instance.rule.kind} elections")
    if _target_wins(instance):
        return Solution(True, {}, 0, name)
    fixed, freed = _split(instance, instance.vulnerable)
    e = instance.election
    rankings = cm_greedy(e.candidates, e.tiebreak, fixed, instance.rule, len(freed), instance.target)
    if rankings is None:
        return _no(name)
    return _finish(instance, _assign(instance, freed, rankings), name)


def _require(instance: BriberyInstance, kind: str, priced: bool):
    if instance.rule.kind != kind:
        raise UnsupportedRule(f"solver needs the {kind} rule, got {instance.rule.kind}")
    if instance.variant.priced != priced:
        raise UnsupportedRule("solver/variant mismatch")


def _to_top(ranking: Ranking, c: str) -> Ranking:
    return (c,) + tuple(x for x in ranking if x != c)


def solve_dollar_plurality(instance: BriberyInstance) -> Solution:
    """Minimum-cost priced bribery for unweighted plurality.

    For each final target score ``T``, every rival ``x`` must lose the
    ``max(0, s(x) - T + [x beats target on ties])`` cheapest vulnerable votes
    it tops; remaining points come from the globally cheapest unused votes.
    """
    name = "dollar-plurality"
    _require(instance, "plurality", priced=True)
    e, p = instance.election, instance.target
    if not _unweighted(e):
        raise UnsupportedRule("dollar plurality solver is for unweighted elections")
    if _target_wins(instance):
        return Solution(True, {}, 0, name)
    scores = tally_positional_scores(e.candidates, e.tally(), (1,) + (0,) * (e.m - 1))
    ahead = _beats_target(e.tiebreak, p)
    pools: Dict[str, List[Tuple[float, int]]] = defaultdict(list)
    for i in instance.vulnerable:
        top = e.votes[i].ranking[0]
        if top != p and instance.price(i) != INFINITE:
            pools[top].append((instance.price(i), i))
    for pool in pools.values():
        pool.sort()
    n_pool = sum(len(v) for v in pools.values())
    best = None
    for final in range(scores[p], scores[p] + n_pool + 1):
        chosen = []
        for x in e.candidates:
            if x == p:
                continue
            need = max(0, scores[x] - final + ahead(x))
            if need > len(pools[x]):
                break
            chosen += pools[x][:need]
        else:
            extra = final - scores[p] - len(chosen)
            if extra < 0:
                continue
            used = set(chosen)
            rest = sorted(item for pool in pools.values() for item in pool if item not in used)
            if len(rest) < extra:
                continue
            chosen += rest[:extra]
            key = (sum(c for c, _ in chosen), len(chosen))
            if best is None or key < best[0]:
                best = (key, chosen)
    if best is None or best[0][0] > instance.budget:
        return _no(name)
    rankings = {i: _to_top(e.votes[i].ranking, p) for _, i in best[1]}
    return _finish(instance, rankings, name)


def solve_dollar_veto(instance: BriberyInstance) -> Solution:
    """Minimum-cost priced bribery for unweighted veto as a min-cost flow.

    Vulnerable votes never veto the target, so its veto count is fixed.  Each
    bought vote moves one veto from its current victim to another rival; every
    rival ``x`` must end with at least ``V(target) + [x beats target on ties]``
    vetoes.
    """
    name = "dollar-veto"
    _require(instance, "veto", priced=True)
    e, p = instance.election, instance.target
    if not _unweighted(e):
        raise UnsupportedRule("dollar veto solver is for unweighted elections")
    if _target_wins(instance):
        return Solution(True, {}, 0, name)
    vetoes = {c: 0 for c in e.candidates}
    for v in e.votes:
        vetoes[v.ranking[-1]] += 1
    ahead = _beats_target(e.tiebreak, p)
    rivals = [x for x in e.candidates if x != p]
    deficit = {x: vetoes[p] + ahead(x) - vetoes[x] for x in rivals}
    if sum(deficit.values()) > 0:
        return _no(name)
    g = nx.DiGraph()
    for x in rivals:
        g.add_node(x, demand=deficit[x])
        g.add_edge(x, "sink", weight=0)
    g.add_node("sink", demand=-sum(deficit.values()))
    for i in instance.vulnerable:
        price = instance.price(i)
        if price == INFINITE or price > instance.budget:
            continue
        victim = e.votes[i].ranking[-1]
        g.add_edge(victim, ("vote", i), capacity=1, weight=int(price))
        for x in rivals:
            if x != victim:
                g.add_edge(("vote", i), x, capacity=1, weight=0)
    try:
        cost, flow = nx.network_simplex(g)
    except nx.NetworkXUnfeasible:
        return _no(name)
    if cost > instance.budget:
        return _no(name)
    rankings = {}
    for i in instance.vulnerable:
        node = ("vote", i)
        if node not in flow:
            continue
        for x, units in flow[node].items():
            if units:
                r = e.votes[i].ranking
                rankings[i] = tuple(c for c in r if c != x) + (x,)
    return _finish(instance, rankings, name)


def solve_dollar_budgeted(instance: BriberyInstance, limits: Limits = Limits()) -> Solution:
    """Priced bribery with a constant budget: try every affordable change set.

    Zero-price vulnerable votes are always freed; each subset of the
    positively priced ones within budget is freed on top and handed to the
    manipulation routine.  Subsets are tried in order of cost.
    """
    name = "budgeted-manipulation"
    if not instance.variant.priced:
        raise UnsupportedRule("budgeted solver needs a priced variant")
    if instance.rule.kind not in CM_UNWEIGHTED or not _unweighted(instance.election):
        raise UnsupportedRule(f"no budgeted route for weighted or {instance.rule.kind} elections")
    if instance.budget > limits.max_budget:
        raise BudgetTooLarge(f"budget {instance.budget} exceeds cap {limits.max_budget}")
    if _target_wins(instance):
        return Solution(True, {}, 0, name)
    e = instance.election
    vuln = instance.vulnerable
    free = [i for i in vuln if instance.price(i) == 0]
    paid = [i for i in vuln if 0 < instance.price(i) <= instance.budget]
    subsets = [s for r in range(instance.budget + 1) for s in itertools.combinations(paid, r)]
    subsets = [s for s in subsets if sum(instance.price(i) for i in s) <= instance.budget]
    subsets.sort(key=lambda s: (sum(instance.price(i) for i in s), len(s), s))
    for s in subsets:
        fixed, freed = _split(instance, free + list(s))
        rankings = cm_greedy(e.candidates, e.tiebreak, fixed, instance.rule, len(freed), instance.target)
        if rankings is not None:
            return _finish(instance, _assign(instance, freed, rankings), name)
    return _no(name)


def solve_weighted_plurality_frugal(instance: BriberyInstance) -> Solution:
    """Weighted plurality: put the target on top of every vulnerable vote."""
    name = "weighted-plurality-greedy"
    _require(instance, "plurality", priced=False)
    if _target_wins(instance):
        return Solution(True, {}, 0, name)
    e = instance.election
    rankings = {i: _to_top(e.votes[i].ranking, instance.target) for i in instance.vulnerable}
    if compute_winner(e.with_rankings(rankings), instance.rule) != instance.target:
        return _no(name)
    return _finish(instance, rankings, name)


def solve_weighted_threecand(instance: BriberyInstance) -> Solution:
    """Weighted maximin/Copeland with three candidates via subset sums."""
    name = "weighted-threecand-dp"
    e = instance.election
    if instance.rule.kind not in CM_WEIGHTED_3:
        raise UnsupportedRule(f"three-candidate DP handles maximin/copeland, not {instance.rule.kind}")
    if e.m != 3:
        raise UnsupportedRule(f"three-candidate DP needs m = 3, got {e.m}")
    if instance.variant.priced:
        raise UnsupportedRule("three-candidate DP handles the frugal variant only")
    if _target_wins(instance):
        return Solution(True, {}, 0, name)
    fixed, freed = _split(instance, instance.vulnerable)
    rankings = cm_greedy(
        e.candidates, e.tiebreak, fixed, instance.rule, [e.votes[i].weight for i in freed], instance.target
    )
    if rankings is None:
        return _no(name)
    return _finish(instance, dict(zip(freed, rankings)), name)


# -- embeddings and dispatch --------------------------------------------------


def frugal_as_dollar(instance: BriberyInstance) -> BriberyInstance:
    """Frugal instance as a uniform priced one: every price 0, budget 0."""
    e = instance.election
    votes = tuple(Vote(v.ranking, v.weight, 0) for v in e.votes)
    return BriberyInstance(Election(e.candidates, votes, e.tiebreak), instance.rule, instance.target,
                           Variant.DOLLAR_UNIFORM, 0)


ALGORITHM_TABLE = (
    ("frugal", "plurality/veto/k-approval/k-veto/bucklin/runoff, unweighted", "frugal-manipulation"),
    ("frugal", "plurality, weighted", "weighted-plurality-greedy"),
    ("frugal", "maximin/copeland, m = 3", "weighted-threecand-dp"),
    ("priced", "plurality, unweighted", "dollar-plurality"),
    ("priced", "veto, unweighted", "dollar-veto"),
    ("priced", "k-approval/k-veto/bucklin/runoff, unweighted, budget <= cap", "budgeted-manipulation"),
    ("any", "anything else", "exact"),
)


def poly_route(instance: BriberyInstance, limits: Limits = Limits()):
    """The polynomial solver that applies to ``instance``, or ``None``."""
    kind, e = instance.rule.kind, instance.election
    unweighted = _unweighted(e)
    if not instance.variant.priced:
        if kind in CM_UNWEIGHTED and unweighted:
            return solve_frugal_poly
        if kind == "plurality":
            return solve_weighted_plurality_frugal
        if kind in CM_WEIGHTED_3 and e.m == 3:
            return solve_weighted_threecand
        return None
    if not unweighted:
        return None
    if kind == "plurality":
        return solve_dollar_plurality
    if kind == "veto":
        return solve_dollar_veto
    if kind in CM_UNWEIGHTED and instance.budget <= limits.max_budget:
        return lambda inst: solve_dollar_budgeted(inst, limits)
    return None


def solve(instance: BriberyInstance, algorithm: str = "auto", limits: Limits = Limits()) -> Solution:
    if algorithm == "exact":
        return solve_exact(instance, limits)
    route = poly_route(instance, limits)
    if route is None:
        if algorithm == "poly":
            raise UnsupportedRule(f"no polynomial algorithm for {instance.rule} / {instance.variant.value}")
        return solve_exact(instance, limits)
    return route(instance)
