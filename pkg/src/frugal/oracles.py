"""Brute-force ground truth and end-to-end checking of the reductions."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .election import Election, RuleSpec, Vote, compute_winner
from .reductions import (
    CMInstance,
    PartitionInstance,
    ReductionError,
    ReductionOutput,
    X3CInstance,
    check_relations,
    gen_borda_x3c,
    gen_kapproval_x3c,
    gen_kveto_x3c,
    gen_scoring_x3c,
    gen_uniform_borda_cm,
    gen_wbucklin_partition,
    gen_wcopeland_partition,
    gen_wmaximin_partition,
    gen_wplurality_partition,
    gen_wstv_quarter,
)
from .solvers import Limits, Solution, solve_exact, validate_solution, witness_cost

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


class UnknownReduction(ReductionError):
    pass


def solve_x3c(src: X3CInstance) -> Optional[Tuple[int, ...]]:
    """Indices (0-based) of an exact cover, or ``None``."""
    need = len(src.universe) // 3
    universe = set(src.universe)
    for combo in itertools.combinations(range(len(src.sets)), need):
        covered = set().union(*(src.sets[i] for i in combo)) if combo else set()
        if covered == universe:
            return combo
    return None


def solve_partition(src: PartitionInstance) -> Optional[Tuple[int, ...]]:
    """Indices of a proper subset of the weights summing to the target, or ``None``.

    A subset-sum table decides; the witness is the smallest subset (then
    lexicographically first indices) found by enumeration.
    """
    w = src.weights
    k = src.target
    reach = {0}
    for x in w:
        reach |= {s + x for s in reach if s + x <= k}
    if k not in reach:
        return None
    for size in range(1, len(w)):
        for combo in itertools.combinations(range(len(w)), size):
            if sum(w[i] for i in combo) == k:
                return combo
    return None


def solve_cm(cm: CMInstance, rule: Optional[RuleSpec] = None) -> Optional[Tuple[Tuple[str, ...], ...]]:
    """Manipulator ballots making the target win (tie-break semantics), or ``None``."""
    rule = rule or RuleSpec("borda")
    perms = list(itertools.permutations(cm.candidates))
    for ballots in itertools.combinations_with_replacement(perms, cm.manipulators):
        e = Election(cm.candidates, cm.votes + tuple(Vote(b) for b in ballots), cm.tiebreak)
        if compute_winner(e, rule) == cm.target:
            return ballots
    return None


@dataclass
class VerificationReport:
    name: str
    source_decision: bool
    instance_decision: Optional[bool] = None
    checks: Dict[str, str] = field(default_factory=dict)
    notes: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v != FAIL for v in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "reduction": self.name,
            "source_decision": "YES" if self.source_decision else "NO",
            "instance_decision": None if self.instance_decision is None else ("YES" if self.instance_decision else "NO"),
            "checks": dict(self.checks),
            "notes": dict(self.notes),
            "overall": PASS if self.passed else FAIL,
        }


def _x3c(gen):
    return gen, solve_x3c


def _part(gen):
    return gen, solve_partition


REDUCTIONS: Dict[str, Tuple[Callable, Callable]] = {
    "borda-x3c": _x3c(gen_borda_x3c),
    "kapproval-x3c": _x3c(gen_kapproval_x3c),
    "kveto-x3c": _x3c(gen_kveto_x3c),
    "scoring-x3c": _x3c(gen_scoring_x3c),
    "uniform-borda-cm": (gen_uniform_borda_cm, solve_cm),
    "wplurality-partition": _part(gen_wplurality_partition),
    "wmaximin-partition": _part(gen_wmaximin_partition),
    "wcopeland-partition": _part(gen_wcopeland_partition),
    "wbucklin-partition": _part(gen_wbucklin_partition),
    "wstv-quarter": _part(gen_wstv_quarter),
    "wrunoff-quarter": _part(lambda src: gen_wstv_quarter(src, "runoff")),
}


def search_bits(output: ReductionOutput) -> float:
    inst = output.instance
    return len(inst.vulnerable) * math.log2(math.factorial(inst.election.m))


def generate(name: str, src, **options) -> ReductionOutput:
    if name not in REDUCTIONS:
        raise UnknownReduction(f"unknown reduction {name!r}; known: {', '.join(sorted(REDUCTIONS))}")
    return REDUCTIONS[name][0](src, **options)


def verify_reduction(name: str, src, max_bits: float = 24, **options) -> VerificationReport:
    """Run the generator on ``src`` and check it against the source oracle."""
    if name not in REDUCTIONS:
        raise UnknownReduction(f"unknown reduction {name!r}; known: {', '.join(sorted(REDUCTIONS))}")
    gen, oracle = REDUCTIONS[name]
    out = gen(src, **options)
    inst = out.instance
    cert = out.certificate
    source = oracle(src)
    report = VerificationReport(name, source is not None)

    winner = compute_winner(inst.election, inst.rule)
    stated = cert["stated_winner"]
    if stated is not None:
        report.checks["a_winner"] = PASS if winner == stated else FAIL
        report.notes["a_winner"] = f"winner {winner}, stated {stated}"
    else:
        report.checks["a_winner"] = PASS if winner != inst.target else FAIL
        report.notes["a_winner"] = f"winner {winner}, no stated winner; target must not already win"

    vuln = set(inst.vulnerable)
    designated = set(cert["designated"])
    if cert["exact_vulnerable"]:
        ok = vuln == designated
    else:
        ok = designated <= vuln and all(inst.price(i) == math.inf for i in vuln - designated)
    report.checks["b_vulnerable"] = PASS if ok else FAIL
    missing = sorted(designated - vuln)
    if missing:
        report.notes["b_vulnerable"] = f"designated but not vulnerable: {missing}"

    if cert["relations"]:
        bad = check_relations(inst.election, cert["vector"], cert["relations"])
        report.checks["c_relations"] = FAIL if bad else PASS
        if bad:
            report.notes["c_relations"] = "; ".join(bad)
    else:
        report.checks["c_relations"] = SKIPPED
        report.notes["c_relations"] = "no score relations in this construction"

    if source is not None:
        witness = out.forward(source)
        sol = Solution(True, witness, witness_cost(inst, witness), "forward")
        problems = validate_solution(inst, sol)
        report.checks["d_forward"] = FAIL if problems else PASS
        if problems:
            report.notes["d_forward"] = "; ".join(problems)
    else:
        report.checks["d_forward"] = SKIPPED
        report.notes["d_forward"] = "source is NO"

    bits = search_bits(out)
    if bits <= max_bits:
        limits = Limits(max_m=inst.election.m, max_vulnerable=len(vuln), max_budget=10**9)
        decision = solve_exact(inst, limits).decision
        report.instance_decision = decision
        report.checks["e_reverse"] = PASS if decision == report.source_decision else FAIL
    else:
        report.checks["e_reverse"] = SKIPPED
        report.notes["e_reverse"] = f"search space {bits:.1f} bits exceeds cap {max_bits}"
    return report
