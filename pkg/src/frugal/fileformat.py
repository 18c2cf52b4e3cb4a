"""Plain-text election documents and source-instance files.

Election grammar, one item per line, ``#`` starts a comment::

    candidates: p,a,b
    tiebreak: a>b>p
    target: p
    vote [weight=3] [price=2]: p>a>b
    vote [price=inf]: a>b>p

``tiebreak`` defaults to declaration order.  ``target``, ``rule``,
``budget``, ``variant`` and ``manipulators`` are optional metadata.
"""

from __future__ import annotations

import re
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .election import INFINITE, Election, ElectionError, RuleSpec, Vote
from .reductions import CMInstance, PartitionInstance, X3CInstance

META_KEYS = ("rule", "target", "budget", "variant", "manipulators")


class ParseError(ElectionError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class IncompleteRanking(ParseError):
    pass


class UnknownCandidate(ParseError):
    pass


@dataclass
class Document:
    election: Election
    meta: Dict[str, str] = field(default_factory=dict)


_VOTE = re.compile(r"vote((?:\s*\[[^\]]*\])*)\s*:(.*)$")
_ATTR = re.compile(r"\[\s*(\w+)\s*=\s*([^\]\s]+)\s*\]")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield no, raw, line


def _header(line: str) -> Tuple[str, str]:
    key, _, value = line.partition(":")
    return key.strip(), value.strip()


def _names(value: str, sep: str, no: int, raw: str) -> List[str]:
    items = [x.strip() for x in value.split(sep)]
    if not all(items):
        raise ParseError(f"empty name in {value!r}", no, raw.find(value) + 1)
    return items


def parse_document(text: str) -> Document:
    candidates: Optional[List[str]] = None
    tiebreak: Optional[List[str]] = None
    meta: Dict[str, str] = {}
    pending = []
    for no, raw, line in _lines(text):
        stripped = line.strip()
        if stripped.startswith("vote"):
            pending.append((no, raw, stripped))
            continue
        if ":" not in stripped:
            raise ParseError(f"expected 'key: value', got {stripped!r}", no, 1)
        key, value = _header(stripped)
        if key == "candidates":
            candidates = _names(value, ",", no, raw)
        elif key == "tiebreak":
            tiebreak = _names(value, ">", no, raw)
        elif key in META_KEYS:
            meta[key] = value
        else:
            raise ParseError(f"unknown header {key!r}", no, raw.find(key) + 1)
    if candidates is None:
        raise ParseError("missing 'candidates:' line")
    known = set(candidates)
    if len(known) != len(candidates):
        raise ParseError("duplicate candidate names")
    votes = [_parse_vote(no, raw, line, candidates) for no, raw, line in pending]
    if tiebreak is not None:
        for name in tiebreak:
            if name not in known:
                raise UnknownCandidate(f"unknown candidate {name!r} in tiebreak")
        if sorted(tiebreak) != sorted(candidates):
            raise IncompleteRanking("tiebreak must order every candidate exactly once")
    try:
        election = Election(tuple(candidates), tuple(votes), tuple(tiebreak or ()))
    except ElectionError as exc:
        raise ParseError(str(exc)) from exc
    return Document(election, meta)


def _parse_vote(no: int, raw: str, line: str, candidates: List[str]) -> Vote:
    m = _VOTE.match(line)
    if not m:
        raise ParseError("malformed vote line", no, 1)
    attrs_text, ranking_text = m.group(1), m.group(2)
    weight, price = 1, None
    if _ATTR.sub("", attrs_text).strip():
        raise ParseError("malformed vote attribute", no, raw.find("[") + 1)
    for a in _ATTR.finditer(attrs_text):
        key, value = a.group(1), a.group(2)
        col = raw.find(a.group(0)) + 1
        if key not in ("weight", "price"):
            raise ParseError(f"unknown vote attribute {key!r}", no, col)
        try:
            if key == "weight":
                weight = int(value)
            elif key == "price":
                price = INFINITE if value in ("inf", "infinity") else int(value)
        except ValueError:
            raise ParseError(f"bad value {value!r} for {key}", no, col) from None
    ranking = [x.strip() for x in ranking_text.split(">")]
    col = line.index(":") + 2
    for name in ranking:
        if name not in candidates:
            raise UnknownCandidate(f"unknown candidate {name!r}", no, raw.find(name, col - 1) + 1 if name else col)
    if len(ranking) != len(candidates) or len(set(ranking)) != len(ranking):
        raise IncompleteRanking(f"ranking has {len(ranking)} entries for {len(candidates)} candidates", no, col)
    try:
        return Vote(tuple(ranking), weight, price)
    except ElectionError as exc:
        raise ParseError(str(exc), no, col) from exc


def parse_election(text: str) -> Election:
    return parse_document(text).election


def _fmt_price(p) -> str:
    return "inf" if p == INFINITE else str(int(p))


def serialize(election: Election, meta: Optional[Dict[str, str]] = None) -> str:
    """Canonical text; ``parse_document(serialize(e, meta))`` restores both."""
    out = [f"candidates: {','.join(election.candidates)}", f"tiebreak: {'>'.join(election.tiebreak)}"]
    for key in META_KEYS:
        if meta and key in meta and meta[key] is not None:
            out.append(f"{key}: {meta[key]}")
    for v in election.votes:
        attrs = ""
        if v.weight != 1:
            attrs += f" [weight={v.weight}]"
        if v.price is not None:
            attrs += f" [price={_fmt_price(v.price)}]"
        out.append(f"vote{attrs}: {'>'.join(v.ranking)}")
    return "\n".join(out) + "\n"


def canonical(text: str) -> str:
    doc = parse_document(text)
    return serialize(doc.election, doc.meta)


# -- source instances --------------------------------------------------------


def parse_x3c(text: str) -> X3CInstance:
    universe, sets = None, []
    for no, raw, line in _lines(text):
        key, value = _header(line.strip())
        if key == "universe":
            universe = _names(value, ",", no, raw)
        elif key == "set":
            sets.append(tuple(_names(value, ",", no, raw)))
        else:
            raise ParseError(f"unknown header {key!r}", no, 1)
    if universe is None:
        raise ParseError("missing 'universe:' line")
    return X3CInstance(tuple(universe), tuple(sets))


def serialize_x3c(src: X3CInstance) -> str:
    lines = [f"universe: {','.join(src.universe)}"] + [f"set: {','.join(s)}" for s in src.sets]
    return "\n".join(lines) + "\n"


def parse_partition(text: str, variant: str = "half") -> PartitionInstance:
    weights = None
    for no, raw, line in _lines(text):
        key, value = _header(line.strip())
        if key != "weights":
            raise ParseError(f"unknown header {key!r}", no, 1)
        try:
            weights = tuple(int(x) for x in _names(value, ",", no, raw))
        except ValueError:
            raise ParseError(f"weights must be integers: {value!r}", no, raw.find(value) + 1) from None
    if weights is None:
        raise ParseError("missing 'weights:' line")
    return PartitionInstance(weights, variant)


def serialize_partition(src: PartitionInstance) -> str:
    return f"weights: {','.join(map(str, src.weights))}\n"


def parse_cm(text: str) -> CMInstance:
    """Election document whose metadata names ``target`` and ``manipulators``."""
    doc = parse_document(text)
    if "target" not in doc.meta or "manipulators" not in doc.meta:
        raise ParseError("manipulation instance needs 'target:' and 'manipulators:' lines")
    e = doc.election
    return CMInstance(e.candidates, e.votes, int(doc.meta["manipulators"]), doc.meta["target"], e.tiebreak)


def parse_rule(text: str) -> RuleSpec:
    """``plurality``, ``kapproval:2``, ``scoring:3,1,0``, ``copeland:1/2`` and so on."""
    name, _, arg = text.strip().partition(":")
    name = name.strip().lower()
    simple = {"plurality", "veto", "borda", "maximin", "bucklin", "runoff", "stv"}
    try:
        if name in simple and not arg:
            return RuleSpec(name)
        if name in ("kapproval", "kveto") and arg:
            return RuleSpec("k_approval" if name == "kapproval" else "k_veto", k=int(arg))
        if name == "scoring" and arg:
            return RuleSpec("scoring", vector=tuple(int(x) for x in arg.split(",")))
        if name == "copeland":
            return RuleSpec("copeland", alpha=Fraction(arg.strip()) if arg else Fraction(0))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rule parameter in {text!r}: {exc}") from None
    raise ParseError(f"unknown rule {text!r}")
