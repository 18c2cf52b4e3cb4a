import json

import pytest
from hypothesis import given, settings

from frugal.cli import run_command
from frugal.election import INFINITE, RuleSpec, Vote
from frugal.fileformat import (
    IncompleteRanking,
    ParseError,
    UnknownCandidate,
    canonical,
    parse_cm,
    parse_document,
    parse_election,
    parse_partition,
    parse_rule,
    parse_x3c,
    serialize,
)

from conftest import elections

DOC = """\
# three voters
candidates: p,a,b
tiebreak: a>b>p
rule: plurality
target: p
vote: a>p>b
vote: b>p>a
vote: p>a>b
"""


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_example():
    doc = parse_document("candidates: p,a,b\nvote [weight=3] [price=2]: p>a>b\nvote [price=inf]: a>b>p\n")
    e = doc.election
    assert e.tiebreak == ("p", "a", "b")
    assert e.votes[0] == Vote(("p", "a", "b"), 3, 2)
    assert e.votes[1].price == INFINITE


def test_parse_errors_carry_positions():
    with pytest.raises(IncompleteRanking) as info:
        parse_election("candidates: p,a,b\nvote: p>a\n")
    assert info.value.line == 2
    with pytest.raises(UnknownCandidate):
        parse_election("candidates: p,a\nvote: p>z\n")
    with pytest.raises(ParseError):
        parse_election("candidates: p,a\nvote [colour=red]: p>a\n")
    with pytest.raises(ParseError):
        parse_election("candidates: p,a\nballot: p>a\n")


def test_parse_rules():
    assert parse_rule("kapproval:2") == RuleSpec("k_approval", k=2)
    assert parse_rule("scoring:3,1,0").vector == (3, 1, 0)
    assert str(parse_rule("copeland:1/2").alpha) == "1/2"
    with pytest.raises(ParseError):
        parse_rule("condorcet")


def test_source_formats():
    x = parse_x3c("universe: 1,2,3\nset: 1,2,3\n")
    assert x.sets == (("1", "2", "3"),)
    assert parse_partition("weights: 1,1,2\n", "half").target == 2
    cm = parse_cm("candidates: p,a,b\ntarget: p\nmanipulators: 2\nvote: a>b>p\n")
    assert cm.manipulators == 2 and cm.target == "p"


@settings(max_examples=100, deadline=None)
@given(elections(m_max=4, n_max=4, w_max=3, priced=True))
def test_serialize_round_trip(e):
    text = serialize(e, {"target": "p"})
    doc = parse_document(text)
    assert doc.election == e and doc.meta["target"] == "p"
    assert canonical(text) == text


def test_winner_and_figure(tmp_path, capsys):
    path = write(tmp_path, "e.txt", DOC)
    fig = tmp_path / "w.png"
    code, out, _ = run(capsys, "winner", path, "--figure", str(fig))
    assert code == 0 and out.strip() == "a"
    assert fig.exists() and fig.stat().st_size > 0


def test_vulnerable_json(tmp_path, capsys):
    path = write(tmp_path, "e.txt", DOC)
    code, out, _ = run(capsys, "vulnerable", path, "--json")
    assert code == 0
    assert json.loads(out)["vulnerable"] == [1, 2]


def test_solve_json(tmp_path, capsys):
    path = write(tmp_path, "e.txt", DOC)
    code, out, _ = run(capsys, "solve", path, "--json")
    payload = json.loads(out)
    assert code == 0 and payload["decision"] == "YES"
    assert list(payload["witness"]) == ["1"]


def test_solve_exit_codes(tmp_path, capsys):
    path = write(tmp_path, "e.txt", DOC)
    assert run(capsys, "solve", path, "--rule", "borda", "--algorithm", "poly")[0] == 3
    big = "candidates: p,a,b,c,d\nvote [weight=2]: a>p>b>c>d\nvote: b>p>a>c>d\n"
    bpath = write(tmp_path, "big.txt", big)
    assert run(capsys, "solve", bpath, "--rule", "borda", "--target", "p", "--algorithm", "exact")[0] == 4
    bad = write(tmp_path, "bad.txt", "candidates: p,a\nvote: p\n")
    code, _, err = run(capsys, "winner", bad, "--rule", "plurality")
    assert code == 2 and "line 2" in err
    assert run(capsys, "winner", path, "--rule", "nonsense")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_solve_explain(capsys):
    code, out, _ = run(capsys, "solve", "--explain")
    assert code == 0 and "plurality" in out and "exact" in out


def test_gen_and_verify(tmp_path, capsys):
    src = write(tmp_path, "x.txt", "universe: 1,2,3,4,5,6\nset: 1,2,3\nset: 4,5,6\n")
    out = tmp_path / "inst.txt"
    code, _, _ = run(capsys, "gen", "kapproval-x3c", src, "--out", str(out))
    assert code == 0 and out.exists()
    cert = json.loads((tmp_path / "inst.txt.cert.json").read_text())
    assert cert["designated"] == [0, 1]
    code, text, _ = run(capsys, "solve", str(out), "--json")
    assert code == 0 and json.loads(text)["decision"] == "YES"
    fig = tmp_path / "v.png"
    code, text, _ = run(capsys, "verify", "kapproval-x3c", src, "--json", "--figure", str(fig))
    report = json.loads(text)
    assert code == 0 and report["checks"]["e_reverse"] == "SKIPPED"
    assert fig.exists()


def test_verify_failure_exit(tmp_path, capsys):
    src = write(tmp_path, "x.txt", "universe: 1,2,3\nset: 1,2,3\n")
    assert run(capsys, "verify", "borda-x3c", src, "--as-printed")[0] == 1
    assert run(capsys, "verify", "no-such", src)[0] == 2


def test_oracle_command(tmp_path, capsys):
    src = write(tmp_path, "w.txt", "weights: 1,1,2\n")
    code, out, _ = run(capsys, "oracle", "partition", src, "--json")
    assert code == 0 and json.loads(out)["decision"] == "YES"
    code, out, _ = run(capsys, "oracle", "quarter", src, "--json")
    assert code == 0 and json.loads(out)["decision"] == "YES"


def test_structured_output_is_stable(tmp_path, capsys):
    path = write(tmp_path, "e.txt", DOC)
    first = run(capsys, "solve", path, "--json")[1]
    second = run(capsys, "solve", path, "--json")[1]
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "elapsed"}
    assert strip(first) == strip(second)
