from __future__ import annotations

from pathlib import Path

import pytest

from wordeq.cli import (
    Outcome,
    ParseError,
    dispatch,
    main,
    parse_problem,
    render_problem,
)

CORPUS = Path(__file__).parent / "corpus"

EXPECTED = {
    "oneletter_sat.weq": ("SAT", 0),
    "oneletter_unsat.weq": ("UNSAT", 1),
    "oneletter_system_sat.weq": ("SAT", 0),
    "oneletter_ground.weq": ("SAT", 0),
    "oneletter_min_point.weq": ("SAT", 0),
    "oneletter_disjunction.weq": ("SAT", 0),
    "regord_sat_dfa.weq": ("SAT", 0),
    "regord_unsat.weq": ("UNSAT", 1),
    "regord_len.weq": ("SAT", 0),
    "regord_identical.weq": ("SAT", 0),
    "regord_two_terminals.weq": ("SAT", 0),
    "regord_dfa_unsat.weq": ("UNSAT", 1),
    "force_regord.weq": ("SAT", 0),
    "decide_two_terminals_true.weq": ("TRUE", 0),
    "decide_two_terminals_false.weq": ("FALSE", 1),
    "decide_pair_true.weq": ("TRUE", 0),
    "decide_oneletter_true.weq": ("TRUE", 0),
    "decide_length_false.weq": ("FALSE", 1),
    "decide_length_true.weq": ("TRUE", 0),
    "oracle_exists_sat.weq": ("SAT", 0),
    "oracle_exists_unknown.weq": ("UNKNOWN", 2),
    "oracle_forall_false.weq": ("FALSE", 1),
    "oracle_forall_unknown.weq": ("UNKNOWN", 2),
    "oracle_exists_forall.weq": ("SAT", 0),
    "oracle_regular.weq": ("SAT", 0),
    "oracle_negation.weq": ("SAT", 0),
    "encode_onlyas.weq": ("ENCODED", 0),
    "encode_eqa.weq": ("ENCODED", 0),
    "encode_subword.weq": ("ENCODED", 0),
    "encode_abelian.weq": ("ENCODED", 0),
    "encode_multiply.weq": ("ENCODED", 0),
    "encode_power.weq": ("ENCODED", 0),
    "encode_ipl.weq": ("ENCODED", 0),
    "encode_oneletter.weq": ("ENCODED", 0),
}

MODELS = {
    "oneletter_sat.weq": ['x = "aa"'],
    "oneletter_min_point.weq": ['x = "aa"', 'y = "aaa"'],
    "regord_sat_dfa.weq": ['x = ""', 'y = ""', 'z = "bb"'],
    "regord_len.weq": ['x = "aaa"'],
    "force_regord.weq": ['x = "aa"'],
    "oracle_exists_sat.weq": ['x = ""'],
    "oracle_negation.weq": ['x = "b"'],
}


def test_corpus_is_committed_and_large_enough():
    assert len(list(CORPUS.glob("*.weq"))) >= 25
    assert set(EXPECTED) == {p.name for p in CORPUS.glob("*.weq")}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_corpus_verdicts_and_exit_codes(name):
    problem = parse_problem((CORPUS / name).read_text())
    outcome = dispatch(problem)
    verdict, code = EXPECTED[name]
    assert outcome.verdict == verdict, outcome.lines
    assert outcome.exit_code == code
    if name in MODELS:
        assert outcome.lines == MODELS[name]


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_render_round_trip(name):
    problem = parse_problem((CORPUS / name).read_text())
    again = parse_problem(render_problem(problem))
    assert again == problem
    assert render_problem(again) == render_problem(problem)


def test_cli_exit_codes_via_main(tmp_path, capsys):
    code = main([str(CORPUS / "oneletter_sat.weq")])
    out = capsys.readouterr().out
    assert code == 0 and out.splitlines()[0] == "SAT"
    code = main([str(CORPUS / "oneletter_unsat.weq")])
    assert code == 1


def test_corpus_runner_lists_files_in_order(capsys):
    code = main(["--corpus", str(CORPUS)])
    out = capsys.readouterr().out
    names = [l.split()[1].rstrip(":") for l in out.splitlines() if l.startswith("==")]
    assert names == sorted(EXPECTED)
    assert code == 0


# -- parsing ------------------------------------------------------------------


def test_parse_error_missing_alphabet():
    with pytest.raises(ParseError, match="alphabet"):
        parse_problem("(var x) (assert (= (cat x) (cat x))) (check-sat)")


def test_parse_error_duplicate_alphabet():
    with pytest.raises(ParseError, match="duplicate"):
        parse_problem('(alphabet "ab") (alphabet "ab") (check-sat)')


def test_parse_error_undeclared_variable_with_position():
    with pytest.raises(ParseError, match=r"\d+:\d+.*undeclared"):
        parse_problem('(alphabet "ab") (assert (= (cat x) (cat "a"))) (check-sat)')


def test_parse_error_foreign_letter():
    with pytest.raises(ParseError, match="letter"):
        parse_problem('(alphabet "ab") (assert (= (cat "c") (cat "c"))) (check-sat)')


def test_parse_dfa_constraint():
    p = parse_problem(
        '(alphabet "ab") (var x) '
        "(assert-in x (dfa 2 0 (1) ((0 a 1) (0 b 0) (1 a 0) (1 b 0)))) "
        "(assert (= (cat x) (cat x))) (check-sat)"
    )
    assert p.regular["x"].accepts("a")
    assert not p.regular["x"].accepts("aa")


def test_routing_diagnosis_names_restrictions():
    p = parse_problem(
        '(alphabet "ab") (var x) (assert (!= (cat x "a") (cat "b"))) (check-sat)'
    )
    outcome = dispatch(p)
    assert outcome.exit_code == 3
    assert "oracle" in outcome.lines[0]
    assert "negation" in outcome.lines[0]


def test_checksat_rejects_universal_prefix():
    p = parse_problem(
        '(alphabet "ab") (var y) (forall y) '
        '(assert (= (cat y) (cat y))) (check-sat)'
    )
    assert dispatch(p).exit_code == 3


def test_max_expand_switches_to_compressed_form():
    text = (
        '(alphabet "ab")\n(var x)\n'
        '(assert (= (cat "a" x) (cat x "a")))\n'
        "(assert-len (= (len x) 9))\n(check-sat)\n"
    )
    outcome = dispatch(parse_problem(text), max_expand=4)
    assert outcome.verdict == "SAT"
    assert outcome.lines == ['x = ("a")^n "", n = 9']


def test_max_expand_compressed_parametric_form():
    text = (
        '(alphabet "ab")\n(var x)\n'
        '(assert (= (cat "a" x) (cat x "a")))\n'
        "(assert-len (= (len x) 9))\n(force regord)\n(check-sat)\n"
    )
    outcome = dispatch(parse_problem(text), max_expand=4)
    assert outcome.verdict == "SAT"
    assert outcome.lines == ['x = ("a")^n "", n = 9']


def test_gen_corpus_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["--gen-corpus", str(a), "--seed", "7", "--count", "6"]) == 0
    assert main(["--gen-corpus", str(b), "--seed", "7", "--count", "6"]) == 0
    for left, right in zip(sorted(a.iterdir()), sorted(b.iterdir())):
        assert left.read_text() == right.read_text()
    for f in sorted(a.glob("*.weq")):
        assert main([str(f)]) in (0, 1, 2)
