from __future__ import annotations

import itertools
import random

import pytest

from conftest import AB, eq, pat
from wordeq.core import (
    Alphabet,
    Equation,
    FAtom,
    FAnd,
    FNot,
    Pattern,
    QuantifiedFormula,
    Substitution,
    UnboundVariableError,
    V,
    WordEqError,
    apply_substitution,
    commutation_check,
    eval_formula,
    is_positive,
    primitive_root,
    word_pattern,
)


def words_upto(n, letters="ab"):
    for length in range(n + 1):
        for t in itertools.product(letters, repeat=length):
            yield "".join(t)


# -- apply -----------------------------------------------------------------


def test_apply_basic():
    h = Substitution({"x": "ab", "y": ""})
    assert apply_substitution(pat("x a y"), h) == "aba"


def test_apply_ground_ignores_substitution():
    assert apply_substitution(pat("abc", Alphabet("abc")), Substitution({})) == "abc"


def test_apply_doubles():
    assert apply_substitution(pat("xx"), Substitution({"x": "ab"})) == "abab"


def test_apply_unbound_variable_is_named():
    with pytest.raises(UnboundVariableError, match="x"):
        apply_substitution(pat("x a"), Substitution({"y": "a"}))


def test_apply_depends_only_on_pattern_variables():
    rng = random.Random(1)
    for _ in range(200):
        p = pat("".join(rng.choice("abxy") for _ in range(rng.randint(0, 5))))
        binding = {v: "".join(rng.choice("ab") for _ in range(rng.randint(0, 3)))
                   for v in p.variables()}
        extra = dict(binding, z="bbb")
        assert apply_substitution(p, Substitution(binding)) == apply_substitution(
            p, Substitution(extra)
        )


def test_length_homomorphism_identity():
    rng = random.Random(2)
    for _ in range(200):
        p = pat("".join(rng.choice("abxy") for _ in range(rng.randint(0, 6))))
        h = {v: "".join(rng.choice("ab") for _ in range(rng.randint(0, 3)))
             for v in p.variables()}
        image = apply_substitution(p, Substitution(h))
        assert len(image) == p.image_length({v: len(w) for v, w in h.items()})


# -- occurrence counts and invariants ---------------------------------------


def test_occurrence_counting_over_terminals_and_variables():
    p = pat("x a x b a")
    assert p.count(V("x")) == 2
    assert p.var_counts() == {"x": 2}
    assert p.terminal_length() == 3
    assert p.terminals() == {"a", "b"}


def test_empty_pattern_is_valid():
    p = Pattern(())
    assert len(p) == 0
    assert apply_substitution(p, Substitution({})) == ""


# -- formulas ---------------------------------------------------------------


def test_eval_formula_equation_atom():
    f = FAtom(eq("x a", "a x"))
    assert eval_formula(f, Substitution({"x": "aa"}))
    assert not eval_formula(f, Substitution({"x": "ba"}))


def test_eval_formula_negative_equation():
    f = FAtom(eq("x", "y", negative=True))
    assert not eval_formula(f, Substitution({"x": "a", "y": "a"}))
    assert eval_formula(f, Substitution({"x": "a", "y": "b"}))


def test_eval_formula_conjunction_contradiction():
    f = FAnd((FAtom(eq("x", "a")), FAtom(eq("x", "b"))))
    for w in words_upto(3):
        assert not eval_formula(f, Substitution({"x": w}))


def test_positive_formula_classification():
    assert is_positive(FAtom(eq("x", "a")))
    assert not is_positive(FNot(FAtom(eq("x", "a"))))
    assert not is_positive(FAtom(eq("x", "a", negative=True)))


def test_fragment_classifier():
    matrix = FAtom(eq("x y", "y x"))
    sigma1 = QuantifiedFormula((("exists", ("x", "y")),), matrix)
    assert sigma1.fragment() == "Sigma1"
    sigma2p = QuantifiedFormula(
        (("exists", ("x",)), ("forall", ("y",))), matrix
    )
    assert sigma2p.fragment() == "Sigma2+"
    sigma2 = QuantifiedFormula(
        (("exists", ("x",)), ("forall", ("y",))), FNot(matrix)
    )
    assert sigma2.fragment() == "Sigma2"


def test_quantified_formula_rejects_uncovered_variables():
    with pytest.raises(WordEqError):
        QuantifiedFormula((("exists", ("x",)),), FAtom(eq("x y", "y x")))


# -- word combinatorics -----------------------------------------------------


def test_commutation_examples():
    assert commutation_check("abab", "ab") == ("ab", 2, 1)
    assert commutation_check("a", "b") is None
    assert commutation_check("", "aba") == ("aba", 0, 1)


def test_commutation_exhaustive_to_length_six():
    for u in words_upto(6):
        for v in words_upto(6):
            hit = commutation_check(u, v)
            if u + v == v + u:
                assert hit is not None
                w, p, q = hit
                assert w * p == u and w * q == v
                if w:
                    assert primitive_root(w) == w
            else:
                assert hit is None


def test_primitive_root():
    assert primitive_root("ababab") == "ab"
    assert primitive_root("aba") == "aba"
    with pytest.raises(WordEqError):
        primitive_root("")
