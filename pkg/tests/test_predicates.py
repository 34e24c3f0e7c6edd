from __future__ import annotations

import itertools
import random

import pytest

from conftest import AB, ABC, BIN
from wordeq.core import WordEqError
from wordeq.predicates import (
    CATALOG,
    check_multiply,
    check_template,
    encode_counting,
    encode_multiply,
    encode_power_binary,
    eval_predicate,
    mutual_onlyas_eqa,
)


def words_upto(n, letters="ab"):
    for length in range(n + 1):
        for t in itertools.product(letters, repeat=length):
            yield "".join(t)


# -- relation semantics -------------------------------------------------------


def test_catalog_names_and_arities():
    assert set(CATALOG) == {
        "Eq_a", "Eq_b", "Length", "Abelian", "Shuffle", "Projection",
        "Subword", "Morphism", "Insert", "Erase", "Onlyas", "Onlybs",
        "strnum", "P",
    }


@pytest.mark.parametrize(
    "name,args,expect",
    [
        ("Eq_a", ("aba", "baa"), True),
        ("Eq_a", ("a", "bb"), False),
        ("Eq_b", ("ab", "ba"), True),
        ("Length", ("ab", "ba"), True),
        ("Length", ("ab", "b"), False),
        ("Abelian", ("ab", "ba"), True),
        ("Abelian", ("ab", "aa"), False),
        ("Shuffle", ("ab", "cd", "acbd"), True),
        ("Shuffle", ("ab", "cd", "adbc"), False),
        ("Projection", ("abcb", "aa"), False),
        ("Projection", ("abcb", "bb"), True),
        ("Projection", ("abcb", "ab"), False),
        ("Projection", ("abcb", "abb"), True),
        ("Subword", ("ac", "abc"), True),
        ("Subword", ("ca", "abc"), False),
        ("Morphism", ("ab", "bb"), True),
        ("Morphism", ("aa", "ab"), False),
        ("Erase", ("ab", "b", "a"), True),
        ("Erase", ("ab", "b", "ab"), True),
        ("Erase", ("ab", "ab", ""), True),
        ("Erase", ("aba", "a", "b"), True),
        ("Erase", ("aba", "a", "ab"), True),
        ("Erase", ("aba", "b", "a"), False),
        ("Insert", ("a", "b", "ab"), True),
        ("Insert", ("a", "b", "ba"), True),
        ("Insert", ("a", "b", "aa"), False),
        ("Onlyas", ("aba", "aa"), True),
        ("Onlyas", ("aba", "a"), False),
        ("Onlybs", ("aba", "b"), True),
        ("strnum", ("10", 2), True),
        ("strnum", ("010", 2), False),
        ("strnum", ("0", 0), True),
        ("strnum", ("", 0), False),
        ("P", (8, 2, 2), True),
        ("P", (5, 5, 0), True),
        ("P", (6, 2, 1), False),
    ],
)
def test_relation_semantics(name, args, expect):
    assert eval_predicate(name, args) is expect


def test_arity_mismatch_raises():
    with pytest.raises(WordEqError):
        eval_predicate("Abelian", ("a", "b", "c"))
    with pytest.raises(WordEqError):
        eval_predicate("NoSuchThing", ("a",))


def test_insert_erase_duality_exhaustive():
    for x in words_upto(3):
        for y in words_upto(3):
            for z in words_upto(3):
                assert eval_predicate("Insert", (x, y, z)) == eval_predicate(
                    "Erase", (z, y, x)
                )


def test_erase_brute_force_cross_check():
    # independent reference: enumerate decompositions around occurrence
    # choices by deleting any subset of non-overlapping matches
    def brute(x, y, z):
        if y == "":
            return x == z
        results = set()

        def walk(i, kept):
            if i == len(x):
                results.add(kept)
                return
            walk(i + 1, kept + x[i])
            if x.startswith(y, i):
                walk(i + len(y), kept)

        walk(0, "")
        return z in results

    for x in words_upto(4):
        for y in words_upto(2):
            for z in words_upto(4):
                assert eval_predicate("Erase", (x, y, z)) == brute(x, y, z), (x, y, z)


def test_subword_implies_shorter():
    rng = random.Random(22)
    for _ in range(200):
        x = "".join(rng.choice("ab") for _ in range(rng.randint(0, 4)))
        y = "".join(rng.choice("ab") for _ in range(rng.randint(0, 4)))
        if eval_predicate("Subword", (x, y)):
            assert len(x) <= len(y)


def test_abelian_implies_length():
    rng = random.Random(23)
    for _ in range(200):
        x = "".join(rng.choice("ab") for _ in range(rng.randint(0, 4)))
        y = "".join(rng.choice("ab") for _ in range(rng.randint(0, 4)))
        if eval_predicate("Abelian", (x, y)):
            assert eval_predicate("Length", (x, y))


def test_morphism_agrees_with_exhaustive_images():
    # reference: enumerate all letter images up to |y|
    def brute(x, y):
        letters = sorted(set(x))
        pools = [list(words_upto(len(y))) for _ in letters]
        for combo in itertools.product(*pools):
            images = dict(zip(letters, combo))
            if "".join(images[c] for c in x) == y:
                return True
        return not x and not y

    for x in words_upto(3):
        for y in words_upto(3):
            assert eval_predicate("Morphism", (x, y)) == brute(x, y), (x, y)


# -- counting encoders -------------------------------------------------------


def bounded_matches_target(template, target, alphabet, arg_len, bound):
    for x in words_upto(arg_len, "".join(alphabet.letters)):
        for y in words_upto(arg_len, "".join(alphabet.letters)):
            got = check_template(template, (x, y), alphabet, bound)
            want = eval_predicate(target, (x, y))
            assert got == want, (template, x, y, got, want)


def test_onlyas_from_eqa_template():
    t, _ = mutual_onlyas_eqa()
    bounded_matches_target(t, "Onlyas", AB, 3, 4)


def test_eqa_from_onlyas_template():
    _, t = mutual_onlyas_eqa()
    bounded_matches_target(t, "Eq_a", AB, 3, 4)


def test_abelian_encoder_two_letters():
    t = encode_counting("Abelian", "Eq_a", AB)
    bounded_matches_target(t, "Eq_a", AB, 3, 4)


def test_abelian_encoder_three_letters():
    t = encode_counting("Abelian", "Eq_a", ABC)
    bounded_matches_target(t, "Eq_a", ABC, 2, 3)


def test_shuffle_encoder():
    t = encode_counting("Shuffle", "Onlyas", AB)
    bounded_matches_target(t, "Onlyas", AB, 3, 4)


def test_shuffle_encoder_three_letters():
    t = encode_counting("Shuffle", "Onlyas", ABC)
    bounded_matches_target(t, "Onlyas", ABC, 2, 3)


def test_projection_encoder():
    t = encode_counting("Projection", "Onlyas", AB)
    bounded_matches_target(t, "Onlyas", AB, 3, 4)


def test_subword_encoder():
    t = encode_counting("Subword", "Onlyas", AB)
    bounded_matches_target(t, "Onlyas", AB, 3, 4)


def test_erase_encoder_two_and_three_letters():
    bounded_matches_target(encode_counting("Erase", "Onlyas", AB), "Onlyas", AB, 3, 4)
    bounded_matches_target(
        encode_counting("Erase", "Onlyas", ABC), "Onlyas", ABC, 2, 3
    )


def test_insert_encoder():
    t = encode_counting("Insert", "Onlyas", AB)
    bounded_matches_target(t, "Onlyas", AB, 3, 4)


def test_unsupported_pair_lists_supported_ones():
    with pytest.raises(WordEqError, match="supported"):
        encode_counting("Morphism", "Onlyas", AB)


# -- the product encoder --------------------------------------------------------


def test_multiply_requires_three_letters():
    with pytest.raises(WordEqError):
        encode_multiply(AB)


def test_multiply_reference_cases():
    t = encode_multiply(ABC)
    assert check_multiply(t, 1, 2, 2, ABC) is True
    assert check_multiply(t, 1, 2, 3, ABC) is False
    assert check_multiply(t, 1, 1, 1, ABC) is False  # ij >= 2 guard
    assert check_multiply(t, 1, 1, 2, ABC) is False


# -- the power encoder -----------------------------------------------------------


def test_power_encoder_cases():
    t = encode_power_binary()
    assert check_template(t, (8, 2, 2), BIN, 6) is True
    assert check_template(t, (5, 5, 0), BIN, 6) is True
    assert check_template(t, (6, 2, 1), BIN, 6) is False
