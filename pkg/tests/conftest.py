from __future__ import annotations

import pytest

from wordeq.core import Alphabet, Equation, parse_pattern


AB = Alphabet("ab")
ABC = Alphabet("abc")
BIN = Alphabet("01")


@pytest.fixture
def ab():
    return AB


@pytest.fixture
def abc():
    return ABC


def pat(text: str, alphabet: Alphabet = AB):
    return parse_pattern(text, alphabet)


def eq(lhs: str, rhs: str, alphabet: Alphabet = AB, negative: bool = False):
    return Equation(pat(lhs, alphabet), pat(rhs, alphabet), negative)
