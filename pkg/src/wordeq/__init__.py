"""Decision procedures for word equations with length, regular and
predicate extensions, cross-validated by a bounded brute-force oracle."""

from .core import (
    Alphabet,
    Equation,
    Pattern,
    Substitution,
    SolveResult,
    Symbol,
    QuantifiedFormula,
    Verdict,
    WordEqError,
    apply_substitution,
    commutation_check,
    eval_formula,
    parse_pattern,
    word_pattern,
)

__all__ = [
    "Alphabet",
    "Equation",
    "Pattern",
    "Substitution",
    "SolveResult",
    "Symbol",
    "QuantifiedFormula",
    "Verdict",
    "WordEqError",
    "apply_substitution",
    "commutation_check",
    "eval_formula",
    "parse_pattern",
    "word_pattern",
]

__version__ = "0.1.0"
