"""Syntax and concrete semantics of patterns, equations and quantified formulas.

Words are plain Python strings over a declared finite alphabet of single
character letters.  Patterns mix terminal letters with variables; a
substitution maps every variable to a word and acts as the identity on
terminals.  All values are immutable, every operation is pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union


class WordEqError(Exception):
    """Base class for errors raised by this package."""


class UnboundVariableError(WordEqError):
    pass


class FragmentError(WordEqError):
    """Input does not belong to the fragment a procedure requires."""


# ---------------------------------------------------------------------------
# Alphabet and symbols
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of single-character terminal letters."""

    letters: tuple[str, ...]

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if len(set(letters)) != len(letters):
            raise WordEqError(f"duplicate letters in alphabet {letters!r}")
        for c in letters:
            if len(c) != 1:
                raise WordEqError(f"alphabet letters must be single characters, got {c!r}")
        object.__setattr__(self, "letters", letters)

    def __contains__(self, letter: str) -> bool:
        return letter in self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def index(self, letter: str) -> int:
        return self.letters.index(letter)

    def check_word(self, w: str) -> str:
        for c in w:
            if c not in self.letters:
                raise WordEqError(f"letter {c!r} not in declared alphabet {self.letters}")
        return w


TERMINAL = "terminal"
VARIABLE = "variable"


@dataclass(frozen=True, order=True)
class Symbol:
    """Either a terminal letter or a variable occurrence."""

    kind: str
    name: str

    def __post_init__(self):
        if self.kind not in (TERMINAL, VARIABLE):
            raise WordEqError(f"bad symbol kind {self.kind!r}")
        if not self.name:
            raise WordEqError("empty symbol name")

    @property
    def is_variable(self) -> bool:
        return self.kind == VARIABLE

    @property
    def is_terminal(self) -> bool:
        return self.kind == TERMINAL

    def __repr__(self):
        return self.name if self.is_variable else repr(self.name)


def T(letter: str) -> Symbol:
    return Symbol(TERMINAL, letter)


def V(name: str) -> Symbol:
    return Symbol(VARIABLE, name)


# ---------------------------------------------------------------------------
# Patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    """Finite sequence of symbols; the empty pattern is valid."""

    symbols: tuple[Symbol, ...] = ()

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __add__(self, other: "Pattern") -> "Pattern":
        return Pattern(self.symbols + other.symbols)

    def variables(self) -> tuple[str, ...]:
        """Variable names in first-occurrence order."""
        seen: list[str] = []
        for s in self.symbols:
            if s.is_variable and s.name not in seen:
                seen.append(s.name)
        return tuple(seen)

    def terminals(self) -> frozenset[str]:
        return frozenset(s.name for s in self.symbols if s.is_terminal)

    def count(self, sym: Symbol) -> int:
        """Occurrence count |p|_z, defined for terminals and variables alike."""
        return sum(1 for s in self.symbols if s == sym)

    def var_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for s in self.symbols:
            if s.is_variable:
                out[s.name] = out.get(s.name, 0) + 1
        return out

    def terminal_length(self) -> int:
        """Total number of terminal occurrences."""
        return sum(1 for s in self.symbols if s.is_terminal)

    def image_length(self, var_lengths: dict[str, int]) -> int:
        """Length of the image under any substitution with these variable lengths."""
        n = 0
        for s in self.symbols:
            n += var_lengths[s.name] if s.is_variable else 1
        return n

    def is_ground(self) -> bool:
        return all(s.is_terminal for s in self.symbols)

    def ground_word(self) -> str:
        if not self.is_ground():
            raise WordEqError("pattern contains variables")
        return "".join(s.name for s in self.symbols)

    def __repr__(self):
        if not self.symbols:
            return "Pattern(ε)"
        bits = []
        for s in self.symbols:
            bits.append(s.name if s.is_variable else s.name)
        return "Pattern(" + "·".join(bits) + ")"


def word_pattern(w: str) -> Pattern:
    return Pattern(tuple(T(c) for c in w))


def parse_pattern(text: str, alphabet: Alphabet) -> Pattern:
    """Build a pattern from compact text.

    With whitespace, each chunk is either a run of alphabet letters (a
    terminal word) or a variable name.  Without whitespace the text is read
    character by character, single alphabet letters as terminals and any
    other character as a one-letter variable name.
    """
    syms: list[Symbol] = []
    chunks = text.split() if any(c.isspace() for c in text) else list(text)
    for chunk in chunks:
        if all(c in alphabet for c in chunk):
            syms.extend(T(c) for c in chunk)
        else:
            syms.append(V(chunk))
    return Pattern(tuple(syms))


# ---------------------------------------------------------------------------
# Equations, substitutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Equation:
    """U = V, or its negation U != V when ``negative`` is set."""

    lhs: Pattern
    rhs: Pattern
    negative: bool = False

    @property
    def positive(self) -> bool:
        return not self.negative

    def negated(self) -> "Equation":
        return Equation(self.lhs, self.rhs, not self.negative)

    def variables(self) -> tuple[str, ...]:
        return (self.lhs + self.rhs).variables()

    def terminals(self) -> frozenset[str]:
        return self.lhs.terminals() | self.rhs.terminals()

    def total_length(self) -> int:
        """|UV|, the combined symbol count of both sides."""
        return len(self.lhs) + len(self.rhs)

    def __repr__(self):
        op = "≠" if self.negative else "="
        return f"({self.lhs!r} {op} {self.rhs!r})"


@dataclass(frozen=True)
class Substitution:
    """Total assignment of words to a set of variables; identity on terminals."""

    mapping: tuple[tuple[str, str], ...]

    def __init__(self, mapping: Union[dict, Iterable[tuple[str, str]]]):
        if isinstance(mapping, dict):
            items = tuple(sorted(mapping.items()))
        else:
            items = tuple(sorted(mapping))
        object.__setattr__(self, "mapping", items)

    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)

    def __getitem__(self, var: str) -> str:
        for k, v in self.mapping:
            if k == var:
                return v
        raise UnboundVariableError(f"variable {var!r} is not bound")

    def __contains__(self, var: str) -> bool:
        return any(k == var for k, _ in self.mapping)

    def domain(self) -> frozenset[str]:
        return frozenset(k for k, _ in self.mapping)

    def extended(self, extra: dict[str, str]) -> "Substitution":
        d = self.as_dict()
        d.update(extra)
        return Substitution(d)

    def __repr__(self):
        inner = ", ".join(f"{k}↦{v!r}" for k, v in self.mapping)
        return "{" + inner + "}"


def apply_substitution(p: Pattern, h: Substitution) -> str:
    """Image of the pattern: variables replaced by their words, terminals kept."""
    out = []
    for s in p.symbols:
        if s.is_terminal:
            out.append(s.name)
        else:
            out.append(h[s.name])
    return "".join(out)


def equation_holds(e: Equation, h: Substitution) -> bool:
    same = apply_substitution(e.lhs, h) == apply_substitution(e.rhs, h)
    return same != e.negative


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PredicateAtom:
    """Named relation applied to patterns (or plain naturals in numeric slots)."""

    name: str
    args: tuple

    def variables(self) -> tuple[str, ...]:
        seen: list[str] = []
        for a in self.args:
            if isinstance(a, Pattern):
                for v in a.variables():
                    if v not in seen:
                        seen.append(v)
        return tuple(seen)


class Formula:
    """Base class of the quantifier-free formula tree."""

    def variables(self) -> tuple[str, ...]:
        seen: list[str] = []

        def walk(f: Formula):
            if isinstance(f, FAtom):
                vs = (
                    f.value.variables()
                    if isinstance(f.value, (Equation, PredicateAtom))
                    else ()
                )
                for v in vs:
                    if v not in seen:
                        seen.append(v)
            elif isinstance(f, FNot):
                walk(f.child)
            else:
                for c in f.children:
                    walk(c)

        walk(self)
        return tuple(seen)

    def atoms(self):
        if isinstance(self, FAtom):
            yield self.value
        elif isinstance(self, FNot):
            yield from self.child.atoms()
        else:
            for c in self.children:
                yield from c.atoms()


@dataclass(frozen=True, repr=False)
class FAtom(Formula):
    value: Union[Equation, PredicateAtom]

    def __repr__(self):
        return repr(self.value)


@dataclass(frozen=True, repr=False)
class FAnd(Formula):
    children: tuple[Formula, ...]

    def __repr__(self):
        return "(" + " ∧ ".join(map(repr, self.children)) + ")"


@dataclass(frozen=True, repr=False)
class FOr(Formula):
    children: tuple[Formula, ...]

    def __repr__(self):
        return "(" + " ∨ ".join(map(repr, self.children)) + ")"


@dataclass(frozen=True, repr=False)
class FNot(Formula):
    child: Formula

    def __repr__(self):
        return f"¬{self.child!r}"


def atom(value: Union[Equation, PredicateAtom]) -> FAtom:
    return FAtom(value)


def conj(*fs: Formula) -> Formula:
    return fs[0] if len(fs) == 1 else FAnd(tuple(fs))


def disj(*fs: Formula) -> Formula:
    return fs[0] if len(fs) == 1 else FOr(tuple(fs))


def is_positive(f: Formula) -> bool:
    """No negation node and no negative-polarity equation anywhere."""
    if isinstance(f, FNot):
        return False
    if isinstance(f, FAtom):
        return not (isinstance(f.value, Equation) and f.value.negative)
    return all(is_positive(c) for c in f.children)


PredEval = Callable[[str, tuple], bool]


def eval_formula(f: Formula, h: Substitution, pred_eval: Optional[PredEval] = None) -> bool:
    """Standard boolean semantics under a total substitution.

    Equation atoms compare images (XOR negative polarity); predicate atoms
    are delegated to ``pred_eval``, defaulting to the built-in catalog.
    """
    if isinstance(f, FAtom):
        v = f.value
        if isinstance(v, Equation):
            return equation_holds(v, h)
        if isinstance(v, PredicateAtom):
            if pred_eval is None:
                from .predicates import eval_predicate as pred_eval  # noqa: PLW0127

            args = tuple(
                apply_substitution(a, h) if isinstance(a, Pattern) else a for a in v.args
            )
            return pred_eval(v.name, args)
        raise WordEqError(f"bad atom {v!r}")
    if isinstance(f, FNot):
        return not eval_formula(f.child, h, pred_eval)
    if isinstance(f, FAnd):
        return all(eval_formula(c, h, pred_eval) for c in f.children)
    if isinstance(f, FOr):
        return any(eval_formula(c, h, pred_eval) for c in f.children)
    raise WordEqError(f"bad formula node {f!r}")


# ---------------------------------------------------------------------------
# Quantified formulas
# ---------------------------------------------------------------------------

EXISTS = "exists"
FORALL = "forall"


@dataclass(frozen=True)
class QuantifiedFormula:
    """Quantifier prefix (blocks of variables) over a quantifier-free matrix."""

    prefix: tuple[tuple[str, tuple[str, ...]], ...]
    matrix: Formula

    def __post_init__(self):
        seen: set[str] = set()
        for q, block in self.prefix:
            if q not in (EXISTS, FORALL):
                raise WordEqError(f"bad quantifier {q!r}")
            for v in block:
                if v in seen:
                    raise WordEqError(f"variable {v!r} quantified twice")
                seen.add(v)
        free = set(self.matrix.variables())
        if not free <= seen:
            raise WordEqError(f"unquantified variables {sorted(free - seen)}")

    def block(self, q: str) -> tuple[str, ...]:
        out: list[str] = []
        for kind, block in self.prefix:
            if kind == q:
                out.extend(block)
        return tuple(out)

    def fragment(self) -> str:
        """Sigma1 for a single exists block, Sigma2 / Sigma2+ for exists-forall."""
        kinds = [q for q, _ in self.prefix]
        if not kinds:
            return "ground"
        if kinds == [EXISTS]:
            return "Sigma1"
        if kinds == [FORALL]:
            return "Pi1"
        if kinds == [EXISTS, FORALL]:
            return "Sigma2+" if is_positive(self.matrix) else "Sigma2"
        if kinds == [FORALL, EXISTS]:
            return "Pi2"
        return "deep"

    def __repr__(self):
        parts = []
        for q, block in self.prefix:
            sym = "∃" if q == EXISTS else "∀"
            parts.append(sym + ",".join(block))
        return " ".join(parts) + ". " + repr(self.matrix)


# ---------------------------------------------------------------------------
# Word combinatorics
# ---------------------------------------------------------------------------


def primitive_root(w: str) -> str:
    """Shortest u with w in u+; w itself when w is primitive."""
    if not w:
        raise WordEqError("empty word has no primitive root")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    raise AssertionError("unreachable")


def commutation_check(u: str, v: str) -> Optional[tuple[str, int, int]]:
    """Decompose commuting words as powers of a common primitive root.

    Returns (w, p, q) with u = w^p and v = w^q whenever uv = vu, otherwise
    None.  For u = v = ε there is no primitive root; ("", 0, 0) is returned
    as the degenerate representation.
    """
    if u + v != v + u:
        return None
    if not u and not v:
        return ("", 0, 0)
    w = primitive_root(u + v)
    return (w, len(u) // len(w), len(v) // len(w))


# ---------------------------------------------------------------------------
# Solver verdicts
# ---------------------------------------------------------------------------


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolveResult:
    """SAT/UNSAT/UNKNOWN verdict, with a model when satisfiable."""

    status: str  # "sat" | "unsat" | "unknown"
    model: Optional[Substitution] = None
    parametric: object = None
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.status not in ("sat", "unsat", "unknown"):
            raise WordEqError(f"bad status {self.status!r}")
        if self.status == "sat" and self.model is None and self.parametric is None:
            raise WordEqError("sat result requires a model")

    @property
    def is_sat(self) -> bool:
        return self.status == "sat"

    @property
    def is_unsat(self) -> bool:
        return self.status == "unsat"
