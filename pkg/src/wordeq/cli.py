"""Command-line front end: problem files, routing, verdict rendering.

Problem files are parenthesized forms: an alphabet declaration, variable
declarations, an optional exists/forall prefix, assertions (equations,
formulas, length constraints, DFA memberships), an optional (force ...)
override and exactly one directive.  Verdicts map to exit codes 0 (SAT or
TRUE), 1 (UNSAT or FALSE), 2 (UNKNOWN) and 3 (errors, including routing
failures).  Output is deterministic: one verdict token, then model lines.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .automata import Dfa, dfa_from_partial
from .combinators import decide_sigma2_positive
from .core import (
    Alphabet,
    EXISTS,
    Equation,
    FAtom,
    FAnd,
    FNot,
    FOr,
    FORALL,
    Formula,
    Pattern,
    PredicateAtom,
    QuantifiedFormula,
    Substitution,
    V,
    Verdict,
    WordEqError,
    is_positive,
    word_pattern,
)
from .oneletter import LengthConstraintSystem, decide_oneletter_sigma2, solve_oneletter
from .diophantine import EQ, GE, LE, LinearConstraint
from .oracle import (
    EXHAUSTED_NO_VIOLATION,
    EXHAUSTED_NO_WITNESS,
    VIOLATION_FOUND,
    WITNESS_FOUND,
    bounded_check,
)
from .predicates import (
    CATALOG,
    encode_counting,
    encode_multiply,
    encode_power_binary,
    mutual_onlyas_eqa,
)
from .regord import check_strictly_regular_ordered, solve_regular_ordered


class ParseError(WordEqError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# Tokenizer / reader
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Tok:
    text: str
    line: int
    col: int
    quoted: bool = False


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, col, i = 1, 1, 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line, col = line + 1, 1
            i += 1
        elif c.isspace():
            col += 1
            i += 1
        elif c == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
        elif c in "()":
            toks.append(_Tok(c, line, col))
            col += 1
            i += 1
        elif c == '"':
            j = text.find('"', i + 1)
            if j < 0:
                raise ParseError("unterminated string literal", line, col)
            toks.append(_Tok(text[i + 1 : j], line, col, quoted=True))
            col += j - i + 1
            i = j + 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in '();"':
                j += 1
            toks.append(_Tok(text[i:j], line, col))
            col += j - i
            i = j
    return toks


def _read_forms(toks: list[_Tok]):
    forms, pos = [], 0

    def read(pos: int):
        if pos >= len(toks):
            raise ParseError("unexpected end of input", 0, 0)
        t = toks[pos]
        if t.text == "(" and not t.quoted:
            items = []
            pos += 1
            while True:
                if pos >= len(toks):
                    raise ParseError("missing ')'", t.line, t.col)
                if toks[pos].text == ")" and not toks[pos].quoted:
                    return items, pos + 1, t
                item, pos, _ = read(pos)
                items.append(item)
        if t.text == ")" and not t.quoted:
            raise ParseError("unexpected ')'", t.line, t.col)
        return t, pos + 1, t

    while pos < len(toks):
        form, pos, head = read(pos)
        if not isinstance(form, list):
            raise ParseError("top-level forms must be parenthesized", head.line, head.col)
        forms.append((form, head))
    return forms


def _sym(x, what: str) -> _Tok:
    if isinstance(x, _Tok):
        return x
    raise ParseError(f"expected {what}", 0, 0)


# ---------------------------------------------------------------------------
# Problem files
# ---------------------------------------------------------------------------

DIRECTIVES = ("check-sat", "decide", "encode", "oracle")


@dataclass
class ProblemFile:
    alphabet: Alphabet
    variables: tuple[str, ...]
    exists_block: tuple[str, ...]
    forall_block: tuple[str, ...]
    has_prefix: bool
    assertions: tuple[Formula, ...]
    lengths: LengthConstraintSystem
    regular: dict[str, Dfa]
    directive: tuple[str, Optional[object]]
    force: Optional[str] = None

    def matrix(self) -> Formula:
        if not self.assertions:
            p = Pattern(())
            return FAtom(Equation(p, p))
        if len(self.assertions) == 1:
            return self.assertions[0]
        return FAnd(tuple(self.assertions))

    def quantified(self) -> QuantifiedFormula:
        if self.has_prefix:
            prefix = []
            if self.exists_block:
                prefix.append((EXISTS, self.exists_block))
            if self.forall_block:
                prefix.append((FORALL, self.forall_block))
        else:
            free = self.matrix().variables()
            prefix = [(EXISTS, tuple(free))] if free else []
        return QuantifiedFormula(tuple(prefix), self.matrix())


class _Parser:
    def __init__(self, text: str):
        self.forms = _read_forms(_tokenize(text))
        self.alphabet: Optional[Alphabet] = None
        self.variables: list[str] = []
        self.exists: list[str] = []
        self.forall: list[str] = []
        self.has_prefix = False
        self.assertions: list[Formula] = []
        self.lengths: list[LinearConstraint] = []
        self.regular: dict[str, Dfa] = {}
        self.directive: Optional[tuple[str, Optional[object]]] = None
        self.force: Optional[str] = None

    def fail(self, msg: str, tok: _Tok):
        raise ParseError(msg, tok.line, tok.col)

    def parse(self) -> ProblemFile:
        for form, head in self.forms:
            if not form or not isinstance(form[0], _Tok):
                self.fail("empty form", head)
            key = form[0].text
            handler = getattr(self, "_form_" + key.replace("-", "_"), None)
            if handler is None:
                self.fail(f"unknown form ({key} ...)", form[0])
            handler(form)
        if self.alphabet is None:
            raise ParseError("missing (alphabet ...) declaration", 1, 1)
        if self.directive is None:
            raise ParseError("missing directive", 1, 1)
        return ProblemFile(
            self.alphabet,
            tuple(self.variables),
            tuple(self.exists),
            tuple(self.forall),
            self.has_prefix,
            tuple(self.assertions),
            LengthConstraintSystem(self.lengths),
            dict(self.regular),
            self.directive,
            self.force,
        )

    # -- declarations

    def _form_alphabet(self, form):
        if self.alphabet is not None:
            self.fail("duplicate alphabet declaration", form[0])
        if len(form) != 2 or not isinstance(form[1], _Tok) or not form[1].quoted:
            self.fail('(alphabet "<letters>") expects one quoted string', form[0])
        self.alphabet = Alphabet(form[1].text)

    def _form_var(self, form):
        if len(form) != 2 or not isinstance(form[1], _Tok):
            self.fail("(var <name>) expects one name", form[0])
        name = form[1].text
        if name in self.variables:
            self.fail(f"duplicate variable {name}", form[1])
        self.variables.append(name)

    def _block(self, form):
        names = []
        for item in form[1:]:
            t = _sym(item, "variable name")
            if t.text not in self.variables:
                self.fail(f"undeclared variable {t.text}", t)
            names.append(t.text)
        self.has_prefix = True
        return names

    def _form_exists(self, form):
        self.exists.extend(self._block(form))

    def _form_forall(self, form):
        self.forall.extend(self._block(form))

    # -- patterns and formulas

    def _pattern(self, item) -> Pattern:
        if isinstance(item, _Tok):
            return self._pattern_item(item)
        head = _sym(item[0], "cat")
        if head.text != "cat":
            self.fail("pattern must be (cat ...), a variable or a literal", head)
        p = Pattern(())
        for sub in item[1:]:
            p = p + self._pattern_item(_sym(sub, "pattern item"))
        return p

    def _pattern_item(self, t: _Tok) -> Pattern:
        if t.quoted:
            for c in t.text:
                if c not in self.alphabet:
                    self.fail(f"letter {c!r} not in alphabet", t)
            return word_pattern(t.text)
        if t.text not in self.variables:
            self.fail(f"undeclared variable {t.text}", t)
        return Pattern((V(t.text),))

    def _formula(self, item) -> Formula:
        if isinstance(item, _Tok):
            self.fail("expected a formula form", item)
        head = _sym(item[0], "formula head")
        k = head.text
        if k in ("=", "!="):
            if len(item) != 3:
                self.fail(f"({k} <pat> <pat>) expects two patterns", head)
            return FAtom(
                Equation(self._pattern(item[1]), self._pattern(item[2]), k == "!=")
            )
        if k == "and":
            return FAnd(tuple(self._formula(c) for c in item[1:]))
        if k == "or":
            return FOr(tuple(self._formula(c) for c in item[1:]))
        if k == "not":
            if len(item) != 2:
                self.fail("(not <form>) expects one form", head)
            return FNot(self._formula(item[1]))
        if k == "pred":
            name = _sym(item[1], "predicate name").text
            if name not in CATALOG:
                self.fail(f"unknown predicate {name}", item[1])
            args = tuple(self._pattern(c) for c in item[2:])
            if len(args) != CATALOG[name][0]:
                self.fail(
                    f"{name} takes {CATALOG[name][0]} arguments, got {len(args)}",
                    item[1],
                )
            return FAtom(PredicateAtom(name, args))
        self.fail(f"unknown formula head {k}", head)

    def _form_assert(self, form):
        if len(form) != 2:
            self.fail("(assert <form>) expects one form", form[0])
        self.assertions.append(self._formula(form[1]))

    # -- length constraints

    def _linear(self, item) -> tuple[dict[str, int], int]:
        coeffs: dict[str, int] = {}
        const = 0

        def term(t):
            nonlocal const
            if isinstance(t, _Tok):
                try:
                    const += int(t.text)
                except ValueError:
                    self.fail(f"expected an integer, got {t.text}", t)
                return
            head = _sym(t[0], "term head")
            if head.text == "len":
                name = _sym(t[1], "variable").text
                if name not in self.variables:
                    self.fail(f"undeclared variable {name}", t[1])
                coeffs[name] = coeffs.get(name, 0) + 1
            elif head.text == "*":
                k_tok = _sym(t[1], "coefficient")
                try:
                    k = int(k_tok.text)
                except ValueError:
                    self.fail(f"expected an integer, got {k_tok.text}", k_tok)
                inner = t[2]
                name = _sym(inner[1], "variable").text
                if not isinstance(inner, list) or _sym(inner[0], "len").text != "len":
                    self.fail("(* k (len x)) expected", head)
                if name not in self.variables:
                    self.fail(f"undeclared variable {name}", inner[1])
                coeffs[name] = coeffs.get(name, 0) + k
            else:
                self.fail(f"unknown term ({head.text} ...)", head)

        if isinstance(item, list) and item and isinstance(item[0], _Tok) \
                and item[0].text == "+":
            for t in item[1:]:
                term(t)
        else:
            term(item)
        return coeffs, const

    def _form_assert_len(self, form):
        if len(form) != 2 or isinstance(form[1], _Tok):
            self.fail("(assert-len (<rel> <lin> <lin>)) expected", form[0])
        rel_form = form[1]
        rel = _sym(rel_form[0], "relation").text
        if rel not in (EQ, LE, GE):
            self.fail(f"relation must be = or <= or >=, got {rel}", rel_form[0])
        c1, k1 = self._linear(rel_form[1])
        c2, k2 = self._linear(rel_form[2])
        coeffs = dict(c1)
        for v, c in c2.items():
            coeffs[v] = coeffs.get(v, 0) - c
        self.lengths.append(LinearConstraint(coeffs, k2 - k1, rel))

    # -- regular constraints

    def _form_assert_in(self, form):
        if len(form) != 3:
            self.fail("(assert-in <var> (dfa ...)) expected", form[0])
        var = _sym(form[1], "variable").text
        if var not in self.variables:
            self.fail(f"undeclared variable {var}", form[1])
        dfa_form = form[2]
        if isinstance(dfa_form, _Tok) or _sym(dfa_form[0], "dfa").text != "dfa":
            self.fail("(dfa <n> <init> (<accepting>...) (<transitions>...)) expected",
                      form[0])
        try:
            n = int(_sym(dfa_form[1], "state count").text)
            init = int(_sym(dfa_form[2], "initial state").text)
            accepting = [int(_sym(t, "state").text) for t in dfa_form[3]]
            transitions = []
            for tr in dfa_form[4]:
                src = int(_sym(tr[0], "state").text)
                letter = _sym(tr[1], "letter").text
                dst = int(_sym(tr[2], "state").text)
                transitions.append((src, letter, dst))
        except (ValueError, IndexError, TypeError):
            self.fail("malformed DFA", form[0])
        if var in self.regular:
            self.fail(f"duplicate regular constraint for {var}", form[1])
        self.regular[var] = dfa_from_partial(n, init, accepting, transitions, self.alphabet)

    # -- control

    def _form_force(self, form):
        self.force = _sym(form[1], "procedure").text

    def _directive_common(self, name, arg=None):
        if self.directive is not None:
            raise WordEqError("duplicate directive")
        self.directive = (name, arg)

    def _form_check_sat(self, form):
        self._directive_common("check-sat")

    def _form_decide(self, form):
        self._directive_common("decide")

    def _form_encode(self, form):
        self._directive_common("encode", _sym(form[1], "encoder name").text)

    def _form_oracle(self, form):
        bound = int(_sym(form[1], "bound").text)
        self._directive_common("oracle", bound)


def parse_problem(text: str) -> ProblemFile:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _render_pattern(p: Pattern) -> str:
    items = []
    run = ""
    for s in p.symbols:
        if s.is_terminal:
            run += s.name
        else:
            if run:
                items.append(f'"{run}"')
                run = ""
            items.append(s.name)
    if run:
        items.append(f'"{run}"')
    return "(cat " + " ".join(items) + ")" if items else '(cat "")'


def _render_formula(f: Formula) -> str:
    if isinstance(f, FAtom):
        v = f.value
        if isinstance(v, Equation):
            op = "!=" if v.negative else "="
            return f"({op} {_render_pattern(v.lhs)} {_render_pattern(v.rhs)})"
        args = " ".join(
            _render_pattern(a) if isinstance(a, Pattern) else str(a) for a in v.args
        )
        return f"(pred {v.name} {args})"
    if isinstance(f, FNot):
        return f"(not {_render_formula(f.child)})"
    op = "and" if isinstance(f, FAnd) else "or"
    return f"({op} " + " ".join(_render_formula(c) for c in f.children) + ")"


def _render_linear(coeffs: dict[str, int], const: int) -> str:
    terms = [f"(* {c} (len {v}))" for v, c in sorted(coeffs.items())]
    terms.append(str(const))
    return "(+ " + " ".join(terms) + ")"


def render_problem(p: ProblemFile) -> str:
    lines = [f'(alphabet "{"".join(p.alphabet.letters)}")']
    for v in p.variables:
        lines.append(f"(var {v})")
    if p.has_prefix:
        if p.exists_block:
            lines.append("(exists " + " ".join(p.exists_block) + ")")
        if p.forall_block:
            lines.append("(forall " + " ".join(p.forall_block) + ")")
    for a in p.assertions:
        lines.append(f"(assert {_render_formula(a)})")
    for c in p.lengths.constraints:
        lines.append(
            f"(assert-len ({c.relation} {_render_linear(dict(c.coeffs), 0)} "
            f"{_render_linear({}, c.constant)}))"
        )
    for v, dfa in sorted(p.regular.items()):
        acc = " ".join(str(s) for s in sorted(dfa.accepting))
        trs = " ".join(
            f"({src} {letter} {dst})" for (src, letter, dst) in dfa.transitions
        )
        lines.append(
            f"(assert-in {v} (dfa {dfa.state_count} {dfa.initial} ({acc}) ({trs})))"
        )
    if p.force:
        lines.append(f"(force {p.force})")
    name, arg = p.directive
    lines.append(f"({name})" if arg is None else f"({name} {arg})")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------


@dataclass
class Outcome:
    verdict: str
    lines: list[str] = field(default_factory=list)
    exit_code: int = 0


def _model_lines(model: Optional[Substitution], parametric, metadata,
                 max_expand: int) -> list[str]:
    lines = []
    if model is not None:
        for v, w in model.mapping:
            if len(w) <= max_expand:
                lines.append(f'{v} = "{w}"')
                continue
            lines.append(_compressed_line(v, parametric, metadata, word=w))
    elif parametric is not None:
        for v in parametric.variables():
            lines.append(_compressed_line(v, parametric, metadata))
    return lines


def _compressed_line(v, parametric, metadata, word: Optional[str] = None) -> str:
    exponents = (metadata or {}).get("exponents", {})
    if parametric is not None:
        try:
            ent = parametric.entry(v)
        except WordEqError:
            ent = None
        if ent is not None and ent.kind == "parameter":
            n = exponents.get(v)
            return f'{v} = ("{ent.alpha}{ent.beta}")^n "{ent.alpha}", n = {n}'
        if ent is not None:
            return f'{v} = "{ent.alpha}"'
    if word is not None:
        from .core import primitive_root

        root = primitive_root(word)
        return f'{v} = ("{root}")^n "", n = {len(word) // len(root)}'
    length = (metadata or {}).get("lengths", {}).get(v)
    return f"{v} = <word of length {length}>"


def _formula_terminals(f: Formula) -> set[str]:
    out: set[str] = set()
    for a in f.atoms():
        if isinstance(a, Equation):
            out |= a.terminals()
    return out


def _formula_has_predicates(f: Formula) -> bool:
    return any(isinstance(a, PredicateAtom) for a in f.atoms())


def _single_equation(p: ProblemFile) -> Optional[Equation]:
    m = p.matrix()
    if isinstance(m, FAtom) and isinstance(m.value, Equation) and m.value.positive:
        return m.value
    return None


def dispatch(p: ProblemFile, max_expand: int = 10_000) -> Outcome:
    """Route a problem to the matching procedure and render its verdict."""
    name, arg = p.directive
    if name == "oracle":
        return _run_oracle(p, arg, max_expand)
    if name == "encode":
        return _run_encode(p, arg)
    if name == "decide":
        return _run_decide(p)
    return _run_check_sat(p, max_expand)


def _run_oracle(p: ProblemFile, bound: int, max_expand: int) -> Outcome:
    phi = p.quantified()
    verdict = bounded_check(
        phi,
        p.alphabet,
        bound,
        length_system=p.lengths if p.lengths.constraints else None,
        regular=p.regular or None,
    )
    if verdict.kind == WITNESS_FOUND:
        return Outcome("SAT", _model_lines(verdict.assignment, None, None, max_expand))
    if verdict.kind == VIOLATION_FOUND:
        return Outcome(
            "FALSE", _model_lines(verdict.assignment, None, None, max_expand), 1
        )
    if verdict.kind == EXHAUSTED_NO_WITNESS:
        return Outcome("UNKNOWN", [f"; no witness with images up to {bound}"], 2)
    assert verdict.kind == EXHAUSTED_NO_VIOLATION
    return Outcome("UNKNOWN", [f"; no violation with images up to {bound}"], 2)


def _run_check_sat(p: ProblemFile, max_expand: int) -> Outcome:
    if p.forall_block:
        return Outcome(
            "ERROR",
            ["; universal quantification requires (decide) or (oracle <bound>)"],
            3,
        )
    matrix = p.matrix()
    route = p.force
    if route is None:
        eq = _single_equation(p)
        if (
            not p.regular
            and is_positive(matrix)
            and not _formula_has_predicates(matrix)
            and len(_formula_terminals(matrix)) <= 1
        ):
            route = "oneletter"
        elif eq is not None and check_strictly_regular_ordered(eq):
            route = "regord"
        else:
            reasons = []
            if not is_positive(matrix):
                reasons.append("negation present")
            if len(_formula_terminals(matrix)) > 1:
                reasons.append("more than one terminal letter")
            if _formula_has_predicates(matrix):
                reasons.append("predicate atoms present")
            if eq is None:
                reasons.append("not a single positive equation")
            elif not check_strictly_regular_ordered(eq):
                reasons.append("not strictly regular-ordered")
            if p.regular:
                reasons.append("regular constraints need the strictly "
                               "regular-ordered route")
            detail = "; ".join(reasons) or "unsupported shape"
            return Outcome(
                "ERROR",
                [f"; no complete procedure ({detail}); try (oracle <bound>)"],
                3,
            )
    try:
        if route == "oneletter":
            result = solve_oneletter(matrix, p.lengths, p.alphabet)
        elif route == "regord":
            eq = _single_equation(p)
            if eq is None:
                raise WordEqError("the regular-ordered route needs a single "
                                  "positive equation")
            result = solve_regular_ordered(
                eq, p.lengths, p.regular, p.alphabet, max_expand
            )
        else:
            return Outcome("ERROR", [f"; unknown procedure {route}"], 3)
    except WordEqError as exc:
        return Outcome("ERROR", [f"; {exc}"], 3)
    if result.is_sat:
        return Outcome(
            "SAT",
            _model_lines(result.model, result.parametric, result.metadata, max_expand),
        )
    return Outcome("UNSAT", [], 1)


def _run_decide(p: ProblemFile) -> Outcome:
    phi = p.quantified()
    matrix = phi.matrix
    try:
        has_preds = _formula_has_predicates(matrix)
        only_length = all(
            not isinstance(a, PredicateAtom) or a.name == "Length"
            for a in matrix.atoms()
        )
        if has_preds and not only_length:
            return Outcome(
                "ERROR",
                ["; only the Length predicate is decidable here"],
                3,
            )
        if has_preds or len(_formula_terminals(matrix)) <= 1:
            verdict = decide_oneletter_sigma2(phi, p.alphabet)
            return (
                Outcome("TRUE") if verdict else Outcome("FALSE", [], 1)
            )
        v = decide_sigma2_positive(phi, p.alphabet)
    except WordEqError as exc:
        return Outcome("ERROR", [f"; {exc}"], 3)
    if v == Verdict.TRUE:
        return Outcome("TRUE")
    if v == Verdict.FALSE:
        return Outcome("FALSE", [], 1)
    return Outcome("UNKNOWN", ["; the bounded existential solver was inconclusive"], 2)


_ENCODERS = {
    "onlyas-from-eq_a": lambda p: mutual_onlyas_eqa()[0],
    "eq_a-from-onlyas": lambda p: mutual_onlyas_eqa()[1],
    "abelian-eq_a": lambda p: encode_counting("Abelian", "Eq_a", p.alphabet),
    "shuffle-onlyas": lambda p: encode_counting("Shuffle", "Onlyas", p.alphabet),
    "projection-onlyas": lambda p: encode_counting("Projection", "Onlyas", p.alphabet),
    "subword-onlyas": lambda p: encode_counting("Subword", "Onlyas", p.alphabet),
    "erase-onlyas": lambda p: encode_counting("Erase", "Onlyas", p.alphabet),
    "insert-onlyas": lambda p: encode_counting("Insert", "Onlyas", p.alphabet),
    "multiply2": lambda p: encode_multiply(p.alphabet),
    "power-binary": lambda p: encode_power_binary(),
}


def _run_encode(p: ProblemFile, name: str) -> Outcome:
    if name == "ipl":
        eq = _single_equation(p)
        if eq is None:
            return Outcome(
                "ERROR", ["; (encode ipl) needs one positive equation"], 3
            )
        from .satunsat import encode_ipl

        try:
            phi = encode_ipl(eq.lhs, eq.rhs, p.alphabet)
        except WordEqError as exc:
            return Outcome("ERROR", [f"; {exc}"], 3)
        lines = []
        for q, block in phi.prefix:
            lines.append(f"({q} " + " ".join(block) + ")")
        lines.append(f"matrix = {_render_formula(phi.matrix)}")
        return Outcome("ENCODED", lines)
    if name == "oneletter":
        eq = _single_equation(p)
        if eq is None:
            return Outcome(
                "ERROR", ["; (encode oneletter) needs one positive equation"], 3
            )
        from .oneletter import encode_general_as_oneletter

        eqs, theta = encode_general_as_oneletter(eq, p.lengths, p.alphabet)
        lines = [f"equation = {_render_formula(FAtom(e))}" for e in eqs]
        for c in theta.constraints:
            lines.append(
                f"length = ({c.relation} {_render_linear(dict(c.coeffs), 0)} "
                f"{_render_linear({}, c.constant)})"
            )
        return Outcome("ENCODED", lines)
    maker = _ENCODERS.get(name)
    if maker is None:
        known = ", ".join(sorted(_ENCODERS) + ["ipl", "oneletter"])
        return Outcome("ERROR", [f"; unknown encoder {name}; known: {known}"], 3)
    try:
        template = maker(p)
    except WordEqError as exc:
        return Outcome("ERROR", [f"; {exc}"], 3)
    lines = [
        "parameters = " + " ".join(template.parameters),
        "fresh = " + (" ".join(template.fresh_vars) or "(none)"),
        "body = " + _render_formula(template.body),
    ]
    return Outcome("ENCODED", lines)


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _process_file(path: Path, args) -> Outcome:
    try:
        text = path.read_text()
        problem = parse_problem(text)
        if args.force:
            problem.force = args.force
        return dispatch(problem, args.max_expand)
    except WordEqError as exc:
        return Outcome("ERROR", [f"; {exc}"], 3)


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="wordeq",
        description="decision procedures for word equations with length, "
        "regular and predicate extensions",
    )
    parser.add_argument("file", nargs="?", help="problem file")
    parser.add_argument("--corpus", metavar="DIR", help="run every .weq file in DIR")
    parser.add_argument("--force", metavar="PROC",
                        help="force a procedure (oneletter, regord)")
    parser.add_argument("--max-expand", type=int, default=10_000, metavar="N",
                        help="model expansion ceiling in letters")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for --gen-corpus")
    parser.add_argument("--gen-corpus", metavar="DIR",
                        help="write a small random problem corpus and exit")
    parser.add_argument("--count", type=int, default=10,
                        help="number of files for --gen-corpus")
    args = parser.parse_args(argv)

    if args.gen_corpus:
        _generate_corpus(Path(args.gen_corpus), args.seed, args.count)
        return 0

    if args.corpus:
        paths = sorted(Path(args.corpus).glob("*.weq"))
        if not paths:
            print(f"; no .weq files in {args.corpus}", file=sys.stderr)
            return 3
        worst = 0
        for path in paths:
            outcome = _process_file(path, args)
            print(f"== {path.name}: {outcome.verdict}")
            for line in outcome.lines:
                print(line)
            if outcome.exit_code >= 3:
                worst = 3
        return worst

    if not args.file:
        parser.print_usage(sys.stderr)
        return 3
    outcome = _process_file(Path(args.file), args)
    print(outcome.verdict)
    for line in outcome.lines:
        print(line)
    return outcome.exit_code


def _generate_corpus(directory: Path, seed: int, count: int) -> None:
    """Random one-terminal and regular-ordered problems for soak testing."""
    rng = random.Random(seed)
    directory.mkdir(parents=True, exist_ok=True)
    for i in range(count):
        kind = rng.choice(("oneletter", "regord"))
        nvars = rng.randint(1, 3)
        names = [f"x{j + 1}" for j in range(nvars)]
        lines = ['(alphabet "ab")'] + [f"(var {v})" for v in names]
        if kind == "oneletter":
            def side():
                out = []
                for _ in range(rng.randint(1, 4)):
                    out.append(rng.choice(names + ["a"]))
                return out

            lhs = " ".join(f'"{s}"' if s == "a" else s for s in side())
            rhs = " ".join(f'"{s}"' if s == "a" else s for s in side())
            lines.append(f"(assert (= (cat {lhs}) (cat {rhs})))")
            if rng.random() < 0.5:
                v = rng.choice(names)
                lines.append(f"(assert-len (= (len {v}) {rng.randint(0, 3)}))")
        else:
            mids_l = ["".join(rng.choice("ab") for _ in range(rng.randint(0, 2)))
                      for _ in range(nvars + 1)]
            mids_r = ["".join(rng.choice("ab") for _ in range(rng.randint(0, 2)))
                      for _ in range(nvars + 1)]

            def weave(mids):
                items = []
                for j, v in enumerate(names):
                    if mids[j]:
                        items.append(f'"{mids[j]}"')
                    items.append(v)
                if mids[-1]:
                    items.append(f'"{mids[-1]}"')
                return " ".join(items)

            lines.append(
                f"(assert (= (cat {weave(mids_l)}) (cat {weave(mids_r)})))"
            )
        lines.append("(check-sat)")
        (directory / f"gen_{i:03}.weq").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    sys.exit(main())
