"""Systems of sat- and unsat-equations and their exists-forall counterparts.

A system (S, U) over disjoint variable sets X and Y is satisfiable when
some X-assignment satisfies every member of S and, for every Y-assignment,
at least one member of U fails.  This is exactly the truth of
∃X.∀Y. S ∧ (¬U_1 ∨ ... ∨ ¬U_m), giving a two-way correspondence with the
exists-forall fragment; the pattern-language inclusion encoder and the
collapse of an arbitrary exists-forall sentence to a single negated
equation ride on the same machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .combinators import _push_negations, collapse_conjunction
from .core import (
    Alphabet,
    EXISTS,
    Equation,
    FAtom,
    FAnd,
    FOr,
    FORALL,
    Formula,
    Pattern,
    QuantifiedFormula,
    Substitution,
    WordEqError,
    equation_holds,
)


@dataclass(frozen=True)
class SatUnsatSystem:
    """(S, U) with S over X and U over X ∪ Y, X and Y disjoint."""

    sat_set: tuple[Equation, ...]
    unsat_set: tuple[Equation, ...]
    x_vars: tuple[str, ...]
    y_vars: tuple[str, ...]

    def __post_init__(self):
        xs, ys = set(self.x_vars), set(self.y_vars)
        if xs & ys:
            raise WordEqError(f"X and Y overlap: {sorted(xs & ys)}")
        for e in self.sat_set:
            if not set(e.variables()) <= xs:
                raise WordEqError("sat-equations may use X variables only")
        for e in self.unsat_set:
            if not set(e.variables()) <= xs | ys:
                raise WordEqError("unsat-equations may use X and Y variables only")


@dataclass(frozen=True)
class Sigma2Encoding:
    """Formula produced from a system, with a flag telling whether the
    existential part collapsed to a single equation."""

    formula: QuantifiedFormula
    collapsed: bool


def _prefix(xs: tuple[str, ...], ys: tuple[str, ...]):
    prefix = []
    if xs:
        prefix.append((EXISTS, tuple(xs)))
    if ys:
        prefix.append((FORALL, tuple(ys)))
    return tuple(prefix)


def system_to_sigma2(
    sys: SatUnsatSystem,
    alphabet: Alphabet,
    markers: Optional[tuple[str, str]] = None,
) -> Sigma2Encoding:
    """∃X.∀Y. e ∧ (¬f_1 ∨ ... ∨ ¬f_p), collapsing S when it is all positive.

    An empty S is read as the trivial {x = x} per existential variable.
    With negative sat-equations present the conjunction is kept as a
    formula-level conjunct and the encoding is flagged non-collapsed (the
    single-equation construction for negations is an extension point).
    """
    if len(alphabet) < 2:
        raise WordEqError("systems are defined over alphabets with >= 2 letters")
    sat = list(sys.sat_set)
    if not sat:
        sat = [_self_equation(x) for x in sys.x_vars]
    if not sat:
        sat = [Equation(Pattern(()), Pattern(()))]
    negated_unsat = tuple(FAtom(f.negated()) for f in sys.unsat_set)
    universal_part: Formula = (
        negated_unsat[0] if len(negated_unsat) == 1 else FOr(negated_unsat)
    )
    if all(e.positive for e in sat):
        if markers is None:
            markers = (alphabet.letters[0], alphabet.letters[1])
        e = collapse_conjunction(sat, markers[0], markers[1])
        matrix: Formula = FAnd((FAtom(e), universal_part))
        collapsed = True
    else:
        matrix = FAnd(tuple(FAtom(e) for e in sat) + (universal_part,))
        collapsed = False
    phi = QuantifiedFormula(_prefix(sys.x_vars, sys.y_vars), matrix)
    return Sigma2Encoding(phi, collapsed)


def _self_equation(x: str) -> Equation:
    from .core import V

    p = Pattern((V(x),))
    return Equation(p, p)


def sigma2_to_system(phi: QuantifiedFormula) -> SatUnsatSystem:
    """System for a sentence ∃X.∀Y. e ∧ (f_1 ∨ ... ∨ f_p), e positive over X.

    S keeps e together with x = x for every existential variable (so their
    quantification survives), U holds the negations of the f_i.
    """
    kinds = [q for q, _ in phi.prefix]
    if kinds not in ([], [EXISTS], [FORALL], [EXISTS, FORALL]):
        raise WordEqError(f"prefix {kinds} does not match ∃X.∀Y")
    xs, ys = phi.block(EXISTS), phi.block(FORALL)

    matrix = phi.matrix
    if isinstance(matrix, FAtom):
        e_atom, disj = matrix, None
    elif (
        isinstance(matrix, FAnd)
        and len(matrix.children) == 2
        and isinstance(matrix.children[0], FAtom)
    ):
        e_atom, disj = matrix.children[0], matrix.children[1]
    else:
        raise WordEqError("matrix must have shape e ∧ (f_1 ∨ ... ∨ f_p)")
    if not isinstance(e_atom.value, Equation) or e_atom.value.negative:
        raise WordEqError("the existential part must be a single positive equation")
    e = e_atom.value
    if not set(e.variables()) <= set(xs):
        raise WordEqError("the existential equation may use X variables only")

    fs: list[Equation] = []
    if disj is not None:
        items = disj.children if isinstance(disj, FOr) else (disj,)
        for it in items:
            if not isinstance(it, FAtom) or not isinstance(it.value, Equation):
                raise WordEqError("disjuncts must be word-equation atoms")
            fs.append(it.value)

    sat = (e,) + tuple(_self_equation(x) for x in xs)
    unsat = tuple(f.negated() for f in fs)
    return SatUnsatSystem(sat, unsat, tuple(xs), tuple(ys))


def encode_ipl(alpha: Pattern, beta: Pattern, alphabet: Alphabet) -> QuantifiedFormula:
    """∃vars(α).∀vars(β). α ≠ β, true in A* iff L(α) is not included in L(β)."""
    if len(alphabet) < 2:
        raise WordEqError("pattern inclusion is considered over >= 2 letters")
    shared = set(alpha.variables()) & set(beta.variables())
    if shared:
        raise WordEqError(f"patterns must not share variables: {sorted(shared)}")
    matrix = FAtom(Equation(alpha, beta, negative=True))
    return QuantifiedFormula(_prefix(alpha.variables(), beta.variables()), matrix)


QfToEquation = Callable[[Formula, Alphabet], tuple[Equation, tuple[str, ...]]]


def default_qf_to_equation(f: Formula, alphabet: Alphabet) -> tuple[Equation, tuple[str, ...]]:
    """Single positive equations and their conjunctions; no fresh variables.

    The disjunction and negation encodings into one equation are a
    documented extension point; they add fresh variables and are not
    constructed here.
    """
    if isinstance(f, FAtom) and isinstance(f.value, Equation) and f.value.positive:
        return f.value, ()
    if isinstance(f, FAnd):
        eqs = []
        for c in f.children:
            if not (
                isinstance(c, FAtom)
                and isinstance(c.value, Equation)
                and c.value.positive
            ):
                raise WordEqError(
                    "default conversion handles positive equations and their "
                    "conjunctions; disjunction/negation need the extension point"
                )
            eqs.append(c.value)
        a, b = alphabet.letters[0], alphabet.letters[1]
        return collapse_conjunction(eqs, a, b), ()
    raise WordEqError(
        "default conversion handles positive equations and their conjunctions; "
        "disjunction/negation need the extension point"
    )


def sigma2_collapse(
    phi: QuantifiedFormula,
    alphabet: Alphabet,
    qf_to_equation: Optional[QfToEquation] = None,
) -> QuantifiedFormula:
    """∃X.∀(Y ∪ fresh). U ≠ V, true iff the exists-forall input is.

    The negated matrix is turned into one positive equation by
    ``qf_to_equation`` (fresh existentials of that conversion join the
    universal block); negating that equation undoes the outer negation.
    """
    kinds = [q for q, _ in phi.prefix]
    if kinds not in ([], [EXISTS], [FORALL], [EXISTS, FORALL]):
        raise WordEqError(f"prefix {kinds} does not match ∃X.∀Y")
    if qf_to_equation is None:
        qf_to_equation = default_qf_to_equation
    negated = _push_negations(phi.matrix, True)
    eq, fresh = qf_to_equation(negated, alphabet)
    if eq.negative:
        raise WordEqError("conversion must produce a positive equation")
    xs = phi.block(EXISTS)
    ys = tuple(phi.block(FORALL)) + tuple(fresh)
    matrix = FAtom(Equation(eq.lhs, eq.rhs, negative=True))
    return QuantifiedFormula(_prefix(xs, ys), matrix)


# ---------------------------------------------------------------------------
# Bounded semantics
# ---------------------------------------------------------------------------


def bounded_system_check(
    sys: SatUnsatSystem, alphabet: Alphabet, bound: int
) -> Optional[Substitution]:
    """Direct bounded evaluation of the system semantics.

    Searches X-assignments with images up to the bound satisfying all of S
    such that every Y-assignment within the bound fails some member of U.
    Implemented straight from the definition, independently of the formula
    encodings, so round-trip tests have a common referee.
    """
    from .oracle import iter_assignments

    for hx in iter_assignments(tuple(sys.x_vars), alphabet, bound):
        sub_x = Substitution(hx)
        if not all(equation_holds(e, sub_x) for e in sys.sat_set):
            continue
        ok = True
        for hy in iter_assignments(tuple(sys.y_vars), alphabet, bound):
            h = Substitution({**hx, **hy})
            if all(equation_holds(f, h) for f in sys.unsat_set):
                ok = False  # this Y-assignment satisfies every unsat-equation
                break
        if ok:
            return sub_x
    return None
