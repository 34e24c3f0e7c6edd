"""The one-terminal decidable fragment.

Equations that mention at most one terminal letter are satisfiable exactly
when the linear length abstraction is: counting letters on both sides of
U = V gives sum(|U|_x - |V|_x) * |h(x)| = |V|_a - |U|_a, and any
non-negative length solution is realized by the all-a assignment of those
lengths.  This makes positive formulas with linear length constraints
decidable (and the decision exact, never unknown); the permutation
encoding reduces arbitrary equations to this fragment at the price of
negative equations.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .combinators import to_dnf, triviality_analysis
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
    PredicateAtom,
    QuantifiedFormula,
    Substitution,
    SolveResult,
    T,
    V,
    WordEqError,
    is_positive,
)
from .diophantine import (
    EQ,
    DiophantineSystem,
    LinearConstraint,
    solve_nonneg,
)


class LengthConstraintSystem:
    """Linear constraints over the lengths of variable images."""

    def __init__(self, constraints: Iterable[LinearConstraint] = ()):
        self.constraints = tuple(constraints)

    def variables(self) -> tuple[str, ...]:
        out: list[str] = []
        for c in self.constraints:
            for v in c.variables():
                if v not in out:
                    out.append(v)
        return tuple(out)

    def holds(self, lengths: dict[str, int]) -> bool:
        return all(c.holds(lengths) for c in self.constraints)

    def extended(self, extra: Iterable[LinearConstraint]) -> "LengthConstraintSystem":
        return LengthConstraintSystem(self.constraints + tuple(extra))

    def __iter__(self):
        return iter(self.constraints)

    def __eq__(self, other):
        return (
            isinstance(other, LengthConstraintSystem)
            and self.constraints == other.constraints
        )

    def __hash__(self):
        return hash(self.constraints)

    def __repr__(self):
        return f"LengthConstraintSystem({list(self.constraints)!r})"


def _designated_letter(terminals: set[str], letter: Optional[str]) -> Optional[str]:
    if len(terminals) > 1:
        raise WordEqError(
            f"more than one terminal letter used: {sorted(terminals)}"
        )
    if terminals:
        t = next(iter(terminals))
        if letter is not None and letter != t:
            raise WordEqError(f"terminal {t!r} differs from designated {letter!r}")
        return t
    return letter


def length_abstraction(e: Equation, letter: Optional[str] = None) -> LinearConstraint:
    """Length equation implied by a one-terminal word equation.

    Coefficient of |h(x)| is |U|_x - |V|_x; the constant is |V|_a - |U|_a.
    """
    if e.negative:
        raise WordEqError("length abstraction applies to positive equations")
    _designated_letter(set(e.terminals()), letter)
    coeffs: dict[str, int] = {}
    for v, c in e.lhs.var_counts().items():
        coeffs[v] = coeffs.get(v, 0) + c
    for v, c in e.rhs.var_counts().items():
        coeffs[v] = coeffs.get(v, 0) - c
    const = e.rhs.terminal_length() - e.lhs.terminal_length()
    return LinearConstraint(coeffs, const, EQ)


def _formula_equations(f: Formula) -> list[Equation]:
    out = []
    for a in f.atoms():
        if not isinstance(a, Equation):
            raise WordEqError("only word-equation atoms are allowed here")
        out.append(a)
    return out


def solve_oneletter(
    f: Formula,
    theta: Optional[LengthConstraintSystem],
    alphabet: Alphabet,
    letter: Optional[str] = None,
) -> SolveResult:
    """Complete decision of positive one-terminal formulas with length constraints.

    Per DNF disjunct the length abstractions of its equations are conjoined
    with theta and solved over non-negative integers; a feasible point is
    realized as the all-a model (a the designated letter), which satisfies
    the formula exactly.  The verdict is exact, never unknown.
    """
    if not is_positive(f):
        raise WordEqError(
            "negation makes the one-terminal fragment as hard as the general "
            "problem with length constraints; this solver handles positive "
            "formulas only"
        )
    if theta is None:
        theta = LengthConstraintSystem()
    equations = _formula_equations(f)
    terminals: set[str] = set()
    for eq in equations:
        terminals |= eq.terminals()
    letter = _designated_letter(terminals, letter)
    if letter is None:
        letter = alphabet.letters[0]
    if letter not in alphabet:
        raise WordEqError(f"designated letter {letter!r} not in alphabet")

    variables: list[str] = []
    for eq in equations:
        for v in eq.variables():
            if v not in variables:
                variables.append(v)
    for v in theta.variables():
        if v not in variables:
            variables.append(v)

    dnf = to_dnf(f)
    disjuncts = dnf.children if isinstance(dnf, FOr) else (dnf,)
    for i, d in enumerate(disjuncts):
        items = d.children if isinstance(d, FAnd) else (d,)
        constraints = [
            length_abstraction(it.value, letter) for it in items  # type: ignore[union-attr]
        ]
        system = DiophantineSystem(tuple(variables), tuple(constraints) + theta.constraints)
        point = solve_nonneg(system)
        if point is not None:
            model = Substitution({v: letter * point[v] for v in variables})
            return SolveResult("sat", model, metadata={"disjunct": i})
    return SolveResult("unsat")


def encode_general_as_oneletter(
    e: Equation,
    theta: Optional[LengthConstraintSystem],
    alphabet: Alphabet,
) -> tuple[list[Equation], LengthConstraintSystem]:
    """Reduce an arbitrary equation with length constraints to one terminal.

    Each letter a_i is replaced by a fresh variable y_i; pairwise
    disequalities, |y_i| = 1 constraints and y_1 = a_1 force the y_i to
    spell a permutation of the alphabet, and relabelling letters preserves
    satisfiability.
    """
    if e.negative:
        raise WordEqError("the encoding is defined for positive equations")
    if theta is None:
        theta = LengthConstraintSystem()
    used = set(e.variables()) | set(theta.variables())
    prefix = "y"
    while any(f"{prefix}{i}" in used for i in range(1, len(alphabet) + 1)):
        prefix = "y" + prefix
    fresh = [f"{prefix}{i}" for i in range(1, len(alphabet) + 1)]
    by_letter = dict(zip(alphabet.letters, fresh))

    def relabel(p: Pattern) -> Pattern:
        return Pattern(
            tuple(V(by_letter[s.name]) if s.is_terminal else s for s in p.symbols)
        )

    out: list[Equation] = []
    for i in range(len(fresh)):
        for j in range(i + 1, len(fresh)):
            out.append(
                Equation(Pattern((V(fresh[i]),)), Pattern((V(fresh[j]),)), negative=True)
            )
    out.append(Equation(relabel(e.lhs), relabel(e.rhs)))
    out.append(Equation(Pattern((V(fresh[0]),)), Pattern((T(alphabet.letters[0]),))))
    theta2 = theta.extended(
        LinearConstraint({y: 1}, 1, EQ) for y in fresh[1:]
    )
    return out, theta2


# ---------------------------------------------------------------------------
# Positive exists-forall with one terminal and the Length predicate
# ---------------------------------------------------------------------------


def _is_trivial_atom(value) -> bool:
    if isinstance(value, Equation):
        return value.lhs.symbols == value.rhs.symbols
    if isinstance(value, PredicateAtom) and value.name == "Length":
        return value.args[0] == value.args[1]
    return False


def _length_atom_pattern_vars(p: Pattern) -> Optional[str]:
    """Name of the single variable if the pattern is exactly one variable."""
    if len(p.symbols) == 1 and p.symbols[0].is_variable:
        return p.symbols[0].name
    return None


def decide_oneletter_sigma2(
    phi: QuantifiedFormula,
    alphabet: Alphabet,
    letter: Optional[str] = None,
) -> bool:
    """Decide positive exists-forall sentences over one-terminal equations
    plus the Length predicate.

    After DNF conversion, trivial atoms (identical equation sides, identical
    Length arguments) are dropped; a disjunct survives only if its remaining
    Length atoms relate two existential variables and its equations have a
    matching universal skeleton.  Surviving disjuncts reduce to one-terminal
    existential systems with length constraints, decided exactly.
    """
    if not is_positive(phi.matrix):
        raise WordEqError("matrix must be positive")
    kinds = [q for q, _ in phi.prefix]
    if kinds not in ([], [EXISTS], [FORALL], [EXISTS, FORALL]):
        raise WordEqError(f"prefix {kinds} is not exists-forall")
    xs = frozenset(phi.block(EXISTS))
    ys = frozenset(phi.block(FORALL))

    terminals: set[str] = set()
    for a in phi.matrix.atoms():
        if isinstance(a, Equation):
            terminals |= a.terminals()
        elif isinstance(a, PredicateAtom) and a.name == "Length":
            if len(a.args) != 2 or not all(isinstance(x, Pattern) for x in a.args):
                raise WordEqError("Length atoms take two patterns")
            for p in a.args:
                if _length_atom_pattern_vars(p) is None and not p.is_ground():
                    raise WordEqError(
                        "Length arguments must be variables or constant words"
                    )
                terminals |= p.terminals()
        else:
            raise WordEqError(f"unsupported atom {a!r} in this fragment")
    letter = _designated_letter(terminals, letter)

    dnf = to_dnf(phi.matrix)
    disjuncts = dnf.children if isinstance(dnf, FOr) else (dnf,)
    for d in disjuncts:
        items = d.children if isinstance(d, FAnd) else (d,)
        induced: list[Equation] = []
        lengths: list[LinearConstraint] = []
        viable = True
        for it in items:
            assert isinstance(it, FAtom)
            v = it.value
            if _is_trivial_atom(v):
                continue
            if isinstance(v, PredicateAtom):
                z1 = _length_atom_pattern_vars(v.args[0])
                z2 = _length_atom_pattern_vars(v.args[1])
                if z1 in xs and z2 in xs and z1 is not None and z2 is not None:
                    lengths.append(LinearConstraint({z1: 1, z2: -1}, 0, EQ))
                else:
                    viable = False
                    break
            else:
                report = triviality_analysis(v, xs | (set(v.variables()) - ys), ys)
                if not report.skeleton_ok:
                    viable = False
                    break
                induced.extend(report.induced_system)
        if not viable:
            continue
        theta = LengthConstraintSystem(lengths)
        if not induced:
            if not lengths:
                return True
            system = DiophantineSystem(theta.variables(), theta.constraints)
            if solve_nonneg(system) is not None:
                return True
            continue
        formula: Formula = (
            FAtom(induced[0])
            if len(induced) == 1
            else FAnd(tuple(FAtom(eq) for eq in induced))
        )
        if solve_oneletter(formula, theta, alphabet, letter).is_sat:
            return True
    return False
