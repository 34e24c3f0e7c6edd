"""Formula-to-equation constructions and the positive exists-forall decision.

Two positive equations combine into one with no new variables by writing
both sides around a pair of distinct marker letters; folding that pairing
collapses any finite positive conjunction.  A distinguishing substitution
maps the i-th variable to a·b^(k+i)·a, which separates patterns exactly
when their symbol sequences differ.  Together these reduce deciding a
positive exists-forall sentence to solving, per disjunct, the system of
segments between universal-variable occurrences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

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
    T,
    Verdict,
    WordEqError,
    is_positive,
    word_pattern,
)


# ---------------------------------------------------------------------------
# Conjunction pairing
# ---------------------------------------------------------------------------


def pair_conjunction(e1: Equation, e2: Equation, a: str, b: str) -> Equation:
    """One equation equivalent to e1 and e2, using two distinct marker letters.

    With e1 = (U = V) and e2 = (U' = V') the result equates
    U·a·U'·U·b·U' with V·a·V'·V·b·V'; a substitution solves it iff it
    solves both inputs.  No new variables are introduced.
    """
    if e1.negative or e2.negative:
        raise WordEqError("pairing is defined for positive equations")
    if a == b:
        raise WordEqError("marker letters must differ")
    ma, mb = Pattern((T(a),)), Pattern((T(b),))
    u, v = e1.lhs, e1.rhs
    up, vp = e2.lhs, e2.rhs
    return Equation(u + ma + up + u + mb + up, v + ma + vp + v + mb + vp)


def collapse_conjunction(equations, a: str, b: str) -> Equation:
    """Left fold of the pairing over a nonempty list of positive equations."""
    equations = list(equations)
    if not equations:
        raise WordEqError("cannot collapse an empty conjunction")
    acc = equations[0]
    if acc.negative:
        raise WordEqError("pairing is defined for positive equations")
    for e in equations[1:]:
        acc = pair_conjunction(acc, e, a, b)
    return acc


# ---------------------------------------------------------------------------
# Distinguishing substitution
# ---------------------------------------------------------------------------


def distinguishing_substitution(
    u: Pattern,
    v: Pattern,
    alphabet: Alphabet,
    var_order: Optional[tuple[str, ...]] = None,
) -> Substitution:
    """Substitution separating U and V unless they are identical sequences.

    The i-th variable (first-occurrence order in U·V unless ``var_order``
    is given) maps to a·b^(k+i)·a with k = |UV| + 1.  Then the images of U
    and V coincide iff U and V are the same symbol sequence.
    """
    if len(alphabet) < 2:
        raise WordEqError("two distinct letters are required")
    a, b = alphabet.letters[0], alphabet.letters[1]
    variables = var_order if var_order is not None else (u + v).variables()
    k = len(u) + len(v) + 1
    return Substitution(
        {y: a + b * (k + i) + a for i, y in enumerate(variables, start=1)}
    )


# ---------------------------------------------------------------------------
# Disjunctive normal form
# ---------------------------------------------------------------------------


def to_dnf(f: Formula) -> Formula:
    """Logically equivalent DNF with negations pushed to atoms.

    Negating an equation flips its polarity; negated predicate atoms stay
    wrapped in a single not-node.
    """
    f = _push_negations(f, False)
    disjuncts = _distribute(f)
    seen = []
    for d in disjuncts:
        atoms = []
        for x in d:
            if x not in atoms:
                atoms.append(x)
        atoms = tuple(atoms)
        if atoms not in seen:
            seen.append(atoms)
    parts = [a[0] if len(a) == 1 else FAnd(a) for a in seen]
    return parts[0] if len(parts) == 1 else FOr(tuple(parts))


def _push_negations(f: Formula, neg: bool) -> Formula:
    if isinstance(f, FAtom):
        if not neg:
            return f
        if isinstance(f.value, Equation):
            return FAtom(f.value.negated())
        return FNot(f)
    if isinstance(f, FNot):
        return _push_negations(f.child, not neg)
    parts = tuple(_push_negations(c, neg) for c in f.children)
    if isinstance(f, FAnd):
        return FOr(parts) if neg else FAnd(parts)
    return FAnd(parts) if neg else FOr(parts)


def _distribute(f: Formula) -> list[tuple[Formula, ...]]:
    """DNF as a list of conjunctions of literal nodes."""
    if isinstance(f, (FAtom, FNot)):
        return [(f,)]
    if isinstance(f, FOr):
        out: list[tuple[Formula, ...]] = []
        for c in f.children:
            out.extend(_distribute(c))
        return out
    if isinstance(f, FAnd):
        acc: list[tuple[Formula, ...]] = [()]
        for c in f.children:
            branches = _distribute(c)
            acc = [pre + br for pre in acc for br in branches]
        return acc
    raise WordEqError(f"bad formula node {f!r}")


def dnf_equation_disjuncts(f: Formula) -> list[list[Equation]]:
    """DNF disjuncts as equation lists; rejects predicate atoms."""
    dnf = to_dnf(f)
    disjuncts = dnf.children if isinstance(dnf, FOr) else (dnf,)
    out = []
    for d in disjuncts:
        items = d.children if isinstance(d, FAnd) else (d,)
        eqs = []
        for it in items:
            if not isinstance(it, FAtom) or not isinstance(it.value, Equation):
                raise WordEqError("expected word-equation atoms only")
            eqs.append(it.value)
        out.append(eqs)
    return out


# ---------------------------------------------------------------------------
# Triviality analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrivialityReport:
    """Segment decomposition around universal-variable occurrences.

    ``skeleton_ok`` holds when both sides carry the same universal-variable
    sequence; the induced system then equates the corresponding segments
    (patterns over existential variables and terminals).  Solving the
    induced system makes the equation hold under every assignment of the
    universal variables.
    """

    skeleton_ok: bool
    induced_system: tuple[Equation, ...]


def triviality_analysis(
    e: Equation, existential_vars, universal_vars
) -> TrivialityReport:
    """Decompose both sides around universal occurrences and pair segments.

    An equation with no universal occurrences is a single-segment instance:
    the induced system is the equation itself.
    """
    if e.negative:
        raise WordEqError("analysis is defined for positive equations")
    existential_vars = frozenset(existential_vars)
    universal_vars = frozenset(universal_vars)
    for v in e.variables():
        if v not in existential_vars and v not in universal_vars:
            raise WordEqError(f"variable {v!r} not classified")

    def split(p: Pattern):
        segments: list[list] = [[]]
        marks: list[str] = []
        for s in p.symbols:
            if s.is_variable and s.name in universal_vars:
                marks.append(s.name)
                segments.append([])
            else:
                segments[-1].append(s)
        return [Pattern(tuple(seg)) for seg in segments], marks

    lsegs, lmarks = split(e.lhs)
    rsegs, rmarks = split(e.rhs)
    if lmarks != rmarks:
        return TrivialityReport(False, ())
    system = tuple(Equation(ls, rs) for ls, rs in zip(lsegs, rsegs))
    return TrivialityReport(True, system)


# ---------------------------------------------------------------------------
# Deciding positive exists-forall sentences
# ---------------------------------------------------------------------------

ExistentialSolver = Callable[[list[Equation], Alphabet], "object"]


def default_existential_solver(bound: int = 6):
    """Bounded-enumeration system solver; complete fragments when they apply.

    One-terminal positive systems are decided exactly; otherwise a single
    collapsed equation is searched up to the bound and unknown is reported
    on exhaustion (the general problem is out of scope by design).
    """

    def solve(system: list[Equation], alphabet: Alphabet):
        from .core import FAnd, SolveResult, Substitution, atom, equation_holds

        if all(eq.lhs.is_ground() and eq.rhs.is_ground() for eq in system):
            empty = Substitution({})
            if all(equation_holds(eq, empty) for eq in system):
                return SolveResult("sat", empty)
            return SolveResult("unsat")

        terminals = set()
        for eq in system:
            terminals |= eq.terminals()
        if len(terminals) <= 1:
            from .oneletter import solve_oneletter

            formula = (
                atom(system[0])
                if len(system) == 1
                else FAnd(tuple(atom(eq) for eq in system))
            )
            return solve_oneletter(formula, None, alphabet)

        if len(system) == 1:
            from .regord import check_strictly_regular_ordered, solve_regular_ordered

            if check_strictly_regular_ordered(system[0]):
                return solve_regular_ordered(system[0], None, None, alphabet)

        # exact refutation: every solution's lengths satisfy the per-equation
        # linear abstraction, so an infeasible abstraction settles unsat
        from .diophantine import DiophantineSystem, EQ, LinearConstraint, solve_nonneg

        variables: list[str] = []
        abstractions = []
        for eq in system:
            coeffs: dict[str, int] = {}
            for v, c in eq.lhs.var_counts().items():
                coeffs[v] = coeffs.get(v, 0) + c
            for v, c in eq.rhs.var_counts().items():
                coeffs[v] = coeffs.get(v, 0) - c
            for v in coeffs:
                if v not in variables:
                    variables.append(v)
            abstractions.append(
                LinearConstraint(
                    coeffs, eq.rhs.terminal_length() - eq.lhs.terminal_length(), EQ
                )
            )
        if solve_nonneg(DiophantineSystem(tuple(variables), tuple(abstractions))) is None:
            return SolveResult("unsat")

        from .oracle import bounded_solution_search

        a, b = alphabet.letters[0], alphabet.letters[1]
        collapsed = collapse_conjunction(system, a, b)
        hit = bounded_solution_search(collapsed, alphabet, bound)
        if hit is not None:
            return SolveResult("sat", hit)
        return SolveResult("unknown", metadata={"reason": f"no witness up to {bound}"})

    return solve


def decide_sigma2_positive(
    phi: QuantifiedFormula,
    alphabet: Alphabet,
    solver: Optional[ExistentialSolver] = None,
    markers: Optional[tuple[str, str]] = None,
) -> Verdict:
    """Decide a positive exists-forall sentence over word equations.

    The matrix is brought to DNF, each disjunct is collapsed into a single
    equation, and the sentence is true iff for some disjunct the universal
    skeleton matches and the induced existential segment system is
    solvable.  The system solver is pluggable; with a complete solver the
    verdict is exact, with the default bounded one an unresolved disjunct
    yields UNKNOWN rather than FALSE.
    """
    if not is_positive(phi.matrix):
        raise WordEqError("matrix must be positive")
    for a in phi.matrix.atoms():
        if not isinstance(a, Equation):
            raise WordEqError("matrix atoms must be word equations")
    kinds = [q for q, _ in phi.prefix]
    if kinds not in ([EXISTS], [FORALL], [EXISTS, FORALL], []):
        raise WordEqError(f"prefix {kinds} is not exists-forall")
    if len(alphabet) < 2:
        raise WordEqError("two letters are required to collapse conjunctions")
    if markers is None:
        markers = (alphabet.letters[0], alphabet.letters[1])
    ma, mb = markers
    if solver is None:
        solver = default_existential_solver()

    xs = frozenset(phi.block(EXISTS))
    ys = frozenset(phi.block(FORALL))
    any_unknown = False
    for disjunct in dnf_equation_disjuncts(phi.matrix):
        collapsed = collapse_conjunction(disjunct, ma, mb)
        report = triviality_analysis(collapsed, xs, ys)
        if not report.skeleton_ok:
            continue
        result = solver(list(report.induced_system), alphabet)
        if result.status == "sat":
            return Verdict.TRUE
        if result.status == "unknown":
            any_unknown = True
    return Verdict.UNKNOWN if any_unknown else Verdict.FALSE
