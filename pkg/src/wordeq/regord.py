"""Complete solver for strictly regular-ordered equations with constraints.

In a strictly regular-ordered equation every variable occurs exactly once
per side in the same order, so the offset between a variable's two
occurrences in any solution is a fixed difference of terminal prefix
lengths, independent of the assignment.  Variables with offset zero are
untouched by the equation: their occurrences cover the same positions of
the solution word and, both tilings being disjoint, no other occurrence
reads that region.  Deleting them leaves a core equation whose variables
carry offset d != 0; a core variable's image is either short (length <= |d|)
or |d|-periodic, hence of the form (αβ)^n·α with |αβ| <= |d|.

The solver enumerates these per-variable bases (with early prefix pruning),
validates each family on the exponent combinations {min, min+1}
(instantiated families are re-verified before a model is emitted),
intersects periodic families with the regular constraints, encodes the
admissible exponents and the offset-zero variables' admissible lengths as
affine choices and hands the rewritten length constraints to the exact
non-negative Diophantine solver.  Worst case is exponential in the number
of variables; instances of interest are desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .automata import Dfa, periodic_intersection
from .core import (
    Alphabet,
    Equation,
    FragmentError,
    Pattern,
    Substitution,
    SolveResult,
    WordEqError,
    apply_substitution,
    primitive_root,
)
from .diophantine import DiophantineSystem, EQ, GE, LinearConstraint, solve_nonneg
from .oneletter import LengthConstraintSystem

EXPAND_CAP = 1_000_000


# ---------------------------------------------------------------------------
# Shape predicates and decomposition
# ---------------------------------------------------------------------------


def _side_var_sequence(p: Pattern) -> list[str]:
    return [s.name for s in p.symbols if s.is_variable]


def check_strictly_regular_ordered(e: Equation) -> bool:
    """Every variable exactly once per side, same relative order."""
    if e.negative:
        raise WordEqError("defined for positive equations")
    left = _side_var_sequence(e.lhs)
    right = _side_var_sequence(e.rhs)
    if len(set(left)) != len(left) or len(set(right)) != len(right):
        return False
    return left == right and set(left) == set(right)


@dataclass(frozen=True)
class _Shape:
    variables: tuple[str, ...]   # occurrence order
    left_gaps: tuple[str, ...]   # terminal words u_0..u_k around occurrences
    right_gaps: tuple[str, ...]  # terminal words v_0..v_k
    offsets: tuple[int, ...]     # per variable: |u_0..u_(i-1)| - |v_0..v_(i-1)|

    def offset(self, var: str) -> int:
        return self.offsets[self.variables.index(var)]


def _decompose(e: Equation) -> _Shape:
    def gaps(p: Pattern):
        out: list[str] = [""]
        for s in p.symbols:
            if s.is_variable:
                out.append("")
            else:
                out[-1] += s.name
        return out

    order = tuple(_side_var_sequence(e.lhs))
    lg, rg = gaps(e.lhs), gaps(e.rhs)
    offsets = []
    acc_l = acc_r = 0
    for i in range(len(order)):
        acc_l += len(lg[i])
        acc_r += len(rg[i])
        offsets.append(acc_l - acc_r)
    return _Shape(order, tuple(lg), tuple(rg), tuple(offsets))


def _delete_variables(p: Pattern, drop: frozenset[str]) -> Pattern:
    return Pattern(
        tuple(s for s in p.symbols if not (s.is_variable and s.name in drop))
    )


# ---------------------------------------------------------------------------
# Parametric assignments
# ---------------------------------------------------------------------------

FIXED = "fixed"
PARAMETER = "parameter"


@dataclass(frozen=True)
class ParametricEntry:
    """One variable's family: α alone, or (αβ)^n·α with n >= minimum.

    Parametric entries keep |α| < |αβ|, so instances are the prefixes of
    the periodic stream (αβ)^∞ whose lengths are n·|αβ| + |α|.
    """

    alpha: str
    beta: str = ""
    kind: str = FIXED
    parameter: Optional[str] = None
    minimum: int = 1

    def __post_init__(self):
        if self.kind not in (FIXED, PARAMETER):
            raise WordEqError(f"bad entry kind {self.kind!r}")
        if self.kind == PARAMETER and not self.alpha + self.beta:
            raise WordEqError("parametric entry needs a nonempty period")

    @property
    def period(self) -> str:
        return self.alpha + self.beta

    def word(self, n: Optional[int] = None) -> str:
        if self.kind == FIXED:
            return self.alpha
        if n is None or n < self.minimum:
            raise WordEqError(f"exponent must be at least {self.minimum}")
        return self.period * n + self.alpha

    def describe(self) -> str:
        if self.kind == FIXED:
            return repr(self.alpha)
        return f"({self.alpha!r}·{self.beta!r})^n·{self.alpha!r}, n ≥ {self.minimum}"


def _normalized(ent: ParametricEntry) -> ParametricEntry:
    """Fold a full period out of α (the only non-canonical generated shape)."""
    if ent.kind == FIXED or len(ent.alpha) < len(ent.period):
        return ent
    return ParametricEntry("", ent.alpha, PARAMETER, ent.parameter, ent.minimum + 1)


@dataclass(frozen=True)
class ParametricAssignment:
    """Family of solutions: per-variable bases with fixed or free exponents."""

    entries: tuple[tuple[str, ParametricEntry], ...]

    def entry(self, var: str) -> ParametricEntry:
        for v, ent in self.entries:
            if v == var:
                return ent
        raise WordEqError(f"no entry for {var!r}")

    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.entries)

    def parameters(self) -> tuple[str, ...]:
        return tuple(v for v, ent in self.entries if ent.kind == PARAMETER)

    def instantiate(self, exponents: Optional[dict[str, int]] = None) -> Substitution:
        exponents = exponents or {}
        out = {}
        for v, ent in self.entries:
            out[v] = ent.word(exponents.get(v)) if ent.kind == PARAMETER else ent.word()
        return Substitution(out)

    def __repr__(self):
        inner = ", ".join(f"{v}={e.describe()}" for v, e in self.entries)
        return "{" + inner + "}"


def _entry_subsumes(big: ParametricEntry, small: ParametricEntry) -> bool:
    """Instance set of ``small`` contained in that of ``big`` (both normalized)."""
    if big.kind == FIXED:
        return small.kind == FIXED and small.alpha == big.alpha
    bp = len(big.period)
    big_min_len = bp * big.minimum + len(big.alpha)

    def big_stream_prefix(n: int) -> str:
        return (big.period * (n // bp + 2))[:n]

    def generated(length: int) -> bool:
        return length >= big_min_len and (length - len(big.alpha)) % bp == 0

    if small.kind == FIXED:
        w = small.alpha
        return generated(len(w)) and big_stream_prefix(len(w)) == w
    sp = len(small.period)
    if sp % bp != 0:
        return False
    if not generated(sp * small.minimum + len(small.alpha)):
        return False
    # same stream: compare far enough to cover both periods
    probe = max(2 * bp, 2 * sp)
    return big_stream_prefix(probe) == (small.period * (probe // sp + 2))[:probe]


def _family_subsumes(big: ParametricAssignment, small: ParametricAssignment) -> bool:
    return all(_entry_subsumes(big.entry(v), small.entry(v)) for v in small.variables())


def _absorb_families(families: list[ParametricAssignment]) -> list[ParametricAssignment]:
    """Merge fixed entries adjacent to a parametric family, drop covered ones."""
    families = list(families)
    merged = True
    while merged:
        merged = False
        for i, fam in enumerate(families):
            for j, other in enumerate(families):
                if i == j:
                    continue
                diff = [
                    v
                    for v in fam.variables()
                    if fam.entry(v) != other.entry(v)
                ]
                if len(diff) != 1:
                    continue
                v = diff[0]
                mine, theirs = fam.entry(v), other.entry(v)
                if theirs.kind != PARAMETER or mine.kind != FIXED:
                    continue
                prev = theirs.minimum - 1
                if prev < 0 or mine.alpha != theirs.period * prev + theirs.alpha:
                    continue
                lowered = ParametricEntry(
                    theirs.alpha, theirs.beta, PARAMETER, theirs.parameter, prev
                )
                families[j] = ParametricAssignment(
                    tuple(
                        (w, lowered if w == v else other.entry(w))
                        for w in other.variables()
                    )
                )
                families.pop(i)
                merged = True
                break
            if merged:
                break
    out: list[ParametricAssignment] = []
    for fam in families:
        if any(
            other is not fam and _family_subsumes(other, fam)
            for other in families
        ):
            continue
        if fam not in out:
            out.append(fam)
    return out


# ---------------------------------------------------------------------------
# Candidate families for core variables
# ---------------------------------------------------------------------------


def _words_upto(alphabet: Alphabet, n: int) -> list[str]:
    out = [""]
    for length in range(1, n + 1):
        out.extend(
            "".join(t) for t in itertools.product(alphabet.letters, repeat=length)
        )
    return out


def _candidate_entries(var: str, bound: int, alphabet: Alphabet) -> list[ParametricEntry]:
    """Short words up to the bound, then periodic bases with |αβ| <= bound."""
    out = [ParametricEntry(w, "", FIXED) for w in _words_upto(alphabet, bound)]
    seen = set(out)
    for base in _words_upto(alphabet, bound):
        if not base:
            continue
        for cut in range(len(base) + 1):
            ent = _normalized(
                ParametricEntry(base[:cut], base[cut:], PARAMETER, f"n_{var}", 1)
            )
            if ent not in seen:
                seen.add(ent)
                out.append(ent)
    return out


def _core_families(
    core_eq: Equation,
    core_vars: tuple[str, ...],
    bounds: dict[str, int],
    alphabet: Alphabet,
) -> Iterable[ParametricAssignment]:
    """Validated families for the core equation, canonical order.

    Depth-first choice of per-variable entries with prefix-consistency
    pruning at the least exponents, then full validation of every exponent
    combination in {min, min+1} per parametric entry (pumping guard).
    """
    shape = _decompose(core_eq)
    candidates = {
        v: _candidate_entries(v, bounds[v], alphabet) for v in core_vars
    }

    def prefixes(chosen: list[ParametricEntry]):
        lp = shape.left_gaps[0]
        rp = shape.right_gaps[0]
        for i, ent in enumerate(chosen):
            w = ent.word(ent.minimum) if ent.kind == PARAMETER else ent.word()
            lp += w + shape.left_gaps[i + 1]
            rp += w + shape.right_gaps[i + 1]
        return lp, rp

    def validates(fam: list[ParametricEntry]) -> bool:
        params = [i for i, ent in enumerate(fam) if ent.kind == PARAMETER]
        for combo in itertools.product((0, 1), repeat=len(params)):
            exponents = {}
            for pi, bump in zip(params, combo):
                exponents[core_vars[pi]] = fam[pi].minimum + bump
            h = ParametricAssignment(
                tuple(zip(core_vars, fam))
            ).instantiate(exponents)
            if apply_substitution(core_eq.lhs, h) != apply_substitution(core_eq.rhs, h):
                return False
        return True

    def dfs(i: int, chosen: list[ParametricEntry]):
        if i == len(core_vars):
            if validates(chosen):
                yield ParametricAssignment(tuple(zip(core_vars, tuple(chosen))))
            return
        for ent in candidates[core_vars[i]]:
            chosen.append(ent)
            lp, rp = prefixes(chosen)
            if lp.startswith(rp) or rp.startswith(lp):
                yield from dfs(i + 1, chosen)
            chosen.pop()

    yield from dfs(0, [])


# ---------------------------------------------------------------------------
# Admissible lengths of regular languages
# ---------------------------------------------------------------------------


def _accepted_length_structure(dfa: Dfa):
    """Finite exceptional lengths plus arithmetic families (base, step).

    Walks reachable state sets per length; the sequence is eventually
    periodic, so accepted lengths are the exceptional ones before the cycle
    entry plus base + step·t for each accepted base in the cycle window.
    """
    current = frozenset({dfa.initial})
    seen = {current: 0}
    sets = [current]
    while True:
        current = frozenset(
            dfa.step(s, c) for s in current for c in dfa.alphabet
        )
        if current in seen:
            pre, per = seen[current], len(sets) - seen[current]
            break
        seen[current] = len(sets)
        sets.append(current)

    def accepted(l: int) -> bool:
        t = sets[l] if l < len(sets) else sets[pre + (l - pre) % per]
        return bool(t & dfa.accepting)

    finite = [l for l in range(pre) if accepted(l)]
    arith = [(j, per) for j in range(pre, pre + per) if accepted(j)]
    return finite, arith


def _reach_layers(dfa: Dfa, up_to: int) -> list[set[int]]:
    layers = [set(dfa.accepting)]
    for _ in range(up_to):
        prev = layers[-1]
        layers.append(
            {
                s
                for s in range(dfa.state_count)
                if any(dfa.step(s, c) in prev for c in dfa.alphabet)
            }
        )
    return layers


def _lex_least_accepted(dfa: Dfa, length: int, alphabet: Alphabet) -> str:
    if length > EXPAND_CAP:
        raise WordEqError(f"accepted word of length {length} exceeds the expansion cap")
    layers = _reach_layers(dfa, length)
    if dfa.initial not in layers[length]:
        raise WordEqError(f"no accepted word of length {length}")
    state, out = dfa.initial, []
    for remaining in range(length, 0, -1):
        for c in alphabet.letters:
            nxt = dfa.step(state, c)
            if nxt in layers[remaining - 1]:
                out.append(c)
                state = nxt
                break
    return "".join(out)


# ---------------------------------------------------------------------------
# The decision procedure
# ---------------------------------------------------------------------------


def _ordered_extra_variables(shape, theta, regular):
    extra = []
    for v in tuple(theta.variables()) + tuple(regular):
        if v not in shape.variables and v not in extra:
            extra.append(v)
    return tuple(extra)


def solve_regular_ordered(
    e: Equation,
    theta: Optional[LengthConstraintSystem],
    regular: Optional[dict[str, Dfa]],
    alphabet: Alphabet,
    max_expand: int = 10_000,
) -> SolveResult:
    """Decide a strictly regular-ordered equation with length and DFA constraints.

    Complete: families cover every solution of the core equation, the
    periodic intersection captures exactly the admissible exponents, and
    the Diophantine step is exact.  The first satisfiable guess in
    canonical order is reported; models longer than ``max_expand`` letters
    are returned in compressed parametric form only.
    """
    if not check_strictly_regular_ordered(e):
        raise FragmentError("equation is not strictly regular-ordered")
    theta = theta if theta is not None else LengthConstraintSystem()
    regular = dict(regular) if regular else {}

    shape = _decompose(e)
    identical_sides = e.lhs.symbols == e.rhs.symbols
    meta = {
        "identical_sides": identical_sides,
        "free_variables": [],
    }
    if sum(map(len, shape.left_gaps)) != sum(map(len, shape.right_gaps)):
        return SolveResult("unsat", metadata=dict(meta, reason="terminal imbalance"))

    core_vars = tuple(
        v for v, d in zip(shape.variables, shape.offsets) if d != 0
    )
    free_vars = tuple(
        v for v, d in zip(shape.variables, shape.offsets) if d == 0
    )
    extra = _ordered_extra_variables(shape, theta, regular)
    free_all = free_vars + extra
    meta["free_variables"] = list(free_all)

    core_eq = Equation(
        _delete_variables(e.lhs, frozenset(free_vars)),
        _delete_variables(e.rhs, frozenset(free_vars)),
    )
    if not core_vars and core_eq.lhs.ground_word() != core_eq.rhs.ground_word():
        return SolveResult("unsat", metadata=dict(meta, reason="terminal mismatch"))

    # admissible-length structure of every offset-zero variable
    free_choices: dict[str, list] = {}
    for v in free_all:
        dfa = regular.get(v)
        if dfa is None:
            free_choices[v] = [("arith", 0, 1)]
            continue
        finite, arith = _accepted_length_structure(dfa)
        if not finite and not arith:
            return SolveResult(
                "unsat", metadata=dict(meta, reason=f"L(R({v})) is empty")
            )
        free_choices[v] = [("finite", l) for l in finite] + [
            ("arith", base, step) for base, step in arith
        ]

    bounds = {v: abs(shape.offset(v)) for v in core_vars}

    for family in _core_families(core_eq, core_vars, bounds, alphabet):
        plan = _family_plan(family, regular, free_all, free_choices)
        if plan is None:
            continue
        hit = _solve_choices(
            e, family, plan, theta, regular, alphabet, max_expand, meta
        )
        if hit is not None:
            return hit
    return SolveResult("unsat", metadata=meta)


def _family_plan(family, regular, free_all, free_choices):
    """Per-variable exponent/length choices, or None when a constraint is void."""
    plan: list[tuple[str, list]] = []
    for v, ent in family.entries:
        dfa = regular.get(v)
        if ent.kind == FIXED:
            if dfa is not None and not dfa.accepts(ent.alpha):
                return None
            plan.append((v, [("fixed_word",)]))
            continue
        if dfa is None:
            plan.append((v, [("free_exp",)]))
            continue
        spec = periodic_intersection(dfa, ent.alpha, ent.beta)
        if not spec.s_set and not spec.p_set:
            return None
        choices = [("exp_s", s) for s in sorted(spec.s_set) if s >= ent.minimum]
        choices += [("exp_p", p, spec.q) for p in sorted(spec.p_set)]
        if not choices:
            return None
        plan.append((v, choices))
    for v in free_all:
        plan.append((v, list(free_choices[v])))
    return plan


def _solve_choices(e, family, plan, theta, regular, alphabet, max_expand, meta):
    names = [v for v, _ in plan]
    all_choices = [choices for _, choices in plan]
    family_entries = dict(family.entries)
    for combo in itertools.product(*all_choices):
        # affine length form A + B·mu per variable, plus side constraints
        affine: dict[str, tuple[int, int]] = {}
        side: list[LinearConstraint] = []
        mu_vars: list[str] = []
        exponents_form: dict[str, tuple[int, int]] = {}  # exponent = A' + B'·mu
        for v, choice in zip(names, combo):
            mu = f"mu_{v}"
            ent = family_entries.get(v)
            tag = choice[0]
            if tag == "fixed_word":
                affine[v] = (len(ent.alpha), 0)
            elif tag == "free_exp":
                p = len(ent.period)
                affine[v] = (p * ent.minimum + len(ent.alpha), p)
                exponents_form[v] = (ent.minimum, 1)
                mu_vars.append(mu)
            elif tag == "exp_s":
                s = choice[1]
                p = len(ent.period)
                affine[v] = (p * s + len(ent.alpha), 0)
                exponents_form[v] = (s, 0)
            elif tag == "exp_p":
                pres, q = choice[1], choice[2]
                p = len(ent.period)
                # exponent = pres + q·mu with mu >= 1, at least the entry minimum
                affine[v] = (p * pres + len(ent.alpha), p * q)
                exponents_form[v] = (pres, q)
                mu_vars.append(mu)
                side.append(LinearConstraint({mu: 1}, 1, GE))
                if pres + q < ent.minimum:
                    side.append(LinearConstraint({mu: q}, ent.minimum - pres, GE))
            elif tag == "finite":
                affine[v] = (choice[1], 0)
            elif tag == "arith":
                base, step = choice[1], choice[2]
                affine[v] = (base, step)
                mu_vars.append(mu)
            else:
                raise AssertionError(tag)

        constraints = list(side)
        for c in theta.constraints:
            coeffs: dict[str, int] = {}
            const = c.constant
            for v, cf in c.coeffs:
                a_part, b_part = affine[v]
                const -= cf * a_part
                if b_part:
                    mu = f"mu_{v}"
                    coeffs[mu] = coeffs.get(mu, 0) + cf * b_part
            constraints.append(LinearConstraint(coeffs, const, c.relation))
        point = solve_nonneg(DiophantineSystem(tuple(mu_vars), tuple(constraints)))
        if point is None:
            continue
        return _build_result(
            e, family, names, combo, affine, exponents_form, point,
            regular, alphabet, max_expand, meta,
        )
    return None


def _build_result(
    e, family, names, combo, affine, exponents_form, point,
    regular, alphabet, max_expand, meta,
):
    lengths: dict[str, int] = {}
    exponents: dict[str, int] = {}
    for v in names:
        a_part, b_part = affine[v]
        mu = point.get(f"mu_{v}", 0)
        lengths[v] = a_part + b_part * mu
        if v in exponents_form:
            e_a, e_b = exponents_form[v]
            exponents[v] = e_a + e_b * mu

    words: dict[str, str] = {}
    truncated = False
    family_entries = dict(family.entries)
    for v in names:
        ent = family_entries.get(v)
        if ent is not None:
            if ent.kind == FIXED:
                words[v] = ent.alpha
            else:
                n = exponents[v]
                if lengths[v] > max_expand:
                    truncated = True
                else:
                    words[v] = ent.word(n)
        else:
            dfa = regular.get(v)
            if lengths[v] > max_expand:
                truncated = True
            elif dfa is None:
                words[v] = alphabet.letters[0] * lengths[v]
            else:
                words[v] = _lex_least_accepted(dfa, lengths[v], alphabet)

    entries = list(family.entries)
    for v in names:
        if v not in family.variables() and v in words:
            entries.append((v, ParametricEntry(words[v], "", FIXED)))
    parametric = ParametricAssignment(tuple(entries))

    model = None
    if not truncated:
        model = Substitution(words)
        if apply_substitution(e.lhs, model) != apply_substitution(e.rhs, model):
            raise AssertionError("validated family produced a non-solution")
        for v, dfa in (regular or {}).items():
            if dfa is not None and not dfa.accepts(model[v]):
                raise AssertionError("model violates a regular constraint")
    return SolveResult(
        "sat",
        model,
        parametric=parametric,
        metadata=dict(
            meta,
            exponents=exponents,
            lengths=lengths,
            truncated=truncated,
        ),
    )


# ---------------------------------------------------------------------------
# Parametric-solution enumeration (no constraints)
# ---------------------------------------------------------------------------


def enumerate_parametric_solutions(
    e: Equation,
    alphabet: Alphabet,
    free_length_bound: Optional[int] = None,
) -> list[ParametricAssignment]:
    """The finite validated families of basic solutions.

    Core variables are enumerated as in the solver; offset-zero variables
    are unconstrained by the equation, so they contribute every fixed word
    and every periodic base up to ``free_length_bound`` (default |UV|).
    Every instance of every returned family solves the equation; basic
    solutions within the per-variable length bounds are instances of some
    family.
    """
    if not check_strictly_regular_ordered(e):
        raise FragmentError("equation is not strictly regular-ordered")
    shape = _decompose(e)
    if sum(map(len, shape.left_gaps)) != sum(map(len, shape.right_gaps)):
        return []
    bound = free_length_bound if free_length_bound is not None else e.total_length()
    core_vars = tuple(v for v, d in zip(shape.variables, shape.offsets) if d != 0)
    free_vars = tuple(v for v, d in zip(shape.variables, shape.offsets) if d == 0)
    core_eq = Equation(
        _delete_variables(e.lhs, frozenset(free_vars)),
        _delete_variables(e.rhs, frozenset(free_vars)),
    )
    if not core_vars and core_eq.lhs.ground_word() != core_eq.rhs.ground_word():
        return []
    bounds = {v: abs(shape.offset(v)) for v in core_vars}
    core = list(_core_families(core_eq, core_vars, bounds, alphabet))
    if not core_vars:
        core = [ParametricAssignment(())]

    free_entry_sets = [
        _candidate_entries(v, bound, alphabet) for v in free_vars
    ]
    families: list[ParametricAssignment] = []
    for base_fam in core:
        for free_combo in itertools.product(*free_entry_sets):
            entries = list(base_fam.entries) + list(zip(free_vars, free_combo))
            order = {v: i for i, v in enumerate(shape.variables)}
            entries.sort(key=lambda t: order[t[0]])
            families.append(ParametricAssignment(tuple(entries)))
    return _absorb_families(families)
