"""Exact feasibility of linear systems over non-negative integers.

Complete by bounded search: if a system has a non-negative integral
solution at all, it has one inside a box whose side is the a-priori bound
computed by :func:`solution_bound` from coefficient magnitudes and
dimensions.  Within the box, depth-first search in declared variable order
with interval / divisibility propagation returns the lexicographically
least solution, so output is deterministic.  All arithmetic is plain
Python integers, so overflow is impossible by construction.  Worst case is
exponential; intended inputs are small systems arising from length
abstractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .core import WordEqError

EQ, LE, GE = "=", "<=", ">="
_RELATIONS = (EQ, LE, GE)


@dataclass(frozen=True)
class LinearConstraint:
    """sum(coeffs[v] * value[v]) REL constant."""

    coeffs: tuple[tuple[str, int], ...]
    constant: int
    relation: str

    def __init__(self, coeffs, constant: int, relation: str = EQ):
        if relation not in _RELATIONS:
            raise WordEqError(f"bad relation {relation!r}")
        if isinstance(coeffs, dict):
            items = tuple(sorted((v, int(c)) for v, c in coeffs.items() if c != 0))
        else:
            items = tuple(sorted((v, int(c)) for v, c in coeffs if c != 0))
        object.__setattr__(self, "coeffs", items)
        object.__setattr__(self, "constant", int(constant))
        object.__setattr__(self, "relation", relation)

    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.coeffs)

    def holds(self, values: dict[str, int]) -> bool:
        total = sum(c * values[v] for v, c in self.coeffs)
        if self.relation == EQ:
            return total == self.constant
        if self.relation == LE:
            return total <= self.constant
        return total >= self.constant

    def __repr__(self):
        terms = " + ".join(f"{c}·{v}" for v, c in self.coeffs) or "0"
        return f"({terms} {self.relation} {self.constant})"


@dataclass(frozen=True)
class DiophantineSystem:
    variables: tuple[str, ...]
    constraints: tuple[LinearConstraint, ...]

    def __init__(self, variables: Iterable[str], constraints: Iterable[LinearConstraint]):
        variables = tuple(variables)
        constraints = tuple(constraints)
        declared = set(variables)
        for c in constraints:
            for v in c.variables():
                if v not in declared:
                    raise WordEqError(f"constraint references undeclared variable {v!r}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "constraints", constraints)


def solution_bound(sys: DiophantineSystem) -> int:
    """A-priori box bound for minimal non-negative solutions.

    Standard magnitude bound for integer programs in equational form: with
    m constraints (inequalities counted via their slack variable), n
    variables plus one slack per inequality, and a the largest absolute
    coefficient or constant, a solvable system has a solution with every
    value at most n_total * (m * a) ** (2 * m + 1).  The enumeration-corpus
    test checks this dominates the true minima.
    """
    m = len(sys.constraints)
    slacks = sum(1 for c in sys.constraints if c.relation != EQ)
    n_total = max(1, len(sys.variables) + slacks)
    a = 2
    for c in sys.constraints:
        a = max(a, abs(c.constant), *(abs(x) for _, x in c.coeffs) or (0,))
    if m == 0:
        return 0
    return n_total * (m * a) ** (2 * m + 1)


def _derived_equalities(constraints):
    """Pairwise eliminations between equalities, for divisibility pruning."""
    eqs = [c for c in constraints if c.relation == EQ]
    out = []
    for i in range(len(eqs)):
        for j in range(i + 1, len(eqs)):
            ci, cj = eqs[i], eqs[j]
            shared = set(ci.variables()) & set(cj.variables())
            for v in shared:
                a = dict(ci.coeffs)[v]
                b = dict(cj.coeffs)[v]
                coeffs: dict[str, int] = {}
                for w, c in ci.coeffs:
                    coeffs[w] = coeffs.get(w, 0) + b * c
                for w, c in cj.coeffs:
                    coeffs[w] = coeffs.get(w, 0) - a * c
                const = b * ci.constant - a * cj.constant
                out.append(LinearConstraint(coeffs, const, EQ))
    return out


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _propagate(constraints, lo: dict, hi: dict) -> bool:
    """Interval fixpoint; False when some domain empties."""
    changed = True
    while changed:
        changed = False
        for c in constraints:
            items = c.coeffs
            # residual interval of the sum excluding each variable in turn
            min_sum = sum(cf * (lo[v] if cf > 0 else hi[v]) for v, cf in items)
            max_sum = sum(cf * (hi[v] if cf > 0 else lo[v]) for v, cf in items)
            if c.relation == EQ and not items:
                if c.constant != 0:
                    return False
                continue
            if c.relation == LE and not items:
                if 0 > c.constant:
                    return False
                continue
            if c.relation == GE and not items:
                if 0 < c.constant:
                    return False
                continue
            if c.relation in (EQ, GE) and max_sum < c.constant:
                return False
            if c.relation in (EQ, LE) and min_sum > c.constant:
                return False
            if c.relation == EQ:
                free = [(v, cf) for v, cf in items if lo[v] != hi[v]]
                fixed_part = sum(cf * lo[v] for v, cf in items if lo[v] == hi[v])
                if not free:
                    if fixed_part != c.constant:
                        return False
                    continue
                g = 0
                for _, cf in free:
                    g = gcd(g, cf)
                if (c.constant - fixed_part) % g != 0:
                    return False
            for v, cf in items:
                term_min = cf * (lo[v] if cf > 0 else hi[v])
                term_max = cf * (hi[v] if cf > 0 else lo[v])
                rest_min = min_sum - term_min
                rest_max = max_sum - term_max
                # bounds on cf * v implied by the relation
                if c.relation == EQ:
                    t_lo = c.constant - rest_max
                    t_hi = c.constant - rest_min
                elif c.relation == LE:
                    t_lo = None
                    t_hi = c.constant - rest_min
                else:
                    t_lo = c.constant - rest_max
                    t_hi = None
                if cf > 0:
                    new_lo = _ceil_div(t_lo, cf) if t_lo is not None else None
                    new_hi = t_hi // cf if t_hi is not None else None
                else:
                    new_lo = _ceil_div(t_hi, cf) if t_hi is not None else None
                    new_hi = t_lo // cf if t_lo is not None else None
                if new_lo is not None and new_lo > lo[v]:
                    lo[v] = new_lo
                    changed = True
                if new_hi is not None and new_hi < hi[v]:
                    hi[v] = new_hi
                    changed = True
                if lo[v] > hi[v]:
                    return False
    return True


def solve_nonneg(sys: DiophantineSystem) -> Optional[dict[str, int]]:
    """Lexicographically least non-negative integer solution, or None.

    Complete: the search box is the a-priori solution bound, so exhausting
    it refutes satisfiability.
    """
    bound = solution_bound(sys)
    constraints = list(sys.constraints) + _derived_equalities(sys.constraints)
    lo = {v: 0 for v in sys.variables}
    hi = {v: bound for v in sys.variables}
    if not _propagate(constraints, lo, hi):
        return None

    order = sys.variables

    def dfs(idx: int, lo: dict, hi: dict) -> Optional[dict[str, int]]:
        while idx < len(order) and lo[order[idx]] == hi[order[idx]]:
            idx += 1
        if idx == len(order):
            values = dict(lo)
            if all(c.holds(values) for c in sys.constraints):
                return values
            return None
        v = order[idx]
        for val in range(lo[v], hi[v] + 1):
            nlo, nhi = dict(lo), dict(hi)
            nlo[v] = nhi[v] = val
            if not _propagate(constraints, nlo, nhi):
                continue
            hit = dfs(idx + 1, nlo, nhi)
            if hit is not None:
                return hit
        return None

    return dfs(0, lo, hi)
