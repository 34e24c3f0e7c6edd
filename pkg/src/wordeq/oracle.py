"""Bounded brute-force evaluation of quantified formulas.

This module is the independent ground truth the rest of the package is
tested against.  Assignments are enumerated in a documented total order:
by total image length, then by the per-variable length vector
(lexicographically), then by the word tuple (lexicographically in declared
alphabet order).  Pruning never changes which assignment is reported first;
it only skips length vectors where the matrix value is already forced.

Verdicts are bounded information.  Exact truth may be claimed by callers
only when a theory-supplied witness bound applies; ``certified_sigma2_witness``
packages the one such bound used here (a distinguishing substitution whose
images a·b^(k+i)·a separate every non-trivial equation at once).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from . import kernels
from .core import (
    Alphabet,
    EXISTS,
    Equation,
    FAtom,
    FNot,
    FORALL,
    Formula,
    Pattern,
    PredicateAtom,
    QuantifiedFormula,
    Substitution,
    Symbol,
    T,
    WordEqError,
    apply_substitution,
    eval_formula,
)

WITNESS_FOUND = "witness_found"
VIOLATION_FOUND = "violation_found"
EXHAUSTED_NO_WITNESS = "exhausted_no_witness"
EXHAUSTED_NO_VIOLATION = "exhausted_no_violation"


@dataclass(frozen=True)
class BoundedVerdict:
    kind: str
    assignment: Optional[Substitution] = None

    @property
    def found(self) -> bool:
        return self.kind in (WITNESS_FOUND, VIOLATION_FOUND)


# ---------------------------------------------------------------------------
# Canonical enumeration
# ---------------------------------------------------------------------------


def words_of_length(alphabet: Alphabet, n: int) -> list[str]:
    """All words of one length, lexicographic in declared letter order."""
    if n == 0:
        return [""]
    return ["".join(t) for t in itertools.product(alphabet.letters, repeat=n)]


def iter_words(alphabet: Alphabet, bound: int) -> Iterator[str]:
    for n in range(bound + 1):
        yield from words_of_length(alphabet, n)


def iter_length_vectors(k: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Vectors ordered by total, then lexicographically."""
    if k == 0:
        yield ()
        return
    for total in range(k * bound + 1):
        yield from _vectors_with_total(k, bound, total)


def _vectors_with_total(k: int, bound: int, total: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        if total <= bound:
            yield (total,)
        return
    for first in range(min(bound, total) + 1):
        for rest in _vectors_with_total(k - 1, bound, total - first):
            yield (first,) + rest


def iter_assignments(
    variables: tuple[str, ...],
    alphabet: Alphabet,
    bound: int,
    regular: Optional[dict] = None,
) -> Iterator[dict[str, str]]:
    """All assignments with per-variable image length <= bound, canonical order.

    ``regular`` optionally maps variables to DFAs; candidate words for those
    variables are restricted to accepted ones (a subsequence of the order).
    """
    pools: dict[tuple[str, int], list[str]] = {}

    def pool(v: str, n: int) -> list[str]:
        key = (v, n)
        if key not in pools:
            ws = words_of_length(alphabet, n)
            if regular and v in regular and regular[v] is not None:
                ws = [w for w in ws if regular[v].accepts(w)]
            pools[key] = ws
        return pools[key]

    for vec in iter_length_vectors(len(variables), bound):
        for combo in itertools.product(*(pool(v, n) for v, n in zip(variables, vec))):
            yield dict(zip(variables, combo))


def substitute_pattern(p: Pattern, bindings: dict[str, str]) -> Pattern:
    """Replace bound variables by terminal runs, keeping the rest symbolic."""
    syms: list[Symbol] = []
    for s in p.symbols:
        if s.is_variable and s.name in bindings:
            syms.extend(T(c) for c in bindings[s.name])
        else:
            syms.append(s)
    return Pattern(tuple(syms))


def substitute_formula(f: Formula, bindings: dict[str, str]) -> Formula:
    from .core import FAnd, FOr

    if isinstance(f, FAtom):
        v = f.value
        if isinstance(v, Equation):
            return FAtom(
                Equation(
                    substitute_pattern(v.lhs, bindings),
                    substitute_pattern(v.rhs, bindings),
                    v.negative,
                )
            )
        args = tuple(
            substitute_pattern(a, bindings) if isinstance(a, Pattern) else a
            for a in v.args
        )
        return FAtom(PredicateAtom(v.name, args))
    if isinstance(f, FNot):
        return FNot(substitute_formula(f.child, bindings))
    if isinstance(f, FAnd):
        return FAnd(tuple(substitute_formula(c, bindings) for c in f.children))
    if isinstance(f, FOr):
        return FOr(tuple(substitute_formula(c, bindings) for c in f.children))
    raise WordEqError(f"bad formula node {f!r}")


# ---------------------------------------------------------------------------
# Matrix analysis shared by the scan paths
# ---------------------------------------------------------------------------


def _dnf_atom_lists(matrix: Formula) -> list[list[tuple[bool, object]]]:
    """Disjuncts as lists of (negated, Equation|PredicateAtom).

    Equation polarity is folded into the flag, so every Equation value here
    is compared by plain image equality.
    """
    from .combinators import to_dnf

    dnf = to_dnf(matrix)
    from .core import FAnd, FOr

    def conjunct_atoms(node: Formula) -> list[tuple[bool, object]]:
        items = node.children if isinstance(node, FAnd) else (node,)
        out = []
        for it in items:
            neg = False
            if isinstance(it, FNot):
                neg, it = True, it.child
            assert isinstance(it, FAtom)
            v = it.value
            if isinstance(v, Equation):
                out.append((neg != v.negative, Equation(v.lhs, v.rhs)))
            else:
                out.append((neg, v))
        return out

    disjuncts = dnf.children if isinstance(dnf, FOr) else (dnf,)
    return [conjunct_atoms(d) for d in disjuncts]


def _is_scan_friendly(disjuncts) -> bool:
    for d in disjuncts:
        for _, v in d:
            if isinstance(v, PredicateAtom):
                if v.name != "Length" or not all(isinstance(a, Pattern) for a in v.args):
                    return False
    return True


DEAD = "dead"
TRUE_EVERYWHERE = "true"


def _resolve_at_lengths(disjuncts, lengths: dict[str, int]):
    """Per-disjunct residue at a fixed length vector.

    Returns (status, live) where status is DEAD (matrix false for every
    tuple of these lengths), TRUE_EVERYWHERE (true for every tuple), or
    None with the list of live disjuncts (remaining equation atoms).
    """
    live = []
    for d in disjuncts:
        atoms = []
        dead = False
        for neg, v in d:
            if isinstance(v, PredicateAtom):
                # only Length atoms reach this point on the scan path
                l1 = v.args[0].image_length(lengths)
                l2 = v.args[1].image_length(lengths)
                if ((l1 == l2) != neg):
                    continue  # atom true at these lengths
                dead = True
                break
            same_len = v.lhs.image_length(lengths) == v.rhs.image_length(lengths)
            if not same_len:
                if neg:
                    continue  # images can never coincide: negated atom holds
                dead = True
                break
            if v.lhs.is_ground() and v.rhs.is_ground():
                same = v.lhs.ground_word() == v.rhs.ground_word()
                if same != neg:
                    continue
                dead = True
                break
            atoms.append((neg, v))
        if dead:
            continue
        if not atoms:
            return TRUE_EVERYWHERE, None
        live.append(atoms)
    if not live:
        return DEAD, None
    return None, live


def _compile_for_kernel(live, variables: tuple[str, ...], alphabet: Alphabet):
    vidx = {v: i for i, v in enumerate(variables)}

    def side(p: Pattern) -> tuple[int, ...]:
        return tuple(
            vidx[s.name] if s.is_variable else -(alphabet.index(s.name) + 1)
            for s in p.symbols
        )

    return [[(neg, side(eq.lhs), side(eq.rhs)) for neg, eq in d] for d in live]


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------


def _scan(
    matrix: Formula,
    variables: tuple[str, ...],
    alphabet: Alphabet,
    bound: int,
    want_satisfying: bool,
    pred_eval=None,
    length_system=None,
    regular=None,
) -> Optional[dict[str, str]]:
    """First assignment (canonical order) where the matrix equals the target."""
    disjuncts = _dnf_atom_lists(matrix)
    fast = _is_scan_friendly(disjuncts) and not regular
    letters = "".join(alphabet.letters)
    for vec in iter_length_vectors(len(variables), bound):
        lengths = dict(zip(variables, vec))
        if length_system is not None and not length_system.holds(lengths):
            continue
        status, live = _resolve_at_lengths(disjuncts, lengths)
        if status == DEAD and want_satisfying:
            continue
        if status == TRUE_EVERYWHERE and not want_satisfying:
            continue
        if status in (DEAD, TRUE_EVERYWHERE):
            # value is forced: the first tuple of this vector is the answer
            words = next(
                itertools.product(
                    *(
                        _regular_pool(v, n, alphabet, regular)
                        for v, n in zip(variables, vec)
                    )
                ),
                None,
            )
            if words is None:
                continue
            return dict(zip(variables, words))
        if fast:
            hit = kernels.scan_fixed_lengths(
                letters, vec, _compile_for_kernel(live, variables, alphabet),
                want_satisfying,
            )
            if hit is not None:
                return dict(zip(variables, hit))
        else:
            for assign in itertools.product(
                *(_regular_pool(v, n, alphabet, regular) for v, n in zip(variables, vec))
            ):
                h = Substitution(dict(zip(variables, assign)))
                if eval_formula(matrix, h, pred_eval) == want_satisfying:
                    return h.as_dict()
    return None


def _regular_pool(v, n, alphabet, regular):
    ws = words_of_length(alphabet, n)
    if regular and v in regular and regular[v] is not None:
        ws = [w for w in ws if regular[v].accepts(w)]
    return ws


def bounded_check(
    phi: QuantifiedFormula,
    alphabet: Alphabet,
    bound: int,
    pred_eval=None,
    length_system=None,
    regular=None,
) -> BoundedVerdict:
    """Exhaustive check of an at-most-exists-forall prefix up to the bound.

    Every variable image is bounded separately.  For an exists prefix the
    first satisfying assignment (canonical order) is the witness; for a
    forall prefix the first falsifying one is the violation.  For
    exists-forall, a witness for the exists block counts only if no
    forall-assignment within the bound violates the matrix.

    ``length_system`` (anything with ``holds(lengths)``) and ``regular``
    (variable -> DFA) restrict the assignments considered.
    """
    kinds = [q for q, _ in phi.prefix]
    if kinds in ([], [EXISTS]):
        xs = phi.block(EXISTS)
        hit = _scan(phi.matrix, xs, alphabet, bound, True, pred_eval,
                    length_system, regular)
        if hit is not None:
            return BoundedVerdict(WITNESS_FOUND, Substitution(hit))
        return BoundedVerdict(EXHAUSTED_NO_WITNESS)
    if kinds == [FORALL]:
        ys = phi.block(FORALL)
        hit = _scan(phi.matrix, ys, alphabet, bound, False, pred_eval,
                    length_system, regular)
        if hit is not None:
            return BoundedVerdict(VIOLATION_FOUND, Substitution(hit))
        return BoundedVerdict(EXHAUSTED_NO_VIOLATION)
    if kinds == [EXISTS, FORALL]:
        xs = phi.block(EXISTS)
        ys = phi.block(FORALL)
        for outer in iter_assignments(xs, alphabet, bound, regular):
            inner_matrix = substitute_formula(phi.matrix, outer)
            violation = _scan(inner_matrix, ys, alphabet, bound, False,
                              pred_eval, length_system, regular)
            if violation is None:
                return BoundedVerdict(WITNESS_FOUND, Substitution(outer))
        return BoundedVerdict(EXHAUSTED_NO_WITNESS)
    raise WordEqError(f"prefix {kinds} deeper than exists-forall is not supported")


# ---------------------------------------------------------------------------
# Complete bounded search for one positive equation (alignment method)
# ---------------------------------------------------------------------------


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.letter: dict[int, str] = {}

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return True
        la, lb = self.letter.get(ra), self.letter.get(rb)
        if la is not None and lb is not None and la != lb:
            return False
        self.parent[ra] = rb
        if la is not None:
            self.letter[rb] = la
        return True

    def pin(self, a: int, letter: str) -> bool:
        r = self.find(a)
        cur = self.letter.get(r)
        if cur is None:
            self.letter[r] = letter
            return True
        return cur == letter


def _position_cells(p: Pattern, lengths: dict[str, int], base: dict[str, int]):
    """Per position of the image: either ('t', letter) or a variable cell id."""
    out: list = []
    for s in p.symbols:
        if s.is_terminal:
            out.append(("t", s.name))
        else:
            b = base[s.name]
            out.extend(b + i for i in range(lengths[s.name]))
    return out


def bounded_solution_search(
    eq: Equation,
    alphabet: Alphabet,
    bound: int,
    theta=None,
    regular: Optional[dict] = None,
    extra_variables: Iterable[str] = (),
) -> Optional[Substitution]:
    """Complete search for a solution with every image length <= bound.

    Independent of the structured solvers: for each length vector the
    equation becomes a fixed positional alignment, solved by unification of
    letter cells, then (when regular constraints are present) a small
    backtracking assignment of letters to free cell classes with
    reach-in-exactly-r-steps pruning per automaton.

    Finds a witness whenever one exists within the bound (not necessarily
    the canonically first one); returns None after exhausting the bound.
    """
    if eq.negative:
        raise WordEqError("alignment search handles positive equations only")
    variables = list(eq.variables())
    for v in itertools.chain(extra_variables, (regular or {}).keys()):
        if v not in variables:
            variables.append(v)
    if theta is not None:
        for v in theta.variables():
            if v not in variables:
                variables.append(v)
    variables = tuple(variables)
    k = len(variables)

    reach: dict[str, list[set[int]]] = {}
    if regular:
        for v, dfa in regular.items():
            if dfa is None:
                continue
            layers = [set(dfa.accepting)]
            for _ in range(bound):
                prev = layers[-1]
                layers.append(
                    {
                        s
                        for s in range(dfa.state_count)
                        if any(
                            dfa.step(s, c) in prev for c in alphabet.letters
                        )
                    }
                )
            reach[v] = layers

    for vec in iter_length_vectors(k, bound):
        lengths = dict(zip(variables, vec))
        if theta is not None and not theta.holds(lengths):
            continue
        if eq.lhs.image_length(lengths) != eq.rhs.image_length(lengths):
            continue
        base: dict[str, int] = {}
        total = 0
        for v in variables:
            base[v] = total
            total += lengths[v]
        dsu = _DSU(total)
        left = _position_cells(eq.lhs, lengths, base)
        right = _position_cells(eq.rhs, lengths, base)
        ok = True
        for dl, dr in zip(left, right):
            tl = isinstance(dl, tuple)
            tr = isinstance(dr, tuple)
            if tl and tr:
                ok = dl[1] == dr[1]
            elif tl:
                ok = dsu.pin(dr, dl[1])
            elif tr:
                ok = dsu.pin(dl, dr[1])
            else:
                ok = dsu.union(dl, dr)
            if not ok:
                break
        if not ok:
            continue

        assignment = _assign_classes(
            variables, lengths, base, dsu, alphabet, regular, reach
        )
        if assignment is None:
            continue
        h = Substitution(assignment)
        if apply_substitution(eq.lhs, h) != apply_substitution(eq.rhs, h):
            raise AssertionError("alignment produced a non-solution")
        return h
    return None


def _assign_classes(variables, lengths, base, dsu, alphabet, regular, reach):
    constrained = [
        v
        for v in variables
        if regular and v in regular and regular[v] is not None
    ]
    chosen: dict[int, str] = {}

    def letter_of(cell: int) -> Optional[str]:
        r = dsu.find(cell)
        return dsu.letter.get(r) or chosen.get(r)

    def backtrack(ci: int, state: int, offset: int) -> bool:
        if ci == len(constrained):
            return True
        v = constrained[ci]
        dfa = regular[v]
        n = lengths[v]
        if offset == n:
            if state in dfa.accepting:
                return backtrack(ci + 1, regular[constrained[ci + 1]].initial, 0) \
                    if ci + 1 < len(constrained) else True
            return False
        if state not in reach[v][n - offset]:
            return False
        cell = base[v] + offset
        cur = letter_of(cell)
        options = [cur] if cur is not None else list(alphabet.letters)
        root = dsu.find(cell)
        for c in options:
            fresh = cur is None
            if fresh:
                chosen[root] = c
            if backtrack(ci, dfa.step(state, c), offset + 1):
                return True
            if fresh:
                del chosen[root]
        return False

    if constrained:
        start = regular[constrained[0]].initial
        if not backtrack(0, start, 0):
            return None

    out = {}
    for v in variables:
        word = []
        for i in range(lengths[v]):
            c = letter_of(base[v] + i)
            word.append(c if c is not None else alphabet.letters[0])
        out[v] = "".join(word)
    return out


# ---------------------------------------------------------------------------
# Pattern-language membership
# ---------------------------------------------------------------------------


def find_pattern_match(p: Pattern, word: str) -> Optional[Substitution]:
    """Substitution h with h(p) == word, or None; shortest bindings first."""
    syms = p.symbols

    def go(i: int, pos: int, bind: dict[str, str]):
        if i == len(syms):
            return dict(bind) if pos == len(word) else None
        s = syms[i]
        if s.is_terminal:
            if pos < len(word) and word[pos] == s.name:
                return go(i + 1, pos + 1, bind)
            return None
        if s.name in bind:
            w = bind[s.name]
            if word.startswith(w, pos):
                return go(i + 1, pos + len(w), bind)
            return None
        for end in range(pos, len(word) + 1):
            bind[s.name] = word[pos:end]
            hit = go(i + 1, end, bind)
            if hit is not None:
                return hit
            del bind[s.name]
        return None

    hit = go(0, 0, {})
    return Substitution(hit) if hit is not None else None


# ---------------------------------------------------------------------------
# Exact decision of positive exists-forall sentences up to an exists bound
# ---------------------------------------------------------------------------


def certified_sigma2_witness(
    phi: QuantifiedFormula,
    alphabet: Alphabet,
    exist_bound: int,
) -> Optional[Substitution]:
    """Witness for the exists block whose forall part is certified exactly.

    Requires a positive matrix over word equations and at least two letters.
    For each candidate assignment of the exists block, the forall block is
    decided by a single evaluation: substituting a·b^(k+i)·a for the i-th
    universal variable (k exceeding the total size of the substituted
    matrix) makes an equation hold iff its sides are identical symbol
    sequences, and identical sides hold under every assignment.  A returned
    witness therefore certifies truth; None only means no witness with
    images up to ``exist_bound`` exists.
    """
    from .core import is_positive

    if not is_positive(phi.matrix):
        raise WordEqError("certification requires a positive matrix")
    for a in phi.matrix.atoms():
        if not isinstance(a, Equation):
            raise WordEqError("certification handles equation atoms only")
    if len(alphabet) < 2:
        raise WordEqError("certification requires at least two letters")
    kinds = [q for q, _ in phi.prefix]
    if kinds not in ([EXISTS], [EXISTS, FORALL], [FORALL], []):
        raise WordEqError(f"unsupported prefix {kinds}")
    xs = phi.block(EXISTS)
    ys = phi.block(FORALL)
    a, b = alphabet.letters[0], alphabet.letters[1]

    for outer in iter_assignments(xs, alphabet, exist_bound):
        matrix = substitute_formula(phi.matrix, outer)
        k = 1 + max(
            (eq.total_length() for eq in matrix.atoms()), default=0
        )
        magic = {y: a + b * (k + i + 1) + a for i, y in enumerate(ys)}
        h = Substitution({**outer, **magic})
        if eval_formula(matrix, h):
            return Substitution(outer)
    return None
