"""Executable semantics of the extension predicates and their encoders.

The relations here (letter-count equality, abelian equivalence, shuffle,
projection, scattered subword, morphic image, occurrence erasure and
insertion, the all-a extraction, binary string/number conversion and the
power triple) each make the existential theory of word equations
undecidable; this module implements them exactly and packages the
constructions that express one in terms of another as formula templates
validated by bounded search.

Erase(x, y, z) is read as: some decomposition x = u_0·y·u_1·y ... y·u_k
(k >= 0 non-overlapping occurrences of y) has z = u_0·u_1 ... u_k.  For
empty y nothing is removed.  Insert(x, y, z) holds iff Erase(z, y, x).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .core import (
    Alphabet,
    Equation,
    FAtom,
    FAnd,
    FNot,
    FOr,
    Formula,
    Pattern,
    PredicateAtom,
    Substitution,
    T,
    V,
    WordEqError,
    commutation_check,
    eval_formula,
    primitive_root,
    word_pattern,
)

# ---------------------------------------------------------------------------
# Relation semantics
# ---------------------------------------------------------------------------


def _want_words(name, args, count):
    if len(args) != count:
        raise WordEqError(f"{name} takes {count} arguments, got {len(args)}")
    for a in args:
        if not isinstance(a, str):
            raise WordEqError(f"{name} takes word arguments, got {a!r}")
    return args


def _eq_letter(letter):
    def ev(args):
        x, y = _want_words(f"Eq_{letter}", args, 2)
        return x.count(letter) == y.count(letter)

    return ev


def _length(args):
    x, y = _want_words("Length", args, 2)
    return len(x) == len(y)


def _abelian(args):
    x, y = _want_words("Abelian", args, 2)
    return Counter(x) == Counter(y)


def _shuffle(args):
    x, y, z = _want_words("Shuffle", args, 3)
    if len(z) != len(x) + len(y):
        return False
    # classic interleaving table
    reach = {(0, 0)}
    for k in range(len(z)):
        nxt = set()
        for i, j in reach:
            if i < len(x) and x[i] == z[k]:
                nxt.add((i + 1, j))
            if j < len(y) and y[j] == z[k]:
                nxt.add((i, j + 1))
        reach = nxt
        if not reach:
            return False
    return (len(x), len(y)) in reach


def _projection(args):
    x, y = _want_words("Projection", args, 2)
    letters = sorted(set(x))
    for r in range(len(letters) + 1):
        for keep in itertools.combinations(letters, r):
            kept = set(keep)
            if "".join(c for c in x if c in kept) == y:
                return True
    return False


def _subword(args):
    x, y = _want_words("Subword", args, 2)
    it = iter(y)
    return all(c in it for c in x)


def _morphism(args):
    x, y = _want_words("Morphism", args, 2)

    def go(idx: int, pos: int, images: dict[str, str]) -> bool:
        if idx == len(x):
            return pos == len(y)
        c = x[idx]
        if c in images:
            w = images[c]
            if y.startswith(w, pos):
                return go(idx + 1, pos + len(w), images)
            return False
        for end in range(pos, len(y) + 1):
            images[c] = y[pos:end]
            if go(idx + 1, end, images):
                return True
            del images[c]
        return False

    return go(0, 0, {})


def _erase(args):
    x, y, z = _want_words("Erase", args, 3)
    if y == "":
        return x == z

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> bool:
        if i == len(x):
            return j == len(z)
        if x.startswith(y, i) and go(i + len(y), j):
            return True
        return j < len(z) and x[i] == z[j] and go(i + 1, j + 1)

    try:
        return go(0, 0)
    finally:
        go.cache_clear()


def _insert(args):
    x, y, z = _want_words("Insert", args, 3)
    return _erase((z, y, x))


def _only_letter(letter):
    def ev(args):
        x, y = _want_words(f"Only{letter}s", args, 2)
        return y == letter * x.count(letter)

    return ev


def _strnum(args):
    if len(args) != 2:
        raise WordEqError("strnum takes 2 arguments")
    z, x = args
    if not isinstance(z, str) or not isinstance(x, int):
        raise WordEqError("strnum takes a binary word and a natural number")
    if x < 0:
        raise WordEqError("strnum is defined on naturals")
    return z == format(x, "b")


def _power(args):
    if len(args) != 3 or not all(isinstance(a, int) for a in args):
        raise WordEqError("P takes three natural numbers")
    p, x, y = args
    if min(p, x, y) < 0:
        raise WordEqError("P is defined on naturals")
    return p == x * 2**y


CATALOG: dict[str, tuple[int, object]] = {
    "Eq_a": (2, _eq_letter("a")),
    "Eq_b": (2, _eq_letter("b")),
    "Length": (2, _length),
    "Abelian": (2, _abelian),
    "Shuffle": (3, _shuffle),
    "Projection": (2, _projection),
    "Subword": (2, _subword),
    "Morphism": (2, _morphism),
    "Insert": (3, _insert),
    "Erase": (3, _erase),
    "Onlyas": (2, _only_letter("a")),
    "Onlybs": (2, _only_letter("b")),
    "strnum": (2, _strnum),
    "P": (3, _power),
}


def eval_predicate(name: str, args: tuple) -> bool:
    """Exact evaluation of a catalog relation on concrete arguments."""
    try:
        arity, ev = CATALOG[name]
    except KeyError:
        raise WordEqError(f"unknown predicate {name!r}") from None
    if len(args) != arity:
        raise WordEqError(f"{name} takes {arity} arguments, got {len(args)}")
    return ev(tuple(args))


# ---------------------------------------------------------------------------
# Formula templates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NatParam:
    """Placeholder for a numeric template parameter inside an atom."""

    name: str


@dataclass(frozen=True)
class LetterRun:
    """Placeholder for letter^n where n is a numeric template parameter."""

    letter: str
    name: str


@dataclass(frozen=True)
class FormulaTemplate:
    """Parametrised one-level existential formula.

    ``parameters`` are the instantiation slots (words, or naturals for
    slots of sort nat); ``fresh_vars`` are existentially quantified at
    evaluation time.  Instantiation replaces parameter variables inside
    patterns by the argument words and resolves numeric placeholders.
    """

    parameters: tuple[str, ...]
    fresh_vars: tuple[str, ...]
    body: Formula
    sorts: tuple[tuple[str, str], ...] = ()

    def sort_of(self, name: str) -> str:
        return dict(self.sorts).get(name, "str")

    def instantiate(self, args: Iterable) -> Formula:
        args = tuple(args)
        if len(args) != len(self.parameters):
            raise WordEqError(
                f"template takes {len(self.parameters)} arguments, got {len(args)}"
            )
        binding = dict(zip(self.parameters, args))
        for name, value in binding.items():
            want = self.sort_of(name)
            if want == "nat" and not isinstance(value, int):
                raise WordEqError(f"parameter {name} takes a natural number")
            if want == "str" and not isinstance(value, str):
                raise WordEqError(f"parameter {name} takes a word")
        return _resolve(self.body, binding)


def _resolve_pattern(p: Pattern, binding: dict) -> Pattern:
    out = []
    for s in p.symbols:
        if s.is_variable and s.name in binding:
            out.extend(T(c) for c in binding[s.name])
        else:
            out.append(s)
    return Pattern(tuple(out))


def _resolve(f: Formula, binding: dict) -> Formula:
    if isinstance(f, FAtom):
        v = f.value
        if isinstance(v, Equation):
            return FAtom(
                Equation(
                    _resolve_pattern(v.lhs, binding),
                    _resolve_pattern(v.rhs, binding),
                    v.negative,
                )
            )
        new_args = []
        for a in v.args:
            if isinstance(a, Pattern):
                new_args.append(_resolve_pattern(a, binding))
            elif isinstance(a, NatParam):
                new_args.append(binding[a.name])
            elif isinstance(a, LetterRun):
                new_args.append(word_pattern(a.letter * binding[a.name]))
            else:
                new_args.append(a)
        return FAtom(PredicateAtom(v.name, tuple(new_args)))
    if isinstance(f, FNot):
        return FNot(_resolve(f.child, binding))
    if isinstance(f, FAnd):
        return FAnd(tuple(_resolve(c, binding) for c in f.children))
    if isinstance(f, FOr):
        return FOr(tuple(_resolve(c, binding) for c in f.children))
    raise WordEqError(f"bad formula node {f!r}")


# ---------------------------------------------------------------------------
# Bounded template evaluation
# ---------------------------------------------------------------------------


def check_template(
    template: FormulaTemplate,
    args: Iterable,
    alphabet: Alphabet,
    bound: int,
    fresh_bounds: Optional[dict[str, int]] = None,
) -> bool:
    """Bounded-existential truth of an instantiated template.

    Fresh variables are resolved in three waves: unit propagation for
    defining equations (one ungrounded variable, single occurrence, other
    side ground) and for strnum atoms with a known number; candidate
    generation from commutation atoms w·x = x·w (powers of the primitive
    root of w); plain enumeration up to the per-variable bound for the
    rest.  Atoms are checked as soon as they ground, pruning the search.
    """
    from .combinators import to_dnf

    grounded = template.instantiate(args)
    dnf = to_dnf(grounded)
    disjuncts = dnf.children if isinstance(dnf, FOr) else (dnf,)
    fresh_bounds = fresh_bounds or {}
    for d in disjuncts:
        items = d.children if isinstance(d, FAnd) else (d,)
        atoms = []
        for it in items:
            neg = False
            if isinstance(it, FNot):
                neg, it = True, it.child
            atoms.append((neg, it.value))
        if _solve_conjunct(atoms, template.fresh_vars, alphabet, bound, fresh_bounds):
            return True
    return False


def _pattern_value(p: Pattern, binding: dict[str, str]) -> Optional[str]:
    out = []
    for s in p.symbols:
        if s.is_terminal:
            out.append(s.name)
        elif s.name in binding:
            out.append(binding[s.name])
        else:
            return None
    return "".join(out)


def _atom_ready(value, binding) -> bool:
    if isinstance(value, Equation):
        return (
            _pattern_value(value.lhs, binding) is not None
            and _pattern_value(value.rhs, binding) is not None
        )
    return all(
        not isinstance(a, Pattern) or _pattern_value(a, binding) is not None
        for a in value.args
    )


def _atom_value(value, binding) -> bool:
    if isinstance(value, Equation):
        same = _pattern_value(value.lhs, binding) == _pattern_value(value.rhs, binding)
        return same != value.negative
    args = tuple(
        _pattern_value(a, binding) if isinstance(a, Pattern) else a
        for a in value.args
    )
    return eval_predicate(value.name, args)


def _check_ground_atoms(atoms, binding, checked: set) -> bool:
    for idx, (neg, value) in enumerate(atoms):
        if idx in checked or not _atom_ready(value, binding):
            continue
        if _atom_value(value, binding) == neg:
            return False
        checked.add(idx)
    return True


def _propagate_units(atoms, binding, fresh: set) -> bool:
    """Solve defining equations and known-number strnum atoms in place."""
    progress = True
    while progress:
        progress = False
        for neg, value in atoms:
            if neg:
                continue
            if isinstance(value, Equation):
                hit = _solve_defining(value, binding, fresh)
                if hit is False:
                    return False
                progress = progress or bool(hit)
            elif isinstance(value, PredicateAtom) and value.name == "strnum":
                z, n = value.args
                if isinstance(z, Pattern) and isinstance(n, int):
                    zv = _pattern_value(z, binding)
                    if zv is None and len(z.symbols) == 1 and z.symbols[0].is_variable:
                        name = z.symbols[0].name
                        if name in fresh and name not in binding:
                            binding[name] = format(n, "b")
                            progress = True
    return True


def _solve_defining(eq: Equation, binding, fresh):
    """If one side is ground and the other has a single unbound variable
    occurring once, solve for it; returns True on progress, False on
    contradiction, None otherwise."""
    lv = _pattern_value(eq.lhs, binding)
    rv = _pattern_value(eq.rhs, binding)
    if (lv is None) == (rv is None):
        return None
    ground, open_side = (lv, eq.rhs) if lv is not None else (rv, eq.lhs)
    unbound = [
        s.name
        for s in open_side.symbols
        if s.is_variable and s.name not in binding
    ]
    if len(unbound) != 1 or unbound[0] not in fresh:
        return None
    name = unbound[0]
    before, after = [], []
    target = before
    for s in open_side.symbols:
        if s.is_variable and s.name == name:
            target = after
            continue
        piece = s.name if s.is_terminal else binding[s.name]
        target.append(piece)
    pre, post = "".join(before), "".join(after)
    if len(ground) < len(pre) + len(post):
        return False
    if not ground.startswith(pre) or not ground.endswith(post):
        return False
    binding[name] = ground[len(pre) : len(ground) - len(post)]
    return True


def _commutation_candidates(name, atoms, binding, alphabet, limit):
    """Candidates for a variable appearing in x·w = w·x with w ground nonempty.

    Commuting with w means being a power of w's primitive root, so only
    root powers up to the length limit need enumerating.
    """
    for neg, value in atoms:
        if neg or not isinstance(value, Equation) or value.negative:
            continue
        for one, other in ((value.lhs, value.rhs), (value.rhs, value.lhs)):
            s1, s2 = one.symbols, other.symbols
            if not (
                len(s1) >= 2
                and s1[0].is_variable
                and s1[0].name == name
                and len(s2) >= 2
                and s2[-1].is_variable
                and s2[-1].name == name
            ):
                continue
            tail = _pattern_value(Pattern(s1[1:]), binding)
            head = _pattern_value(Pattern(s2[:-1]), binding)
            if tail and head and tail == head:
                root = primitive_root(tail)
                out = [""]
                word = root
                while len(word) <= limit:
                    out.append(word)
                    word += root
                return out
    return None


def _defined_variables(atoms, fresh: set) -> set:
    """Fresh variables standing alone on one side of a defining equation;
    these are resolved by unit propagation, never by enumeration."""
    defined = set()
    for neg, value in atoms:
        if neg or not isinstance(value, Equation) or value.negative:
            continue
        for alone, other in ((value.lhs, value.rhs), (value.rhs, value.lhs)):
            if (
                len(alone.symbols) == 1
                and alone.symbols[0].is_variable
                and alone.symbols[0].name in fresh
                and alone.symbols[0].name not in (s.name for s in other.symbols)
            ):
                defined.add(alone.symbols[0].name)
    return defined


def _solve_conjunct(atoms, fresh_vars, alphabet, bound, fresh_bounds) -> bool:
    fresh = set(fresh_vars)
    defined = _defined_variables(atoms, fresh)
    order = [v for v in fresh_vars if v not in defined] + [
        v for v in fresh_vars if v in defined
    ]

    def attempt(binding: dict[str, str]) -> bool:
        binding = dict(binding)
        if not _propagate_units(atoms, binding, fresh):
            return False
        checked: set = set()
        if not _check_ground_atoms(atoms, binding, checked):
            return False
        remaining = [v for v in order if v not in binding]
        if not remaining:
            return all(
                _atom_value(value, binding) != neg for neg, value in atoms
            )
        name = remaining[0]
        limit = fresh_bounds.get(name, bound)
        candidates = _commutation_candidates(name, atoms, binding, alphabet, limit)
        if candidates is None:
            candidates = [""]
            for n in range(1, limit + 1):
                candidates.extend(
                    "".join(t) for t in itertools.product(alphabet.letters, repeat=n)
                )
        for w in candidates:
            binding[name] = w
            if not _check_ground_atoms(atoms, binding, set(checked)):
                del binding[name]
                continue
            if attempt(binding):
                return True
            del binding[name]
        return False

    return attempt({})


# ---------------------------------------------------------------------------
# Encoder constructions
# ---------------------------------------------------------------------------


def _v(name: str) -> Pattern:
    return Pattern((V(name),))


def _cat(*parts) -> Pattern:
    syms = []
    for p in parts:
        if isinstance(p, Pattern):
            syms.extend(p.symbols)
        else:
            syms.extend(word_pattern(p).symbols)
    return Pattern(tuple(syms))


def _eq(lhs: Pattern, rhs: Pattern) -> Formula:
    return FAtom(Equation(lhs, rhs))


def _pred(name: str, *args) -> Formula:
    return FAtom(PredicateAtom(name, tuple(args)))


def _commutes(var: str, letter: str) -> Formula:
    return _eq(_cat(_v(var), letter), _cat(letter, _v(var)))


def mutual_onlyas_eqa() -> tuple[FormulaTemplate, FormulaTemplate]:
    """Both directions of the all-a / a-count equivalence."""
    onlyas_from_eqa = FormulaTemplate(
        ("x", "y"),
        (),
        FAnd((_commutes("y", "a"), _pred("Eq_a", _v("x"), _v("y")))),
    )
    eqa_from_onlyas = FormulaTemplate(
        ("x", "y"),
        ("z",),
        FAnd((_pred("Onlyas", _v("x"), _v("z")), _pred("Onlyas", _v("y"), _v("z")))),
    )
    return onlyas_from_eqa, eqa_from_onlyas


_COUNTING_PAIRS = {
    ("Eq_a", "Onlyas"),
    ("Abelian", "Eq_a"),
    ("Shuffle", "Onlyas"),
    ("Projection", "Onlyas"),
    ("Subword", "Onlyas"),
    ("Erase", "Onlyas"),
    ("Insert", "Onlyas"),
}


def encode_counting(source: str, target: str, alphabet: Alphabet) -> FormulaTemplate:
    """Template expressing the target counting relation from the source one.

    Supported pairs: Eq_a->Onlyas, Abelian->Eq_a and each of Shuffle,
    Projection, Subword, Erase, Insert -> Onlyas.  Commutation atoms pin
    helper variables to letter powers; the source predicate then forces the
    target semantics.
    """
    if (source, target) not in _COUNTING_PAIRS:
        raise WordEqError(
            f"unsupported pair ({source}, {target}); supported: "
            + ", ".join(sorted(f"{s}->{t}" for s, t in _COUNTING_PAIRS))
        )
    letters = alphabet.letters
    if letters[0] != "a":
        raise WordEqError("counting encoders assume the first letter is 'a'")
    n = len(letters)

    if source == "Eq_a":
        return mutual_onlyas_eqa()[0]

    if source == "Abelian":
        fresh = ["xp", "yp"]
        parts: list[Formula] = []
        xp_parts: list = [_v("x")]
        yp_parts: list = [_v("y")]
        for i in range(1, n):
            zi, zpi = f"z{i + 1}", f"zp{i + 1}"
            fresh += [zi, zpi]
            parts.append(_commutes(zi, letters[i]))
            parts.append(_commutes(zpi, letters[i]))
            xp_parts.append(_v(zi))
            yp_parts.append(_v(zpi))
        parts.append(_eq(_v("xp"), _cat(*xp_parts)))
        parts.append(_eq(_v("yp"), _cat(*yp_parts)))
        parts.append(_pred("Abelian", _v("xp"), _v("yp")))
        return FormulaTemplate(("x", "y"), tuple(fresh), FAnd(tuple(parts)))

    if source == "Shuffle":
        fresh = []
        parts = [_commutes("y", letters[0])]
        prev = "y"
        for i in range(1, n):
            zi = f"z{i + 1}"
            fresh.append(zi)
            parts.append(_commutes(zi, letters[i]))
            nxt = f"y{i + 1}" if i < n - 1 else None
            if nxt is None:
                parts.append(_pred("Shuffle", _v(prev), _v(zi), _v("x")))
            else:
                fresh.append(nxt)
                parts.append(_pred("Shuffle", _v(prev), _v(zi), _v(nxt)))
                prev = nxt
        return FormulaTemplate(("x", "y"), tuple(fresh), FAnd(tuple(parts)))

    if source == "Projection":
        # both arguments carry one extra a: the image then contains an a, so
        # the projection must keep the letter a (erasing it would permit the
        # empty image regardless of |x|_a) and erase everything else
        body = FAnd(
            (
                _commutes("y", "a"),
                _pred("Projection", _cat(_v("x"), "a"), _cat(_v("y"), "a")),
            )
        )
        return FormulaTemplate(("x", "y"), (), body)

    if source == "Subword":
        body = FAnd(
            (
                _commutes("y", "a"),
                _pred("Subword", _v("y"), _v("x")),
                _eq(_v("z"), _cat(_v("y"), "a")),
                FNot(_pred("Subword", _v("z"), _v("x"))),
            )
        )
        return FormulaTemplate(("x", "y"), ("z",), body)

    # Erase and Insert share the removal chain a_n, a_(n-1), ..., a_2
    fresh = [f"z{i}" for i in range(2, n)]
    chain = ["x"] + fresh + ["y"]
    parts = [_commutes("y", letters[0])]
    for step in range(len(chain) - 1):
        src_var, dst_var = chain[step], chain[step + 1]
        letter = letters[n - 1 - step]
        if source == "Erase":
            parts.append(_pred("Erase", _v(src_var), word_pattern(letter), _v(dst_var)))
        else:
            parts.append(_pred("Insert", _v(dst_var), word_pattern(letter), _v(src_var)))
    return FormulaTemplate(("x", "y"), tuple(fresh), FAnd(tuple(parts)))


def encode_multiply(alphabet: Alphabet) -> FormulaTemplate:
    """Template for the doubling-style product relation on a^i·b encodings.

    Satisfiable on (a^i·b, a^j·b, a^k·b) iff k = i·j with i·j >= 2.  The
    helper x'' is pinned to (a^i·b)^j by the mutual morphic images, and the
    final morphic image between the two c-delimited words forces k = i·j.
    """
    if len(alphabet) < 3:
        raise WordEqError("the product encoder needs three distinct letters")
    a, b, c = alphabet.letters[0], alphabet.letters[1], alphabet.letters[2]
    init = (
        _eq(_v("xp"), _cat(_v("w"), a)),
        _eq(_v("yp"), _cat(_v("wp"), a)),
        FOr(
            (
                _eq(_v("xp"), _cat(_v("wpp"), a, a)),
                _eq(_v("yp"), _cat(_v("wpp"), a, a)),
            )
        ),
        _commutes("xp", a),
        _commutes("yp", a),
        _commutes("zp", a),
        _eq(_v("x"), _cat(_v("xp"), b)),
        _eq(_v("y"), _cat(_v("yp"), b)),
        _eq(_v("z"), _cat(_v("zp"), b)),
        _eq(_cat(_v("xpp"), _v("x")), _cat(_v("x"), _v("xpp"))),
    )
    rest = (
        _pred("Morphism", _v("xpp"), _v("yp")),
        _pred("Morphism", _v("yp"), _v("xpp")),
        _pred("Morphism", _v("u"), _v("v")),
        _eq(_v("u"), _cat(_v("xpp"), c, c, _v("xpp"), _v("xp"), c, c, b)),
        _eq(_v("v"), _cat(_v("zp"), c, c, _v("zp"), _v("xp"), c, c)),
    )
    fresh = ("xp", "xpp", "yp", "zp", "u", "v", "w", "wp", "wpp")
    return FormulaTemplate(("x", "y", "z"), fresh, FAnd(init + rest))


def multiply_arguments(i: int, j: int, k: int) -> tuple[str, str, str]:
    return ("a" * i + "b", "a" * j + "b", "a" * k + "b")


def check_multiply(template: FormulaTemplate, i: int, j: int, k: int,
                   alphabet: Alphabet) -> bool:
    """Instance check with the construction-specific witness bound.

    All helpers are determined by propagation except x'' = (a^i·b)^j, whose
    length is at most j·(i+1); the bound gets two letters of slack.
    """
    bound = max(2, j * (i + 1) + 2)
    return check_template(
        template, multiply_arguments(i, j, k), alphabet, bound,
        fresh_bounds={"xpp": bound},
    )


def encode_power_binary() -> FormulaTemplate:
    """Template for the power triple p = x·2^y over binary strings.

    The binary form of x is extended by y zeros; reading the result back as
    a number yields p exactly when the triple is in the relation.  Appending
    zeros to "0" would leave the canonical form, so the zero case is carried
    by a separate disjunct (0·2^y = 0 with no padding).
    """
    padded = FAnd(
        (
            _pred("strnum", _v("xs"), NatParam("x")),
            _eq(_cat("0", _v("z")), _cat(_v("z"), "0")),
            _pred("Length", _v("z"), LetterRun("0", "y")),
            _pred("strnum", _cat(_v("xs"), _v("z")), NatParam("p")),
        )
    )
    zero = FAnd(
        (
            _pred("strnum", _v("xs"), NatParam("x")),
            _eq(_v("xs"), _cat("0")),
            _pred("strnum", _v("xs"), NatParam("p")),
        )
    )
    return FormulaTemplate(
        ("p", "x", "y"),
        ("z", "xs"),
        FOr((padded, zero)),
        sorts=(("p", "nat"), ("x", "nat"), ("y", "nat")),
    )
