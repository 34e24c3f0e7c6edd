"""Pure-Python implementations of the enumeration kernels.

Selected by :mod:`wordeq.kernels` when the compiled extension is not
available.  Must stay observationally identical to ``_speedups``; the
parity tests compare both backends on shared workloads.

Kernel data model
-----------------
A compiled matrix is a list of disjuncts; a disjunct is a list of atoms
``(negated, lhs, rhs)`` where each side is a tuple of ints: values >= 0 are
variable indices, values < 0 encode terminal letters as ``-(code + 1)``.
A word tuple satisfies an atom when side images coincide XOR ``negated``,
a disjunct when all its atoms hold, the matrix when some disjunct holds.
"""

from __future__ import annotations

import itertools


def _words(letters: str, length: int):
    if length == 0:
        return [""]
    return ["".join(t) for t in itertools.product(letters, repeat=length)]


def _side(side, words, letters):
    out = []
    for s in side:
        out.append(words[s] if s >= 0 else letters[-s - 1])
    return "".join(out)


def _satisfies(matrix, words, letters) -> bool:
    for disjunct in matrix:
        for neg, lhs, rhs in disjunct:
            if (_side(lhs, words, letters) == _side(rhs, words, letters)) == neg:
                break
        else:
            return True
    return False


def scan_fixed_lengths(letters, lengths, matrix, want_satisfying):
    """First word tuple (lexicographic) whose matrix value equals the target.

    Enumerates all tuples with the given per-variable lengths over the
    ordered alphabet ``letters`` and returns the first tuple evaluating to
    ``want_satisfying``, or None when none does.
    """
    pools = [_words(letters, n) for n in lengths]
    for words in itertools.product(*pools):
        if _satisfies(matrix, words, letters) == want_satisfying:
            return tuple(words)
    return None


def lemma2_violations(su, sv, a, b):
    """Exhaustive check of the conjunction-pairing identity over image pairs.

    ``su[i]``/``sv[i]`` are the two sides' images of the i-th equation under
    a fixed substitution.  For every (i, j) the built word
    ``su[i] a su[j] su[i] b su[j]`` must equal its sv counterpart exactly
    when su[i] == sv[i] and su[j] == sv[j].  When both components hold the
    two built words are the same byte string by construction, so only the
    remaining combinations are compared.  Returns the number of violations
    (0 when the identity holds).
    """
    n = len(su)
    eq = [su[i] == sv[i] for i in range(n)]
    delta = [len(su[i]) - len(sv[i]) for i in range(n)]
    # combinations can only compare equal when total lengths match,
    # i.e. delta_i + delta_j == 0; bucket the j side by its delta.
    buckets: dict[int, list[int]] = {}
    for j in range(n):
        buckets.setdefault(delta[j], []).append(j)
    violations = 0
    for i in range(n):
        for j in buckets.get(-delta[i], ()):
            if eq[i] and eq[j]:
                continue
            lhs = su[i] + a + su[j] + su[i] + b + su[j]
            rhs = sv[i] + a + sv[j] + sv[i] + b + sv[j]
            if lhs == rhs:
                violations += 1
    return violations
