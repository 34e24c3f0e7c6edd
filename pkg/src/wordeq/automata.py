"""Deterministic finite automata and the periodic-intersection characterization.

For a DFA M and words α, β with αβ nonempty, membership of (αβ)^s·α in
L(M) as a function of s >= 1 is eventually periodic: it is captured by a
finite exception set S, a cycle length q and a residue set P such that
(αβ)^s·α is accepted iff s ∈ S or s = μq + p for some μ >= 1 and p ∈ P.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Alphabet, WordEqError


@dataclass(frozen=True)
class Dfa:
    """Total DFA over a declared alphabet; states are 0..state_count-1."""

    state_count: int
    initial: int
    accepting: frozenset[int]
    transitions: tuple  # ((state, letter, state), ...)
    alphabet: Alphabet

    _table: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not (0 <= self.initial < self.state_count):
            raise WordEqError("initial state out of range")
        for s in self.accepting:
            if not (0 <= s < self.state_count):
                raise WordEqError(f"accepting state {s} out of range")
        table = {}
        for src, letter, dst in self.transitions:
            if letter not in self.alphabet:
                raise WordEqError(f"transition letter {letter!r} not in alphabet")
            if not (0 <= src < self.state_count and 0 <= dst < self.state_count):
                raise WordEqError("transition state out of range")
            if (src, letter) in table:
                raise WordEqError(f"duplicate transition from ({src}, {letter!r})")
            table[(src, letter)] = dst
        for s in range(self.state_count):
            for c in self.alphabet:
                if (s, c) not in table:
                    raise WordEqError(f"missing transition ({s}, {c!r}); DFA must be total")
        object.__setattr__(self, "_table", table)

    def step(self, state: int, letter: str) -> int:
        try:
            return self._table[(state, letter)]
        except KeyError:
            raise WordEqError(f"letter {letter!r} not in DFA alphabet") from None

    def run(self, word: str, start: int | None = None) -> int:
        state = self.initial if start is None else start
        for c in word:
            state = self.step(state, c)
        return state

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting


def accepts(m: Dfa, word: str) -> bool:
    """Standard DFA acceptance; raises on letters outside the alphabet."""
    return m.accepts(word)


def dfa_from_partial(
    state_count: int,
    initial: int,
    accepting,
    transitions,
    alphabet: Alphabet,
) -> Dfa:
    """Build a total DFA, completing a partial table with a rejecting sink."""
    table = {}
    for src, letter, dst in transitions:
        table[(src, letter)] = dst
    missing = [
        (s, c)
        for s in range(state_count)
        for c in alphabet
        if (s, c) not in table
    ]
    n = state_count
    if missing:
        sink = n
        n += 1
        for s, c in missing:
            table[(s, c)] = sink
        for c in alphabet:
            table[(sink, c)] = sink
    return Dfa(
        n,
        initial,
        frozenset(accepting),
        tuple((s, c, d) for (s, c), d in sorted(table.items())),
        alphabet,
    )


def universal_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(1, 0, frozenset({0}), tuple((0, c, 0) for c in alphabet), alphabet)


def empty_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(1, 0, frozenset(), tuple((0, c, 0) for c in alphabet), alphabet)


# ---------------------------------------------------------------------------
# Periodic intersection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicIntersectionSpec:
    """(q, P, S) description of { s >= 1 : (αβ)^s·α ∈ L(M) }.

    S lists the accepted indices before the cycle entry point; P holds the
    residues for the cyclic part, with the convention that μ ranges over
    μ >= 1 in s = μq + p.  All members of P and S are at most the DFA size.
    """

    q: int
    p_set: frozenset[int]
    s_set: frozenset[int]
    n: int

    def __post_init__(self):
        if self.p_set and self.q < 1:
            raise WordEqError("cycle length must be positive when P is nonempty")
        for x in self.p_set | self.s_set:
            if x > self.n:
                raise WordEqError("P and S members must not exceed the state count")

    def contains(self, s: int) -> bool:
        if s in self.s_set:
            return True
        for p in self.p_set:
            if s > p and (s - p) % self.q == 0 and (s - p) // self.q >= 1:
                return True
        return False


def periodic_intersection(m: Dfa, alpha: str, beta: str) -> PeriodicIntersectionSpec:
    """Compute (q, P, S) by tracking the state after each (αβ)^i·α.

    Walking s_i = state after (αβ)^i, a repeat s_c = s_(c+q) appears within
    the first n+1 indices; acceptance of (αβ)^i·α is then periodic for
    i > p0 = max(c, 1, q-1) (the q-1 floor keeps residues non-negative).
    S collects accepted indices i <= p0 and P the residues j - q for
    accepted j in the window (p0, p0 + q].
    """
    if not alpha + beta:
        raise WordEqError("αβ must be nonempty")
    m.alphabet.check_word(alpha)
    m.alphabet.check_word(beta)
    n = m.state_count
    loop = alpha + beta

    states = [m.initial]  # states[i] = state after (αβ)^i
    seen = {m.initial: 0}
    cycle_start = cycle_len = None
    while True:
        nxt = m.run(loop, states[-1])
        if nxt in seen:
            cycle_start = seen[nxt]
            cycle_len = len(states) - cycle_start
            break
        seen[nxt] = len(states)
        states.append(nxt)

    def accepted(i: int) -> bool:
        # state after (αβ)^i·α; extend the state sequence cyclically
        if i < len(states):
            base = states[i]
        else:
            base = states[cycle_start + (i - cycle_start) % cycle_len]
        return m.run(alpha, base) in m.accepting

    p0 = max(cycle_start, 1, cycle_len - 1)
    s_set = frozenset(i for i in range(1, p0 + 1) if accepted(i))
    p_set = frozenset(j - cycle_len for j in range(p0 + 1, p0 + cycle_len + 1) if accepted(j))
    return PeriodicIntersectionSpec(cycle_len, p_set, s_set, n)
