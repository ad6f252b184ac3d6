"""Alternating automata over lazily generated state spaces.

States are opaque hashable values; the transition function is arbitrary
code mapping (state, letter) to a positive boolean formula over states,
so the state space may be infinite as long as every finite-depth
reachable fragment is finite. Acceptance is the backward value recursion

    value(q, |w|) = F(q)
    value(q, i)   = eval(delta(q, w(i)), p -> value(p, i+1))

which coincides with the two-player acceptance game (Eve resolves ORs,
Adam resolves ANDs, Eve wins iff the play ends accepting); the test
suite checks that against an explicit unmemoized game-tree evaluation
on small instances.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable, Mapping, Optional, Union

from .errors import KindError, StatelabError
from .formulas import (
    FALSE,
    TRUE,
    And,
    Atom,
    Formula,
    Or,
    atoms,
    evaluate,
)
from .words import Alphabet

State = Hashable

KINDS = ("deterministic", "universal", "nondeterministic", "alternating")


class _Sink:
    """Absorbing pseudo-state produced by run_det for T/F transitions."""

    __slots__ = ("accepting",)

    def __init__(self, accepting: bool):
        self.accepting = accepting

    def __repr__(self) -> str:
        return "ACCEPT_SINK" if self.accepting else "REJECT_SINK"


ACCEPT_SINK = _Sink(True)
REJECT_SINK = _Sink(False)


class AlternatingAutomaton:
    """(Q, q0, delta, F) with delta: Q x A -> positive formula over Q.

    delta may be a callable or a {(state, letter): formula} mapping;
    accepting may be a callable or a set of states. `states` is optional:
    when given it declares the full (finite) state set, which is what
    enables determinization and serialization. Automata are immutable
    after construction; the only internal mutation is the transition
    memo cache, which never changes results.
    """

    def __init__(
        self,
        alphabet: Union[Alphabet, str],
        initial: State,
        delta: Union[Callable[[State, str], Formula], Mapping],
        accepting: Union[Callable[[State], bool], Iterable[State]],
        states: Optional[Iterable[State]] = None,
        name: str = "automaton",
    ):
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        self.initial = initial
        self.name = name
        if callable(delta):
            self._delta_fn = delta
        else:
            table = dict(delta)
            self._delta_fn = lambda q, a: _table_lookup(table, q, a)
        if callable(accepting):
            self._accepting_fn = accepting
        else:
            acc = frozenset(accepting)
            self._accepting_fn = lambda q: q in acc
        self.states = list(states) if states is not None else None
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"<AlternatingAutomaton {self.name!r} over {self.alphabet.letters!r}>"

    def delta(self, q: State, a: str) -> Formula:
        key = (q, a)
        f = self._cache.get(key)
        if f is None:
            f = self._delta_fn(q, a)
            if f is None:
                raise StatelabError(f"delta({q!r}, {a!r}) returned nothing")
            self._cache[key] = f
        return f

    def state_accepting(self, q: State) -> bool:
        if isinstance(q, _Sink):
            return q.accepting
        return bool(self._accepting_fn(q))

    def accepts(self, word: str) -> bool:
        """Membership via the memoized backward value recursion."""
        self.alphabet.check_word(word)
        # Forward pass: which states can matter at each position.
        layers = [{self.initial}]
        for ch in word:
            nxt = set()
            for q in layers[-1]:
                nxt.update(atoms(self.delta(q, ch)))
            layers.append(nxt)
        # Backward pass: value(q, i) for exactly those states.
        val = {q: self.state_accepting(q) for q in layers[-1]}
        for i in range(len(word) - 1, -1, -1):
            ch = word[i]
            lookup = val.__getitem__
            val = {q: evaluate(self.delta(q, ch), lookup) for q in layers[i]}
        return val[self.initial]

    def run_det(self, word: str) -> State:
        """Follow atomic transitions; raises KindError on And/Or.

        T/F transitions land in absorbing ACCEPT_SINK/REJECT_SINK
        pseudo-states so that accepts(w) == state_accepting(run_det(w))
        keeps holding for automata that use the constant sugar.
        """
        self.alphabet.check_word(word)
        q: State = self.initial
        for ch in word:
            if isinstance(q, _Sink):
                continue
            f = self.delta(q, ch)
            if f is TRUE:
                q = ACCEPT_SINK
            elif f is FALSE:
                q = REJECT_SINK
            elif isinstance(f, Atom):
                q = f.state
            else:
                raise KindError(
                    f"delta({q!r}, {ch!r}) is not atomic: got {f!r}"
                )
        return q

    def reachable(self, n: int) -> set:
        """States reachable through formula atoms by words of length <= n."""
        if n < 0:
            raise StatelabError("depth must be >= 0")
        seen = {self.initial}
        frontier = [self.initial]
        for _ in range(n):
            nxt = []
            for q in frontier:
                for a in self.alphabet:
                    for p in atoms(self.delta(q, a)):
                        if p not in seen:
                            seen.add(p)
                            nxt.append(p)
            if not nxt:
                break
            frontier = nxt
        return seen

    def reachable_counts(self, n_max: int, state_cap: Optional[int] = None) -> list:
        """[|reachable(0)|, ..., |reachable(n_max)|] in one incremental BFS."""
        if n_max < 0:
            raise StatelabError("depth must be >= 0")
        seen = {self.initial}
        frontier = [self.initial]
        counts = [1]
        for _ in range(n_max):
            nxt = []
            for q in frontier:
                for a in self.alphabet:
                    for p in atoms(self.delta(q, a)):
                        if p not in seen:
                            seen.add(p)
                            nxt.append(p)
            counts.append(len(seen))
            if state_cap is not None and len(seen) > state_cap:
                raise StatelabError(
                    f"reachable set exceeded the state cap ({len(seen)} > {state_cap})"
                )
            frontier = nxt
        return counts

    def kind(self, depth: int = 4) -> str:
        """Most restrictive kind fitting all transitions reachable to `depth`.

        Classification is syntactic: any And node anywhere loses
        "nondeterministic", any Or loses "universal", either loses
        "deterministic". Constants count as atomic (sink sugar).
        """
        has_and = has_or = False
        for q in self.reachable(depth):
            for a in self.alphabet:
                stack = [self.delta(q, a)]
                while stack:
                    f = stack.pop()
                    if isinstance(f, And):
                        has_and = True
                        stack.extend(f.children)
                    elif isinstance(f, Or):
                        has_or = True
                        stack.extend(f.children)
                if has_and and has_or:
                    return "alternating"
        if not has_and and not has_or:
            return "deterministic"
        if has_and:
            return "universal"
        return "nondeterministic"


def _table_lookup(table: Mapping, q: State, a: str) -> Formula:
    try:
        return table[(q, a)]
    except KeyError:
        raise StatelabError(f"no transition declared for ({q!r}, {a!r})") from None


def game_tree_accepts(A: AlternatingAutomaton, word: str) -> bool:
    """Explicit min/max play of the acceptance game, no memoization.

    Exponential; exists purely as an independent cross-check for
    accepts() on small automata and short words.
    """
    A.alphabet.check_word(word)
    n = len(word)

    def position(q: State, i: int) -> bool:
        if i == n:
            return A.state_accepting(q)
        return formula(A.delta(q, word[i]), i)

    def formula(f: Formula, i: int) -> bool:
        if f is TRUE:
            return True
        if f is FALSE:
            return False
        if isinstance(f, Atom):
            return position(f.state, i + 1)
        if isinstance(f, And):
            return all(formula(c, i) for c in f.children)
        if isinstance(f, Or):
            return any(formula(c, i) for c in f.children)
        raise StatelabError(f"not a formula: {f!r}")

    return position(A.initial, 0)


def determinize_finite(
    A: AlternatingAutomaton, state_cap: int = 1_000_000
) -> AlternatingAutomaton:
    """Language-equivalent deterministic automaton, testing oracle only.

    States of the result are monotone boolean functions over subsets of
    A's states, encoded as bitmask ints: bit X of g says whether the
    subset X satisfies g's formula. Reading a letter precomposes with
    the subset map X -> {q : X satisfies delta(q, a)}. The result has at
    most 2^(2^|Q|) states; only the reachable part is built.
    """
    if A.states is None:
        raise KindError(
            "determinization needs an automaton with a declared finite state list"
        )
    states = list(A.states)
    n = len(states)
    index = {q: i for i, q in enumerate(states)}
    nsub = 1 << n

    # sat[a][X] = bitmask of states whose transition formula on a is
    # satisfied when exactly the states in X are true.
    sat = {}
    for a in A.alphabet:
        col = []
        for X in range(nsub):
            mask = 0
            for i, q in enumerate(states):
                if evaluate(A.delta(q, a), lambda p: bool((X >> index[p]) & 1)):
                    mask |= 1 << i
            col.append(mask)
        sat[a] = col

    qi = index[A.initial]
    g0 = 0
    for X in range(nsub):
        if (X >> qi) & 1:
            g0 |= 1 << X

    subsets = range(nsub)

    def step(g: int, a: str) -> int:
        col = sat[a]
        h = 0
        for X in subsets:
            if (g >> col[X]) & 1:
                h |= 1 << X
        return h

    trans = {}
    discovered = [g0]
    seen = {g0}
    queue = deque([g0])
    while queue:
        g = queue.popleft()
        for a in A.alphabet:
            h = step(g, a)
            trans[(g, a)] = Atom(h)
            if h not in seen:
                if len(seen) >= state_cap:
                    raise StatelabError(
                        f"determinization exceeded the state cap ({state_cap})"
                    )
                seen.add(h)
                discovered.append(h)
                queue.append(h)

    f_mask = 0
    for q in states:
        if A.state_accepting(q):
            f_mask |= 1 << index[q]

    return AlternatingAutomaton(
        alphabet=A.alphabet,
        initial=g0,
        delta=trans,
        accepting=lambda g: bool((g >> f_mask) & 1),
        states=discovered,
        name=f"det({A.name})",
    )
