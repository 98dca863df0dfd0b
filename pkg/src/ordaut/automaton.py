"""Deterministic automata, normalization to complete prefix form, and SCCs.

States are the integers ``0 .. n-1``.  A transition table has one row per
state and one column per letter (in alphabet order); ``-1`` marks an
undefined transition.  :class:`Dfa` is the binary case, :class:`AlphaDfa`
carries an explicit ordered alphabet.

The lexicographic order used everywhere puts a proper prefix before its
extensions, otherwise compares the first differing letter.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Union

import numpy as np

from . import _kernels
from .errors import EmptyLanguageError, PreconditionError

__all__ = [
    "Dfa",
    "AlphaDfa",
    "Condensation",
    "trim",
    "is_trim",
    "is_prefix_accepting",
    "is_cpa",
    "binarize",
    "prefixize",
    "to_cpa",
    "normalize",
    "condense",
    "is_ordinal_automaton",
    "is_scattered_automaton",
    "enumerate_language",
    "iter_language",
]

BINARY = ("0", "1")


def _check_table(table, initial, finals, width):
    n = len(table)
    if n == 0:
        raise ValueError("an automaton needs at least one state")
    if not 0 <= initial < n:
        raise ValueError(f"initial state {initial} out of range")
    for q in finals:
        if not 0 <= q < n:
            raise ValueError(f"final state {q} out of range")
    for q, row in enumerate(table):
        if len(row) != width:
            raise ValueError(f"state {q}: expected {width} transitions, got {len(row)}")
        for t in row:
            if not -1 <= t < n:
                raise ValueError(f"state {q}: transition target {t} out of range")


class _TableMixin:
    table: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    @property
    def state_count(self) -> int:
        return len(self.table)

    def step(self, q: int, letter: int) -> int:
        return self.table[q][letter]

    def run(self, word) -> int:
        """State reached from the initial state, or -1."""
        q = self.initial
        for a in self._letters(word):
            q = self.table[q][a]
            if q < 0:
                return -1
        return q

    def accepts(self, word) -> bool:
        q = self.run(word)
        return q >= 0 and q in self.finals

    @cached_property
    def succ(self) -> np.ndarray:
        """Transition table as an ``(n, width)`` int64 array."""
        arr = np.array(self.table, dtype=np.int64)
        arr.setflags(write=False)
        return arr


@dataclass(frozen=True)
class Dfa(_TableMixin):
    """Partial DFA over the ordered alphabet ``0 < 1``."""

    table: tuple[tuple[int, int], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        table = tuple((int(a), int(b)) for a, b in self.table)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "finals", frozenset(int(q) for q in self.finals))
        _check_table(table, self.initial, self.finals, 2)

    alphabet = BINARY

    @classmethod
    def from_transitions(cls, n, transitions, initial, finals) -> Dfa:
        """Build from ``{(state, letter): target}`` with letters 0/1."""
        table = [[-1, -1] for _ in range(n)]
        for (q, a), t in transitions.items():
            table[q][int(a)] = t
        return cls(tuple(map(tuple, table)), initial, frozenset(finals))

    @staticmethod
    def _letters(word):
        for ch in word:
            if ch not in ("0", "1", 0, 1):
                raise ValueError(f"not a binary letter: {ch!r}")
            yield int(ch)

    def to_alpha(self) -> AlphaDfa:
        return AlphaDfa(BINARY, self.table, self.initial, self.finals)


@dataclass(frozen=True)
class AlphaDfa(_TableMixin):
    """Partial DFA whose alphabet is ordered as listed."""

    alphabet: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        alphabet = tuple(str(x) for x in self.alphabet)
        if not alphabet:
            raise ValueError("alphabet must be nonempty")
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet symbols must be distinct")
        table = tuple(tuple(int(t) for t in row) for row in self.table)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "finals", frozenset(int(q) for q in self.finals))
        _check_table(table, self.initial, self.finals, len(alphabet))

    def _letters(self, word):
        rank = {s: i for i, s in enumerate(self.alphabet)}
        for sym in word:
            if sym not in rank:
                raise ValueError(f"symbol {sym!r} not in alphabet")
            yield rank[sym]


Automaton = Union[Dfa, AlphaDfa]


def _rebuild(a, table, initial, finals):
    if isinstance(a, Dfa):
        return Dfa(tuple(map(tuple, table)), initial, frozenset(finals))
    return AlphaDfa(a.alphabet, tuple(map(tuple, table)), initial, frozenset(finals))


def _coreachable(table, finals):
    n = len(table)
    preds = [[] for _ in range(n)]
    for q, row in enumerate(table):
        for t in row:
            if t >= 0:
                preds[t].append(q)
    seen = set(finals)
    todo = list(finals)
    while todo:
        q = todo.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return seen


def _bfs_order(table, initial, allowed=None):
    order = [initial]
    index = {initial: 0}
    i = 0
    while i < len(order):
        for t in table[order[i]]:
            if t >= 0 and t not in index and (allowed is None or t in allowed):
                index[t] = len(order)
                order.append(t)
        i += 1
    return order, index


def trim(a: Automaton) -> Automaton:
    """Drop useless states and renumber breadth-first from the initial state.

    Raises :class:`EmptyLanguageError` when nothing is accepted.
    """
    useful = _coreachable(a.table, a.finals)
    if a.initial not in useful:
        raise EmptyLanguageError("the automaton accepts no word")
    order, index = _bfs_order(a.table, a.initial, useful)
    table = [
        [index[t] if t >= 0 and t in index else -1 for t in a.table[q]]
        for q in order
    ]
    finals = [index[q] for q in a.finals if q in index]
    return _rebuild(a, table, 0, finals)


def is_trim(a: Automaton) -> bool:
    reach, _ = _bfs_order(a.table, a.initial)
    return len(reach) == a.state_count and len(_coreachable(a.table, a.finals)) == a.state_count


def is_prefix_accepting(a: Automaton) -> bool:
    """For a trim automaton: no final state has an outgoing transition."""
    return all(t < 0 for q in a.finals for t in a.table[q])


def is_cpa(a: Automaton) -> bool:
    """Trim, finals are sinks, and every other state is complete."""
    if not is_trim(a):
        return False
    for q, row in enumerate(a.table):
        if q in a.finals:
            if any(t >= 0 for t in row):
                return False
        elif any(t < 0 for t in row):
            return False
    return True


def binarize(a: AlphaDfa) -> Dfa:
    """Re-encode each symbol as the fixed-width binary word of its rank.

    The width is ``ceil(log2(len(alphabet)))`` (at least 1), bits are
    big-endian, and each original transition becomes a path through fresh
    intermediate states shared per source state.  Fixed-width rank coding
    preserves the lexicographic order of the language.
    """
    if isinstance(a, Dfa):
        return a
    sigma = len(a.alphabet)
    width = max(1, (sigma - 1).bit_length())
    table = [[-1, -1] for _ in range(a.state_count)]
    for q, row in enumerate(a.table):
        nodes = {"": q}
        for rank, t in enumerate(row):
            if t < 0:
                continue
            code = format(rank, f"0{width}b")
            for depth in range(1, width):
                prefix = code[:depth]
                if prefix not in nodes:
                    nodes[prefix] = len(table)
                    table.append([-1, -1])
                    table[nodes[code[: depth - 1]]][int(code[depth - 1])] = nodes[prefix]
            table[nodes[code[:-1]]][int(code[-1])] = t
    return Dfa(tuple(map(tuple, table)), a.initial, a.finals)


def _fresh_symbol(alphabet):
    sym = "$"
    while sym in alphabet:
        sym += "$"
    return sym


def prefixize(a: AlphaDfa) -> AlphaDfa:
    """Append a new least symbol to every accepted word.

    The result accepts ``L . a0`` (a prefix language) whose lexicographic
    order is isomorphic to that of ``L``.  Old final states lose their
    status and gain an ``a0``-transition to a new final sink.
    """
    if isinstance(a, Dfa):
        a = a.to_alpha()
    new = _fresh_symbol(a.alphabet)
    sink = a.state_count
    table = [[sink if q in a.finals else -1, *row] for q, row in enumerate(a.table)]
    table.append([-1] * (len(a.alphabet) + 1))
    return AlphaDfa((new, *a.alphabet), tuple(map(tuple, table)), a.initial, frozenset({sink}))


def to_cpa(a: Dfa) -> Dfa:
    """Contract unary chains of a trim prefix automaton into a CPA.

    Follow from each state the forced path through states with exactly
    one outgoing transition.  If it ends at a final state the start state
    becomes final and loses its transitions; if it ends at a branching
    state the start state takes over that state's two transitions.
    """
    if not isinstance(a, Dfa):
        raise PreconditionError("to_cpa needs a binary automaton; binarize first")
    if not is_trim(a):
        raise PreconditionError("to_cpa needs a trim automaton")
    if not is_prefix_accepting(a):
        raise PreconditionError("to_cpa needs a prefix-accepting automaton")
    n = a.state_count
    end = [-1] * n
    for q in range(n):
        path = []
        p = q
        while end[p] < 0:
            row = a.table[p]
            defined = [t for t in row if t >= 0]
            if len(defined) != 1:
                end[p] = p
                break
            path.append(p)
            p = defined[0]
            if len(path) > n:  # pragma: no cover - impossible when trim
                raise PreconditionError("unary cycle in a trim automaton")
        for r in path:
            end[r] = end[p]
    table = []
    finals = set(a.finals)
    for q in range(n):
        e = end[q]
        if e in a.finals:
            table.append((-1, -1))
            finals.add(q)
        else:
            table.append(a.table[e])
    return trim(Dfa(tuple(table), a.initial, frozenset(finals)))


def normalize(a: Automaton) -> Dfa:
    """Trim, make prefix, binarize and contract to an order-isomorphic CPA.

    Raises :class:`EmptyLanguageError` for the empty language.
    """
    a = trim(a)
    if isinstance(a, AlphaDfa) or not is_prefix_accepting(a):
        if not is_prefix_accepting(a):
            a = prefixize(a)
        a = binarize(a)
    return to_cpa(trim(a))


@dataclass(frozen=True)
class Condensation:
    """SCC decomposition with nontriviality, heights and a topological order.

    Component ids are topological: every transition between two different
    components goes from a smaller id to a larger one.  ``height`` is the
    length of the longest chain of nontrivial components that starts at
    the component and follows reachability; trivial components record 0.
    """

    component: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    nontrivial: tuple[bool, ...]
    height: tuple[int, ...]
    final_singleton: tuple[bool, ...]

    @property
    def order(self) -> range:
        return range(len(self.members))

    @property
    def count(self) -> int:
        return len(self.members)

    def of(self, q: int) -> int:
        return self.component[q]


def condense(a: Automaton) -> Condensation:
    succ = a.succ
    comp, ncomp = _kernels.tarjan_scc(succ)
    ncomp = int(ncomp)
    nontrivial = _kernels.nontrivial_components(succ, comp, ncomp)
    height = _kernels.component_heights(succ, comp, ncomp, nontrivial)
    # Tarjan ids run against the edges; flip them into topological order.
    comp = (ncomp - 1) - comp
    nontrivial = nontrivial[::-1]
    height = height[::-1]
    members = [[] for _ in range(ncomp)]
    for q, c in enumerate(comp.tolist()):
        members[c].append(q)
    final_singleton = [
        not nontrivial[c] and len(members[c]) == 1 and members[c][0] in a.finals
        for c in range(ncomp)
    ]
    return Condensation(
        component=tuple(comp.tolist()),
        members=tuple(map(tuple, members)),
        nontrivial=tuple(bool(x) for x in nontrivial),
        height=tuple(int(x) for x in height),
        final_singleton=tuple(final_singleton),
    )


def _require_cpa(a, what):
    if not isinstance(a, Dfa) or not is_cpa(a):
        raise PreconditionError(f"{what} expects a complete prefix automaton over 0/1")


def _ordinal_condition(a: Dfa, c: Condensation) -> bool:
    comp = c.component
    for q, (t0, _) in enumerate(a.table):
        if c.nontrivial[comp[q]] and t0 >= 0 and comp[t0] == comp[q]:
            return False
    return True


def is_ordinal_automaton(a: Dfa, condensation: Condensation | None = None) -> bool:
    """A CPA whose cyclic components never keep the 0-successor inside."""
    _require_cpa(a, "is_ordinal_automaton")
    return _ordinal_condition(a, condensation or condense(a))


def is_scattered_automaton(a: Dfa) -> bool:
    """A CPA whose cyclic component states keep at most one letter inside."""
    _require_cpa(a, "is_scattered_automaton")
    c = condense(a)
    comp = c.component
    for q, row in enumerate(a.table):
        if not c.nontrivial[comp[q]]:
            continue
        inside = sum(1 for t in row if t >= 0 and comp[t] == comp[q])
        if inside > 1:
            return False
    return True


def iter_language(a: Automaton, max_len: int) -> Iterator[str | tuple[str, ...]]:
    """Accepted words of length at most ``max_len`` in lexicographic order."""
    binary = isinstance(a, Dfa)
    finals = a.finals
    stack = [(a.initial, ())]
    while stack:
        q, word = stack.pop()
        if q in finals:
            yield "".join(map(str, word)) if binary else tuple(a.alphabet[i] for i in word)
        if len(word) == max_len:
            continue
        row = a.table[q]
        for letter in range(len(row) - 1, -1, -1):
            t = row[letter]
            if t >= 0:
                stack.append((t, word + (letter,)))


def enumerate_language(a: Automaton, max_len: int) -> list:
    return list(iter_language(a, max_len))
