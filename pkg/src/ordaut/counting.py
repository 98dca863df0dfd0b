"""Exact word counting on the acyclic part of an ordinal automaton.

The DAG view keeps the states that can be reached from the initial state
without entering a cyclic component or a final state, and replaces every
such component by a fresh sink.  Words from the initial state to the sink
of a component are then exactly the words that *lead* to it: they enter
the component and never pass through a cyclic component on the way.

Counts are Python integers; the DAG has no path longer than its number of
states, so a count never exceeds ``2**n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .automaton import Condensation, Dfa, condense
from .errors import PreconditionError

__all__ = [
    "DagAutomaton",
    "build_dag_view",
    "count_accepted_greater",
    "count_accepted_greater_matrix",
    "lex_greatest_word_to",
]


@dataclass(frozen=True, eq=False)
class DagAutomaton:
    table: tuple[tuple[int, int], ...]
    initial: int
    sink_of: dict[int, int]
    origin: tuple[int, ...]
    # states in reverse topological order: every successor comes first
    order: tuple[int, ...] = field(repr=False)

    @property
    def state_count(self) -> int:
        return len(self.table)

    @property
    def sinks(self) -> tuple[int, ...]:
        return tuple(self.sink_of.values())

    @property
    def component_of_sink(self) -> dict[int, int]:
        return {t: c for c, t in self.sink_of.items()}

    def run(self, word: str) -> int:
        q = self.initial
        for ch in word:
            q = self.table[q][int(ch)]
            if q < 0:
                return -1
        return q

    def predecessors(self) -> list[list[int]]:
        preds = [[] for _ in self.table]
        for q, row in enumerate(self.table):
            for t in row:
                if t >= 0:
                    preds[t].append(q)
        return preds

    def ancestors(self, targets: Iterable[int]) -> set[int]:
        """States from which some target is reachable (targets included)."""
        preds = self._preds
        seen = set(targets)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for p in preds[q]:
                if p not in seen:
                    seen.add(p)
                    todo.append(p)
        return seen

    @property
    def _preds(self):
        cached = self.__dict__.get("_pred_cache")
        if cached is None:
            cached = self.predecessors()
            object.__setattr__(self, "_pred_cache", cached)
        return cached

    @property
    def _rank(self):
        cached = self.__dict__.get("_rank_cache")
        if cached is None:
            cached = {q: i for i, q in enumerate(self.order)}
            object.__setattr__(self, "_rank_cache", cached)
        return cached


def build_dag_view(a: Dfa, c: Condensation | None = None) -> DagAutomaton:
    """Acyclic view of an ordinal automaton whose initial state is trivial.

    ``sink_of`` maps each component (nontrivial, or a single final state)
    that is entered from the view to its sink.
    """
    if c is None:
        c = condense(a)
    comp = c.component

    def in_k(q):
        cq = comp[q]
        return c.nontrivial[cq] or c.final_singleton[cq]

    if in_k(a.initial):
        raise PreconditionError("the initial state lies in a cyclic component or is final")

    index = {a.initial: 0}
    states = [a.initial]
    i = 0
    while i < len(states):
        for t in a.table[states[i]]:
            if t >= 0 and not in_k(t) and t not in index:
                index[t] = len(states)
                states.append(t)
        i += 1
    sink_comps = sorted(
        {comp[t] for q in states for t in a.table[q] if t >= 0 and in_k(t)}
    )
    sink_of = {cc: len(states) + j for j, cc in enumerate(sink_comps)}
    table = []
    for q in states:
        row = []
        for t in a.table[q]:
            if t < 0:
                row.append(-1)
            elif in_k(t):
                row.append(sink_of[comp[t]])
            else:
                row.append(index[t])
        table.append(tuple(row))
    table.extend([(-1, -1)] * len(sink_comps))
    # sinks first, then view states in reverse topological order of the
    # underlying components (component ids are topological)
    inner = sorted(range(len(states)), key=lambda j: comp[states[j]], reverse=True)
    order = tuple(sorted(sink_of.values())) + tuple(inner)
    origin = tuple(states) + (-1,) * len(sink_comps)
    return DagAutomaton(tuple(table), 0, sink_of, origin, order)


def _branch_points(d: DagAutomaton, threshold: str) -> list[int]:
    """States ``q0 u1..u(l-1) 1`` for every position with ``u_l = 0``."""
    out = []
    q = d.initial
    for ch in threshold:
        if ch not in "01":
            raise ValueError(f"not a binary word: {threshold!r}")
        if ch == "0":
            b = d.table[q][1]
            if b >= 0:
                out.append(b)
        q = d.table[q][int(ch)]
        if q < 0:
            raise PreconditionError(f"threshold {threshold!r} leaves the automaton")
    if any(t >= 0 for t in d.table[q]):
        raise PreconditionError(f"threshold {threshold!r} does not end in a sink")
    return out


def _path_counts(d: DagAutomaton, targets: set[int]) -> dict[int, int]:
    relevant = d.ancestors(targets)
    rank = d._rank
    counts = {}
    for q in sorted(relevant, key=rank.__getitem__):
        if q in targets:
            counts[q] = 1
            continue
        total = 0
        for t in d.table[q]:
            if t >= 0:
                total += counts.get(t, 0)
        counts[q] = total
    return counts


def count_accepted_greater(
    d: DagAutomaton, targets: Iterable[int] | None = None, threshold: str | None = None
) -> int:
    """Number of words from the initial state to a target sink above ``threshold``.

    ``targets`` defaults to all sinks; ``threshold=None`` counts every such
    word.  A threshold must be a word leading to a sink.  A word greater
    than it branches off with a 1 where the threshold has a 0, so the count
    is a sum of path counts over those branch points.
    """
    targets = set(d.sinks if targets is None else targets)
    for t in targets:
        if not 0 <= t < d.state_count or any(x >= 0 for x in d.table[t]):
            raise PreconditionError(f"{t} is not a sink of the view")
    if threshold is None:
        starts = [d.initial]
    else:
        starts = _branch_points(d, threshold)
    if not targets or not starts:
        return 0
    counts = _path_counts(d, targets)
    return sum(counts.get(q, 0) for q in starts)


def count_accepted_greater_matrix(
    d: DagAutomaton,
    targets: Iterable[int] | None = None,
    threshold: str | None = None,
    min_tail: int = 0,
) -> int:
    """Transfer-matrix form of :func:`count_accepted_greater`.

    For each position ``l`` with ``u_l = 0`` evaluates
    ``e M_{u_1}..M_{u_{l-1}} M_1 (sum_{j=min_tail}^{n-l} (M_0+M_1)^j) f``
    in exact integer arithmetic.  ``min_tail=0`` counts the word
    ``u_1..u_{l-1} 1`` itself; ``min_tail=1`` omits it and undercounts.
    Cubic in the number of states; meant for cross-checking.
    """
    n = d.state_count
    targets = set(d.sinks if targets is None else targets)
    m = [np.zeros((n, n), dtype=object) for _ in range(2)]
    for q, row in enumerate(d.table):
        for a, t in enumerate(row):
            if t >= 0:
                m[a][q, t] = 1
    step = m[0] + m[1]
    f = np.array([1 if q in targets else 0 for q in range(n)], dtype=object)
    e = np.zeros(n, dtype=object)
    e[d.initial] = 1
    if threshold is None:
        total = e.dot(f)
        power = e
        for _ in range(1, n):
            power = power.dot(step)
            total += power.dot(f)
        return int(total)
    _branch_points(d, threshold)  # precondition check

    # tails[r] = sum_{j=min_tail}^{r} step^j f, built from the right
    tails = []
    acc = np.zeros(n, dtype=object)
    vec = f.copy()
    for j in range(n + 1):
        if j >= min_tail:
            acc = acc + vec
        tails.append(acc.copy())
        vec = step.dot(vec)
    total = 0
    row = e
    for l, ch in enumerate(threshold, start=1):
        if ch == "0" and n - l >= 0:
            total += row.dot(m[1]).dot(tails[n - l])
        row = row.dot(m[int(ch)])
    return int(total)


def lex_greatest_word_to(d: DagAutomaton, q: int) -> str:
    """Lexicographically greatest word leading from the initial state to ``q``.

    Greedy: take letter 1 whenever its successor can still reach ``q``.
    """
    if not 0 <= q < d.state_count:
        raise PreconditionError(f"no state {q} in the view")
    can = d.ancestors([q])
    if d.initial not in can:
        raise PreconditionError(f"state {q} is unreachable")
    word = []
    s = d.initial
    while s != q:
        t1 = d.table[s][1]
        if t1 >= 0 and t1 in can:
            word.append("1")
            s = t1
        else:
            word.append("0")
            s = d.table[s][0]
    return "".join(word)
