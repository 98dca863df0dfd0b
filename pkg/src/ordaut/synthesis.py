"""From ordinals to automata, and how small those automata can be.

The constructions build the tower automaton for omega^n, the finite block
automata with a prescribed number of words, and their ordered sum.  The
minimal-size side computes ``f`` (fewest states of an acyclic CPA whose
final states, in order, collect prescribed numbers of words) by exhaustive
search and relates it to shortest addition chains.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .automaton import Dfa, trim
from .cnf import Cnf
from .errors import PreconditionError, SearchBoundExceeded
from .search import find_ordered_finals

__all__ = [
    "DEFAULT_MAX_STATES",
    "AdditionChain",
    "FSearchResult",
    "build_power_automaton",
    "build_finite_block",
    "ordered_sum",
    "synthesize",
    "g_size",
    "size_upper_bound",
    "f_bruteforce",
    "shortest_addition_chain",
    "min_size",
]

DEFAULT_MAX_STATES = 9


class _Builder:
    """Mutable table used while gluing automata together."""

    def __init__(self):
        self.table: list[list[int]] = []

    def new(self) -> int:
        self.table.append([-1, -1])
        return len(self.table) - 1

    def embed(self, a: Dfa) -> list[int]:
        ids = [self.new() for _ in range(a.state_count)]
        for q, row in enumerate(a.table):
            self.table[ids[q]] = [ids[t] if t >= 0 else -1 for t in row]
        return ids


def build_power_automaton(n: int) -> Dfa:
    """Tower s_n -> ... -> s_0 with 1-loops; state i is s_i, initial s_n, final s_0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = [(-1, -1)] + [(i - 1, i) for i in range(1, n + 1)]
    return Dfa(tuple(table), n, frozenset({0}))


def build_finite_block(m: int) -> Dfa:
    """Acyclic CPA with one final state, exactly ``m`` words and ``g_size(m)`` states."""
    if m < 1:
        raise PreconditionError("a block needs at least one word")
    # bits of m below the leading one, most significant first
    b = _Builder()
    final = b.new()
    init = final
    for bit in bin(m)[3:]:
        if bit == "0":
            s0 = b.new()
            b.table[s0] = [init, init]
            init = s0
        else:
            s1 = b.new()
            b.table[s1] = [init, init]
            s0 = b.new()
            b.table[s0] = [s1, final]
            init = s0
    return trim(Dfa(tuple(map(tuple, b.table)), init, frozenset({final})))


def ordered_sum(blocks: Sequence[Dfa]) -> Dfa:
    """Glue CPAs so their languages follow each other lexicographically.

    For blocks B_0..B_k adds glue states s_0..s_{k-1} with s_j 0 -> B_j,
    s_j 1 -> s_{j+1}, and s_{k-1} 1 -> B_k.  State ids: glue states first,
    then the blocks in order.
    """
    blocks = list(blocks)
    if not blocks:
        raise PreconditionError("ordered_sum needs at least one block")
    k = len(blocks) - 1
    b = _Builder()
    glue = [b.new() for _ in range(k)]
    ids = [b.embed(x) for x in blocks]
    starts = [ids[i][x.initial] for i, x in enumerate(blocks)]
    for j in range(k):
        b.table[glue[j]][0] = starts[j]
        b.table[glue[j]][1] = glue[j + 1] if j + 1 < k else starts[k]
    finals = {ids[i][q] for i, x in enumerate(blocks) for q in x.finals}
    initial = glue[0] if k else starts[0]
    return Dfa(tuple(map(tuple, b.table)), initial, frozenset(finals))


def synthesize(alpha: Cnf) -> Dfa:
    """An ordinal automaton with ``size_upper_bound(alpha)`` states for ``alpha``.

    The finite block for each coefficient is placed in an ordered sum, and
    the final state of block ``i`` is merged with tower state ``s_{n_i}``.
    """
    if not alpha.terms:
        raise PreconditionError("0 is not represented by any automaton")
    n0, m0 = alpha.terms[0]
    if len(alpha.terms) == 1 and m0 == 1:
        return trim(build_power_automaton(n0))
    blocks = [build_finite_block(m) for _, m in alpha.terms]
    total = ordered_sum(blocks)
    # the blocks' finals, block by block (each block has exactly one)
    offset = len(alpha.terms) - 1
    block_finals = []
    for x in blocks:
        (f,) = x.finals
        block_finals.append(offset + f)
        offset += x.state_count

    table = [list(row) for row in total.table]
    tower = {}
    for (e, _), c in zip(alpha.terms, block_finals):
        tower[e] = c
    for i in range(n0 + 1):
        if i not in tower:
            tower[i] = len(table)
            table.append([-1, -1])
    for i in range(1, n0 + 1):
        table[tower[i]] = [tower[i - 1], tower[i]]
    table[tower[0]] = [-1, -1]
    return trim(Dfa(tuple(map(tuple, table)), total.initial, frozenset({tower[0]})))


def g_size(m: int) -> int:
    """States of the finite block for ``m``: ``floor(log2 m) + popcount(m)``."""
    if m < 1:
        raise PreconditionError("g is defined for positive integers")
    size = 1
    while m > 1:
        size += 1 + (m & 1)
        m >>= 1
    return size


def size_upper_bound(alpha: Cnf) -> int:
    if not alpha.terms:
        raise PreconditionError("0 is not represented by any automaton")
    n0, m0 = alpha.terms[0]
    if len(alpha.terms) == 1 and m0 == 1:
        return n0 + 1
    return n0 + sum(g_size(m) for _, m in alpha.terms)


class FSearchResult(NamedTuple):
    states: int
    witness: Dfa
    # witness final states listed by label c_0, ..., c_k
    final_order: tuple[int, ...]


def f_bruteforce(counts: Sequence[int] | int, max_states: int = DEFAULT_MAX_STATES) -> FSearchResult:
    """Fewest states of an acyclic CPA realizing the ordered word counts.

    The automaton must have final states ``c_0..c_k``; ``counts[i]`` words
    reach ``c_i`` and are followed lexicographically only by words reaching
    some ``c_j`` with ``j >= i``.  Sizes are tried in increasing order; the
    first canonical witness is returned.
    """
    if isinstance(counts, int):
        counts = (counts,)
    counts = tuple(int(m) for m in counts)
    if not counts or any(m < 1 for m in counts):
        raise PreconditionError("f needs a nonempty sequence of positive integers")
    k = len(counts) - 1
    # an acyclic s-state CPA accepts at most 2**(s-1) words
    lower = max(k + 1, (sum(counts) - 1).bit_length() + 1)
    for s in range(lower, max_states + 1):
        found = find_ordered_finals(s, counts)
        if found is not None:
            return FSearchResult(s, *found)
    raise SearchBoundExceeded(f"f{counts} needs more than {max_states} states")


class AdditionChain(tuple):
    """Strictly increasing chain ``1 = a_1 < ... < a_k = n`` of pairwise sums."""

    def __new__(cls, elements):
        elements = tuple(int(x) for x in elements)
        if not elements or elements[0] != 1:
            raise ValueError("an addition chain starts at 1")
        for i in range(1, len(elements)):
            x = elements[i]
            if x <= elements[i - 1]:
                raise ValueError("addition chain must be strictly increasing")
            earlier = set(elements[:i])
            if not any(x - y in earlier for y in earlier):
                raise ValueError(f"{x} is not a sum of two earlier elements")
        return super().__new__(cls, elements)

    @property
    def target(self) -> int:
        return self[-1]


def shortest_addition_chain(n: int) -> AdditionChain:
    """Shortest chain for ``n`` by iterative deepening, lexicographically least."""
    if n < 1:
        raise PreconditionError("n must be positive")
    if n == 1:
        return AdditionChain((1,))
    chain = [1]

    def extend(limit):
        last = chain[-1]
        if last == n:
            return True
        room = limit - len(chain)
        if room <= 0 or last << room < n:
            return False
        sums = sorted({x + y for i, x in enumerate(chain) for y in chain[i:] if last < x + y <= n})
        for v in sums:
            chain.append(v)
            if extend(limit):
                return True
            chain.pop()
        return False

    limit = math.ceil(math.log2(n)) + 1
    while not extend(limit):
        limit += 1
    return AdditionChain(chain)


def min_size(alpha: Cnf, max_states: int = DEFAULT_MAX_STATES) -> int:
    """Fewest states of an ordinal automaton for ``alpha``: ``n_0 - k + f(m_0..m_k)``."""
    if not alpha.terms:
        raise PreconditionError("0 is not represented by any automaton")
    n0 = alpha.terms[0][0]
    k = len(alpha.terms) - 1
    return n0 - k + f_bruteforce(alpha.coefficients, max_states).states
