import itertools
import sys
import random

import pytest

from ordaut import Dfa, enumerate_language


def example_automaton():
    """The 6-state automaton for w^3*2 + w.

    States: q0=0, q1=1, s0=2, s1=3, s2=4, s3=5.
    """
    return Dfa.from_transitions(
        6,
        {
            (0, 0): 1, (0, 1): 3,
            (1, 0): 5, (1, 1): 5,
            (3, 0): 2, (3, 1): 3,
            (4, 0): 3, (4, 1): 4,
            (5, 0): 4, (5, 1): 5,
        },
        0,
        {2},
    )


@pytest.fixture
def example():
    return example_automaton()


@pytest.fixture
def rng():
    return random.Random(20240611)


def lex_sorted(words):
    return sorted(words)


def brute_language(a, max_len):
    """All accepted words up to ``max_len`` by trying every binary string."""
    out = []
    for n in range(max_len + 1):
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            if a.accepts(w):
                out.append(w)
    return sorted(out)


def finite_order_type(a):
    """Number of accepted words of an acyclic automaton."""
    return len(enumerate_language(a, a.state_count + 1))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
