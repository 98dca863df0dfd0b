import random

import pytest
from hypothesis import given, settings, strategies as st

from ordaut import (
    AlphaDfa,
    Dfa,
    EmptyLanguageError,
    ParseError,
    PreconditionError,
    binarize,
    build_finite_block,
    build_power_automaton,
    condense,
    enumerate_language,
    format_automaton,
    is_cpa,
    is_ordinal_automaton,
    is_prefix_accepting,
    is_scattered_automaton,
    is_trim,
    normalize,
    parse_automaton,
    prefixize,
    to_cpa,
    trim,
)
from ordaut.gen import random_acyclic_cpa, random_ordinal_automaton

from conftest import brute_language


def dfa(n, edges, initial, finals):
    return Dfa.from_transitions(n, edges, initial, finals)


class TestTrim:
    def test_drops_unreachable(self):
        a = dfa(3, {(0, 0): 1, (2, 1): 1}, 0, {1})
        t = trim(a)
        assert t == dfa(2, {(0, 0): 1}, 0, {1})

    def test_already_trim_is_canonical_renumbering(self):
        a = dfa(3, {(2, 0): 0, (2, 1): 1}, 2, {0, 1})
        assert trim(a) == dfa(3, {(0, 0): 1, (0, 1): 2}, 0, {1, 2})
        assert trim(trim(a)) == trim(a)

    def test_drops_dead_state_and_its_edges(self):
        a = dfa(3, {(0, 0): 1, (0, 1): 2}, 0, {1})
        assert trim(a) == dfa(2, {(0, 0): 1}, 0, {1})

    def test_empty_language(self):
        with pytest.raises(EmptyLanguageError):
            trim(dfa(2, {(0, 0): 1}, 0, set()))

    def test_bfs_order_letter_zero_first(self):
        a = dfa(4, {(3, 1): 1, (3, 0): 2, (1, 0): 0, (2, 0): 0}, 3, {0})
        t = trim(a)
        # 3 -> 0, its 0-successor 2 -> 1, its 1-successor 1 -> 2
        assert t.table == ((1, 2), (3, -1), (3, -1), (-1, -1))

    def test_preserves_language(self, rng):
        for _ in range(50):
            n = rng.randint(1, 6)
            edges = {(q, a): rng.randrange(n) for q in range(n) for a in (0, 1) if rng.random() < 0.7}
            a = dfa(n, edges, 0, {q for q in range(n) if rng.random() < 0.4})
            try:
                t = trim(a)
            except EmptyLanguageError:
                assert brute_language(a, 7) == []
                continue
            assert is_trim(t)
            assert brute_language(t, 7) == brute_language(a, 7)


class TestPredicates:
    def test_prefix_accepting(self):
        assert is_prefix_accepting(build_power_automaton(3))
        assert not is_prefix_accepting(dfa(2, {(0, 1): 1}, 0, {0, 1}))
        assert is_prefix_accepting(dfa(1, {}, 0, {0}))

    def test_cpa(self):
        assert is_cpa(build_power_automaton(4))
        assert is_cpa(build_finite_block(5))
        assert not is_cpa(dfa(2, {(0, 0): 1}, 0, {1}))

    def test_ordinal(self, example):
        for n in range(6):
            assert is_ordinal_automaton(build_power_automaton(n))
        assert is_ordinal_automaton(example)
        assert not is_ordinal_automaton(dfa(2, {(0, 0): 0, (0, 1): 1}, 0, {1}))

    def test_scattered(self, example):
        assert is_scattered_automaton(example)
        both_inside = dfa(3, {(0, 0): 1, (0, 1): 1, (1, 0): 0, (1, 1): 2}, 0, {2})
        assert not is_scattered_automaton(both_inside)
        one_inside = dfa(3, {(0, 0): 1, (0, 1): 2, (1, 1): 0, (1, 0): 2}, 0, {2})
        assert is_scattered_automaton(one_inside)
        assert not is_ordinal_automaton(one_inside)

    def test_non_cpa_rejected(self):
        with pytest.raises(PreconditionError):
            is_ordinal_automaton(dfa(2, {(0, 0): 1}, 0, {1}))
        with pytest.raises(PreconditionError):
            is_scattered_automaton(dfa(2, {(0, 0): 1}, 0, {1}))

    def test_ordinal_implies_scattered(self, rng):
        for _ in range(100):
            a = random_ordinal_automaton(rng, 20)
            assert is_ordinal_automaton(a)
            assert is_scattered_automaton(a)

    def test_ordinal_components_are_one_cycles(self, rng):
        for _ in range(100):
            a = random_ordinal_automaton(rng, 25)
            c = condense(a)
            for cid, members in enumerate(c.members):
                if not c.nontrivial[cid]:
                    continue
                q = members[0]
                seen = [q]
                while a.table[seen[-1]][1] != q:
                    seen.append(a.table[seen[-1]][1])
                assert sorted(seen) == sorted(members)


class TestBinarize:
    def test_binary_alphabet_identity(self):
        a = AlphaDfa(("x", "y"), ((1, 2), (-1, -1), (-1, -1)), 0, {1, 2})
        assert binarize(a).table == a.table

    def test_rank_coding(self):
        a = AlphaDfa(("a", "b", "c"), ((1, 1, 1), (-1, -1, -1)), 0, {1})
        assert enumerate_language(binarize(a), 4) == ["00", "01", "10"]

    def test_one_state_loop_language(self):
        # {a, b, c} via a loop state that is also final
        a = AlphaDfa(("a", "b", "c"), ((1, 1, 1), (-1, -1, -1)), 0, {1})
        b = binarize(a)
        assert len(enumerate_language(b, 4)) == len(enumerate_language(a, 2)) == 3

    def test_preserves_order(self, rng):
        for _ in range(40):
            sigma = rng.randint(1, 5)
            alphabet = tuple("abcde"[:sigma])
            n = rng.randint(1, 4)
            table = tuple(tuple(rng.randrange(n) if rng.random() < 0.5 else -1 for _ in range(sigma)) for _ in range(n))
            a = AlphaDfa(alphabet, table, 0, {q for q in range(n) if rng.random() < 0.5} or {0})
            b = binarize(a)
            width = max(1, (sigma - 1).bit_length())
            words = enumerate_language(a, 3)
            code = {s: format(i, f"0{width}b") for i, s in enumerate(alphabet)}
            encoded = ["".join(code[s] for s in w) for w in words]
            assert enumerate_language(b, 3 * width) == encoded


class TestPrefixize:
    def test_epsilon_and_one(self):
        a = dfa(2, {(0, 1): 1}, 0, {0, 1})
        p = prefixize(a)
        assert p.alphabet == ("$", "0", "1")
        assert enumerate_language(p, 3) == [("$",), ("1", "$")]
        assert is_prefix_accepting(p)

    def test_single_word(self):
        p = prefixize(dfa(2, {(0, 0): 1}, 0, {1}))
        assert enumerate_language(p, 3) == [("0", "$")]

    def test_prefix_input_stays_prefix(self):
        p = prefixize(build_power_automaton(1).to_alpha())
        assert is_prefix_accepting(p)

    def test_fresh_symbol_avoids_clash(self):
        a = AlphaDfa(("$", "x"), ((1, -1), (-1, -1)), 0, {0, 1})
        assert prefixize(a).alphabet == ("$$", "$", "x")


class TestToCpa:
    def test_identity_on_cpa(self, example):
        t = trim(example)
        assert to_cpa(t) == t

    def test_chain_to_final(self):
        # a=0, b=1, c=2, f=3
        a = dfa(4, {(0, 0): 1, (0, 1): 2, (1, 0): 3, (1, 1): 3, (2, 0): 3}, 0, {3})
        assert enumerate_language(a, 4) == ["00", "01", "10"]
        c = to_cpa(a)
        assert is_cpa(c)
        assert enumerate_language(c, 4) == ["00", "01", "1"]
        # c turns final; f stays because b still uses it
        assert c.state_count == 4 and len(c.finals) == 2

    def test_chain_to_branching(self):
        # a=0 -0-> b=1 -1-> c=2 -0-> d=3 branching to f=4; a -1-> f
        a = dfa(5, {(0, 0): 1, (0, 1): 4, (1, 1): 2, (2, 0): 3, (3, 0): 4, (3, 1): 4}, 0, {4})
        assert enumerate_language(a, 5) == ["0100", "0101", "1"]
        c = to_cpa(a)
        assert is_cpa(c)
        assert enumerate_language(c, 5) == ["00", "01", "1"]

    def test_rejects_non_prefix(self):
        with pytest.raises(PreconditionError):
            to_cpa(dfa(2, {(0, 1): 1}, 0, {0, 1}))

    def test_single_word(self):
        c = to_cpa(dfa(3, {(0, 1): 1, (1, 0): 2}, 0, {2}))
        assert c == dfa(1, {}, 0, {0})


def _random_prefix_acyclic(rng, n):
    """Random trim prefix DFA without cycles (states point to higher ids)."""
    table = []
    for q in range(n - 1):
        row = [rng.randrange(q + 1, n) if rng.random() < 0.6 else -1 for _ in range(2)]
        if row == [-1, -1]:
            row[rng.randrange(2)] = rng.randrange(q + 1, n)
        table.append(tuple(row))
    table.append((-1, -1))
    finals = {n - 1} | {q for q in range(n - 1) if table[q] == (-1, -1)}
    return trim(Dfa(tuple(table), 0, frozenset(finals)))


class TestOrderPreservation:
    def test_to_cpa_preserves_word_count(self, rng):
        for _ in range(100):
            a = _random_prefix_acyclic(rng, rng.randint(1, 8))
            c = to_cpa(a)
            assert is_cpa(c)
            assert len(enumerate_language(c, 10)) == len(enumerate_language(a, 10))

    def test_normalize_preserves_word_count(self, rng):
        for _ in range(100):
            n = rng.randint(1, 6)
            table = tuple((rng.randrange(q + 1, n + 1) if rng.random() < 0.5 else -1,
                           rng.randrange(q + 1, n + 1) if rng.random() < 0.5 else -1) for q in range(n))
            table = tuple(tuple(t if t < n else -1 for t in row) for row in table)
            a = Dfa(table, 0, frozenset(q for q in range(n) if rng.random() < 0.5))
            try:
                c = normalize(a)
            except EmptyLanguageError:
                assert enumerate_language(a, n) == []
                continue
            assert is_cpa(c)
            assert len(enumerate_language(c, 4 * n + 4)) == len(enumerate_language(a, n))

    def test_normalize_alpha_finite(self, rng):
        for _ in range(60):
            sigma = rng.randint(1, 4)
            n = rng.randint(1, 5)
            table = tuple(tuple(rng.randrange(q + 1, n + 1) if rng.random() < 0.5 else -1 for _ in range(sigma)) for q in range(n))
            table = tuple(tuple(t if t < n else -1 for t in row) for row in table)
            a = AlphaDfa(tuple("abcd"[:sigma]), table, 0, frozenset(q for q in range(n) if rng.random() < 0.5))
            try:
                c = normalize(a)
            except EmptyLanguageError:
                continue
            assert len(enumerate_language(c, 6 * n + 6)) == len(enumerate_language(a, n))

    def test_normalize_ordinal_of_omega_language(self):
        # 1*0 over a non-prefix presentation: words 1^k with a final loop state
        a = dfa(1, {(0, 1): 0}, 0, {0})
        c = normalize(a)
        # {eps, 1, 11, ...} is ordered like omega
        assert is_ordinal_automaton(c)


class TestCondense:
    def test_power_tower(self):
        a = build_power_automaton(3)
        c = condense(a)
        heights = {a_state: c.height[c.component[a_state]] for a_state in range(4)}
        assert heights == {0: 0, 1: 1, 2: 2, 3: 3}
        assert [c.nontrivial[c.component[q]] for q in range(4)] == [False, True, True, True]
        assert c.final_singleton[c.component[0]]

    def test_acyclic_all_trivial(self):
        c = condense(build_finite_block(11))
        assert not any(c.nontrivial)
        assert set(c.height) == {0}

    def test_example(self, example):
        c = condense(example)
        h = [c.height[c.component[q]] for q in range(6)]
        assert h == [0, 0, 0, 1, 2, 3]
        assert [c.nontrivial[c.component[q]] for q in range(6)] == [False, False, False, True, True, True]

    def test_topological_ids(self, rng):
        for _ in range(50):
            a = random_ordinal_automaton(rng, 30)
            c = condense(a)
            for q, row in enumerate(a.table):
                for t in row:
                    if t >= 0:
                        assert c.component[q] <= c.component[t]

    def test_height_monotone_and_positive(self, rng):
        for _ in range(50):
            a = random_ordinal_automaton(rng, 30)
            c = condense(a)
            comp = c.component
            for q, row in enumerate(a.table):
                for t in row:
                    if t >= 0 and comp[t] != comp[q] and c.nontrivial[comp[q]]:
                        assert c.height[comp[q]] >= 1
                        if c.nontrivial[comp[t]]:
                            assert c.height[comp[q]] > c.height[comp[t]]

    def test_heights_match_longest_chain_bruteforce(self, rng):
        for _ in range(30):
            a = random_ordinal_automaton(rng, 15)
            c = condense(a)
            n = a.state_count
            reach = [{q} for q in range(n)]
            for _ in range(n):
                for q in range(n):
                    for t in a.table[q]:
                        if t >= 0:
                            reach[q] |= reach[t]
            nontriv = [cid for cid in range(c.count) if c.nontrivial[cid]]
            below = {x: {y for y in nontriv if y != x and c.members[y][0] in reach[c.members[x][0]]} for x in nontriv}

            def longest(x):
                return 1 + max((longest(y) for y in below[x]), default=0)

            for x in nontriv:
                assert c.height[x] == longest(x)


class TestEnumerate:
    def test_power_one(self):
        assert enumerate_language(build_power_automaton(1), 3) == ["0", "10", "110"]

    def test_empty_finals(self):
        assert enumerate_language(dfa(1, {}, 0, set()), 5) == []

    def test_block_three(self):
        assert enumerate_language(build_finite_block(3), 2) == ["00", "01", "1"]

    def test_matches_bruteforce(self, rng):
        for _ in range(30):
            a = random_ordinal_automaton(rng, 10)
            assert enumerate_language(a, 6) == brute_language(a, 6)


class TestFileFormat:
    def test_round_trip(self, example):
        text = format_automaton(example)
        assert parse_automaton(text) == example

    def test_alpha_round_trip(self):
        a = AlphaDfa(("a", "b", "c"), ((1, -1, 1), (-1, -1, -1)), 0, {1})
        b = parse_automaton(format_automaton(a))
        assert isinstance(b, AlphaDfa) and b == a

    def test_comments_and_order(self):
        text = """
        # a comment
        ordaut v1
        0 1 1   # trailing comment
        final 1
        states 2
        initial 0
        0 0 1
        """
        a = parse_automaton(text)
        assert a == dfa(2, {(0, 0): 1, (0, 1): 1}, 0, {1})

    def test_alphabet_after_transitions(self):
        a = parse_automaton("ordaut v1\nstates 2\ninitial 0\nfinal 1\n0 b 1\nalphabet a b\n")
        assert a.alphabet == ("a", "b") and a.table[0] == (-1, 1)

    @pytest.mark.parametrize(
        "text, msg",
        [
            ("states 1\ninitial 0\n", "header"),
            ("ordaut v1\nstates 1\ninitial 0\ncolour red\n", "unknown key"),
            ("ordaut v1\nstates 2\ninitial 0\n0 0 1\n0 0 1\n", "duplicate transition"),
            ("ordaut v1\nstates 2\ninitial 0\n0 2 1\n", "unknown letter"),
            ("ordaut v1\nstates 2\ninitial 5\n", "out of range"),
            ("ordaut v1\ninitial 0\n", "missing 'states'"),
            ("ordaut v1\nstates 2\nstates 2\ninitial 0\n", "duplicate 'states'"),
            ("ordaut v1\nstates x\ninitial 0\n", "natural number"),
            ("ordaut v1\nstates 2\ninitial 0\n0 0\n", "SOURCE LETTER TARGET"),
        ],
    )
    def test_errors(self, text, msg):
        with pytest.raises(ParseError, match=msg):
            parse_automaton(text)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_random_oa_generator_yields_valid_oas(seed):
    a = random_ordinal_automaton(random.Random(seed), 40)
    assert a.state_count <= 40
    assert is_cpa(a) and is_ordinal_automaton(a)
    b = random_acyclic_cpa(random.Random(seed), 12)
    assert b.state_count <= 12 and not any(condense(b).nontrivial)
