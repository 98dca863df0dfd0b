"""Ordinal automata: lexicographic well-orders of regular languages.

Decide whether a regular language is well-ordered lexicographically,
compute the Cantor normal form of its ordinal, compare two automata up to
order isomorphism, and build small automata for a given ordinal.
"""
from .automaton import (
    AlphaDfa,
    Condensation,
    Dfa,
    binarize,
    condense,
    enumerate_language,
    is_cpa,
    is_ordinal_automaton,
    is_prefix_accepting,
    is_scattered_automaton,
    is_trim,
    normalize,
    prefixize,
    to_cpa,
    trim,
)
from .cnf import ONE, ZERO, Cnf, cnf_add, cnf_compare, cnf_degree, cnf_format, cnf_mul_omega, cnf_parse
from .counting import (
    DagAutomaton,
    build_dag_view,
    count_accepted_greater,
    count_accepted_greater_matrix,
    lex_greatest_word_to,
)
from .errors import EmptyLanguageError, OrdautError, ParseError, PreconditionError, SearchBoundExceeded
from .extract import ExtractionTrace, isomorphic, ordinal_of, ordinal_of_enumerative, ordinal_of_recursive
from .fileformat import format_automaton, parse_automaton, read_automaton, write_automaton
from .synthesis import (
    AdditionChain,
    build_finite_block,
    build_power_automaton,
    f_bruteforce,
    g_size,
    min_size,
    ordered_sum,
    shortest_addition_chain,
    size_upper_bound,
    synthesize,
)

__version__ = "0.1.0"
