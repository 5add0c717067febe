import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from permquot.automata import Dfa, empty_automaton, random_dfa
from permquot.witnesses import quotient_divisor, quotient_source, unary_cycle

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])


@st.composite
def dfas(draw, max_states=6, alphabets=("a", "ab", "abc"), permutation=None):
    n = draw(st.integers(1, max_states))
    alphabet = tuple(draw(st.sampled_from(alphabets)))
    perm = draw(st.booleans()) if permutation is None else permutation
    trans = {}
    for x in alphabet:
        if perm:
            trans[x] = tuple(draw(st.permutations(range(1, n + 1))))
        else:
            trans[x] = tuple(draw(st.lists(st.integers(1, n), min_size=n, max_size=n)))
    initial = draw(st.integers(1, n))
    finals = draw(st.frozensets(st.integers(1, n)))
    return Dfa(n, alphabet, trans, initial, finals)


@st.composite
def dfa_pairs(draw, max_states=6, permutation=None):
    alphabet = draw(st.sampled_from(("a", "ab", "abc")))
    a = draw(dfas(max_states, (alphabet,), permutation))
    b = draw(dfas(max_states, (alphabet,)))
    return a, b


def clone_state(dfa: Dfa, state: int) -> Dfa:
    """Add a copy of ``state`` and redirect the initial state's self-references to it.

    The copy has the same outgoing transitions and finality, so the language is
    unchanged but the automaton is no longer minimal when the copy is reachable.
    """
    n = dfa.state_count + 1
    trans = {}
    for x in dfa.alphabet:
        col = list(dfa.transitions[x]) + [dfa.transitions[x][state - 1]]
        trans[x] = tuple(col)
    # route the initial state's first letter into the clone when it pointed at ``state``
    x0 = dfa.alphabet[0]
    col = list(trans[x0])
    if col[dfa.initial - 1] == state:
        col[dfa.initial - 1] = n
    trans[x0] = tuple(col)
    finals = set(dfa.finals) | ({n} if state in dfa.finals else set())
    return Dfa(n, dfa.alphabet, trans, dfa.initial, frozenset(finals))


def build_corpus(seed=20261016, random_count=150):
    """DFAs used by the minimisation oracle checks."""
    corpus = []
    for m in range(1, 4):
        for alpha in range(m, 6):
            corpus.append(quotient_source(m, alpha))
    for n in range(1, 4):
        for alpha in range(1, 6):
            corpus.append(quotient_divisor(n, alpha))
    corpus += [unary_cycle(t) for t in range(7)]
    corpus += [empty_automaton("ab"), empty_automaton("abc")]
    rng = random.Random(seed)
    for _ in range(random_count):
        n = rng.randint(1, 12)
        alphabet = "abc"[: rng.randint(1, 3)]
        corpus.append(random_dfa(rng, n, alphabet, permutation=rng.random() < 0.4))
    base = quotient_source(2, 3)
    corpus.append(clone_state(base, base.transitions["a"][0]))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
