import pytest
from hypothesis import given, settings, strategies as st

from conftest import clone_state, dfas
from oracles import (
    agree_up_to,
    brute_accepts,
    brute_reachable,
    is_minimal,
    words,
)
from permquot.automata import (
    Dfa,
    accepts,
    accessible_part,
    asc,
    distinguishing_word,
    empty_automaton,
    equivalent,
    induced_permutation,
    is_empty,
    is_permutation_automaton,
    isomorphic,
    minimize,
    run,
)
from permquot.errors import AlphabetMismatch, NotPermutation, UnknownLetter
from permquot.perms import Permutation, compose
from permquot.witnesses import quotient_divisor, quotient_source, unary_cycle


def test_dfa_validation():
    with pytest.raises(ValueError):
        Dfa(0, ("a",), {"a": ()}, 1, frozenset())
    with pytest.raises(ValueError):
        Dfa(2, ("a", "a"), {"a": (1, 2)}, 1, frozenset())
    with pytest.raises(ValueError):
        Dfa(2, ("ab",), {"ab": (1, 2)}, 1, frozenset())
    with pytest.raises(ValueError):
        Dfa(2, ("a", "b"), {"a": (1, 2)}, 1, frozenset())
    with pytest.raises(ValueError):
        Dfa(2, ("a",), {"a": (1, 3)}, 1, frozenset())
    with pytest.raises(ValueError):
        Dfa(2, ("a",), {"a": (1, 2)}, 3, frozenset())
    with pytest.raises(ValueError):
        Dfa(2, ("a",), {"a": (1, 2)}, 1, frozenset({5}))


def test_dfa_is_hashable_and_comparable():
    a = unary_cycle(3)
    assert a == unary_cycle(3)
    assert hash(a) == hash(unary_cycle(3))
    assert a != unary_cycle(2)


class TestRun:
    def test_examples(self):
        assert run(quotient_source(1, 2), 1, "ab") == 1
        assert run(unary_cycle(2), 1, "aaa") == 1
        for q in (1, 2, 3):
            assert run(quotient_source(1, 2), q, "") == q

    def test_unknown_letter(self):
        with pytest.raises(UnknownLetter):
            run(unary_cycle(2), 1, "ab")
        with pytest.raises(UnknownLetter):
            accepts(unary_cycle(2), "x")

    def test_accepts_examples(self):
        b = quotient_divisor(1, 1)
        assert accepts(b, "")
        assert not accepts(b, "c")
        assert accepts(b, "cc")
        empty = empty_automaton("ab")
        assert not any(accepts(empty, w) for w in words("ab", 4))

    @given(dfas(), st.data())
    def test_accepts_matches_oracle(self, dfa, data):
        word = data.draw(st.text(alphabet="".join(dfa.alphabet), max_size=10))
        assert accepts(dfa, word) == brute_accepts(dfa, word)


class TestPermutationAutomata:
    def test_examples(self):
        assert is_permutation_automaton(quotient_source(2, 3))
        assert is_permutation_automaton(unary_cycle(5))
        assert not is_permutation_automaton(Dfa(2, ("a",), {"a": (1, 1)}, 1, frozenset()))

    def test_induced_permutations(self):
        a = quotient_source(1, 2)
        assert induced_permutation(a, "c").is_identity()
        assert induced_permutation(a, "a") == Permutation.parse("(1 2 3)", 3)
        assert induced_permutation(a, "aaba") == Permutation.parse("(2 3)", 3)
        assert induced_permutation(a, "").is_identity()

    def test_not_permutation(self):
        with pytest.raises(NotPermutation):
            induced_permutation(Dfa(2, ("a",), {"a": (1, 1)}, 1, frozenset()), "a")

    @given(dfas(max_states=7, permutation=True), st.data())
    def test_homomorphism(self, dfa, data):
        letters = "".join(dfa.alphabet)
        u = data.draw(st.text(alphabet=letters, max_size=6))
        v = data.draw(st.text(alphabet=letters, max_size=6))
        uv = induced_permutation(dfa, u + v)
        assert uv == compose(induced_permutation(dfa, u), induced_permutation(dfa, v))
        for q in dfa.states:
            assert uv(q) == run(dfa, q, u + v)


class TestAccessible:
    def test_unreachable_cycle_dropped(self):
        # two 2-cycles, only the first reachable from state 1
        dfa = Dfa(4, ("a",), {"a": (2, 1, 4, 3)}, 1, frozenset({2, 3}))
        part = accessible_part(dfa)
        assert part.state_count == 2
        assert part.finals == {2}
        assert is_permutation_automaton(part)
        assert agree_up_to(dfa, part, 6)

    def test_canonical_numbering(self):
        dfa = Dfa(3, ("a", "b"), {"a": (1, 1, 2), "b": (3, 3, 3)}, 3, frozenset({1}))
        part = accessible_part(dfa)
        # BFS from 3: a -> 2, b -> 3; from 2: a -> 1
        assert part == Dfa(3, ("a", "b"), {"a": (2, 3, 3), "b": (1, 1, 1)}, 1, frozenset({3}))

    def test_already_accessible_fixed_point(self):
        for dfa in [quotient_source(2, 3), quotient_divisor(2, 2), unary_cycle(4)]:
            part = accessible_part(dfa)
            assert isomorphic(part, dfa)
            assert accessible_part(part) == part

    @settings(max_examples=150)
    @given(dfas(max_states=8, permutation=True))
    def test_permutation_closure(self, dfa):
        part = accessible_part(dfa)
        assert is_permutation_automaton(part)
        assert part.state_count == len(brute_reachable(dfa))
        assert agree_up_to(dfa, part, dfa.state_count + 2)


class TestMinimize:
    def test_witnesses_already_minimal(self):
        for m in range(1, 4):
            for alpha in range(m, 6):
                a = quotient_source(m, alpha)
                assert isomorphic(minimize(a), a)
        for n in range(1, 4):
            for alpha in range(1, 6):
                b = quotient_divisor(n, alpha)
                assert isomorphic(minimize(b), b)

    def test_cloned_state(self):
        base = quotient_source(2, 3)
        bigger = clone_state(base, base.transitions["a"][0])
        assert bigger.state_count == base.state_count + 1
        assert minimize(bigger).state_count == base.state_count
        assert agree_up_to(bigger, base, 2 * bigger.state_count)

    def test_empty_language(self):
        dfa = Dfa(3, ("a", "b"), {"a": (2, 3, 1), "b": (1, 1, 1)}, 1, frozenset())
        assert minimize(dfa) == empty_automaton(("a", "b"))
        one = empty_automaton(("a",))
        assert minimize(one) == one

    def test_universal_language(self):
        dfa = Dfa(3, ("a",), {"a": (2, 3, 1)}, 2, frozenset({1, 2, 3}))
        assert minimize(dfa) == Dfa(1, ("a",), {"a": (1,)}, 1, frozenset({1}))

    @settings(max_examples=200)
    @given(dfas(max_states=8))
    def test_soundness_and_minimality(self, dfa):
        mini = minimize(dfa)
        assert equivalent(dfa, mini)
        assert agree_up_to(dfa, mini, dfa.state_count + 2)
        assert is_minimal(mini)
        assert minimize(mini) == mini

    @given(dfas(max_states=6), st.data())
    def test_canonical_form_independent_of_labels(self, dfa, data):
        # relabel states by a random permutation: the canonical result must not change
        order = data.draw(st.permutations(range(1, dfa.state_count + 1)))
        relabel = {old: new for old, new in zip(dfa.states, order)}
        trans = {}
        for x in dfa.alphabet:
            col = [0] * dfa.state_count
            for q in dfa.states:
                col[relabel[q] - 1] = relabel[dfa.transitions[x][q - 1]]
            trans[x] = tuple(col)
        other = Dfa(
            dfa.state_count,
            dfa.alphabet,
            trans,
            relabel[dfa.initial],
            frozenset(relabel[q] for q in dfa.finals),
        )
        assert minimize(other) == minimize(dfa)


class TestEquivalence:
    def test_examples(self):
        assert not equivalent(unary_cycle(1), unary_cycle(2))
        assert distinguishing_word(unary_cycle(1), unary_cycle(2)) == "a"
        x = quotient_source(2, 3)
        assert equivalent(x, x)
        assert equivalent(x, minimize(x))

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatch):
            equivalent(unary_cycle(1), quotient_source(1, 1))

    @given(dfas(max_states=5, alphabets=("ab",)), dfas(max_states=5, alphabets=("ab",)))
    def test_against_word_enumeration(self, x, y):
        # two DFAs with at most 5 states each that agree up to length 9 are equal
        same = all(brute_accepts(x, w) == brute_accepts(y, w) for w in words("ab", 9))
        assert equivalent(x, y) == same
        word = distinguishing_word(x, y)
        if word is not None:
            assert brute_accepts(x, word) != brute_accepts(y, word)
            shorter = (w for w in words("ab", len(word) - 1))
            assert all(brute_accepts(x, w) == brute_accepts(y, w) for w in shorter)


class TestAsc:
    def test_examples(self):
        for m in range(1, 4):
            assert asc(quotient_source(m, 4)) == m
        for t in range(7):
            assert asc(unary_cycle(t)) == t
        assert asc(empty_automaton("abc")) == 0

    @given(dfas(max_states=7))
    def test_consistency(self, dfa):
        assert asc(dfa) == asc(minimize(dfa))
        assert (asc(dfa) == 0) == is_empty(dfa)
        assert is_empty(dfa) == (not (brute_reachable(dfa) & dfa.finals))
