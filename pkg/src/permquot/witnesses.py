"""Explicit automaton families.

``quotient_source(m, alpha)`` and ``quotient_divisor(n, alpha)`` form the
ternary witness pair whose right quotient has accepting-state complexity
exactly ``alpha``.  Both act on [k] with k = alpha + 1 through the letters

    a = (1 2 ... k),  b = (1 2),  c = identity

and the divisor additionally counts occurrences of c modulo n + 1 in a second
coordinate.  The divisor state (p, i), with p in [k] and i in {0, ..., n}, is
flattened to the index (p - 1) * (n + 1) + i + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Dfa, asc
from .errors import BadParams, WitnessCheckFailed
from .perms import cycle, transposition
from .quotient import QuotientResult, right_quotient

ALPHABET = ("a", "b", "c")


@dataclass(frozen=True)
class WitnessParams:
    m: int
    n: int
    alpha: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise BadParams(f"need m, n >= 1, got m={self.m}, n={self.n}")
        if self.alpha < self.m:
            raise BadParams(f"need alpha >= m, got alpha={self.alpha}, m={self.m}")

    @property
    def k(self) -> int:
        return self.alpha + 1


def _letter_images(k: int) -> dict[str, tuple[int, ...]]:
    return {
        "a": cycle(k).images,
        "b": transposition(1, 2, k).images,
        "c": tuple(range(1, k + 1)),
    }


def quotient_source(m: int, alpha: int) -> Dfa:
    """The dividend: [k] with initial state 1 and finals {1, ..., m}."""
    if m < 1 or alpha < m:
        raise BadParams(f"need 1 <= m <= alpha, got m={m}, alpha={alpha}")
    k = alpha + 1
    return Dfa(k, ALPHABET, _letter_images(k), 1, frozenset(range(1, m + 1)))


def pair_index(p: int, i: int, n: int) -> int:
    return (p - 1) * (n + 1) + i + 1


def quotient_divisor(n: int, alpha: int) -> Dfa:
    """The divisor on [k] x Z_(n+1): initial (k, 0), finals (k, i) for i != n."""
    if n < 1 or alpha < 1:
        raise BadParams(f"need n >= 1 and alpha >= 1, got n={n}, alpha={alpha}")
    k = alpha + 1
    first = _letter_images(k)
    trans = {letter: [0] * (k * (n + 1)) for letter in ALPHABET}
    for p in range(1, k + 1):
        for i in range(n + 1):
            src = pair_index(p, i, n) - 1
            trans["a"][src] = pair_index(first["a"][p - 1], i, n)
            trans["b"][src] = pair_index(first["b"][p - 1], i, n)
            trans["c"][src] = pair_index(p, (i + 1) % (n + 1), n)
    return Dfa(
        k * (n + 1),
        ALPHABET,
        trans,
        pair_index(k, 0, n),
        frozenset(pair_index(k, i, n) for i in range(n)),
    )


def unary_cycle(t: int) -> Dfa:
    """C_t: a (t+1)-cycle over {a} with finals {1, ..., t}; t = 0 gives the empty language."""
    if t < 0:
        raise BadParams(f"need t >= 0, got {t}")
    if t == 0:
        return Dfa(1, ("a",), {"a": (1,)}, 1, frozenset())
    return Dfa(t + 1, ("a",), {"a": cycle(t + 1).images}, 1, frozenset(range(1, t + 1)))


@dataclass(frozen=True)
class WitnessTriple:
    params: WitnessParams
    source: Dfa
    divisor: Dfa
    quotient: QuotientResult
    measured: tuple[int, int, int]


def witness_triple(params: WitnessParams) -> WitnessTriple:
    """Build the witness pair and their quotient, and re-measure all three asc values.

    Raises WitnessCheckFailed if any measurement differs from (m, n, alpha).
    """
    source = quotient_source(params.m, params.alpha)
    divisor = quotient_divisor(params.n, params.alpha)
    result = right_quotient(source, divisor, compute_group=False)
    measured = (asc(source), asc(divisor), asc(result.automaton))
    expected = (params.m, params.n, params.alpha)
    if measured != expected:
        raise WitnessCheckFailed(expected, measured)
    return WitnessTriple(params, source, divisor, result, measured)
