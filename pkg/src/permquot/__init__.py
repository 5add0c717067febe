"""Permutation automata, accepting-state complexity and right quotients."""

from .automata import (
    Dfa,
    accepts,
    accessible_part,
    asc,
    equivalent,
    induced_permutation,
    is_permutation_automaton,
    isomorphic,
    minimize,
    run,
)
from .perms import Permutation, PermutationSet, compose, inverse
from .quotient import (
    QuotientResult,
    final_set_via_group,
    induced_language_group,
    member_of_quotient,
    quotient_final_set,
    right_quotient,
)
from .textfmt import format_dfa, parse_dfa
from .witnesses import (
    WitnessParams,
    quotient_divisor,
    quotient_source,
    unary_cycle,
    witness_triple,
)

__version__ = "0.1.0"

__all__ = [
    "Dfa",
    "Permutation",
    "PermutationSet",
    "QuotientResult",
    "WitnessParams",
    "accepts",
    "accessible_part",
    "asc",
    "compose",
    "equivalent",
    "final_set_via_group",
    "format_dfa",
    "induced_language_group",
    "induced_permutation",
    "inverse",
    "is_permutation_automaton",
    "isomorphic",
    "member_of_quotient",
    "minimize",
    "parse_dfa",
    "quotient_divisor",
    "quotient_final_set",
    "quotient_source",
    "right_quotient",
    "run",
    "unary_cycle",
    "witness_triple",
]
