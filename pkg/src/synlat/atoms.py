"""Word profiles and atom sets.

profile(w) is the set of DFA states from which w is accepted.  The realized
profiles are exactly the backward closure of the final-state set under the
letter preimage maps, so they can be enumerated without touching words.  Any
union-of-intersections of residuals is then uniquely the set of realized
profiles whose words it contains: an AtomSet.  Equality of AtomSets is
equality of the represented languages, which makes every language identity
in this package decidable by integer comparison.

AtomSets are bitmasks over profile indices; profiles are bitmasks over
states.  Complements are deliberately not representable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automata import Dfa
from .errors import BudgetError

DEFAULT_PROFILE_BUDGET = 1 << 16


@dataclass(frozen=True)
class AtomSet:
    """A set of realized profiles, i.e. a positive Boolean combination of residuals."""

    table: "ProfileTable"
    bits: int

    def __eq__(self, other):
        if not isinstance(other, AtomSet):
            return NotImplemented
        return self.table is other.table and self.bits == other.bits

    def __hash__(self):
        return hash((id(self.table), self.bits))

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __le__(self, other):
        return leq(self, other)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.table.n_profiles) if self.bits >> i & 1)


class ProfileTable:
    """Realized profiles of a minimal complete DFA, with letter preimage maps."""

    def __init__(self, dfa: Dfa, profiles, pre, lambda_profile: int):
        self.dfa = dfa
        self.profiles = tuple(profiles)          # state-set bitmask per profile
        self.pre = tuple(tuple(p) for p in pre)  # pre[letter][profile] -> profile
        self.lambda_profile = lambda_profile
        self.n_profiles = len(self.profiles)
        self._top = AtomSet(self, (1 << self.n_profiles) - 1)
        self._bottom = AtomSet(self, 0)
        self._state_atoms = tuple(
            AtomSet(self, self._bits_for_state(q)) for q in range(dfa.n_states)
        )

    def _bits_for_state(self, q: int) -> int:
        bits = 0
        for i, p in enumerate(self.profiles):
            if p >> q & 1:
                bits |= 1 << i
        return bits

    def atom_set(self, profile_indices) -> AtomSet:
        bits = 0
        for i in profile_indices:
            if not 0 <= i < self.n_profiles:
                raise ValueError(f"profile index {i} out of range")
            bits |= 1 << i
        return AtomSet(self, bits)

    def word_profile(self, word: str) -> int:
        """Index of profile(word)."""
        idx = self.lambda_profile
        for a in reversed(word):
            idx = self.pre[self.dfa.letter_index(a)][idx]
        return idx


def build_profile_table(dfa: Dfa, budget: int = DEFAULT_PROFILE_BUDGET) -> ProfileTable:
    """Fixpoint closure of {finals} under letter preimages, BFS numbering."""
    n = dfa.n_states
    finals_mask = 0
    for q in dfa.finals:
        finals_mask |= 1 << q
    index = {finals_mask: 0}
    profiles = [finals_mask]
    queue = deque([finals_mask])
    pre_maps: dict[int, list[int]] = {}  # filled after closure
    while queue:
        p = queue.popleft()
        for li in range(len(dfa.alphabet)):
            pp = 0
            for q in range(n):
                if p >> dfa.delta[q][li] & 1:
                    pp |= 1 << q
            if pp not in index:
                if len(profiles) >= budget:
                    raise BudgetError("realized profiles", budget)
                index[pp] = len(profiles)
                profiles.append(pp)
                queue.append(pp)
            pre_maps.setdefault(li, []).append(index[pp])
    # pre_maps rows were appended in BFS pop order == profile index order
    pre = [pre_maps.get(li, []) for li in range(len(dfa.alphabet))]
    return ProfileTable(dfa, profiles, pre, 0)


def _same_table(x: AtomSet, y: AtomSet):
    if x.table is not y.table:
        raise ValueError("AtomSets belong to different profile tables")


def residual_atoms(pt: ProfileTable, q: int) -> AtomSet:
    """AtomSet of the language accepted from state q."""
    return pt._state_atoms[q]


def top(pt: ProfileTable) -> AtomSet:
    return pt._top


def bottom(pt: ProfileTable) -> AtomSet:
    return pt._bottom


def meet(x: AtomSet, y: AtomSet) -> AtomSet:
    _same_table(x, y)
    return AtomSet(x.table, x.bits & y.bits)


def join(x: AtomSet, y: AtomSet) -> AtomSet:
    _same_table(x, y)
    return AtomSet(x.table, x.bits | y.bits)


def leq(x: AtomSet, y: AtomSet) -> bool:
    """Language inclusion."""
    _same_table(x, y)
    return x.bits | y.bits == y.bits


def contains_lambda(pt: ProfileTable, x: AtomSet) -> bool:
    """λ is in the represented language iff the profile of λ is in the set."""
    return bool(x.bits >> pt.lambda_profile & 1)


def quotient_letter(pt: ProfileTable, x: AtomSet, letter: str) -> AtomSet:
    """a^{-1}X: profiles whose letter preimage lies in x."""
    if x.table is not pt:
        raise ValueError("AtomSet belongs to a different profile table")
    pre = pt.pre[pt.dfa.letter_index(letter)]
    bits = 0
    for i in range(pt.n_profiles):
        if x.bits >> pre[i] & 1:
            bits |= 1 << i
    return AtomSet(pt, bits)


def quotient_word(pt: ProfileTable, x: AtomSet, word: str) -> AtomSet:
    for a in word:
        x = quotient_letter(pt, x, a)
    return x


def word_in(pt: ProfileTable, x: AtomSet, word: str) -> bool:
    """Membership of a word in the language represented by x."""
    return bool(x.bits >> pt.word_profile(word) & 1)
