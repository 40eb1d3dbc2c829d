"""Canonical meet and lattice automata: residual sets closed under ∩ (and ∪).

States are AtomSets.  The meet automaton closes the residuals under pairwise
intersection and contains the empty intersection (the full language); the
lattice automaton additionally closes under union and contains the empty
union.  Transitions are letter quotients, finals are the states containing λ,
and the inclusion order is carried as a Hasse diagram (the dashed edges in
the usual drawing convention).
"""

from __future__ import annotations

from dataclasses import dataclass

from .atoms import (
    AtomSet,
    ProfileTable,
    bottom,
    contains_lambda,
    join,
    leq,
    meet,
    quotient_letter,
    residual_atoms,
    top,
)
from .automata import Dfa, access_words
from .errors import BudgetError
from . import terms

DEFAULT_STATE_BUDGET = 4096


@dataclass(frozen=True)
class HasseDiagram:
    """Cover pairs (lower, upper) of a partial order on an indexed node set."""

    covers: tuple[tuple[int, int], ...]

    def lower_covers(self, i: int) -> tuple[int, ...]:
        return tuple(lo for lo, hi in self.covers if hi == i)

    def upper_covers(self, i: int) -> tuple[int, ...]:
        return tuple(hi for lo, hi in self.covers if lo == i)


def hasse_from_leq(n: int, le) -> HasseDiagram:
    """Transitive reduction of the order given by the predicate le(i, j)."""
    strict = [[le(i, j) and not le(j, i) for j in range(n)] for i in range(n)]
    covers = []
    for i in range(n):
        for j in range(n):
            if not strict[i][j]:
                continue
            if any(strict[i][k] and strict[k][j] for k in range(n)):
                continue
            covers.append((i, j))
    return HasseDiagram(tuple(covers))


def hasse(states) -> HasseDiagram:
    """Cover relation of ⊆ on a deduplicated list of AtomSets."""
    states = list(states)
    if len({(id(s.table), s.bits) for s in states}) != len(states):
        raise ValueError("states must be deduplicated")
    return hasse_from_leq(len(states), lambda i, j: leq(states[i], states[j]))


@dataclass(frozen=True)
class MeetAutomaton:
    table: ProfileTable
    states: tuple[AtomSet, ...]
    witnesses: tuple[tuple[str, ...], ...]   # meet form over access words, per state
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]
    order: HasseDiagram

    @property
    def alphabet(self):
        return self.table.dfa.alphabet

    def labels(self) -> tuple[str, ...]:
        return tuple(terms.meet_form_str(w) for w in self.witnesses)


@dataclass(frozen=True)
class LatticeAutomaton:
    table: ProfileTable
    states: tuple[AtomSet, ...]
    witnesses: tuple[tuple[tuple[str, ...], ...], ...]  # lattice form per state
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]
    order: HasseDiagram

    @property
    def alphabet(self):
        return self.table.dfa.alphabet

    def labels(self) -> tuple[str, ...]:
        return tuple(terms.lattice_form_str(w) for w in self.witnesses)


def _close(seeds, combine_ops, budget):
    """Pairwise fixpoint closure; returns (values, witnesses) in discovery order.

    seeds: list of (value, witness); combine_ops: list of (fn, wfn) applied to
    every unordered pair.  Witnesses keep the least key seen.
    """
    values = []
    witnesses = []
    index = {}

    def add(v, w, wkey):
        if v.bits in index:
            i = index[v.bits]
            if wkey(w) < wkey(witnesses[i]):
                witnesses[i] = w
            return
        if len(values) >= budget:
            raise BudgetError("canonical automaton states", budget)
        index[v.bits] = len(values)
        values.append(v)
        witnesses.append(w)

    for v, w, wkey in seeds:
        add(v, w, wkey)
    i = 0
    while i < len(values):
        for j in range(i + 1):
            for fn, wfn, wkey in combine_ops:
                add(fn(values[i], values[j]), wfn(witnesses[i], witnesses[j]), wkey)
        i += 1
    return values, witnesses, index


def _delta_finals(pt, values, index):
    delta = []
    for v in values:
        row = []
        for a in pt.dfa.alphabet:
            q = quotient_letter(pt, v, a)
            row.append(index[q.bits])
        delta.append(tuple(row))
    finals = frozenset(i for i, v in enumerate(values) if contains_lambda(pt, v))
    return tuple(delta), finals


def build_meet_automaton(pt: ProfileTable, dfa: Dfa, budget: int = DEFAULT_STATE_BUDGET) -> MeetAutomaton:
    """Residual states in DFA order, then ⊤, then new meets in discovery order."""
    if pt.dfa is not dfa:
        raise ValueError("profile table was built from a different DFA")
    words = access_words(dfa)
    wkey = terms.meet_form_key
    seeds = [(residual_atoms(pt, q), terms.meet_form([words[q]]), wkey) for q in range(dfa.n_states)]
    seeds.append((top(pt), terms.meet_form([]), wkey))
    values, witnesses, index = _close(
        seeds,
        [(meet, lambda u, v: terms.mf_meet(u, v), wkey)],
        budget,
    )
    delta, finals = _delta_finals(pt, values, index)
    return MeetAutomaton(
        pt, tuple(values), tuple(witnesses), delta, index[residual_atoms(pt, dfa.initial).bits],
        finals, hasse(values),
    )


def build_lattice_automaton(
    pt: ProfileTable, dfa: Dfa, budget: int = DEFAULT_STATE_BUDGET, meet_automaton: MeetAutomaton | None = None
) -> LatticeAutomaton:
    """Join closure of the meet automaton's states, with ⊥; meet states first."""
    ma = meet_automaton if meet_automaton is not None else build_meet_automaton(pt, dfa, budget)
    wkey = terms.lattice_form_key
    seeds = [(v, terms.lattice_form([w]), wkey) for v, w in zip(ma.states, ma.witnesses)]
    seeds.append((bottom(pt), terms.lattice_form([]), wkey))
    values, witnesses, index = _close(
        seeds,
        [(join, lambda u, v: terms.lf_join(u, v), wkey)],
        budget,
    )
    delta, finals = _delta_finals(pt, values, index)
    return LatticeAutomaton(
        pt, tuple(values), tuple(witnesses), delta, index[residual_atoms(pt, dfa.initial).bits],
        finals, hasse(values),
    )
