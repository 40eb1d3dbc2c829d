"""Syntactic monoid, syntactic semiring, and syntactic lattice algebra.

All three live over the canonical DFA: an element is identified by its
action on the residual states only (the quotient-by-residual-action
congruences), and carries a canonical witness form used for printing and for
multiplication.  The semiring product is witness-free (the action of a meet
form on an intersection of residuals is the intersection of the actions);
the lattice-algebra product goes through the stored witness forms, since the
action of a general form on a union of residuals is not determined by its
action on the residuals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .atoms import (
    AtomSet,
    ProfileTable,
    bottom,
    join,
    leq,
    meet,
    quotient_letter,
    residual_atoms,
    top,
)
from .automata import Dfa
from .canonical import HasseDiagram, hasse_from_leq
from .errors import BudgetError, InconsistencyError
from . import terms
from .terms import LatticeForm, MeetForm

DEFAULT_ELEMENT_BUDGET = 100_000


@dataclass(frozen=True)
class DfaTransformation:
    """Action of a word on the DFA states, with its shortlex-least witness."""

    mapping: tuple[int, ...]
    witness: str


@dataclass(frozen=True)
class SyntacticMonoid:
    dfa: Dfa
    elements: tuple[DfaTransformation, ...]
    identity: int
    table: tuple[tuple[int, ...], ...]       # table[i][j] = class of witness_i · witness_j
    letter_elements: tuple[int, ...]         # per alphabet position

    def __len__(self):
        return len(self.elements)

    def element_of_word(self, word: str) -> int:
        e = self.identity
        for a in word:
            e = self.table[e][self.letter_elements[self.dfa.letter_index(a)]]
        return e


def syntactic_monoid(dfa: Dfa, budget: int = DEFAULT_ELEMENT_BUDGET) -> SyntacticMonoid:
    """Transformation monoid of the canonical DFA, BFS over words in shortlex order."""
    n = dfa.n_states
    ident = tuple(range(n))
    elements = [DfaTransformation(ident, "")]
    index = {ident: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        t = elements[i]
        for li, a in enumerate(dfa.alphabet):
            m = tuple(dfa.delta[q][li] for q in t.mapping)
            if m not in index:
                if len(elements) >= budget:
                    raise BudgetError("monoid elements", budget)
                index[m] = len(elements)
                elements.append(DfaTransformation(m, t.witness + a))
                queue.append(index[m])
    table = []
    for e in elements:
        row = []
        for f in elements:
            m = tuple(f.mapping[q] for q in e.mapping)
            row.append(index[m])
        table.append(tuple(row))
    letters = tuple(index[tuple(dfa.delta[q][li] for q in range(n))] for li in range(len(dfa.alphabet)))
    return SyntacticMonoid(dfa, tuple(elements), 0, tuple(table), letters)


def omega_power(m: SyntacticMonoid, e: int) -> int:
    """The unique idempotent among the powers of e."""
    cur = e
    for _ in range(2 * len(m.elements) + 2):
        if m.table[cur][cur] == cur:
            return cur
        cur = m.table[cur][e]
    raise InconsistencyError("no idempotent power found; Cayley table is corrupt")


@dataclass(frozen=True)
class SemiringElement:
    """Action on residuals (images are meet-automaton states) plus witness meet form."""

    mapping: tuple[AtomSet, ...]
    witness: MeetForm


@dataclass(frozen=True)
class SyntacticSemiring:
    pt: ProfileTable
    dfa: Dfa
    elements: tuple[SemiringElement, ...]
    one: int
    top: int
    letter_elements: tuple[int, ...]
    meet_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    order: HasseDiagram

    def __len__(self):
        return len(self.elements)

    def labels(self) -> tuple[str, ...]:
        return tuple(terms.meet_form_str(e.witness) for e in self.elements)


def extend_semiring_action(pt: ProfileTable, mapping, x: AtomSet) -> AtomSet:
    """Action of a semiring element on any meet of residuals.

    (∩ S)∘U = ∩ {q∘U : q ∈ S}; using every residual above x is safe because
    x is their meet.
    """
    out = top(pt)
    for q in range(pt.dfa.n_states):
        if leq(x, residual_atoms(pt, q)):
            out = meet(out, mapping[q])
    return out


def syntactic_semiring(pt: ProfileTable, dfa: Dfa, budget: int = DEFAULT_ELEMENT_BUDGET) -> SyntacticSemiring:
    """Fixpoint closure of {1, letters, ⊤} under pointwise meet and extension product."""
    if pt.dfa is not dfa:
        raise ValueError("profile table was built from a different DFA")
    n = dfa.n_states
    mappings: list[tuple[AtomSet, ...]] = []
    witnesses: list[MeetForm] = []
    index: dict = {}

    def add(mapping, witness):
        if mapping in index:
            i = index[mapping]
            if terms.meet_form_key(witness) < terms.meet_form_key(witnesses[i]):
                witnesses[i] = witness
            return index[mapping]
        if len(mappings) >= budget:
            raise BudgetError("semiring elements", budget)
        index[mapping] = len(mappings)
        mappings.append(mapping)
        witnesses.append(witness)
        return index[mapping]

    one_map = tuple(residual_atoms(pt, q) for q in range(n))
    add(one_map, terms.meet_form([""]))
    letter_maps = []
    for li, a in enumerate(dfa.alphabet):
        letter_maps.append(tuple(residual_atoms(pt, dfa.delta[q][li]) for q in range(n)))
        add(letter_maps[-1], terms.meet_form([a]))
    top_map = tuple(top(pt) for _ in range(n))
    add(top_map, terms.meet_form([]))

    def product(mi, mj):
        return tuple(extend_semiring_action(pt, mj, x) for x in mi)

    i = 0
    while i < len(mappings):
        for j in range(i + 1):
            mi, mj = mappings[i], mappings[j]
            wi, wj = witnesses[i], witnesses[j]
            add(tuple(meet(x, y) for x, y in zip(mi, mj)), terms.mf_meet(wi, wj))
            add(product(mi, mj), terms.mf_mul(wi, wj))
            add(product(mj, mi), terms.mf_mul(wj, wi))
        i += 1

    meet_table = tuple(
        tuple(index[tuple(meet(x, y) for x, y in zip(mi, mj))] for mj in mappings) for mi in mappings
    )
    mul_table = tuple(tuple(index[product(mi, mj)] for mj in mappings) for mi in mappings)
    order = hasse_from_leq(
        len(mappings), lambda a, b: all(leq(x, y) for x, y in zip(mappings[a], mappings[b]))
    )
    elements = tuple(SemiringElement(m, w) for m, w in zip(mappings, witnesses))
    return SyntacticSemiring(
        pt, dfa, elements, index[one_map], index[top_map],
        tuple(index[m] for m in letter_maps), meet_table, mul_table, order,
    )


@dataclass(frozen=True)
class LatticeAlgebraElement:
    """Action on residuals (images are lattice-automaton states) plus witness form."""

    mapping: tuple[AtomSet, ...]
    witness: LatticeForm


@dataclass(frozen=True)
class SyntacticLatticeAlgebra:
    pt: ProfileTable
    dfa: Dfa
    elements: tuple[LatticeAlgebraElement, ...]
    one: int
    top: int
    bottom: int
    generators: tuple[int, ...]              # P: letter images, per alphabet position
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...] | None
    order: HasseDiagram

    def __len__(self):
        return len(self.elements)

    def labels(self) -> tuple[str, ...]:
        return tuple(terms.lattice_form_str(e.witness) for e in self.elements)

    def element_of_form(self, form: LatticeForm) -> int:
        mapping = tuple(
            terms.eval_lattice_form(self.pt, residual_atoms(self.pt, q), form)
            for q in range(self.dfa.n_states)
        )
        for i, e in enumerate(self.elements):
            if e.mapping == mapping:
                return i
        raise InconsistencyError("form evaluates outside the computed algebra")


def syntactic_lattice_algebra(
    pt: ProfileTable, dfa: Dfa, budget: int = DEFAULT_ELEMENT_BUDGET, with_tables: bool = True
) -> SyntacticLatticeAlgebra:
    """Fixpoint closure of {1, letters, ⊤, ⊥} under pointwise ∧, pointwise ∨,
    and right multiplication by letters; witnesses are maintained throughout.
    """
    if pt.dfa is not dfa:
        raise ValueError("profile table was built from a different DFA")
    n = dfa.n_states
    mappings: list[tuple[AtomSet, ...]] = []
    witnesses: list[LatticeForm] = []
    index: dict = {}

    def add(mapping, witness):
        if mapping in index:
            i = index[mapping]
            if terms.lattice_form_key(witness) < terms.lattice_form_key(witnesses[i]):
                witnesses[i] = witness
            return index[mapping]
        if len(mappings) >= budget:
            raise BudgetError("lattice algebra elements", budget)
        index[mapping] = len(mappings)
        mappings.append(mapping)
        witnesses.append(witness)
        return index[mapping]

    one_map = tuple(residual_atoms(pt, q) for q in range(n))
    add(one_map, terms.lattice_form([[""]]))
    letter_maps = []
    for li, a in enumerate(dfa.alphabet):
        letter_maps.append(tuple(residual_atoms(pt, dfa.delta[q][li]) for q in range(n)))
        add(letter_maps[-1], terms.lattice_form([[a]]))
    top_map = tuple(top(pt) for _ in range(n))
    add(top_map, terms.TOP_FORM)
    bot_map = tuple(bottom(pt) for _ in range(n))
    add(bot_map, terms.BOT_FORM)

    i = 0
    while i < len(mappings):
        for a in dfa.alphabet:
            m = tuple(quotient_letter(pt, x, a) for x in mappings[i])
            add(m, terms.multiply_lattice_forms(witnesses[i], ((a,),)))
        for j in range(i + 1):
            mi, mj = mappings[i], mappings[j]
            wi, wj = witnesses[i], witnesses[j]
            add(tuple(meet(x, y) for x, y in zip(mi, mj)), terms.lf_meet(wi, wj))
            add(tuple(join(x, y) for x, y in zip(mi, mj)), terms.lf_join(wi, wj))
        i += 1

    meet_table = tuple(
        tuple(index[tuple(meet(x, y) for x, y in zip(mi, mj))] for mj in mappings) for mi in mappings
    )
    join_table = tuple(
        tuple(index[tuple(join(x, y) for x, y in zip(mi, mj))] for mj in mappings) for mi in mappings
    )
    order = hasse_from_leq(
        len(mappings), lambda a, b: all(leq(x, y) for x, y in zip(mappings[a], mappings[b]))
    )
    elements = tuple(LatticeAlgebraElement(m, w) for m, w in zip(mappings, witnesses))
    alg = SyntacticLatticeAlgebra(
        pt, dfa, elements, index[one_map], index[top_map], index[bot_map],
        tuple(index[m] for m in letter_maps), meet_table, join_table, None, order,
    )
    if with_tables:
        mul = tuple(
            tuple(multiply_lattice_elements(alg, a, b) for b in range(len(elements)))
            for a in range(len(elements))
        )
        alg = SyntacticLatticeAlgebra(
            pt, dfa, elements, alg.one, alg.top, alg.bottom, alg.generators,
            meet_table, join_table, mul, order,
        )
    return alg


def multiply_lattice_elements(alg: SyntacticLatticeAlgebra, e1: int, e2: int) -> int:
    """Product through the canonical stored witnesses.

    The result does not depend on the left witness; it can depend on the
    right witness when the right class contains forms that act differently
    on non-residual lattice states, so the table is canonical relative to
    the stored witnesses (see the product examples in the tests).
    """
    form = terms.multiply_lattice_forms(alg.elements[e1].witness, alg.elements[e2].witness)
    mapping = tuple(
        terms.eval_lattice_form(alg.pt, residual_atoms(alg.pt, q), form)
        for q in range(alg.dfa.n_states)
    )
    for i, e in enumerate(alg.elements):
        if e.mapping == mapping:
            return i
    raise InconsistencyError("product form evaluates outside the computed algebra")


def hasse_of_elements(alg) -> HasseDiagram:
    """Cover relation of e ≤ f iff e∧f = e, from the meet table."""
    mt = alg.meet_table
    return hasse_from_leq(len(mt), lambda i, j: mt[i][j] == i)


@dataclass(frozen=True)
class AxiomViolation:
    law: str
    operands: tuple[int, ...]
    lhs: int
    rhs: int

    def describe(self, alg=None) -> str:
        ops = ", ".join(str(o) for o in self.operands)
        base = f"{self.law} at ({ops}): {self.lhs} != {self.rhs}"
        if alg is not None:
            labels = alg.labels()
            name = lambda i: labels[i] if 0 <= i < len(labels) else "?"
            ops = ", ".join(name(o) for o in self.operands)
            base += f"  [{ops} -> {name(self.lhs)} vs {name(self.rhs)}]"
        return base


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[AxiomViolation, ...]
    checked: int
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations and not self.truncated

    def laws_violated(self) -> tuple[str, ...]:
        seen = []
        for v in self.violations:
            if v.law not in seen:
                seen.append(v.law)
        return tuple(seen)


def check_lattice_algebra_axioms(alg: SyntacticLatticeAlgebra, max_violations: int = 1000) -> AxiomReport:
    """Exhaustive table check of the lattice-algebra laws.

    Covers: bounded distributive lattice laws, monoid laws with ⊥ and ⊤ as
    right zeros, ⊤·p = ⊤ and ⊥·p = ⊥ for generators p, left distributivity
    of · over ∧ and ∨ for all elements, right distributivity over the
    generators, and generation of the lattice by products of generators.
    """
    if alg.mul_table is None:
        raise ValueError("algebra was built without multiplication tables")
    n = len(alg.elements)
    A, O, M = alg.meet_table, alg.join_table, alg.mul_table
    one, tp, bt = alg.one, alg.top, alg.bottom
    P = sorted(set(alg.generators))
    violations: list[AxiomViolation] = []
    checked = 0
    truncated = False

    def report(law, operands, lhs, rhs):
        nonlocal checked, truncated
        checked += 1
        if lhs != rhs:
            if len(violations) < max_violations:
                violations.append(AxiomViolation(law, tuple(operands), lhs, rhs))
            else:
                truncated = True

    rng = range(n)
    for i in rng:
        report("meet-idempotent", (i,), A[i][i], i)
        report("join-idempotent", (i,), O[i][i], i)
        report("meet-top-unit", (i,), A[i][tp], i)
        report("join-bottom-unit", (i,), O[i][bt], i)
        report("meet-bottom-zero", (i,), A[i][bt], bt)
        report("join-top-zero", (i,), O[i][tp], tp)
        report("mul-unit-right", (i,), M[i][one], i)
        report("mul-unit-left", (i,), M[one][i], i)
        report("mul-top-right-zero", (i,), M[i][tp], tp)
        report("mul-bottom-right-zero", (i,), M[i][bt], bt)
    for p in P:
        report("top-absorbs-generator", (tp, p), M[tp][p], tp)
        report("bottom-absorbs-generator", (bt, p), M[bt][p], bt)
    for i in rng:
        for j in rng:
            report("meet-commutative", (i, j), A[i][j], A[j][i])
            report("join-commutative", (i, j), O[i][j], O[j][i])
            report("absorption-meet-join", (i, j), A[i][O[i][j]], i)
            report("absorption-join-meet", (i, j), O[i][A[i][j]], i)
    for i in rng:
        for j in rng:
            for k in rng:
                report("meet-associative", (i, j, k), A[A[i][j]][k], A[i][A[j][k]])
                report("join-associative", (i, j, k), O[O[i][j]][k], O[i][O[j][k]])
                report("meet-over-join", (i, j, k), A[i][O[j][k]], O[A[i][j]][A[i][k]])
                report("join-over-meet", (i, j, k), O[i][A[j][k]], A[O[i][j]][O[i][k]])
                report("mul-associative", (i, j, k), M[M[i][j]][k], M[i][M[j][k]])
                report("mul-left-dist-meet", (i, j, k), M[i][A[j][k]], A[M[i][j]][M[i][k]])
                report("mul-left-dist-join", (i, j, k), M[i][O[j][k]], O[M[i][j]][M[i][k]])
    for p in P:
        for i in rng:
            for j in rng:
                report("mul-right-dist-meet", (i, j, p), M[A[i][j]][p], A[M[i][p]][M[j][p]])
                report("mul-right-dist-join", (i, j, p), M[O[i][j]][p], O[M[i][p]][M[j][p]])

    # generation: lattice closure of the submonoid generated by P (with bounds)
    prods = {one}
    frontier = [one]
    while frontier:
        e = frontier.pop()
        for p in P:
            f = M[e][p]
            if f not in prods:
                prods.add(f)
                frontier.append(f)
    span = set(prods) | {tp, bt}
    grew = True
    while grew:
        grew = False
        for i in list(span):
            for j in list(span):
                for v in (A[i][j], O[i][j]):
                    if v not in span:
                        span.add(v)
                        grew = True
    checked += 1
    for e in sorted(set(rng) - span):
        if len(violations) >= max_violations:
            truncated = True
            break
        violations.append(AxiomViolation("lattice-generated-by-products-of-P", (e,), e, -1))

    return AxiomReport(tuple(violations), checked, truncated)
