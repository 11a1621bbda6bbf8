"""A disjunctive normal form for here-and-there, built from the models.

Dually to the countermodel construction, every interpretation (X, Y)
over a signature has a characteristic conjunction satisfied by exactly
(X, Y) and (Y, Y); the disjunction of the characteristic conjunctions of
all models of a theory is equivalent to the theory itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Atom, Formula, Implies, Theory, conj, disj, neg
from .semantics import DEFAULT_CAP, HtInterpretation, ht_models


@dataclass(frozen=True)
class DnfClause:
    """The characteristic conjunction of one interpretation, with its source."""

    source: HtInterpretation
    clause: Formula


def build_clause(interpretation: HtInterpretation) -> DnfClause:
    """The conjunction satisfied by exactly this interpretation and its total twin.

    In canonical order: the here-atoms, the negations of atoms outside
    the there-set, the double negations of the undefined atoms, and one
    implication d -> e for every ordered pair of undefined atoms
    (including d = e).  Empty groups are omitted; when everything is
    empty the clause is top.
    """
    here = sorted(interpretation.here)
    absent = sorted(set(interpretation.over) - interpretation.there)
    undefined = sorted(interpretation.there - interpretation.here)
    parts: list[Formula] = [Atom(a) for a in here]
    parts += [neg(Atom(b)) for b in absent]
    parts += [neg(neg(Atom(c))) for c in undefined]
    parts += [Implies(Atom(d), Atom(e)) for d in undefined for e in undefined]
    return DnfClause(interpretation, conj(parts))


def theory_to_dnf_clauses(t: Theory, cap: int = DEFAULT_CAP) -> tuple[DnfClause, ...]:
    """One clause per model of t, in canonical model order."""
    return tuple(build_clause(m) for m in ht_models(t, cap))


def theory_to_dnf(t: Theory, cap: int = DEFAULT_CAP) -> Formula:
    """The disjunction of the clauses of all models of t; bot when none.

    Equivalent to t in here-and-there, hence strongly equivalent to it.
    """
    clauses = dict.fromkeys(c.clause for c in theory_to_dnf_clauses(t, cap))
    return disj(clauses)
