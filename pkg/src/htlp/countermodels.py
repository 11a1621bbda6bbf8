"""Strongly equivalent nonnested programs built from countermodels.

Every interpretation (X, Y) over a signature determines one nonnested
rule whose countermodels are exactly (X, Y) itself — or the whole column
(X', Y) when the interpretation is total.  Collecting the rule of every
member of a total-closed interpretation set yields a program whose
countermodel set is exactly that set, which turns the countermodels of
any theory into a strongly equivalent program.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Atom, Program, Rule, Signature, Theory, atoms_of, conj, disj, neg
from .semantics import (
    DEFAULT_CAP,
    HtInterpretation,
    InterpretationSet,
    ht_countermodels,
)


class NotTotalClosedError(ValueError):
    """The interpretation set misses part of a total member's column."""

    def __init__(self, total_member: HtInterpretation, missing: HtInterpretation):
        self.total_member = total_member
        self.missing = missing
        super().__init__(
            f"set contains total ({total_member.display()}) "
            f"but not ({missing.display()})"
        )


@dataclass(frozen=True)
class CountermodelRule:
    """The nonnested rule excluding one interpretation, with its source."""

    source: HtInterpretation
    rule: Rule


def build_rule(interpretation: HtInterpretation) -> CountermodelRule:
    """The rule whose only countermodel(s) are this interpretation('s column).

    Body: the atoms of the here-set plus the negations of the atoms
    outside the there-set (top when both are empty).  Head: a | ~a for
    every undefined atom (bot when the interpretation is total, i.e. a
    constraint).
    """
    sig = interpretation.over
    body = conj(
        [Atom(b) for b in sorted(interpretation.here)]
        + [neg(Atom(c)) for c in sorted(set(sig) - interpretation.there)]
    )
    head_parts = []
    for a in sorted(interpretation.there - interpretation.here):
        head_parts.append(Atom(a))
        head_parts.append(neg(Atom(a)))
    head = disj(head_parts)
    return CountermodelRule(interpretation, Rule(body, head))


def program_from_set(s: InterpretationSet) -> Program:
    """The program whose countermodel set is exactly s.

    s must be total-closed, otherwise the countermodels of the result
    would strictly contain it.
    """
    violation = s.total_closure_violation()
    if violation is not None:
        raise NotTotalClosedError(*violation)
    rules = dict.fromkeys(build_rule(m).rule for m in s)
    return Program(tuple(rules), s.signature)


def theory_to_program_cm(
    t: Theory, mode: str = "whole", cap: int = DEFAULT_CAP
) -> Program:
    """A nonnested program strongly equivalent to t, from its countermodels.

    In whole mode the rules are built over t's full signature; in
    per_formula mode each formula is translated over just its own atoms
    and the results are unioned, which keeps rules local to the atoms
    they talk about.
    """
    if mode == "whole":
        return program_from_set(ht_countermodels(t, cap))
    if mode == "per_formula":
        rules: dict[Rule, None] = {}
        for f in t.formulas:
            sub = Theory((f,), atoms_of(f))
            rules.update(dict.fromkeys(program_from_set(ht_countermodels(sub, cap))))
        return Program(tuple(rules), t.signature)
    raise ValueError(f"unknown mode: {mode!r}")
