"""The countermodel-to-rule construction and its exactness."""

import random

import pytest

from htlp import (
    HtInterpretation,
    InterpretationSet,
    NotTotalClosedError,
    Signature,
    Theory,
    atoms_of,
    build_rule,
    enumerate_interpretations,
    ht_countermodels,
    ht_equivalent,
    ht_models,
    is_nonnested_rule,
    parse,
    parse_theory,
    program_from_set,
    rule_to_text,
    sat_ht,
    theory_to_program_cm,
)
from conftest import single

PQR = Signature(["p", "q", "r"])


def interp(here, there, sig=PQR):
    return HtInterpretation(frozenset(here), frozenset(there), sig)


class TestBuildRule:
    def test_partial_interpretation(self):
        built = build_rule(interp({"q"}, {"p", "q"}))
        assert rule_to_text(built.rule) == "q & ~r -> p | ~p"

    def test_total_interpretation_is_constraint(self):
        built = build_rule(interp({"q"}, {"q"}))
        assert rule_to_text(built.rule) == "q & ~p & ~r -> bot"

    def test_empty_here_full_there(self):
        built = build_rule(interp(set(), {"p", "q", "r"}))
        assert rule_to_text(built.rule) == "p | ~p | q | ~q | r | ~r"

    def test_always_nonnested(self):
        for m in enumerate_interpretations(PQR):
            assert is_nonnested_rule(build_rule(m).rule.to_formula())


class TestBodyCharacterization:
    def test_body_satisfied_iff_sandwiched(self):
        space = list(enumerate_interpretations(PQR))
        for m in space:
            body = build_rule(m).rule.body
            for other in space:
                expected = (
                    m.here <= other.here
                    and other.here <= other.there
                    and other.there <= m.there
                )
                assert sat_ht(other, body) == expected


class TestCountermodelCharacterization:
    def test_unique_countermodel_when_partial(self):
        space = list(enumerate_interpretations(PQR))
        for m in space:
            rule_formula = build_rule(m).rule.to_formula()
            countermodels = {
                (other.here, other.there)
                for other in space
                if not sat_ht(other, rule_formula)
            }
            if m.total():
                expected = {
                    (other.here, other.there)
                    for other in space
                    if other.there == m.there
                }
            else:
                expected = {(m.here, m.there)}
            assert countermodels == expected


class TestProgramFromSet:
    def test_golden_six_rules(self):
        t = single(parse("(q -> p) | r"))
        program = program_from_set(ht_countermodels(t))
        assert [rule_to_text(r) for r in program] == [
            "~p & ~r -> q | ~q",
            "q & ~p & ~r -> bot",
            "q & ~r -> p | ~p",
            "~p -> q | ~q | r | ~r",
            "q & ~p -> r | ~r",
            "q -> p | ~p | r | ~r",
        ]

    def test_empty_set(self):
        program = program_from_set(InterpretationSet((), PQR))
        assert len(program) == 0
        assert program.signature == PQR

    def test_full_set_has_no_models(self):
        sig = Signature(["p"])
        everything = enumerate_interpretations(sig)
        program = program_from_set(everything)
        assert len(ht_models(program.to_theory())) == 0

    def test_rejects_non_total_closed(self):
        sig = Signature(["a"])
        bad = InterpretationSet(
            (HtInterpretation({"a"}, {"a"}, sig),), sig
        )
        with pytest.raises(NotTotalClosedError) as err:
            program_from_set(bad)
        assert err.value.total_member.display() == "a | a"
        assert err.value.missing.display() == "∅ | a"

    def test_exactness_on_random_total_closed_sets(self):
        rng = random.Random(424242)
        space = list(enumerate_interpretations(PQR))
        for _ in range(50):
            chosen = {m for m in space if rng.random() < 0.3}
            # repair closure: a total member drags in its whole column
            for m in list(chosen):
                if m.total():
                    chosen.update(o for o in space if o.there == m.there)
            s = InterpretationSet(tuple(chosen), PQR)
            assert s.is_total_closed()
            program = program_from_set(s)
            assert ht_countermodels(program.to_theory()) == s


class TestTheoryToProgram:
    def test_whole_mode_formula2(self):
        t = single(parse("(q -> p) | r"))
        program = theory_to_program_cm(t)
        assert len(program) == 6
        assert ht_equivalent(t, program.to_theory()).equivalent

    def test_empty_theory(self):
        t = Theory((), Signature(["p"]))
        assert len(theory_to_program_cm(t, "whole")) == 0
        assert len(theory_to_program_cm(t, "per_formula")) == 0

    def test_nested_implication_formula(self):
        t = single(parse("p -> (r -> q)"))
        program = theory_to_program_cm(t)
        assert program.is_nonnested()
        assert ht_equivalent(t, program.to_theory()).equivalent

    def test_per_formula_mode_equivalent_over_union(self):
        t = parse_theory("p -> q\nr\n~q -> r\n")
        whole = theory_to_program_cm(t, "whole")
        per_formula = theory_to_program_cm(t, "per_formula")
        assert ht_equivalent(t, per_formula.to_theory()).equivalent
        assert ht_equivalent(
            whole.to_theory(), per_formula.to_theory()
        ).equivalent
        # per-formula rules stay local to each formula's own atoms
        formula_atom_sets = [set(atoms_of(f)) for f in t.formulas]
        for rule in per_formula:
            rule_atoms = set(atoms_of(rule.to_formula()))
            assert any(rule_atoms <= atom_set for atom_set in formula_atom_sets)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            theory_to_program_cm(single(parse("p")), "sideways")

    def test_end_to_end_depth2(self, corpus_depth2):
        for f in corpus_depth2:
            t = single(f)
            program = theory_to_program_cm(t)
            assert program.is_nonnested()
            assert ht_equivalent(t, program.to_theory()).equivalent
