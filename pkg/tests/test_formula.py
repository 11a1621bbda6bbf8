"""Syntax trees, parser, printer, and the syntactic classifiers."""

import pytest

from htlp import (
    BOT,
    TOP,
    And,
    Atom,
    Implies,
    Or,
    ParseError,
    Program,
    Rule,
    Signature,
    Theory,
    atoms_of,
    is_nested_expression,
    is_nonnested_rule,
    is_rule,
    neg,
    parse,
    parse_theory,
    program_to_text,
    rule_to_text,
    to_text,
)

p, q, r = Atom("p"), Atom("q"), Atom("r")


class TestParse:
    def test_single_implication(self):
        assert parse("q -> p") == Implies(q, p)

    def test_disjunction_of_rule(self):
        assert parse("(q -> p) | r") == Or(Implies(q, p), r)

    def test_negation_expands(self):
        assert parse("~p") == Implies(p, BOT)

    def test_not_keyword(self):
        assert parse("not p") == Implies(p, BOT)
        assert parse("not not p") == neg(neg(p))

    def test_top_expands(self):
        assert parse("top") == Implies(BOT, BOT)

    def test_iff_expands(self):
        assert parse("p <-> q") == And(Implies(p, q), Implies(q, p))

    def test_precedence(self):
        assert parse("~p & q | r -> p") == Implies(
            Or(And(neg(p), q), r), p
        )

    def test_implication_right_associative(self):
        assert parse("p -> q -> r") == Implies(p, Implies(q, r))

    def test_and_or_left_associative(self):
        assert parse("p & q & r") == And(And(p, q), r)
        assert parse("p | q | r") == Or(Or(p, q), r)

    def test_iff_binds_loosest(self):
        assert parse("p -> q <-> r") == And(
            Implies(Implies(p, q), r), Implies(r, Implies(p, q))
        )

    def test_atom_may_embed_keyword(self):
        assert parse("nota & bottom") == And(Atom("nota"), Atom("bottom"))

    def test_comment_and_whitespace(self):
        assert parse("  p ->\tq  % trailing comment") == Implies(p, q)

    @pytest.mark.parametrize("bad,expected_bits", [
        ("p &", "atom"),
        ("(p", "')'"),
        ("p q", "trailing"),
        ("p $ q", "unexpected character"),
        ("-> p", "unexpected"),
        ("", "end of input"),
    ])
    def test_errors_carry_position_and_expectation(self, bad, expected_bits):
        with pytest.raises(ParseError) as err:
            parse(bad)
        assert expected_bits in str(err.value)
        assert err.value.line == 1
        assert err.value.column >= 1

    def test_error_line_numbers_in_theories(self):
        with pytest.raises(ParseError) as err:
            parse_theory("p\nq ->\n")
        assert err.value.line == 2


class TestTheoryFiles:
    def test_basic_file(self):
        t = parse_theory("% a comment line\np -> q\n\nr\n")
        assert t.formulas == (Implies(p, q), r)
        assert list(t.signature) == ["p", "q", "r"]

    def test_signature_header_extends(self):
        t = parse_theory("#signature a b\np\n")
        assert list(t.signature) == ["a", "b", "p"]

    def test_unknown_directive_rejected(self):
        with pytest.raises(ParseError):
            parse_theory("#foo bar\n")

    def test_bad_header_atom_rejected(self):
        with pytest.raises(ParseError):
            parse_theory("#signature Bad\n")


class TestPrint:
    def test_raw_fully_parenthesized(self):
        assert to_text(Implies(q, p), "raw") == "(q -> p)"
        assert to_text(And(p, Or(q, r)), "raw") == "(p & (q | r))"
        assert to_text(TOP, "raw") == "(bot -> bot)"

    def test_sugared_folds(self):
        assert to_text(Implies(p, BOT)) == "~p"
        assert to_text(TOP) == "top"
        assert to_text(neg(neg(p))) == "~~p"
        assert to_text(neg(And(p, q))) == "~(p & q)"

    def test_sugared_minimal_parens(self):
        assert to_text(Implies(And(q, neg(p)), Or(r, neg(r)))) == "q & ~p -> r | ~r"
        assert to_text(Or(p, Or(q, r))) == "p | (q | r)"
        assert to_text(Implies(Implies(p, q), r)) == "(p -> q) -> r"

    def test_unknown_style_rejected(self):
        with pytest.raises(ValueError):
            to_text(p, "fancy")

    def test_round_trip_corpus(self, corpus_depth3):
        for f in corpus_depth3:
            assert parse(to_text(f, "raw")) == f
            assert parse(to_text(f, "sugared")) == f

    def test_atoms_stable_under_round_trip(self, corpus_depth2):
        for f in corpus_depth2:
            assert atoms_of(parse(to_text(f))) == atoms_of(f)


class TestAtoms:
    def test_collects_and_orders(self):
        assert list(atoms_of(Or(Implies(q, p), r))) == ["p", "q", "r"]

    def test_bottom_is_empty(self):
        assert len(atoms_of(BOT)) == 0

    def test_duplicates_collapse(self):
        assert list(atoms_of(Implies(p, Implies(q, p)))) == ["p", "q"]

    def test_reserved_names_rejected(self):
        for name in ("bot", "top", "not", "Upper", "9x", ""):
            with pytest.raises(ValueError):
                Atom(name)

    def test_signature_set_behavior(self):
        sig = Signature(["b", "a", "b"])
        assert list(sig) == ["a", "b"]
        assert sig | Signature(["c"]) == Signature(["a", "b", "c"])
        assert "a" in sig and "z" not in sig


class TestClassifiers:
    def test_nested_expression(self):
        assert is_nested_expression(And(Atom("a"), Or(Atom("e"), p)))
        assert not is_nested_expression(Implies(q, p))
        assert is_nested_expression(TOP)
        assert is_nested_expression(neg(Or(p, q)))
        assert not is_nested_expression(neg(Implies(q, p)))

    def test_is_rule(self):
        assert is_rule(Implies(And(q, r), p))
        assert not is_rule(Implies(Implies(q, p), r))
        assert is_rule(p)

    def test_is_nonnested_rule(self):
        assert is_nonnested_rule(parse("q & ~r -> p | ~p"))
        assert is_nonnested_rule(parse("q & r -> p"))
        assert not is_nonnested_rule(parse("~~p -> q"))
        assert is_nonnested_rule(parse("p | ~p"))
        assert is_nonnested_rule(parse("bot"))
        assert not is_nonnested_rule(parse("(p | q) -> r"))

    def test_classifier_chain(self, corpus_depth3):
        for f in corpus_depth3:
            if is_nonnested_rule(f):
                assert is_rule(f)
            if is_nested_expression(f):
                assert is_rule(f)


class TestRuleAndProgram:
    def test_rule_requires_nested_sides(self):
        with pytest.raises(ValueError):
            Rule(Implies(q, p), p)
        with pytest.raises(ValueError):
            Rule(p, Implies(q, p))

    def test_from_formula_splits_implication(self):
        rule = Rule.from_formula(parse("q & r -> p"))
        assert rule.body == And(q, r)
        assert rule.head == p

    def test_from_formula_wraps_nested_expression(self):
        rule = Rule.from_formula(parse("p | ~p"))
        assert rule.body == TOP
        assert rule.head == Or(p, neg(p))

    def test_from_formula_reads_constraints_as_rules(self):
        rule = Rule.from_formula(parse("q & ~p -> bot"))
        assert rule.head == BOT
        assert rule.is_nonnested()

    def test_from_formula_rejects_non_rules(self):
        with pytest.raises(ValueError):
            Rule.from_formula(parse("(p -> q) -> r"))

    def test_to_formula_round_trip(self):
        for text in ("q & r -> p", "p | ~p", "bot", "~p", "top"):
            rule = Rule.from_formula(parse(text))
            assert Rule.from_formula(rule.to_formula()) == rule

    def test_rule_text_implicit_top_body(self):
        assert rule_to_text(Rule(TOP, Or(p, q))) == "p | q"
        assert rule_to_text(Rule(And(q, neg(p)), BOT)) == "q & ~p -> bot"

    def test_program_text_and_theory(self):
        prog = Program(
            (Rule(TOP, p), Rule(q, BOT)), Signature(["p", "q", "z"])
        )
        assert program_to_text(prog) == "p\nq -> bot"
        assert prog.to_theory().formulas == (p, Implies(q, BOT))
        assert list(prog.to_theory().signature) == ["p", "q", "z"]

    def test_theory_signature_must_cover_atoms(self):
        with pytest.raises(ValueError):
            Theory((p,), Signature(["q"]))
        wide = Theory((p,), Signature(["p", "q"]))
        assert list(wide.signature) == ["p", "q"]

    def test_theory_union_dedups(self):
        t1 = Theory((p, q))
        t2 = Theory((q, r))
        assert t1.union(t2).formulas == (p, q, r)
        assert list(t1.union(t2).signature) == ["p", "q", "r"]
