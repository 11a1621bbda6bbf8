"""Propositional syntax trees and the rule/program view built on them.

The only primitive connectives are bot, &, | and ->.  The usual
abbreviations are definitional and expand on construction:

    ~F        is  F -> bot
    top       is  bot -> bot
    F <-> G   is  (F -> G) & (G -> F)

A *nested expression* is a formula whose implications are all negations
(consequent bot), a *rule* is an implication between two nested
expressions, and a *program* is a set of rules.  Bare nested expressions
count as rules with body top.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

_ATOM_NAME = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

#: Words of the text grammar that can never be atom names.
RESERVED_WORDS = frozenset({"not", "bot", "top"})


def is_valid_atom_name(name: str) -> bool:
    return bool(_ATOM_NAME.match(name)) and name not in RESERVED_WORDS


class Formula:
    """Base class of the five syntax-tree node kinds."""

    __slots__ = ()

    def __repr__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    pass


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    name: str

    def __post_init__(self) -> None:
        if not is_valid_atom_name(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Implies(Formula):
    antecedent: Formula
    consequent: Formula


BOT = Bottom()
TOP = Implies(BOT, BOT)


def neg(f: Formula) -> Formula:
    """~F, stored as F -> bot."""
    return Implies(f, BOT)


def iff(f: Formula, g: Formula) -> Formula:
    """F <-> G, stored expanded as (F -> G) & (G -> F)."""
    return And(Implies(f, g), Implies(g, f))


def conj(parts: Iterable[Formula]) -> Formula:
    """Left-associated conjunction; the empty conjunction is top."""
    acc: Optional[Formula] = None
    for part in parts:
        acc = part if acc is None else And(acc, part)
    return TOP if acc is None else acc


def disj(parts: Iterable[Formula]) -> Formula:
    """Left-associated disjunction; the empty disjunction is bot."""
    acc: Optional[Formula] = None
    for part in parts:
        acc = part if acc is None else Or(acc, part)
    return BOT if acc is None else acc


class Signature:
    """Finite set of atom names, always iterated in name order."""

    __slots__ = ("atoms",)

    def __init__(self, atoms: Iterable[str] = ()) -> None:
        names = sorted(set(atoms))
        for name in names:
            if not is_valid_atom_name(name):
                raise ValueError(f"invalid atom name: {name!r}")
        self.atoms: tuple[str, ...] = tuple(names)

    def __contains__(self, name: object) -> bool:
        return name in self.atoms

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Signature) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __or__(self, other: "Signature") -> "Signature":
        return Signature(self.atoms + other.atoms)

    def issubset(self, other: "Signature") -> bool:
        return set(self.atoms) <= set(other.atoms)

    def __repr__(self) -> str:
        return "{%s}" % ", ".join(self.atoms)


def atoms_of(f: Formula) -> Signature:
    """The atoms occurring in f, in canonical order."""
    names: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            names.add(node.name)
        elif isinstance(node, (And, Or)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Implies):
            stack.append(node.antecedent)
            stack.append(node.consequent)
    return Signature(names)


@dataclass(frozen=True)
class Theory:
    """A finite list of formulas over an explicit signature.

    The signature always covers the occurring atoms and may be strictly
    larger when supplied explicitly.
    """

    formulas: tuple[Formula, ...]
    signature: Signature = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "formulas", tuple(self.formulas))
        occurring = Signature(
            name for f in self.formulas for name in atoms_of(f)
        )
        if self.signature is None:
            object.__setattr__(self, "signature", occurring)
        elif not occurring.issubset(self.signature):
            extra = set(occurring) - set(self.signature)
            raise ValueError(
                f"signature is missing occurring atoms: {sorted(extra)}"
            )

    def union(self, other: "Theory") -> "Theory":
        """Set union of the two theories over the union signature."""
        merged = list(dict.fromkeys(self.formulas + other.formulas))
        return Theory(tuple(merged), self.signature | other.signature)

    def with_signature(self, signature: Signature) -> "Theory":
        return Theory(self.formulas, signature)


# --- syntactic classes -------------------------------------------------

def is_nested_expression(f: Formula) -> bool:
    """True iff every implication inside f is a negation (or top)."""
    if isinstance(f, (Atom, Bottom)):
        return True
    if isinstance(f, (And, Or)):
        return is_nested_expression(f.left) and is_nested_expression(f.right)
    if isinstance(f, Implies):
        return f.consequent == BOT and is_nested_expression(f.antecedent)
    raise TypeError(f"not a formula: {f!r}")


def is_literal(f: Formula) -> bool:
    """An atom or a negated atom."""
    if isinstance(f, Atom):
        return True
    return (
        isinstance(f, Implies)
        and f.consequent == BOT
        and isinstance(f.antecedent, Atom)
    )


def _is_literal_conjunction(f: Formula) -> bool:
    if isinstance(f, And):
        return _is_literal_conjunction(f.left) and _is_literal_conjunction(f.right)
    return is_literal(f)


def _is_literal_disjunction(f: Formula) -> bool:
    if isinstance(f, Or):
        return _is_literal_disjunction(f.left) and _is_literal_disjunction(f.right)
    return is_literal(f)


def _split_rule(f: Formula) -> Optional[tuple[Formula, Formula]]:
    """Body/head decomposition of a formula in rule form, or None.

    A proper implication between nested expressions splits as written,
    even when it also happens to be a negation; any other nested
    expression G becomes the implicit rule top -> G.
    """
    if (
        isinstance(f, Implies)
        and f != TOP
        and is_nested_expression(f.antecedent)
        and is_nested_expression(f.consequent)
    ):
        return f.antecedent, f.consequent
    if is_nested_expression(f):
        return TOP, f
    return None


def is_rule(f: Formula) -> bool:
    """True iff f is an implication of nested expressions, or nested itself."""
    return _split_rule(f) is not None


def is_nonnested_rule(f: Formula) -> bool:
    """True iff f is a rule of the shape literals -> literals.

    The body is a conjunction of literals (top when empty) and the head a
    disjunction of literals (bot when empty), in any association.
    """
    split = _split_rule(f)
    if split is None:
        return False
    body, head = split
    body_ok = body == TOP or _is_literal_conjunction(body)
    head_ok = head == BOT or _is_literal_disjunction(head)
    return body_ok and head_ok


@dataclass(frozen=True, repr=False)
class Rule:
    """body -> head with both sides nested expressions."""

    body: Formula
    head: Formula

    def __post_init__(self) -> None:
        if not is_nested_expression(self.body):
            raise ValueError(f"rule body is not a nested expression: {self.body!r}")
        if not is_nested_expression(self.head):
            raise ValueError(f"rule head is not a nested expression: {self.head!r}")

    @staticmethod
    def from_formula(f: Formula) -> "Rule":
        split = _split_rule(f)
        if split is None:
            raise ValueError(f"formula is not a rule: {f!r}")
        return Rule(*split)

    def to_formula(self) -> Formula:
        return self.head if self.body == TOP else Implies(self.body, self.head)

    def is_nonnested(self) -> bool:
        return is_nonnested_rule(self.to_formula())

    def __repr__(self) -> str:
        return rule_to_text(self)


@dataclass(frozen=True, repr=False)
class Program:
    """A finite list of rules over an explicit signature."""

    rules: tuple[Rule, ...]
    signature: Signature = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(self.rules))
        occurring = Signature(
            name
            for r in self.rules
            for name in atoms_of(r.to_formula())
        )
        if self.signature is None:
            object.__setattr__(self, "signature", occurring)
        elif not occurring.issubset(self.signature):
            extra = set(occurring) - set(self.signature)
            raise ValueError(
                f"signature is missing occurring atoms: {sorted(extra)}"
            )

    def is_nonnested(self) -> bool:
        return all(r.is_nonnested() for r in self.rules)

    def to_theory(self) -> Theory:
        return Theory(tuple(r.to_formula() for r in self.rules), self.signature)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __repr__(self) -> str:
        return program_to_text(self)


# --- printing ----------------------------------------------------------

def _raw(f: Formula) -> str:
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, And):
        return f"({_raw(f.left)} & {_raw(f.right)})"
    if isinstance(f, Or):
        return f"({_raw(f.left)} | {_raw(f.right)})"
    if isinstance(f, Implies):
        return f"({_raw(f.antecedent)} -> {_raw(f.consequent)})"
    raise TypeError(f"not a formula: {f!r}")


# Binding strengths used by the sugared printer; parenthesize a subterm
# whenever its own strength is below what the context requires.
_PREC_IMPLIES = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_NEG = 4
_PREC_ATOM = 5


def _sugared(f: Formula, context: int) -> str:
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, Atom):
        return f.name
    if f == TOP:
        return "top"
    if isinstance(f, Implies) and f.consequent == BOT:
        return "~" + _sugared(f.antecedent, _PREC_NEG)
    if isinstance(f, And):
        text = f"{_sugared(f.left, _PREC_AND)} & {_sugared(f.right, _PREC_AND + 1)}"
        return f"({text})" if context > _PREC_AND else text
    if isinstance(f, Or):
        text = f"{_sugared(f.left, _PREC_OR)} | {_sugared(f.right, _PREC_OR + 1)}"
        return f"({text})" if context > _PREC_OR else text
    if isinstance(f, Implies):
        text = (
            f"{_sugared(f.antecedent, _PREC_IMPLIES + 1)} -> "
            f"{_sugared(f.consequent, _PREC_IMPLIES)}"
        )
        return f"({text})" if context > _PREC_IMPLIES else text
    raise TypeError(f"not a formula: {f!r}")


def to_text(f: Formula, style: str = "sugared") -> str:
    """Render f in the text grammar.

    The raw style emits the five primitives fully parenthesized; the
    sugared style folds ~ and top back and drops redundant parentheses.
    Both round-trip through the parser.
    """
    if style == "raw":
        return _raw(f)
    if style == "sugared":
        return _sugared(f, _PREC_IMPLIES)
    raise ValueError(f"unknown style: {style!r}")


def rule_to_text(r: Rule) -> str:
    """One-line rule text; an implicit top body prints as the bare head."""
    if r.body == TOP:
        return to_text(r.head)
    return f"{to_text(r.body)} -> {to_text(r.head)}"


def program_to_text(p: Program) -> str:
    return "\n".join(rule_to_text(r) for r in p.rules)
