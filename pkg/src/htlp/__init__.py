"""Here-and-there logic toolkit.

Parse propositional theories, enumerate their models and countermodels
in the logic of here-and-there, compute equilibrium models (answer
sets), decide strong equivalence, translate arbitrary theories into
strongly equivalent logic programs by two independent constructions, and
count programs modulo strong equivalence.
"""

from .formula import (
    BOT,
    TOP,
    And,
    Atom,
    Bottom,
    Formula,
    Implies,
    Or,
    Program,
    Rule,
    Signature,
    Theory,
    atoms_of,
    conj,
    disj,
    iff,
    is_literal,
    is_nested_expression,
    is_nonnested_rule,
    is_rule,
    neg,
    program_to_text,
    rule_to_text,
    to_text,
)
from .parser import ParseError, load_theory, parse, parse_theory
from .semantics import (
    DEFAULT_CAP,
    CapExceededError,
    EquivalenceResult,
    HtInterpretation,
    InterpretationSet,
    SignatureMismatchError,
    enumerate_interpretations,
    equilibrium_models,
    format_atom_set,
    ht_countermodels,
    ht_equivalent,
    ht_models,
    ht_valid,
    sat_classical,
    sat_ht,
    strong_equivalence_probe,
)
from .countermodels import (
    CountermodelRule,
    NotTotalClosedError,
    build_rule,
    program_from_set,
    theory_to_program_cm,
)
from .rewriting import (
    RewriteTrace,
    TraceStep,
    eliminate_connectives,
    estimated_rule_count,
    formula_to_program_syn,
    implication_of_programs,
    lemma1_rewrite,
    simplify,
    theory_to_program_syn,
)
from .dnf import DnfClause, build_clause, theory_to_dnf, theory_to_dnf_clauses
from .counting import (
    CountBoundExceededError,
    ProgramCount,
    count_bruteforce,
    count_formula,
    count_subset_filter,
)

__version__ = "0.1.0"

__all__ = [
    "BOT",
    "TOP",
    "And",
    "Atom",
    "Bottom",
    "CapExceededError",
    "CountBoundExceededError",
    "CountermodelRule",
    "DEFAULT_CAP",
    "DnfClause",
    "EquivalenceResult",
    "Formula",
    "HtInterpretation",
    "Implies",
    "InterpretationSet",
    "NotTotalClosedError",
    "Or",
    "ParseError",
    "Program",
    "ProgramCount",
    "RewriteTrace",
    "Rule",
    "Signature",
    "SignatureMismatchError",
    "Theory",
    "TraceStep",
    "atoms_of",
    "build_clause",
    "build_rule",
    "conj",
    "count_bruteforce",
    "count_formula",
    "count_subset_filter",
    "disj",
    "eliminate_connectives",
    "enumerate_interpretations",
    "equilibrium_models",
    "estimated_rule_count",
    "format_atom_set",
    "formula_to_program_syn",
    "ht_countermodels",
    "ht_equivalent",
    "ht_models",
    "ht_valid",
    "iff",
    "implication_of_programs",
    "is_literal",
    "is_nested_expression",
    "is_nonnested_rule",
    "is_rule",
    "lemma1_rewrite",
    "load_theory",
    "neg",
    "parse",
    "parse_theory",
    "program_from_set",
    "program_to_text",
    "rule_to_text",
    "sat_classical",
    "sat_ht",
    "simplify",
    "strong_equivalence_probe",
    "theory_to_dnf",
    "theory_to_dnf_clauses",
    "theory_to_program_cm",
    "theory_to_program_syn",
    "to_text",
]
