"""Satisfaction in the logic of here-and-there and everything built on it.

An interpretation is a pair (X, Y) of atom sets with X subseteq Y
subseteq the signature; X holds the atoms true "here", atoms outside Y
are false, the rest are undefined.  Satisfaction follows the standard
two-world reading: an implication holds when it holds locally and its
classical reading holds at Y.  Total interpretations (X = Y) collapse to
classical logic.

Everything here enumerates the 3^n interpretation space directly, so an
explicit cap (default 16 atoms) protects against accidental blowups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .formula import (
    And,
    Atom,
    Bottom,
    Formula,
    Implies,
    Or,
    Signature,
    Theory,
    atoms_of,
)

DEFAULT_CAP = 16


class CapExceededError(Exception):
    """Raised when an enumeration would exceed the configured atom cap."""

    def __init__(self, needed: int, cap: int):
        self.needed = needed
        self.cap = cap
        super().__init__(
            f"enumeration over {needed} atoms exceeds the cap of {cap}"
        )


class SignatureMismatchError(Exception):
    """Raised when a formula mentions atoms outside an interpretation's signature."""


def format_atom_set(atoms: Iterable[str]) -> str:
    names = sorted(atoms)
    return " ".join(names) if names else "∅"


@dataclass(frozen=True)
class HtInterpretation:
    """A pair (here, there) of atom sets over a signature."""

    here: frozenset[str]
    there: frozenset[str]
    over: Signature

    def __post_init__(self) -> None:
        object.__setattr__(self, "here", frozenset(self.here))
        object.__setattr__(self, "there", frozenset(self.there))
        if not self.here <= self.there:
            raise ValueError(
                f"here-set must be contained in there-set: "
                f"{format_atom_set(self.here)} | {format_atom_set(self.there)}"
            )
        if not self.there <= set(self.over):
            extra = self.there - set(self.over)
            raise ValueError(f"atoms outside the signature: {sorted(extra)}")

    def total(self) -> bool:
        return self.here == self.there

    def display(self) -> str:
        return f"{format_atom_set(self.here)} | {format_atom_set(self.there)}"

    def __repr__(self) -> str:
        return f"({self.display()})"


def _mask(index: dict[str, int], atoms: frozenset[str]) -> int:
    value = 0
    for name in atoms:
        value |= 1 << index[name]
    return value


def _submasks(mask: int) -> Iterator[int]:
    """All submasks of mask in ascending numeric order."""
    positions = [i for i in range(mask.bit_length()) if (mask >> i) & 1]
    for k in range(1 << len(positions)):
        sub = 0
        for j, position in enumerate(positions):
            if (k >> j) & 1:
                sub |= 1 << position
        yield sub


@dataclass(frozen=True)
class InterpretationSet:
    """A finite set of interpretations over one signature.

    Members are kept deduplicated in the canonical enumeration order
    (there-set mask ascending, then here-set mask), so equal sets compare
    equal structurally.
    """

    members: tuple[HtInterpretation, ...]
    signature: Signature = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if self.signature is None:
            if not members:
                raise ValueError("empty set needs an explicit signature")
            object.__setattr__(self, "signature", members[0].over)
        for m in members:
            if m.over != self.signature:
                raise ValueError(
                    f"interpretation over {m.over!r} in a set over {self.signature!r}"
                )
        index = {name: i for i, name in enumerate(self.signature)}
        ordered = sorted(
            dict.fromkeys(members),
            key=lambda m: (_mask(index, m.there), _mask(index, m.here)),
        )
        object.__setattr__(self, "members", tuple(ordered))

    def __iter__(self) -> Iterator[HtInterpretation]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def as_pairs(self) -> frozenset[tuple[frozenset[str], frozenset[str]]]:
        return frozenset((m.here, m.there) for m in self.members)

    def total_closure_violation(
        self,
    ) -> Optional[tuple[HtInterpretation, HtInterpretation]]:
        """A total member whose family is incomplete, with a missing (X, Y)."""
        have = self.as_pairs()
        index = {name: i for i, name in enumerate(self.signature)}
        atoms = tuple(self.signature)
        for m in self.members:
            if not m.total():
                continue
            for sub in _submasks(_mask(index, m.there)):
                here = frozenset(a for a in atoms if (sub >> index[a]) & 1)
                if (here, m.there) not in have:
                    missing = HtInterpretation(here, m.there, self.signature)
                    return m, missing
        return None

    def is_total_closed(self) -> bool:
        return self.total_closure_violation() is None

    def display_lines(self) -> list[str]:
        return [m.display() for m in self.members]


# --- satisfaction ------------------------------------------------------

def sat_classical(atoms_true: Iterable[str], f: Formula) -> bool:
    """Classical truth of f in the model given by a set of atoms."""
    true_set = atoms_true if isinstance(atoms_true, (set, frozenset)) else set(atoms_true)
    return _sat_classical(true_set, f)


def _sat_classical(true_set, f: Formula) -> bool:
    if isinstance(f, Atom):
        return f.name in true_set
    if isinstance(f, Bottom):
        return False
    if isinstance(f, And):
        return _sat_classical(true_set, f.left) and _sat_classical(true_set, f.right)
    if isinstance(f, Or):
        return _sat_classical(true_set, f.left) or _sat_classical(true_set, f.right)
    if isinstance(f, Implies):
        return (not _sat_classical(true_set, f.antecedent)) or _sat_classical(
            true_set, f.consequent
        )
    raise TypeError(f"not a formula: {f!r}")


def _sat_ht(here: frozenset[str], there: frozenset[str], f: Formula) -> bool:
    if isinstance(f, Atom):
        return f.name in here
    if isinstance(f, Bottom):
        return False
    if isinstance(f, And):
        return _sat_ht(here, there, f.left) and _sat_ht(here, there, f.right)
    if isinstance(f, Or):
        return _sat_ht(here, there, f.left) or _sat_ht(here, there, f.right)
    if isinstance(f, Implies):
        # Local condition plus the classical reading at the there-world.
        if not _sat_classical(there, f):
            return False
        return (not _sat_ht(here, there, f.antecedent)) or _sat_ht(
            here, there, f.consequent
        )
    raise TypeError(f"not a formula: {f!r}")


def sat_ht(interpretation: HtInterpretation, f: Formula) -> bool:
    """Here-and-there satisfaction of f at (here, there)."""
    if not atoms_of(f).issubset(interpretation.over):
        extra = set(atoms_of(f)) - set(interpretation.over)
        raise SignatureMismatchError(
            f"formula mentions atoms outside the signature: {sorted(extra)}"
        )
    return _sat_ht(interpretation.here, interpretation.there, f)


def _sat_theory(here: frozenset[str], there: frozenset[str], t: Theory) -> bool:
    return all(_sat_ht(here, there, f) for f in t.formulas)


# --- enumeration and model sets ----------------------------------------

def enumerate_interpretations(
    sig: Signature, cap: int = DEFAULT_CAP
) -> InterpretationSet:
    """All 3^n pairs (X, Y) with X subseteq Y subseteq sig, canonically ordered."""
    n = len(sig)
    if n > cap:
        raise CapExceededError(n, cap)
    atoms = tuple(sig)
    members = []
    for ymask in range(1 << n):
        there = frozenset(a for i, a in enumerate(atoms) if (ymask >> i) & 1)
        for xmask in _submasks(ymask):
            here = frozenset(a for i, a in enumerate(atoms) if (xmask >> i) & 1)
            members.append(HtInterpretation(here, there, sig))
    return InterpretationSet(tuple(members), sig)


def ht_models(t: Theory, cap: int = DEFAULT_CAP) -> InterpretationSet:
    """The interpretations over t's signature satisfying every formula of t."""
    everything = enumerate_interpretations(t.signature, cap)
    hits = tuple(m for m in everything if _sat_theory(m.here, m.there, t))
    return InterpretationSet(hits, t.signature)


def ht_countermodels(t: Theory, cap: int = DEFAULT_CAP) -> InterpretationSet:
    """The complement of ht_models; always total-closed."""
    everything = enumerate_interpretations(t.signature, cap)
    misses = tuple(m for m in everything if not _sat_theory(m.here, m.there, t))
    return InterpretationSet(misses, t.signature)


def ht_valid(f: Formula, cap: int = DEFAULT_CAP) -> bool:
    """True iff f holds at every interpretation over its own atoms.

    Validity is insensitive to enlarging the signature, so checking over
    the occurring atoms is enough.
    """
    sig = atoms_of(f)
    return all(
        _sat_ht(m.here, m.there, f)
        for m in enumerate_interpretations(sig, cap)
    )


@dataclass(frozen=True)
class EquivalenceResult:
    """Outcome of an equivalence check; witness satisfies exactly one side."""

    equivalent: bool
    witness: Optional[HtInterpretation] = None


def ht_equivalent(
    t1: Theory, t2: Theory, cap: int = DEFAULT_CAP
) -> EquivalenceResult:
    """Equivalence in here-and-there, decided over the union signature.

    By the known characterization this coincides with strong equivalence
    of the two theories.
    """
    union_sig = t1.signature | t2.signature
    left = t1.with_signature(union_sig)
    right = t2.with_signature(union_sig)
    for m in enumerate_interpretations(union_sig, cap):
        sat_left = _sat_theory(m.here, m.there, left)
        if sat_left != _sat_theory(m.here, m.there, right):
            return EquivalenceResult(False, m)
    return EquivalenceResult(True)


def equilibrium_models(
    t: Theory, cap: int = DEFAULT_CAP
) -> tuple[frozenset[str], ...]:
    """All Y with (Y, Y) a model of t and no (X, Y), X proper, a model."""
    sig = t.signature
    n = len(sig)
    if n > cap:
        raise CapExceededError(n, cap)
    atoms = tuple(sig)
    found = []
    for ymask in range(1 << n):
        there = frozenset(a for i, a in enumerate(atoms) if (ymask >> i) & 1)
        if not _sat_theory(there, there, t):
            continue
        minimal = True
        for xmask in _submasks(ymask):
            if xmask == ymask:
                continue
            here = frozenset(a for i, a in enumerate(atoms) if (xmask >> i) & 1)
            if _sat_theory(here, there, t):
                minimal = False
                break
        if minimal:
            found.append(there)
    return tuple(found)


def strong_equivalence_probe(
    t1: Theory, t2: Theory, context: Theory, cap: int = DEFAULT_CAP
) -> bool:
    """Behavioral strong-equivalence test for one added context theory.

    True iff t1 + context and t2 + context have the same equilibrium
    models over the union signature.  This is a spot check of
    ht_equivalent, not a replacement for it.
    """
    union_sig = t1.signature | t2.signature | context.signature
    left = t1.with_signature(union_sig).union(context)
    right = t2.with_signature(union_sig).union(context)
    return equilibrium_models(left, cap) == equilibrium_models(right, cap)
