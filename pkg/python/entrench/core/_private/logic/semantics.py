"""Semantic classes of propositional formulas over a finite atom universe.

A class is the set of valuations satisfying a formula, stored as an integer
bit mask: bit ``i`` is set when valuation ``i`` satisfies the formula, and
valuation ``i`` makes atom ``j`` true iff bit ``j`` of ``i`` is set. The
mask doubles as the class index, so the classes of an ``n`` atom universe
are exactly the integers ``0 .. 2^(2^n) - 1``.
"""
import functools
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Tuple

import numpy as np

from entrench.core._private.constants import (
    ENTRENCH_MAX_ATOMS, ENTRENCH_MAX_RELATION_ATOMS)
from entrench.core._private.errors import (
    UniverseMismatchError, UniverseTooLargeError)

ATOM_PATTERN = re.compile(r"^[a-z][a-z0-9_]*$")
RESERVED_WORDS = ("true", "false")

COMBINE_KINDS = ("and", "or", "implies")


@dataclass(frozen=True)
class AtomUniverse:
    atoms: Tuple[str, ...]

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise ValueError("An atom universe needs at least one atom")
        if len(atoms) > ENTRENCH_MAX_ATOMS:
            raise UniverseTooLargeError(
                "At most {} atoms are supported, got {}".format(
                    ENTRENCH_MAX_ATOMS, len(atoms)))
        for name in atoms:
            if not ATOM_PATTERN.match(name) or name in RESERVED_WORDS:
                raise ValueError("Invalid atom name '{}'".format(name))
        if len(set(atoms)) != len(atoms):
            raise ValueError("Duplicate atom names in {}".format(atoms))

    @classmethod
    def of(cls, *atoms: str) -> "AtomUniverse":
        if len(atoms) == 1 and " " in atoms[0]:
            atoms = tuple(atoms[0].split())
        return cls(tuple(atoms))

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def valuation_count(self) -> int:
        return 1 << len(self.atoms)

    @property
    def class_count(self) -> int:
        return 1 << self.valuation_count

    @property
    def full_mask(self) -> int:
        return self.class_count - 1

    def atom_mask(self, name: str) -> int:
        position = self.atoms.index(name)
        mask = 0
        for valuation in range(self.valuation_count):
            if valuation >> position & 1:
                mask |= 1 << valuation
        return mask

    def top(self) -> "SemanticClass":
        return SemanticClass(self, self.full_mask)

    def bottom(self) -> "SemanticClass":
        return SemanticClass(self, 0)

    def atom(self, name: str) -> "SemanticClass":
        return SemanticClass(self, self.atom_mask(name))

    def classes(self) -> Iterator["SemanticClass"]:
        for mask in range(self.class_count):
            yield SemanticClass(self, mask)

    def check_same(self, other: "AtomUniverse"):
        if self != other:
            raise UniverseMismatchError(
                "Universe mismatch: {} vs {}".format(
                    " ".join(self.atoms), " ".join(other.atoms)))

    def __str__(self):
        return " ".join(self.atoms)


@dataclass(frozen=True)
class SemanticClass:
    universe: AtomUniverse
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < self.universe.class_count:
            raise ValueError("Mask {} out of range for universe {}".format(
                self.mask, self.universe))

    @property
    def index(self) -> int:
        return self.mask

    def valuations(self) -> List[int]:
        return [v for v in range(self.universe.valuation_count)
                if self.mask >> v & 1]

    def is_top(self) -> bool:
        return self.mask == self.universe.full_mask

    def is_bottom(self) -> bool:
        return self.mask == 0

    def entails(self, other: "SemanticClass") -> bool:
        return entails(self, other)

    def implies(self, other: "SemanticClass") -> "SemanticClass":
        return combine("implies", self, other)

    def __and__(self, other: "SemanticClass") -> "SemanticClass":
        return combine("and", self, other)

    def __or__(self, other: "SemanticClass") -> "SemanticClass":
        return combine("or", self, other)

    def __invert__(self) -> "SemanticClass":
        return negate(self)

    def __str__(self):
        return describe_class(self)


def entails(a: SemanticClass, b: SemanticClass) -> bool:
    a.universe.check_same(b.universe)
    return (a.mask & ~b.mask) == 0


def combine(kind: str, a: SemanticClass, b: SemanticClass) -> SemanticClass:
    a.universe.check_same(b.universe)
    if kind == "and":
        mask = a.mask & b.mask
    elif kind == "or":
        mask = a.mask | b.mask
    elif kind == "implies":
        mask = (a.universe.full_mask ^ a.mask) | b.mask
    else:
        raise ValueError("Unknown connective '{}', expected one of {}".format(
            kind, ", ".join(COMBINE_KINDS)))
    return SemanticClass(a.universe, mask)


def negate(a: SemanticClass) -> SemanticClass:
    return SemanticClass(a.universe, a.universe.full_mask ^ a.mask)


def describe_valuation(universe: AtomUniverse, valuation: int) -> str:
    literals = []
    for position, name in enumerate(universe.atoms):
        if valuation >> position & 1:
            literals.append(name)
        else:
            literals.append("~" + name)
    return " & ".join(literals)


def describe_class(c: SemanticClass) -> str:
    """Canonical text of a class: its minterms in valuation order."""
    if c.is_bottom():
        return "false"
    if c.is_top():
        return "true"
    minterms = [describe_valuation(c.universe, v) for v in c.valuations()]
    if len(minterms) == 1:
        return minterms[0]
    return " | ".join("({})".format(m) for m in minterms)


@dataclass(frozen=True)
class Theory:
    """A deductively closed set, given by the class that generates it.

    In a finite universe every deductively closed set is principal, so
    ``Cn(generator)`` is the whole theory.
    """
    generator: SemanticClass

    @property
    def universe(self) -> AtomUniverse:
        return self.generator.universe

    def contains(self, delta: SemanticClass) -> bool:
        return entails(self.generator, delta)

    def is_consistent(self) -> bool:
        return not self.generator.is_bottom()

    def consequences(self) -> FrozenSet[SemanticClass]:
        return consequences(self)

    def __str__(self):
        return "Cn({})".format(describe_class(self.generator))


def consequences(t: Theory) -> FrozenSet[SemanticClass]:
    universe = t.universe
    base = t.generator.mask
    free = universe.full_mask ^ base
    result = set()
    # walk every submask of the free bits
    extra = free
    while True:
        result.add(SemanticClass(universe, base | extra))
        if extra == 0:
            break
        extra = (extra - 1) & free
    return frozenset(result)


class ClassAlgebra:
    """Lookup tables of the Boolean algebra of classes, indexed by mask."""

    def __init__(self, universe: AtomUniverse):
        if universe.size > ENTRENCH_MAX_RELATION_ATOMS:
            raise UniverseTooLargeError(
                "Relations support at most {} atoms ({} classes), "
                "universe has {}".format(
                    ENTRENCH_MAX_RELATION_ATOMS,
                    1 << (1 << ENTRENCH_MAX_RELATION_ATOMS), universe.size))
        self.universe = universe
        self.size = universe.class_count
        self.top = universe.full_mask
        self.bottom = 0
        masks = np.arange(self.size, dtype=np.intp)
        self.index = masks
        self.meet = masks[:, None] & masks[None, :]
        self.join = masks[:, None] | masks[None, :]
        self.negation = self.top ^ masks
        self.implication = self.negation[:, None] | masks[None, :]
        self.entails = self.meet == masks[:, None]
        self.strictly_entails = self.entails & ~np.eye(self.size, dtype=bool)
        for table in (self.meet, self.join, self.negation, self.implication,
                      self.entails, self.strictly_entails):
            table.setflags(write=False)

    def cls(self, index: int) -> SemanticClass:
        return SemanticClass(self.universe, int(index))

    def describe(self, index: int) -> str:
        return describe_class(self.cls(index))


@functools.lru_cache(maxsize=None)
def class_algebra(universe: AtomUniverse) -> ClassAlgebra:
    return ClassAlgebra(universe)
