"""Seeded random relations for the verification suites.

Statements are drawn uniformly from the class pairs of the first
``n_atoms`` of ``ATOM_NAMES`` and then closed under a profile, so a
relation is fully determined by ``(seed, n_atoms, k_statements,
profile)``.
"""
from typing import List, Optional, Tuple

import numpy as np

from entrench.core._private.logic.semantics import (
    AtomUniverse, SemanticClass)
from entrench.core._private.relation.consequence import (
    ConsequenceRelation, close_consequence)
from entrench.core._private.relation.entrenchment import (
    EntrenchmentRelation, close_entrenchment)
from entrench.core._private.relation.profiles import NMProfile, RuleProfile

ATOM_NAMES = ("p", "q", "r", "s")


def universe_of(n_atoms: int) -> AtomUniverse:
    if not 1 <= n_atoms <= len(ATOM_NAMES):
        raise ValueError("n_atoms must be between 1 and {}, got {}".format(
            len(ATOM_NAMES), n_atoms))
    return AtomUniverse(ATOM_NAMES[:n_atoms])


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Generator of sample ``index`` in a run seeded with ``seed``."""
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def random_statements(rng: np.random.Generator, universe: AtomUniverse,
                      k_statements: int
                      ) -> List[Tuple[SemanticClass, SemanticClass]]:
    drawn = rng.integers(0, universe.class_count, size=(k_statements, 2))
    return [(SemanticClass(universe, int(a)), SemanticClass(universe, int(b)))
            for a, b in drawn]


def random_frame(seed: int, n_atoms: int, k_statements: int,
                 profile: RuleProfile,
                 rng: Optional[np.random.Generator] = None
                 ) -> EntrenchmentRelation:
    universe = universe_of(n_atoms)
    if rng is None:
        rng = np.random.default_rng(seed)
    statements = random_statements(rng, universe, k_statements)
    return close_entrenchment(statements, profile, universe)


def random_consequence(seed: int, n_atoms: int, k_statements: int,
                       profile: NMProfile,
                       rng: Optional[np.random.Generator] = None
                       ) -> ConsequenceRelation:
    universe = universe_of(n_atoms)
    if rng is None:
        rng = np.random.default_rng(seed)
    statements = random_statements(rng, universe, k_statements)
    return close_consequence(statements, profile, universe)
