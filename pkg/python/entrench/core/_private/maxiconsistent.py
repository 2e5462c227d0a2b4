"""Maxiconsistent and weak maxiconsistent inference over an entrenchment
relation, computed from the definitions by enumerating theories.

Every deductively closed set of a finite universe is ``Cn(g)`` for one
generator class ``g``, so the theories are enumerated as generator masks:
``Cn(g) ⊆ S`` iff every class entailed by ``g`` is in ``S``, and
``Cn(g') ⊋ Cn(g)`` iff ``g'`` strictly entails ``g``.

For a premise alpha:

- ``Coh(alpha)`` is every beta with ``beta ⋠ ~alpha``;
- a base is a theory inside ``Coh(alpha)``, a weak base one whose
  alpha-conditionalization ``{alpha -> d : d in U}`` is inside it;
- extensions are ``Cn(U, alpha)`` for the maximal bases U, weak
  extensions are the maximal weak bases themselves;
- alpha infers beta when beta is in every extension.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Tuple

import numpy as np

from entrench.core._private.logic.semantics import (
    ClassAlgebra, SemanticClass, Theory, consequences)
from entrench.core._private.relation.entrenchment import (
    EntrenchmentRelation)
from entrench.core._private.relation.horn import bool_product

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoherentSet:
    premise: SemanticClass
    members: FrozenSet[SemanticClass]

    def __contains__(self, c: SemanticClass) -> bool:
        return c in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[SemanticClass]:
        return iter(sorted(self.members, key=lambda c: c.mask))

    def is_empty(self) -> bool:
        return not self.members


@dataclass(frozen=True)
class ExtensionSet:
    premise: SemanticClass
    extensions: Tuple[Theory, ...]
    weak: bool = False

    def __iter__(self) -> Iterator[Theory]:
        return iter(self.extensions)

    def __len__(self):
        return len(self.extensions)

    def is_empty(self) -> bool:
        return not self.extensions

    def generators(self) -> List[int]:
        return [u.generator.mask for u in self.extensions]


def _check_premise(rel: EntrenchmentRelation, *classes: SemanticClass):
    for c in classes:
        rel.universe.check_same(c.universe)


def coherence_matrix(rel: EntrenchmentRelation) -> np.ndarray:
    """``coh[alpha, beta]`` is true when beta is in Coh(alpha)."""
    key = "coherence"
    if key not in rel.cache:
        t = rel.algebra
        coh = ~rel.pairs[:, t.negation].T
        coh.setflags(write=False)
        rel.cache[key] = coh
    return rel.cache[key]


def base_matrix(rel: EntrenchmentRelation) -> np.ndarray:
    """``ok[alpha, g]``: Cn(g) is a base of alpha."""
    key = "bases"
    if key not in rel.cache:
        t = rel.algebra
        outside = ~coherence_matrix(rel)
        # some consequence of g falls outside Coh(alpha)
        ok = ~bool_product(outside, t.entails.T)
        ok.setflags(write=False)
        rel.cache[key] = ok
    return rel.cache[key]


def weak_base_matrix(rel: EntrenchmentRelation) -> np.ndarray:
    """``ok[alpha, g]``: Cn(g) is a weak base of alpha."""
    key = "weak-bases"
    if key not in rel.cache:
        t = rel.algebra
        outside = ~coherence_matrix(rel)
        # outside_cond[alpha, d]: alpha -> d is not coherent with alpha
        outside_cond = outside[t.index[:, None], t.implication]
        ok = ~bool_product(outside_cond, t.entails.T)
        ok.setflags(write=False)
        rel.cache[key] = ok
    return rel.cache[key]


def _maximal_base_generators(rel: EntrenchmentRelation,
                             alpha: int) -> np.ndarray:
    key = ("max-bases", alpha)
    if key not in rel.cache:
        t = rel.algebra
        candidates = np.flatnonzero(base_matrix(rel)[alpha])
        dominated = t.strictly_entails[
            np.ix_(candidates, candidates)].any(axis=0)
        rel.cache[key] = candidates[~dominated]
    return rel.cache[key]


def _maximal_weak_base_generators(rel: EntrenchmentRelation,
                                  alpha: int) -> np.ndarray:
    """Weak bases whose conditionalization is maximal.

    Ties on the conditionalization go to the larger theory, which is the
    one containing alpha.
    """
    key = ("max-weak-bases", alpha)
    if key not in rel.cache:
        t = rel.algebra
        candidates = np.flatnonzero(weak_base_matrix(rel)[alpha])
        keys = t.implication[alpha, candidates]
        wider_key = t.strictly_entails[np.ix_(keys, keys)]
        same_key = keys[:, None] == keys[None, :]
        larger = same_key & t.strictly_entails[np.ix_(candidates, candidates)]
        dominated = (wider_key | larger).any(axis=0)
        rel.cache[key] = candidates[~dominated]
    return rel.cache[key]


def _extension_generators(rel: EntrenchmentRelation, alpha: int,
                          weak: bool) -> np.ndarray:
    key = ("extensions", alpha, weak)
    if key not in rel.cache:
        t = rel.algebra
        if weak:
            generators = _maximal_weak_base_generators(rel, alpha)
        else:
            generators = np.unique(
                t.meet[_maximal_base_generators(rel, alpha), alpha])
        rel.cache[key] = np.sort(generators)
    return rel.cache[key]


def _sceptical_generator(rel: EntrenchmentRelation, alpha: int,
                         weak: bool) -> int:
    generators = _extension_generators(rel, alpha, weak)
    # the intersection of Cn(g_i) is Cn(g_1 | g_2 | ...); none gives Cn(false)
    return int(np.bitwise_or.reduce(generators)) if len(generators) else 0


def _theories(rel: EntrenchmentRelation, masks) -> List[Theory]:
    return [Theory(SemanticClass(rel.universe, int(m)))
            for m in sorted(int(m) for m in masks)]


def coherent_set(rel: EntrenchmentRelation,
                 a: SemanticClass) -> CoherentSet:
    _check_premise(rel, a)
    row = coherence_matrix(rel)[a.mask]
    members = frozenset(SemanticClass(rel.universe, int(m))
                        for m in np.flatnonzero(row))
    return CoherentSet(a, members)


def conditionalize(u: Theory, a: SemanticClass) -> FrozenSet[SemanticClass]:
    """``{a -> d : d in u}``."""
    u.universe.check_same(a.universe)
    return frozenset(a.implies(d) for d in consequences(u))


def bases(rel: EntrenchmentRelation, a: SemanticClass) -> List[Theory]:
    _check_premise(rel, a)
    return _theories(rel, np.flatnonzero(base_matrix(rel)[a.mask]))


def max_bases(rel: EntrenchmentRelation, a: SemanticClass) -> List[Theory]:
    _check_premise(rel, a)
    return _theories(rel, _maximal_base_generators(rel, a.mask))


def weak_bases(rel: EntrenchmentRelation, a: SemanticClass) -> List[Theory]:
    _check_premise(rel, a)
    return _theories(rel, np.flatnonzero(weak_base_matrix(rel)[a.mask]))


def weak_max_bases(rel: EntrenchmentRelation,
                   a: SemanticClass) -> List[Theory]:
    _check_premise(rel, a)
    return _theories(rel, _maximal_weak_base_generators(rel, a.mask))


def extensions(rel: EntrenchmentRelation, a: SemanticClass,
               weak: bool = False) -> ExtensionSet:
    _check_premise(rel, a)
    generators = _extension_generators(rel, a.mask, weak)
    return ExtensionSet(a, tuple(_theories(rel, generators)), weak)


def sceptical(rel: EntrenchmentRelation, a: SemanticClass,
              weak: bool = False) -> Theory:
    """Intersection of the extensions; the inconsistent theory if none."""
    _check_premise(rel, a)
    return Theory(SemanticClass(
        rel.universe, _sceptical_generator(rel, a.mask, weak)))


def infers(rel: EntrenchmentRelation, a: SemanticClass, b: SemanticClass,
           weak: bool = False) -> bool:
    _check_premise(rel, a, b)
    generator = _sceptical_generator(rel, a.mask, weak)
    return bool(rel.algebra.entails[generator, b.mask])


def credulous_infers(rel: EntrenchmentRelation, a: SemanticClass,
                     b: SemanticClass, weak: bool = False) -> bool:
    _check_premise(rel, a, b)
    generators = _extension_generators(rel, a.mask, weak)
    return bool(rel.algebra.entails[generators, b.mask].any())


def extension_counts(rel: EntrenchmentRelation,
                     weak: bool = False) -> np.ndarray:
    """Number of (weak) extensions of every premise class."""
    return np.array([len(_extension_generators(rel, alpha, weak))
                     for alpha in range(rel.algebra.size)], dtype=np.intp)


def inference_matrix(rel: EntrenchmentRelation, weak: bool = False,
                     credulous: bool = False) -> np.ndarray:
    """``m[a, b]`` for every pair of classes: a (weak) infers b."""
    key = ("inference", weak, credulous)
    if key not in rel.cache:
        t: ClassAlgebra = rel.algebra
        m = np.zeros((t.size, t.size), dtype=bool)
        for alpha in range(t.size):
            if credulous:
                generators = _extension_generators(rel, alpha, weak)
                m[alpha] = t.entails[generators].any(axis=0)
            else:
                m[alpha] = t.entails[_sceptical_generator(rel, alpha, weak)]
        m.setflags(write=False)
        rel.cache[key] = m
        logger.debug("Inference matrix (weak=%s, credulous=%s) has %d pairs",
                     weak, credulous, int(m.sum()))
    return rel.cache[key]
