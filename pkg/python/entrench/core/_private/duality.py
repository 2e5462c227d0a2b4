"""Translations between entrenchment and consequence relations.

=====  ==========================  =====================================
map    direction                   definition
=====  ==========================  =====================================
N      entrenchment -> consequence a |~ b  iff  ~b ⪯ ~a
P      consequence -> entrenchment a ⪯ b   iff  ~b |~ ~a
Nw     entrenchment -> consequence a |~ b  iff  ~a | ~b ⪯ ~a
Pw     consequence -> entrenchment a ⪯ b   iff  ~a | ~b |~ ~a
Ptr    consequence -> entrenchment a ⪯ b   iff  a |~ chain leads from ~b to ~a
=====  ==========================  =====================================

Mapped relations declare the mandatory rules of their kind as profile,
named after the map; whether they actually satisfy more (or less) is a
question for the property checks.
"""
from collections import OrderedDict
from typing import Callable, Dict, NamedTuple

import numpy as np

from entrench.core._private.logic.semantics import ClassAlgebra
from entrench.core._private.relation.consequence import ConsequenceRelation
from entrench.core._private.relation.entrenchment import (
    EntrenchmentRelation)
from entrench.core._private.relation.horn import transitive_closure
from entrench.core._private.relation.profiles import NMProfile, RuleProfile


def _contrapose(m: np.ndarray, t: ClassAlgebra) -> np.ndarray:
    # out[a, b] = m[~b, ~a]
    return m[np.ix_(t.negation, t.negation)].T


def _contrapose_arrow(m: np.ndarray, t: ClassAlgebra) -> np.ndarray:
    # out[a, b] = m[~a | ~b, ~a] = m[~(a & b), ~a]
    return m[t.negation[t.meet], t.negation[:, None]]


def _mapped_name(map_name: str, relation) -> str:
    return "{}({})".format(map_name, relation.profile)


def map_N(rel: EntrenchmentRelation) -> ConsequenceRelation:
    t = rel.algebra
    return ConsequenceRelation(
        rel.universe, _contrapose(rel.pairs, t),
        NMProfile((), name=_mapped_name("N", rel)))


def map_P(cons: ConsequenceRelation) -> EntrenchmentRelation:
    t = cons.algebra
    return EntrenchmentRelation(
        cons.universe, _contrapose(cons.pairs, t),
        RuleProfile((), name=_mapped_name("P", cons)))


def map_N_arrow(rel: EntrenchmentRelation) -> ConsequenceRelation:
    t = rel.algebra
    return ConsequenceRelation(
        rel.universe, _contrapose_arrow(rel.pairs, t),
        NMProfile((), name=_mapped_name("Nw", rel)))


def map_P_arrow(cons: ConsequenceRelation) -> EntrenchmentRelation:
    t = cons.algebra
    return EntrenchmentRelation(
        cons.universe, _contrapose_arrow(cons.pairs, t),
        RuleProfile((), name=_mapped_name("Pw", cons)))


def map_P_tr(cons: ConsequenceRelation) -> EntrenchmentRelation:
    """a ⪯ b iff ~b |~ d1, d1 |~ d2, ..., dn |~ ~a for some n >= 0."""
    t = cons.algebra
    chains = transitive_closure(cons.pairs)
    return EntrenchmentRelation(
        cons.universe, _contrapose(chains, t),
        RuleProfile((), name=_mapped_name("Ptr", cons)))


class DualityMap(NamedTuple):
    name: str
    source: str
    target: str
    apply: Callable


MAPS: Dict[str, DualityMap] = OrderedDict(
    (m.name, m) for m in (
        DualityMap("N", "entrenchment", "consequence", map_N),
        DualityMap("P", "consequence", "entrenchment", map_P),
        DualityMap("Nw", "entrenchment", "consequence", map_N_arrow),
        DualityMap("Pw", "consequence", "entrenchment", map_P_arrow),
        DualityMap("Ptr", "consequence", "entrenchment", map_P_tr),
    ))
