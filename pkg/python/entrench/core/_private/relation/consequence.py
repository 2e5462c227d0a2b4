"""Nonmonotonic consequence relations: ``holds(a, b)`` reads a |~ b."""
from typing import Optional, Sequence

from entrench.core._private.logic.semantics import AtomUniverse
from entrench.core._private.relation.class_relation import (
    ClassRelation, Statement)
from entrench.core._private.relation.consequence_rules import (
    CONSEQUENCE_PROPERTIES)
from entrench.core._private.relation.horn import PropertyReport
from entrench.core._private.relation.profiles import NMProfile


class ConsequenceRelation(ClassRelation):
    symbol = "|~"


def close_consequence(statements: Sequence[Statement], profile: NMProfile,
                      universe: Optional[AtomUniverse] = None
                      ) -> ConsequenceRelation:
    return ConsequenceRelation.close(statements, profile, universe)


def classical(universe: AtomUniverse) -> ConsequenceRelation:
    """⊢ itself as a consequence relation."""
    return close_consequence([], NMProfile(()), universe)


def check_nm_properties(cons: ConsequenceRelation) -> PropertyReport:
    return cons.check(CONSEQUENCE_PROPERTIES.values())
