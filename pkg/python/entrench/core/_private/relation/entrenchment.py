"""Entrenchment relations: ``holds(a, b)`` reads "b is at least as
entrenched as a", a ⪯ b."""
from typing import Optional, Sequence

from entrench.core._private.logic.semantics import (
    AtomUniverse, SemanticClass)
from entrench.core._private.relation.class_relation import (
    ClassRelation, Statement)
from entrench.core._private.relation.entrenchment_rules import (
    ENTRENCHMENT_PROPERTIES)
from entrench.core._private.relation.horn import PropertyReport
from entrench.core._private.relation.profiles import RuleProfile


class EntrenchmentRelation(ClassRelation):
    symbol = "<="

    def intersection(self, other: "EntrenchmentRelation"
                     ) -> "EntrenchmentRelation":
        self.universe.check_same(other.universe)
        return EntrenchmentRelation(
            self.universe, self.pairs & other.pairs, self.profile)


def close_entrenchment(statements: Sequence[Statement], profile: RuleProfile,
                       universe: Optional[AtomUniverse] = None
                       ) -> EntrenchmentRelation:
    """Least relation containing ``statements`` closed under ``profile``.

    ``universe`` is only needed when there are no statements.
    """
    return EntrenchmentRelation.close(statements, profile, universe)


def dominance(universe: AtomUniverse) -> EntrenchmentRelation:
    """The smallest entrenchment relation: a ⪯ b iff a ⊢ b."""
    return close_entrenchment([], RuleProfile(()), universe)


def holds(rel: EntrenchmentRelation, a: SemanticClass,
          b: SemanticClass) -> bool:
    return rel.holds(a, b)


def check_entrenchment_properties(rel: EntrenchmentRelation
                                  ) -> PropertyReport:
    return rel.check(ENTRENCHMENT_PROPERTIES.values())
