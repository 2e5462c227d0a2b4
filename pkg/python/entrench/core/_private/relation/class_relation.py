import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from entrench.core._private.errors import UniverseMismatchError
from entrench.core._private.logic.semantics import (
    AtomUniverse, ClassAlgebra, SemanticClass, class_algebra)
from entrench.core._private.relation.horn import (
    Pair, PropertyReport, check_properties, saturate)

logger = logging.getLogger(__name__)

Statement = Tuple[SemanticClass, SemanticClass]


def statements_universe(statements: Sequence[Statement],
                        universe: Optional[AtomUniverse]) -> AtomUniverse:
    """The one universe shared by ``statements`` and ``universe``."""
    found = universe
    for left, right in statements:
        for c in (left, right):
            if found is None:
                found = c.universe
            else:
                found.check_same(c.universe)
    if found is None:
        raise UniverseMismatchError(
            "An empty statement list needs an explicit universe")
    return found


def statement_matrix(statements: Sequence[Statement],
                     t: ClassAlgebra) -> np.ndarray:
    r = np.zeros((t.size, t.size), dtype=bool)
    for left, right in statements:
        r[left.mask, right.mask] = True
    return r


class ClassRelation:
    """A binary relation on the classes of a universe, immutable.

    ``pairs`` is a read-only boolean matrix indexed by class masks.
    Derived data (coherent sets, inference matrices) may be memoised in
    ``cache`` since the relation never changes.
    """
    symbol = "R"

    def __init__(self, universe: AtomUniverse, pairs: np.ndarray, profile,
                 source_statements: Iterable[Statement] = ()):
        t = class_algebra(universe)
        pairs = np.array(pairs, dtype=bool)
        if pairs.shape != (t.size, t.size):
            raise ValueError("Relation over {} needs a {}x{} matrix, got {}"
                             .format(universe, t.size, t.size, pairs.shape))
        pairs.setflags(write=False)
        self._universe = universe
        self._pairs = pairs
        self._profile = profile
        self._statements = tuple(source_statements)
        self.cache: Dict[Any, Any] = {}

    @classmethod
    def close(cls, statements: Sequence[Statement], profile,
              universe: Optional[AtomUniverse] = None) -> "ClassRelation":
        universe = statements_universe(statements, universe)
        t = class_algebra(universe)
        pairs = saturate(statement_matrix(statements, t), t,
                         profile.properties)
        return cls(universe, pairs, profile, statements)

    @property
    def universe(self) -> AtomUniverse:
        return self._universe

    @property
    def algebra(self) -> ClassAlgebra:
        return class_algebra(self._universe)

    @property
    def pairs(self) -> np.ndarray:
        return self._pairs

    @property
    def profile(self):
        return self._profile

    @property
    def source_statements(self) -> Tuple[Statement, ...]:
        return self._statements

    @property
    def pair_count(self) -> int:
        return int(self._pairs.sum())

    def holds(self, a: SemanticClass, b: SemanticClass) -> bool:
        self._universe.check_same(a.universe)
        self._universe.check_same(b.universe)
        return bool(self._pairs[a.mask, b.mask])

    def pair_list(self) -> List[Pair]:
        return [(int(a), int(b)) for a, b in np.argwhere(self._pairs)]

    def check(self, properties) -> PropertyReport:
        return check_properties(self._pairs, self.algebra, properties)

    def is_closed(self) -> bool:
        report = self.check(self._profile.properties)
        return not report.failures()

    def same_pairs(self, other: "ClassRelation") -> bool:
        return (self._universe == other.universe
                and np.array_equal(self._pairs, other.pairs))

    def __eq__(self, other):
        return type(self) is type(other) and self.same_pairs(other)

    def __hash__(self):
        return hash((type(self).__name__, self._universe,
                     self._pairs.tobytes()))

    def describe_pairs(self) -> List[Tuple[str, str]]:
        t = self.algebra
        return [(t.describe(a), t.describe(b)) for a, b in self.pair_list()]

    def to_dict(self, summary: bool = False) -> Dict[str, Any]:
        result = {
            "atoms": list(self._universe.atoms),
            "relation": self.symbol,
            "profile": str(self._profile),
            "pair_count": self.pair_count,
        }
        if not summary:
            result["pairs"] = [list(p) for p in self.describe_pairs()]
        return result

    def __repr__(self):
        return "<{} over {}: {} pairs, profile {}>".format(
            type(self).__name__, self._universe, self.pair_count,
            self._profile)
