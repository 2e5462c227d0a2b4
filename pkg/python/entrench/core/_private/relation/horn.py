"""Horn rule machinery shared by entrenchment and consequence relations.

A relation over the classes of a universe is a square boolean matrix ``r``
where ``r[x, y]`` holds when ``x`` is related to ``y``. A property is a
universally quantified clause over class variables. Horn properties can
also be used as closure rules: ``derive`` returns every conclusion that one
application of the rule produces from ``r``, and ``saturate`` iterates all
rules of a profile up to the least fixpoint.

Each rule is written twice: declaratively through ``premises``,
``conditions`` and ``conclusion`` (evaluated one tuple at a time by the
naive oracle and by the witness search) and through a vectorised
``derive`` override used for closure and checking.
"""
import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import (
    Any, Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple)

import numpy as np

from entrench.core._private.logic.semantics import ClassAlgebra

logger = logging.getLogger(__name__)

KIND_RULE = "rule"
KIND_CHECK_ONLY = "check-only"
KIND_INFORMATIONAL = "informational"
KIND_PROVISIONAL = "provisional"

STATUS_HOLDS = "holds"
STATUS_FAILS = "fails"

Pair = Tuple[int, int]
Witness = Tuple[int, ...]


def bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean matrix product. Counts stay below 2^24, exact in float32."""
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0


def transitive_closure(g: np.ndarray) -> np.ndarray:
    """Pairs joined by a path of length one or more."""
    closure = g.copy()
    while True:
        step = closure | bool_product(closure, closure)
        if np.array_equal(step, closure):
            return closure
        closure = step


def find_path(g: np.ndarray, source: int, target: int) -> Optional[List[int]]:
    """Shortest path of length one or more from source to target."""
    parents = {}
    queue = deque()
    for nxt in np.flatnonzero(g[source]):
        nxt = int(nxt)
        if nxt not in parents:
            parents[nxt] = source
            queue.append(nxt)
    while queue:
        node = queue.popleft()
        if node == target:
            path = [node]
            while len(path) == 1 or path[-1] != source:
                path.append(parents[path[-1]])
            path.reverse()
            return path
        for nxt in np.flatnonzero(g[node]):
            nxt = int(nxt)
            if nxt not in parents:
                parents[nxt] = node
                queue.append(nxt)
    return None


def weak_view(r: np.ndarray, t: ClassAlgebra) -> np.ndarray:
    """The matrix ``x[a, b] = r[a | b, a]`` the weak rules are phrased in."""
    return r[t.join, t.index[:, None]]


def weak_scatter(x: np.ndarray, t: ClassAlgebra) -> np.ndarray:
    """Inverse direction of weak_view for a matrix of new entries."""
    out = np.zeros((t.size, t.size), dtype=bool)
    rows, cols = np.nonzero(x)
    out[t.join[rows, cols], rows] = True
    return out


class Property:
    """A checkable clause over class variables."""
    name: str = None
    kind: str = KIND_RULE
    variables: Tuple[str, ...] = ()

    @property
    def closable(self) -> bool:
        return self.kind in (KIND_RULE, KIND_PROVISIONAL)

    def find_violation(self, r: np.ndarray,
                       t: ClassAlgebra) -> Optional[Witness]:
        raise NotImplementedError

    def is_violated_by(self, r: np.ndarray, t: ClassAlgebra,
                       witness: Witness) -> bool:
        raise NotImplementedError

    def describe_witness(self, t: ClassAlgebra,
                         witness: Witness) -> Dict[str, str]:
        return {name: t.describe(value)
                for name, value in zip(self.variables, witness)}

    def __repr__(self):
        return "<{} {}>".format(type(self).__name__, self.name)


class HornRule(Property):
    """Premises and conclusion are relation atoms, conditions are ⊢ tests.

    ``premises`` and ``conclusion`` map ``(t, *values)`` to a ``(row, col)``
    index pair, ``conditions`` map it to a boolean. They must accept numpy
    index arrays as well as plain integers.
    """
    premises: Tuple[Callable[..., Tuple[Any, Any]], ...] = ()
    conditions: Tuple[Callable[..., Any], ...] = ()
    conclusion: Callable[..., Tuple[Any, Any]] = None

    @property
    def arity(self) -> int:
        return len(self.variables)

    def _instantiations(self, t: ClassAlgebra):
        # First variable as a scalar, the rest as flattened grids
        rest = []
        if self.arity > 1:
            grids = np.meshgrid(*([t.index] * (self.arity - 1)),
                                indexing="ij")
            rest = [grid.ravel() for grid in grids]
        for first in range(t.size):
            yield (first, *rest)

    def _applicable(self, r: np.ndarray, t: ClassAlgebra, values) -> Any:
        ok = np.ones(np.shape(values[-1]), dtype=bool)
        for condition in self.conditions:
            ok = ok & condition(t, *values)
        for premise in self.premises:
            ok = ok & r[premise(t, *values)]
        return ok

    def derive(self, r: np.ndarray, t: ClassAlgebra) -> np.ndarray:
        out = np.zeros_like(r)
        for values in self._instantiations(t):
            ok = self._applicable(r, t, values)
            if not ok.any():
                continue
            row, col = (np.broadcast_to(v, ok.shape)
                        for v in self.conclusion(t, *values))
            out[row[ok], col[ok]] = True
        return out

    def find_violation(self, r: np.ndarray,
                       t: ClassAlgebra) -> Optional[Witness]:
        if not (self.derive(r, t) & ~r).any():
            return None
        for values in self._instantiations(t):
            ok = self._applicable(r, t, values)
            ok = ok & ~r[self.conclusion(t, *values)]
            if ok.any():
                position = int(np.argmax(ok)) if np.ndim(ok) else 0
                return tuple(
                    int(v[position]) if np.ndim(v) else int(v)
                    for v in values)
        raise AssertionError(
            "{} derived a missing pair without an instantiation".format(
                self.name))

    def is_violated_by(self, r: np.ndarray, t: ClassAlgebra,
                       witness: Witness) -> bool:
        if len(witness) != self.arity:
            return False
        if not bool(self._applicable(r, t, witness)):
            return False
        return not bool(r[self.conclusion(t, *witness)])

    def naive_derive(self, pairs: Set[Pair], t: ClassAlgebra) -> Set[Pair]:
        """One application over all tuples, without numpy vectorisation."""
        derived = set()
        for values in itertools.product(range(t.size), repeat=self.arity):
            if not all(bool(c(t, *values)) for c in self.conditions):
                continue
            if not all(_as_pair(p(t, *values)) in pairs
                       for p in self.premises):
                continue
            derived.add(_as_pair(self.conclusion(t, *values)))
        return derived


def _as_pair(index) -> Pair:
    return int(index[0]), int(index[1])


class ChainRule(Property):
    """Cycle rules of unbounded length over a graph view of the relation.

    With ``g`` the view, an edge ``g[y, x]`` plus a path from ``x`` to ``y``
    yields ``g[x, y]``. Chains longer than the class count repeat a class,
    so reachability covers every instance. Witnesses are the path nodes
    ``x .. y``.
    """
    weak: bool = False
    variables = ("chain",)

    def view(self, r: np.ndarray, t: ClassAlgebra) -> np.ndarray:
        return weak_view(r, t) if self.weak else r

    def unview(self, g: np.ndarray, t: ClassAlgebra) -> np.ndarray:
        return weak_scatter(g, t) if self.weak else g

    def derive(self, r: np.ndarray, t: ClassAlgebra) -> np.ndarray:
        g = self.view(r, t)
        return self.unview(g.T & transitive_closure(g), t)

    def find_violation(self, r: np.ndarray,
                       t: ClassAlgebra) -> Optional[Witness]:
        g = self.view(r, t)
        missing = g.T & transitive_closure(g) & ~g
        if not missing.any():
            return None
        x, y = (int(v) for v in np.argwhere(missing)[0])
        return tuple(find_path(g, x, y))

    def is_violated_by(self, r: np.ndarray, t: ClassAlgebra,
                       witness: Witness) -> bool:
        if len(witness) < 2:
            return False
        g = self.view(r, t)
        steps = all(g[a, b] for a, b in zip(witness, witness[1:]))
        return bool(steps and g[witness[-1], witness[0]]
                    and not g[witness[0], witness[-1]])

    def describe_witness(self, t: ClassAlgebra,
                         witness: Witness) -> Dict[str, str]:
        return {"chain": " ; ".join(t.describe(v) for v in witness)}

    def naive_derive(self, pairs: Set[Pair], t: ClassAlgebra) -> Set[Pair]:
        if self.weak:
            edges = {(x, y) for x in range(t.size) for y in range(t.size)
                     if (int(t.join[x, y]), x) in pairs}
        else:
            edges = set(pairs)
        successors: Dict[int, List[int]] = {}
        for x, y in edges:
            successors.setdefault(x, []).append(y)
        derived = set()
        for y, x in edges:
            # depth first search for a path x -> y
            seen = set()
            stack = list(successors.get(x, ()))
            while stack:
                node = stack.pop()
                if node == y:
                    derived.add((x, y))
                    break
                if node in seen:
                    continue
                seen.add(node)
                stack.extend(successors.get(node, ()))
        if self.weak:
            return {(int(t.join[x, y]), x) for x, y in derived}
        return derived


@dataclass(frozen=True)
class PropertyResult:
    name: str
    kind: str
    status: str
    witness: Optional[Witness] = None
    witness_text: Dict[str, str] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status == STATUS_HOLDS

    @property
    def counts_as_failure(self) -> bool:
        return not self.holds and self.kind in (KIND_RULE, KIND_CHECK_ONLY)

    def to_dict(self) -> Dict[str, Any]:
        result = {"property": self.name, "kind": self.kind,
                  "status": self.status}
        if self.witness is not None:
            result["witness"] = dict(self.witness_text)
        return result


@dataclass(frozen=True)
class PropertyReport:
    results: Tuple[PropertyResult, ...]

    def __getitem__(self, name: str) -> PropertyResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def __iter__(self):
        return iter(self.results)

    def holds(self, name: str) -> bool:
        return self[name].holds

    def failures(self) -> List[PropertyResult]:
        return [r for r in self.results if r.counts_as_failure]

    def to_dict(self) -> Dict[str, Any]:
        return {"properties": [r.to_dict() for r in self.results]}


def check_properties(r: np.ndarray, t: ClassAlgebra,
                     properties: Iterable[Property]) -> PropertyReport:
    results = []
    for prop in properties:
        witness = prop.find_violation(r, t)
        if witness is None:
            results.append(PropertyResult(prop.name, prop.kind, STATUS_HOLDS))
        else:
            logger.debug("%s fails with witness %s", prop.name, witness)
            results.append(PropertyResult(
                prop.name, prop.kind, STATUS_FAILS, witness,
                prop.describe_witness(t, witness)))
    return PropertyReport(tuple(results))


def saturate(r: np.ndarray, t: ClassAlgebra,
             rules: Sequence[Property]) -> np.ndarray:
    """Least fixpoint of ``rules`` above ``r`` by round-robin application."""
    closed = r.copy()
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for rule in rules:
            new = rule.derive(closed, t) & ~closed
            if new.any():
                closed |= new
                changed = True
    logger.debug("Saturated %d rules in %d rounds, %d pairs",
                 len(rules), rounds, int(closed.sum()))
    return closed


def naive_closure(statements: Iterable[Pair], t: ClassAlgebra,
                  rules: Sequence[Property]) -> np.ndarray:
    """Least fixpoint computed tuple by tuple from the declarative rules.

    Independent of every vectorised ``derive``; meant as an oracle for
    small universes only.
    """
    pairs = {(int(a), int(b)) for a, b in statements}
    changed = True
    while changed:
        changed = False
        for rule in rules:
            new = rule.naive_derive(pairs, t) - pairs
            if new:
                pairs |= new
                changed = True
    closed = np.zeros((t.size, t.size), dtype=bool)
    for a, b in pairs:
        closed[a, b] = True
    return closed
