"""Properties of entrenchment relations.

``r[x, y]`` reads ``x ⪯ y``: y is at least as entrenched as x. Variables
are named alpha, beta, gamma and the lambdas take them as ``a, b, c``.
Shorthands: ``t.join`` is ∨, ``t.meet`` is ∧, ``t.entails`` is ⊢.
"""
from collections import OrderedDict
from typing import Dict, Optional

import numpy as np

from entrench.core._private.logic.semantics import ClassAlgebra
from entrench.core._private.relation.horn import (
    ChainRule, HornRule, KIND_CHECK_ONLY, KIND_INFORMATIONAL, Property,
    Witness, bool_product, weak_scatter, weak_view)

FRAME_AXIOMS = ("Reflexivity", "LeftMonotonicity", "LogicalEquivalence")


class Reflexivity(HornRule):
    name = "Reflexivity"
    variables = ("alpha",)
    conclusion = staticmethod(lambda t, a: (a, a))

    def derive(self, r, t):
        return np.eye(t.size, dtype=bool)


class LeftMonotonicity(HornRule):
    name = "LeftMonotonicity"
    variables = ("alpha", "beta", "gamma")
    conditions = (lambda t, a, b, c: t.entails[a, b],)
    premises = (lambda t, a, b, c: (b, c),)
    conclusion = staticmethod(lambda t, a, b, c: (a, c))

    def derive(self, r, t):
        return bool_product(t.entails, r)


class Dominance(HornRule):
    name = "Dominance"
    kind = KIND_CHECK_ONLY
    variables = ("alpha", "beta")
    conditions = (lambda t, a, b: t.entails[a, b],)
    conclusion = staticmethod(lambda t, a, b: (a, b))

    def derive(self, r, t):
        return t.entails.copy()


class LogicalEquivalence(HornRule):
    name = "LogicalEquivalence"
    variables = ("alpha", "beta", "gamma")
    conditions = (lambda t, a, b, c: t.entails[a, b],
                  lambda t, a, b, c: t.entails[b, a])
    premises = (lambda t, a, b, c: (c, a),)
    conclusion = staticmethod(lambda t, a, b, c: (c, b))

    def derive(self, r, t):
        # equivalent classes are the same class
        return r.copy()


class WeakEquivalence(HornRule):
    name = "WeakEquivalence"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (t.join[a, b], b),
                lambda t, a, b, c: (t.join[a, b], a),
                lambda t, a, b, c: (t.join[a, c], a))
    conclusion = staticmethod(lambda t, a, b, c: (t.join[b, c], b))

    def derive(self, r, t):
        x = weak_view(r, t)
        return weak_scatter(bool_product(x & x.T, x), t)


class Equivalence(HornRule):
    name = "Equivalence"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (a, b),
                lambda t, a, b, c: (b, a),
                lambda t, a, b, c: (c, a))
    conclusion = staticmethod(lambda t, a, b, c: (c, b))

    def derive(self, r, t):
        return bool_product(r, r & r.T)


class WeakLeftDisjunction(HornRule):
    name = "WeakLeftDisjunction"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (t.join[a, b], a),
                lambda t, a, b, c: (t.join[a, c], a))
    conclusion = staticmethod(
        lambda t, a, b, c: (t.join[t.join[a, b], c], a))

    def derive(self, r, t):
        x = weak_view(r, t)
        dx = np.zeros_like(x)
        for a in range(t.size):
            xs = np.flatnonzero(x[a])
            dx[a, t.join[np.ix_(xs, xs)]] = True
        return weak_scatter(dx, t)


class LeftDisjunction(HornRule):
    name = "LeftDisjunction"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (b, a),
                lambda t, a, b, c: (c, a))
    conclusion = staticmethod(lambda t, a, b, c: (t.join[b, c], a))

    def derive(self, r, t):
        out = np.zeros_like(r)
        for a in range(t.size):
            below = np.flatnonzero(r[:, a])
            out[t.join[np.ix_(below, below)], a] = True
        return out


class WeakBoundedCut(HornRule):
    name = "WeakBoundedCut"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (t.join[t.join[a, b], c], t.join[a, b]),
                lambda t, a, b, c: (t.join[a, b], a))
    conclusion = staticmethod(lambda t, a, b, c: (t.join[a, c], a))

    def derive(self, r, t):
        x = weak_view(r, t)
        dx = np.zeros_like(x)
        for a in range(t.size):
            bs = np.flatnonzero(x[a])
            dx[a] = x[t.join[a, bs]].any(axis=0)
        return weak_scatter(dx, t)


class BoundedCut(HornRule):
    name = "BoundedCut"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (c, t.join[a, b]),
                lambda t, a, b, c: (b, a))
    conclusion = staticmethod(lambda t, a, b, c: (c, a))

    def derive(self, r, t):
        out = np.zeros_like(r)
        for a in range(t.size):
            bs = np.flatnonzero(r[:, a])
            out[:, a] = r[:, t.join[a, bs]].any(axis=1)
        return out


class WeakBoundedRightMonotonicity(HornRule):
    name = "WeakBoundedRightMonotonicity"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (t.join[a, c], a),
                lambda t, a, b, c: (t.join[a, b], a))
    conclusion = staticmethod(
        lambda t, a, b, c: (t.join[t.join[a, b], c], t.join[a, b]))

    def derive(self, r, t):
        x = weak_view(r, t)
        dx = np.zeros_like(x)
        for a in range(t.size):
            xs = np.flatnonzero(x[a])
            dx[t.join[a, xs][:, None], xs[None, :]] = True
        return weak_scatter(dx, t)


class BoundedRightMonotonicity(HornRule):
    name = "BoundedRightMonotonicity"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (c, a),
                lambda t, a, b, c: (b, a))
    conclusion = staticmethod(lambda t, a, b, c: (c, t.join[a, b]))

    def derive(self, r, t):
        out = np.zeros_like(r)
        for a in range(t.size):
            below = np.flatnonzero(r[:, a])
            out[np.ix_(below, t.join[a, below])] = True
        return out


class Acyclicity(ChainRule):
    """a0 ⪯ an, an ⪯ an-1, ..., a1 ⪯ a0 give an ⪯ a0."""
    name = "Acyclicity"


class WeakAcyclicity(ChainRule):
    """a0∨a1 ⪯ a0, ..., an∨a0 ⪯ an give a0∨an ⪯ a0."""
    name = "WeakAcyclicity"
    weak = True


class RightMonotonicity(HornRule):
    name = "RightMonotonicity"
    variables = ("alpha", "beta", "gamma")
    conditions = (lambda t, a, b, c: t.entails[b, c],)
    premises = (lambda t, a, b, c: (a, b),)
    conclusion = staticmethod(lambda t, a, b, c: (a, c))

    def derive(self, r, t):
        return bool_product(r, t.entails)


class RightConjunction(HornRule):
    name = "RightConjunction"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (c, a),
                lambda t, a, b, c: (c, b))
    conclusion = staticmethod(lambda t, a, b, c: (c, t.meet[a, b]))

    def derive(self, r, t):
        out = np.zeros_like(r)
        for c in range(t.size):
            above = np.flatnonzero(r[c])
            out[c, t.meet[np.ix_(above, above)]] = True
        return out


class Transitivity(HornRule):
    name = "Transitivity"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (a, b),
                lambda t, a, b, c: (b, c))
    conclusion = staticmethod(lambda t, a, b, c: (a, c))

    def derive(self, r, t):
        return bool_product(r, r)


class WeakRightMonotonicity(HornRule):
    """alpha∨gamma ⪯ alpha and alpha ⊢ beta give beta∨gamma ⪯ beta.

    The weak counterpart of Right Monotonicity that makes weak bases grow
    along ⊢. Reported for information only.
    """
    name = "WeakRightMonotonicity"
    kind = KIND_INFORMATIONAL
    variables = ("alpha", "beta", "gamma")
    conditions = (lambda t, a, b, c: t.entails[a, b],)
    premises = (lambda t, a, b, c: (t.join[a, c], a),)
    conclusion = staticmethod(lambda t, a, b, c: (t.join[b, c], b))

    def derive(self, r, t):
        x = weak_view(r, t)
        return weak_scatter(bool_product(t.entails.T, x), t)


class Connectivity(Property):
    name = "Connectivity"
    kind = KIND_CHECK_ONLY
    variables = ("alpha", "beta")

    def find_violation(self, r: np.ndarray,
                       t: ClassAlgebra) -> Optional[Witness]:
        missing = ~(r | r.T)
        if not missing.any():
            return None
        return tuple(int(v) for v in np.argwhere(missing)[0])

    def is_violated_by(self, r, t, witness) -> bool:
        a, b = witness
        return not (r[a, b] or r[b, a])


class Conjunctiveness(Property):
    """alpha ⪯ alpha∧beta or beta ⪯ alpha∧beta."""
    name = "Conjunctiveness"
    kind = KIND_CHECK_ONLY
    variables = ("alpha", "beta")

    def find_violation(self, r: np.ndarray,
                       t: ClassAlgebra) -> Optional[Witness]:
        rows = t.index[:, None]
        cols = t.index[None, :]
        missing = ~r[rows, t.meet] & ~r[cols, t.meet]
        if not missing.any():
            return None
        return tuple(int(v) for v in np.argwhere(missing)[0])

    def is_violated_by(self, r, t, witness) -> bool:
        a, b = witness
        both = t.meet[a, b]
        return not (r[a, both] or r[b, both])


ENTRENCHMENT_PROPERTIES: Dict[str, Property] = OrderedDict(
    (prop.name, prop) for prop in (
        Reflexivity(),
        LeftMonotonicity(),
        Dominance(),
        LogicalEquivalence(),
        WeakEquivalence(),
        Equivalence(),
        WeakLeftDisjunction(),
        LeftDisjunction(),
        WeakBoundedCut(),
        BoundedCut(),
        WeakBoundedRightMonotonicity(),
        BoundedRightMonotonicity(),
        Acyclicity(),
        WeakAcyclicity(),
        RightMonotonicity(),
        RightConjunction(),
        Transitivity(),
        Connectivity(),
        Conjunctiveness(),
        WeakRightMonotonicity(),
    ))
