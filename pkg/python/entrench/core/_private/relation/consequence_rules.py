"""Rules for nonmonotonic consequence relations.

``r[x, y]`` reads ``x |~ y``.
"""
from collections import OrderedDict
from typing import Dict, Optional

import numpy as np

from entrench.core._private.logic.semantics import ClassAlgebra
from entrench.core._private.relation.horn import (
    ChainRule, HornRule, KIND_CHECK_ONLY, KIND_PROVISIONAL, Property,
    Witness, bool_product, weak_scatter, weak_view)

NM_CORE = ("Supraclassicality", "LeftLogicalEquivalence", "RightWeakening",
           "And")


class Supraclassicality(HornRule):
    name = "Supraclassicality"
    variables = ("alpha", "beta")
    conditions = (lambda t, a, b: t.entails[a, b],)
    conclusion = staticmethod(lambda t, a, b: (a, b))

    def derive(self, r, t):
        return t.entails.copy()


class LeftLogicalEquivalence(HornRule):
    name = "LeftLogicalEquivalence"
    variables = ("alpha", "beta", "gamma")
    conditions = (lambda t, a, b, c: t.entails[a, b],
                  lambda t, a, b, c: t.entails[b, a])
    premises = (lambda t, a, b, c: (a, c),)
    conclusion = staticmethod(lambda t, a, b, c: (b, c))

    def derive(self, r, t):
        # equivalent classes are the same class
        return r.copy()


class RightWeakening(HornRule):
    name = "RightWeakening"
    variables = ("alpha", "beta", "gamma")
    conditions = (lambda t, a, b, c: t.entails[b, c],)
    premises = (lambda t, a, b, c: (a, b),)
    conclusion = staticmethod(lambda t, a, b, c: (a, c))

    def derive(self, r, t):
        return bool_product(r, t.entails)


class And(HornRule):
    name = "And"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (a, b),
                lambda t, a, b, c: (a, c))
    conclusion = staticmethod(lambda t, a, b, c: (a, t.meet[b, c]))

    def derive(self, r, t):
        out = np.zeros_like(r)
        for a in range(t.size):
            above = np.flatnonzero(r[a])
            out[a, t.meet[np.ix_(above, above)]] = True
        return out


class Cut(HornRule):
    name = "Cut"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (a, b),
                lambda t, a, b, c: (t.meet[a, b], c))
    conclusion = staticmethod(lambda t, a, b, c: (a, c))

    def derive(self, r, t):
        out = np.zeros_like(r)
        for a in range(t.size):
            bs = np.flatnonzero(r[a])
            out[a] = r[t.meet[a, bs]].any(axis=0)
        return out


class CautiousMonotonicity(HornRule):
    name = "CautiousMonotonicity"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (a, b),
                lambda t, a, b, c: (a, c))
    conclusion = staticmethod(lambda t, a, b, c: (t.meet[a, b], c))

    def derive(self, r, t):
        out = np.zeros_like(r)
        for a in range(t.size):
            above = np.flatnonzero(r[a])
            out[np.ix_(t.meet[a, above], above)] = True
        return out


class Loop(ChainRule):
    """a0 |~ a1, ..., an-1 |~ an, an |~ a0 give a0 |~ an."""
    name = "Loop"


class Or(HornRule):
    name = "Or"
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (a, c),
                lambda t, a, b, c: (b, c))
    conclusion = staticmethod(lambda t, a, b, c: (t.join[a, b], c))

    def derive(self, r, t):
        out = np.zeros_like(r)
        for c in range(t.size):
            below = np.flatnonzero(r[:, c])
            out[t.join[np.ix_(below, below)], c] = True
        return out


class WeakTransitivity(HornRule):
    """alpha∨beta |~ alpha and beta∨gamma |~ beta give alpha∨gamma |~ alpha.

    The printed form of the first premise is garbled; this is the reading
    that matches the conclusion's shape. Provisional.
    """
    name = "WeakTransitivity"
    kind = KIND_PROVISIONAL
    variables = ("alpha", "beta", "gamma")
    premises = (lambda t, a, b, c: (t.join[a, b], a),
                lambda t, a, b, c: (t.join[b, c], b))
    conclusion = staticmethod(lambda t, a, b, c: (t.join[a, c], a))

    def derive(self, r, t):
        x = weak_view(r, t)
        return weak_scatter(bool_product(x, x), t)


class RationalMonotonicity(Property):
    """alpha |≁ ~beta and alpha |~ gamma give alpha∧beta |~ gamma."""
    name = "RationalMonotonicity"
    kind = KIND_CHECK_ONLY
    variables = ("alpha", "beta", "gamma")

    def find_violation(self, r: np.ndarray,
                       t: ClassAlgebra) -> Optional[Witness]:
        for a in range(t.size):
            bs = np.flatnonzero(~r[a, t.negation])
            cs = np.flatnonzero(r[a])
            if not len(bs) or not len(cs):
                continue
            missing = ~r[np.ix_(t.meet[a, bs], cs)]
            if missing.any():
                i, j = np.argwhere(missing)[0]
                return a, int(bs[i]), int(cs[j])
        return None

    def is_violated_by(self, r, t, witness) -> bool:
        a, b, c = witness
        return bool(not r[a, t.negation[b]] and r[a, c]
                    and not r[t.meet[a, b], c])


CONSEQUENCE_PROPERTIES: Dict[str, Property] = OrderedDict(
    (prop.name, prop) for prop in (
        Supraclassicality(),
        LeftLogicalEquivalence(),
        RightWeakening(),
        And(),
        Cut(),
        CautiousMonotonicity(),
        Loop(),
        Or(),
        WeakTransitivity(),
        RationalMonotonicity(),
    ))
