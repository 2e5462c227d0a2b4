"""Rule profiles: the Horn rules a relation is closed under.

Profiles are written as expressions ``part(+part)*`` where a part is a
preset from profiles.yaml or a rule name. Case, ``-``, ``_`` and spaces
are ignored when matching names, so ``base+right-conjunction`` and
``BASE + RightConjunction`` mean the same profile.
"""
import functools
import logging
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple

from entrench.core._private import constants
from entrench.core._private.errors import (
    ProfileError, UnknownProfileError, UnknownRuleError)
from entrench.core._private.relation.consequence_rules import (
    CONSEQUENCE_PROPERTIES, NM_CORE)
from entrench.core._private.relation.entrenchment_rules import (
    ENTRENCHMENT_PROPERTIES, FRAME_AXIOMS)
from entrench.core._private.relation.horn import (
    KIND_PROVISIONAL, Property)
from entrench.core._private.utils import load_presets

logger = logging.getLogger(__name__)


def normalize_name(text: str) -> str:
    return "".join(ch for ch in text.lower() if ch not in "-_ ")


@functools.lru_cache(maxsize=None)
def _cached_presets() -> Dict[str, Any]:
    return load_presets()


def get_presets(extra_path: Optional[str] = None) -> Dict[str, Any]:
    if extra_path:
        return load_presets(extra_path)
    return _cached_presets()


class _Profile:
    """An immutable set of closure rule names over one rule registry."""
    registry: Dict[str, Property] = None
    mandatory: Tuple[str, ...] = ()
    namespace: str = None

    def __init__(self, rules: Iterable[str], name: Optional[str] = None):
        rules = set(rules) | set(self.mandatory)
        for rule in rules:
            prop = self.registry.get(rule)
            if prop is None:
                raise UnknownRuleError(rule)
            if not prop.closable:
                raise ProfileError(
                    "{} is a {} property and cannot be used as a closure "
                    "rule".format(rule, prop.kind))
            if prop.kind == KIND_PROVISIONAL and \
                    not constants.ENTRENCH_ENABLE_WEAK_TRANSITIVITY:
                raise ProfileError(
                    "{} is provisional; set "
                    "ENTRENCH_ENABLE_WEAK_TRANSITIVITY=true to close under "
                    "it".format(rule))
        self._rules = frozenset(rules)
        self._name = name

    @property
    def rules(self) -> FrozenSet[str]:
        return self._rules

    @property
    def name(self) -> Optional[str]:
        return self._name

    @property
    def properties(self) -> Tuple[Property, ...]:
        """Closure rules in registry order."""
        return tuple(prop for name, prop in self.registry.items()
                     if name in self._rules)

    def __contains__(self, rule: str) -> bool:
        return rule in self._rules

    def includes(self, *rules: str) -> bool:
        return all(rule in self._rules for rule in rules)

    def with_rules(self, *rules: str) -> "_Profile":
        return type(self)(self._rules | frozenset(rules),
                          name="+".join([str(self)] + list(rules)))

    def __eq__(self, other):
        return type(self) is type(other) and self._rules == other._rules

    def __hash__(self):
        return hash((type(self).__name__, self._rules))

    def __repr__(self):
        return "{}({})".format(type(self).__name__, self)

    def __str__(self):
        if self._name:
            return self._name
        extra = [p.name for p in self.properties
                 if p.name not in self.mandatory]
        return "+".join(["core"] + extra)


class RuleProfile(_Profile):
    """Closure rules of an entrenchment relation, frame axioms included."""
    registry = ENTRENCHMENT_PROPERTIES
    mandatory = FRAME_AXIOMS
    namespace = "entrenchment"


class NMProfile(_Profile):
    """Closure rules of a consequence relation, the core four included."""
    registry = CONSEQUENCE_PROPERTIES
    mandatory = NM_CORE
    namespace = "consequence"


def resolve_rule_name(text: str, registry: Dict[str, Property]) -> str:
    wanted = normalize_name(text)
    for name in registry:
        if normalize_name(name) == wanted:
            return name
    raise UnknownRuleError(text.strip())


def _resolve(expression: str, profile_cls, presets_path: Optional[str]):
    namespace = get_presets(presets_path).get(profile_cls.namespace, {})
    by_name = {normalize_name(name): preset
               for name, preset in namespace.items()}
    rules = set()
    parts = [part.strip() for part in expression.split("+")]
    if not expression.strip() or not all(parts):
        raise UnknownProfileError(expression)
    for part in parts:
        preset = by_name.get(normalize_name(part))
        if preset is not None:
            rules.update(preset["rules"])
            continue
        try:
            rules.add(resolve_rule_name(part, profile_cls.registry))
        except UnknownRuleError:
            raise UnknownProfileError(part) from None
    logger.debug("Profile %s resolved to %s", expression, sorted(rules))
    return profile_cls(
        [resolve_rule_name(rule, profile_cls.registry) for rule in rules],
        name=expression.strip())


def entrenchment_profile(expression: str,
                         presets_path: Optional[str] = None) -> RuleProfile:
    return _resolve(expression, RuleProfile, presets_path)


def consequence_profile(expression: str,
                        presets_path: Optional[str] = None) -> NMProfile:
    return _resolve(expression, NMProfile, presets_path)


def entrenchment_profile_of_rules(names: Iterable[str]) -> RuleProfile:
    return RuleProfile(
        [resolve_rule_name(n, ENTRENCHMENT_PROPERTIES) for n in names])


def consequence_profile_of_rules(names: Iterable[str]) -> NMProfile:
    return NMProfile(
        [resolve_rule_name(n, CONSEQUENCE_PROPERTIES) for n in names])
