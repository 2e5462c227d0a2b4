import collections.abc
import copy
import json
import logging
import os
from typing import Any, Dict, List, Optional

import yaml

import entrench.core
from entrench.core._private.cli_logger import cli_logger
from entrench.core._private.constants import ENTRENCH_PROFILES_ENV
from entrench.core._private.errors import ProfileError

logger = logging.getLogger(__name__)

ENTRENCH_PROFILES_PATH = os.path.join(
    os.path.dirname(entrench.core.__file__), "profiles.yaml")
ENTRENCH_PROFILES_SCHEMA_PATH = os.path.join(
    os.path.dirname(entrench.core.__file__), "profiles-schema.json")

PRESET_NAMESPACES = ("entrenchment", "consequence")


def load_yaml(path: str) -> Dict[str, Any]:
    with open(path) as f:
        return yaml.safe_load(f) or {}


def _load_overlay(path: str) -> Dict[str, Any]:
    try:
        return load_yaml(path)
    except OSError as e:
        raise ProfileError("{}: {}".format(path, e.strerror or e)) from e
    except yaml.YAMLError as e:
        raise ProfileError("{}: Not valid YAML: {}".format(path, e)) from e


def validate_presets(presets: Dict[str, Any],
                     source: Optional[str] = None) -> None:
    prefix = "{}: ".format(source) if source else ""
    if not isinstance(presets, dict):
        raise ProfileError("{}Presets must be a mapping, got {}".format(
            prefix, type(presets).__name__))

    with open(ENTRENCH_PROFILES_SCHEMA_PATH) as f:
        schema = json.load(f)

    import jsonschema
    try:
        jsonschema.validate(presets, schema)
    except jsonschema.ValidationError as e:
        # The full error repeats the schema and the instance,
        # only worth showing in verbose mode
        reason = str(e) if cli_logger.verbosity > 0 else e.message + "."
        raise ProfileError("{}JSON schema validation error: {}".format(
            prefix, reason)) from None


def update_nested_dict(target_dict, new_dict):
    for k, v in new_dict.items():
        if isinstance(v, collections.abc.Mapping):
            target_dict[k] = update_nested_dict(target_dict.get(k, {}), v)
        else:
            target_dict[k] = v
    return target_dict


def merge_presets(base: Dict[str, Any],
                  updates: Dict[str, Any]) -> Dict[str, Any]:
    return update_nested_dict(copy.deepcopy(base), updates)


def merge_preset_hierarchy(namespace: Dict[str, Any], name: str,
                           seen: Optional[List[str]] = None) -> Dict[str, Any]:
    """Resolve the ``from`` chain of preset ``name``.

    Rules accumulate along the chain, base rules first; every other key of
    the preset overrides the inherited value.
    """
    seen = list(seen or [])
    if name in seen:
        raise ProfileError("Preset inheritance cycle: {}".format(
            " -> ".join(seen + [name])))
    if name not in namespace:
        raise ProfileError("Preset '{}' inherits from unknown preset "
                           "'{}'".format(seen[-1], name))
    preset = namespace[name]
    base_name = preset.get("from", None)
    if not base_name:
        merged = copy.deepcopy(preset)
        merged["rules"] = list(preset.get("rules", []))
        return merged

    base = merge_preset_hierarchy(namespace, base_name, seen + [name])
    rules = list(base["rules"])
    for rule in preset.get("rules", []):
        if rule not in rules:
            rules.append(rule)
    merged = merge_presets(base, preset)
    merged.pop("from", None)
    merged["rules"] = rules
    return merged


def load_presets(extra_path: Optional[str] = None) -> Dict[str, Any]:
    """Shipped presets, overlaid with $ENTRENCH_PROFILES and ``extra_path``.

    Returns the presets of each namespace with inheritance resolved.
    """
    presets = load_yaml(ENTRENCH_PROFILES_PATH)
    validate_presets(presets, ENTRENCH_PROFILES_PATH)
    overlays = [os.environ.get(ENTRENCH_PROFILES_ENV), extra_path]
    for path in overlays:
        if not path:
            continue
        logger.debug("Merging profile presets from %s", path)
        overlay = _load_overlay(path)
        validate_presets(overlay, path)
        presets = merge_presets(presets, overlay)

    resolved = {}
    for namespace in PRESET_NAMESPACES:
        entries = presets.get(namespace, {})
        resolved[namespace] = {
            name: merge_preset_hierarchy(entries, name) for name in entries}
    return resolved
