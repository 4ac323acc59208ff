"""Size bounds for the exponential parts of the toolkit.

Every bound can be overridden by an environment variable carrying the
``BEI_`` prefix, e.g. ``BEI_MAX_LABELING_N=11``.
"""

import os
from contextlib import contextmanager

DEFAULTS = {
    "MAX_LABELING_N": 10,
    "MAX_PATH_N": 12,
    "MAX_SIMPLE_PATHS": 10**6,
    "MAX_INTERSECT_VARS": 11,
    "MAX_PRIME_N": 20,
    "MAX_COMPONENT_N": 16,
    "MAX_STATES": 4096,
}


_overrides: dict[str, int] = {}


def get(name):
    """Return the bound ``name``; explicit overrides beat ``BEI_<name>``, which beats the default."""
    if name in _overrides:
        return _overrides[name]
    raw = os.environ.get("BEI_" + name)
    if raw is None:
        return DEFAULTS[name]
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"BEI_{name} must be an integer, got {raw!r}") from None


@contextmanager
def overridden(**values):
    """Temporarily replace bounds, e.g. ``with overridden(MAX_LABELING_N=12): ...``."""
    unknown = set(values) - set(DEFAULTS)
    if unknown:
        raise KeyError(f"unknown bounds: {sorted(unknown)}")
    saved = dict(_overrides)
    _overrides.update(values)
    try:
        yield
    finally:
        _overrides.clear()
        _overrides.update(saved)
