"""Desk-scale resource bounds.

Built-in caps keep every operation exhaustive yet fast on a laptop.  The
environment variable LATTICE_MAX_ELEMENTS may lower (never raise) the
element-count caps.
"""

import os

MAX_ELEMENTS = 4096
MAX_CHAIN_ELEMENTS = 256
MAX_BOOLEAN_EXPONENT = 12
MAX_TREE_DEPTH = 6
MAX_VECTORS = 4096
MAX_REALIZATION_ELEMENTS = 256
MAX_REALIZATION_CONSTANTS = 64
MAX_AMBIENT_ELEMENTS = 64
MAX_SUBSTRUCTURE_CONSTANTS = 8
MAX_INDEPENDENCE_ATOMS = 24

ENV_VAR = "LATTICE_MAX_ELEMENTS"


def _env_cap():
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None


def element_cap(builtin=MAX_ELEMENTS):
    """Effective element cap: the built-in bound, lowered by the env var."""
    env = _env_cap()
    if env is None:
        return builtin
    return min(builtin, env)


def chain_cap():
    return element_cap(MAX_CHAIN_ELEMENTS)


def ambient_cap():
    return element_cap(MAX_AMBIENT_ELEMENTS)


def realization_cap():
    return element_cap(MAX_REALIZATION_ELEMENTS)
