"""Harmonic analysis on simplicial spherical manifolds."""

import json

from ._core import (
    ArgumentError,
    ConsistencyError,
    __version__,
    multiplicity_o4_s5,
    periodic_basis,
    periodic_count_o3,
    periodic_count_o4,
    run_cli,
    trivial_multiplicity,
    verify_all,
    verify_invariance,
    wigner_d,
)
from . import _core


def character_table(n):
    return json.loads(_core.character_table_json(n))


def reduce(chain, max_degree):
    return json.loads(_core.reduce_json(chain, max_degree))


__all__ = [
    "ArgumentError",
    "ConsistencyError",
    "__version__",
    "character_table",
    "multiplicity_o4_s5",
    "periodic_basis",
    "periodic_count_o3",
    "periodic_count_o4",
    "reduce",
    "run_cli",
    "trivial_multiplicity",
    "verify_all",
    "verify_invariance",
    "wigner_d",
]
