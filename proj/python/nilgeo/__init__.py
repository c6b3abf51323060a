"""Thin wrappers over the _nilgeo extension.

Algebras cross the boundary as JSON (see the repository README for the
schema); these helpers accept either a JSON string or a plain dict and
hand back parsed dicts. Rationals are "p/q" strings throughout.
"""

import json

import _nilgeo as _core

AlgebraError = _core.AlgebraError

__all__ = [
    "AlgebraError",
    "catalog",
    "catalog_names",
    "inspect",
    "isospec",
    "oracle_check",
    "paper_verify",
]


def _as_text(algebra):
    if isinstance(algebra, str):
        return algebra
    return json.dumps(algebra)


def catalog_names():
    return list(_core.catalog_names())


def catalog(name):
    """Catalog algebra as a dict in algebra-JSON form."""
    return json.loads(_core.catalog_json(name))


def inspect(algebra, source="<python>"):
    """Full diagnostic report: properties, homogeneous structure, censuses."""
    return json.loads(_core.inspect_json(_as_text(algebra), source))


def isospec(first, second, mode="symbolic", bound=64):
    """Isospectrality criteria for a pair; lattices come from the
    documents' lattice blocks when present."""
    return json.loads(_core.isospec_json(_as_text(first), _as_text(second), mode, bound))


def oracle_check(algebra):
    """Closed-form geometry vs definition-based oracles; returns totals."""
    return json.loads(_core.oracle_check_json(_as_text(algebra)))


def paper_verify():
    """Re-derivation of every published value for the 9-dimensional pair."""
    return json.loads(_core.paper_verify_json())
