"""Families of hypersurfaces in R^4 sharing a curve as a common isoasymptotic.

Thin wrapper over the C++ core: expression parsing with symbolic
differentiation, the R^4 moving frame, verification of the
common-isoasymptotic conditions, and projected mesh export.
"""

import json as _json

from isoasym._core import (
    Expr,
    IsoasymError,
    example_config,
    example_names,
    frenet,
    mesh_obj,
    parse,
    verify_json,
)

__all__ = [
    "Expr",
    "IsoasymError",
    "example_config",
    "example_names",
    "frenet",
    "mesh_obj",
    "parse",
    "verify",
    "verify_json",
]


def verify(config_json):
    """Verification report for a JSON config, as a dict."""
    return _json.loads(verify_json(config_json))
