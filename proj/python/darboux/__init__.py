# Copyright 2026 The darboux authors.
# SPDX-License-Identifier: Apache-2.0
"""Exact hypergeometric evaluations from Darboux coverings."""

import json
from fractions import Fraction

from ._darboux import (
    DarbouxError,
    branching,
    catalog_ids,
    catalog_json,
    check_dramifico,
    classify,
    covering_keys,
    default_catalog_path,
    genus_table,
    listed_points,
    principal_divisor,
    rhs_divisor,
    torsion_order,
    verify,
    verify_all,
)
from . import _darboux


def _strs(triple):
    return [str(Fraction(v)) if not isinstance(v, str) else v for v in triple]


def gauss_series(params, order):
    """Coefficients of 2F1(A, B; C; z) through z^order as Fractions."""
    return [Fraction(c) for c in _darboux.gauss_series(_strs(params), order)]


def derive(base, target, catalog=None):
    """Record for the target parameters, contiguous to the record `base`."""
    return json.loads(_darboux.derive(base, _strs(target), catalog))["records"][0]


def records(catalog=None):
    return json.loads(catalog_json(catalog))["records"]


__all__ = [
    "DarbouxError",
    "branching",
    "catalog_ids",
    "catalog_json",
    "check_dramifico",
    "classify",
    "covering_keys",
    "default_catalog_path",
    "derive",
    "gauss_series",
    "genus_table",
    "listed_points",
    "principal_divisor",
    "records",
    "rhs_divisor",
    "torsion_order",
    "verify",
    "verify_all",
]
