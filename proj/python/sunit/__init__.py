"""Python bindings for the sunit library.

Quaternions cross the boundary as strings such as ``"1/2 + 1/2*I - 1/2*J + 1/2*K"``
and exact rationals as strings such as ``"-4/5"``.
"""

import json

from ._sunit import (
    Error,
    InputError,
    PrecisionError,
    VerificationError,
    ZeroElementError,
    canonical,
    enumerate_by_norm,
    generating_set,
    height,
    is_hurwitz,
    is_s_unit,
    local_abs,
    multiply,
    neighbor_coverage,
    product_transitivity,
    reduced_norm,
    relator_values,
    unit_order_counts,
)
from ._sunit import _bounds_json

__all__ = [
    "Error",
    "InputError",
    "PrecisionError",
    "VerificationError",
    "ZeroElementError",
    "bounds",
    "canonical",
    "enumerate_by_norm",
    "generating_set",
    "height",
    "is_hurwitz",
    "is_s_unit",
    "local_abs",
    "multiply",
    "neighbor_coverage",
    "product_transitivity",
    "reduced_norm",
    "relator_values",
    "unit_order_counts",
]


def bounds(n, d, s, r1, r2, covolume, places=(), digits=64):
    """Bound report for an algebra shape as a dict of decimal strings.

    ``covolume`` may be a number or a decimal string; ``places`` lists the
    residue-field sizes of the finite places in S.
    """
    return json.loads(
        _bounds_json(n, d, s, r1, r2, str(covolume), [str(p) for p in places], digits)
    )
