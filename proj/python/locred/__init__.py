"""Python access to the locred library."""

import json

from ._locred import (
    LocredError,
    discriminant,
    factor,
    factor_mod_p,
    find_r,
    function_field_case,
    group_check,
    is_irreducible,
    local_certificate,
    period_minpoly,
    resultant,
    run_cli,
    scan,
)
from ._locred import construct as _construct
from ._locred import verify as _verify


def construct(degree, mode="padic", r_bound=1_000_000, scan_bound=1000, seed=0):
    """Build a certificate and return it as a dict."""
    return json.loads(_construct(degree, mode, r_bound, scan_bound, seed))


def verify(cert, scan_bound=None):
    """Verify a certificate given as a dict or JSON text; returns the verdict dict."""
    text = cert if isinstance(cert, str) else json.dumps(cert)
    return json.loads(_verify(text, scan_bound))


__all__ = [
    "LocredError",
    "construct",
    "discriminant",
    "factor",
    "factor_mod_p",
    "find_r",
    "function_field_case",
    "group_check",
    "is_irreducible",
    "local_certificate",
    "period_minpoly",
    "resultant",
    "run_cli",
    "scan",
    "verify",
]
