"""Selberg zeta functions of infinite-area Hecke triangle surfaces.

Thin re-export of the compiled core: transfer-operator determinants,
periodic-orbit Euler products, the leading zero delta and resonance search.
"""

from ._heckezeta import (
    HzetaError,
    delta,
    hurwitz_zeta,
    length_spectrum,
    locate_zeros,
    periodic_classes,
    trace_series,
    verify_inclusions,
    zeta,
    zeta_euler,
)

__all__ = [
    "HzetaError",
    "delta",
    "hurwitz_zeta",
    "length_spectrum",
    "locate_zeros",
    "periodic_classes",
    "trace_series",
    "verify_inclusions",
    "zeta",
    "zeta_euler",
]

__version__ = "0.1.0"
