"""Degree distributions of Cayley graphs.

Groups are named the same way as on the command line: ``zn:12``, ``dn:5``,
``product:zn:2,zn:4``, ``fixture:Q8`` or ``table:PATH``.
"""

from ._core import (
    InternalError,
    ResourceError,
    count,
    orbits,
    psi,
    psi_text,
    reference_table,
    verify,
)

__all__ = [
    "InternalError",
    "ResourceError",
    "count",
    "orbits",
    "psi",
    "psi_text",
    "reference_table",
    "verify",
]
