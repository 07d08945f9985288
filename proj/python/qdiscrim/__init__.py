# SPDX-License-Identifier: Apache-2.0
"""Optimal unambiguous discrimination of two mixed quantum states.

Matrices are nested [row][col] lists of complex numbers. ``solve``
returns the optimal inconclusive probability, the three measurement
operators, and the regime diagnostics as a dict.
"""

from ._core import (
    DiscriminationError,
    __version__,
    canonical_overlaps,
    fidelity,
    sample,
    similar_states,
    solve,
)

__all__ = [
    "DiscriminationError",
    "__version__",
    "canonical_overlaps",
    "fidelity",
    "sample",
    "similar_states",
    "solve",
]
