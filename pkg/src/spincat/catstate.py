"""Equal-weight superpositions of two spin coherent states (cat states).

|cat> = N (|theta1, phi1, j> + |theta2, phi2, j>) with
N = 1 / sqrt(2 + 2 Re<1|2>). When the two components are (nearly) opposite
the sum vanishes and no state exists; that is a domain error, not a large
number.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coherent import CoherentParams, coherent_state
from .dicke import DickeVector, SpinJ

__all__ = [
    "CatParams",
    "DegenerateCatError",
    "normalization",
    "cat_state",
]

# squared norm of the unnormalized sum below which the cat is degenerate
DEGENERACY_FLOOR = 1e-12


class DegenerateCatError(ValueError):
    """The two components interfere away: ||v1 + v2||^2 <= DEGENERACY_FLOOR."""


@dataclass(frozen=True)
class CatParams:
    """Defining data of one cat state."""

    j: SpinJ
    p1: CoherentParams
    p2: CoherentParams

    def swapped(self) -> "CatParams":
        return CatParams(self.j, self.p2, self.p1)


def _summed_amplitudes(c: CatParams) -> np.ndarray:
    return coherent_state(c.j, c.p1).amplitudes + coherent_state(c.j, c.p2).amplitudes


def _sum_norm_squared(summed: np.ndarray) -> float:
    # componentwise |.|^2 keeps full relative precision where the equivalent
    # 2 + 2 Re<1|2> cancels catastrophically (near-degenerate cats)
    return float(np.sum(summed.real * summed.real + summed.imag * summed.imag))


def _checked_norm_squared(summed: np.ndarray) -> float:
    n2 = _sum_norm_squared(summed)
    if n2 <= DEGENERACY_FLOOR:
        raise DegenerateCatError(
            f"cat state is degenerate: ||v1 + v2||^2 = {n2!r} <= {DEGENERACY_FLOOR}"
        )
    return n2


def normalization(c: CatParams) -> float:
    """N = 1/sqrt(2 + 2 Re<1|2>); raises DegenerateCatError at the floor."""
    return 1.0 / math.sqrt(_checked_norm_squared(_summed_amplitudes(c)))


def cat_state(c: CatParams) -> DickeVector:
    """Unit-norm N (v1 + v2) over the Dicke basis.

    The sum is symmetric in (p1, p2), so swapping the components returns the
    identical vector, not merely the same ray.
    """
    summed = _summed_amplitudes(c)
    n2 = _checked_norm_squared(summed)
    return DickeVector(c.j, summed / math.sqrt(n2))
