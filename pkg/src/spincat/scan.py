"""Parameter-space scans and Heisenberg-limit searches.

grid_scan samples the Cramer-Rao bound of a cat state on a square
(theta1, theta2) grid at fixed phases, keeping the raw extended-real
values alongside overflow and degenerate masks so plots and CSV exports
can cap divergences without losing information.

find_hl searches the full four-angle space for points whose bound reaches
the Heisenberg limit 1/(2j): deterministic coarse seeding followed by
cyclic coordinate descent with golden-section line minimization. The
search is exact-arithmetic deterministic: same spec, same result.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np

from .catstate import CatParams, DegenerateCatError
from .coherent import CoherentParams
from .dicke import SpinJ
from .metrology import Generator, cat_crb

__all__ = [
    "ScanSpec",
    "GridResult",
    "grid_scan",
    "HlSearchSpec",
    "HlPoint",
    "NoHlFoundError",
    "find_hl",
]

DEFAULT_RESOLUTION = 201
DEFAULT_CAP = 20.0


class NoHlFoundError(RuntimeError):
    """No Heisenberg-limit point found within the requested tolerance."""


def _cell_crb(j: SpinJ, g: Generator, t1: float, t2: float, p1: float, p2: float):
    """-> (crb, degenerate flag); divergent bounds come back as inf."""
    try:
        cat = CatParams(j, CoherentParams(t1, p1), CoherentParams(t2, p2))
    except ValueError:
        return math.inf, False
    try:
        return cat_crb(cat, g).crb, False
    except DegenerateCatError:
        return math.nan, True


@dataclass(frozen=True)
class ScanSpec:
    """A (theta1, theta2) grid at fixed phases.

    theta axes run over [0, pi] with resolution points: theta_a = a*pi/(res-1).
    cap is the plotting/CSV ceiling; raw values are kept uncapped.
    """

    j: SpinJ
    generator: Generator
    phi1: float
    phi2: float
    resolution: int = DEFAULT_RESOLUTION
    cap: float = DEFAULT_CAP

    def __post_init__(self):
        if not isinstance(self.j, SpinJ):
            raise TypeError("j must be a SpinJ")
        if not isinstance(self.generator, Generator):
            raise TypeError("generator must be a Generator")
        for name in ("phi1", "phi2"):
            if not math.isfinite(float(getattr(self, name))):
                raise ValueError(f"{name} must be finite")
        if not isinstance(self.resolution, int) or self.resolution < 2:
            raise ValueError("resolution must be an integer >= 2")
        cap = float(self.cap)
        if not math.isfinite(cap) or cap <= 0.0:
            raise ValueError("cap must be a positive finite float")

    def theta_axis(self) -> np.ndarray:
        n = self.resolution
        return np.array([math.pi * (a / (n - 1)) for a in range(n)])


@dataclass(frozen=True)
class GridResult:
    """Raw scan output.

    values[i, j] is the bound at theta1 = theta[i], theta2 = theta[j]
    (inf where divergent, nan where the cat is degenerate). overflow marks
    cells whose value exceeds spec.cap; degenerate marks undefined cells.
    """

    spec: ScanSpec
    theta: np.ndarray
    values: np.ndarray
    overflow: np.ndarray
    degenerate: np.ndarray

    def capped(self) -> np.ndarray:
        """values with overflow cells clamped to spec.cap (nan kept)."""
        out = self.values.copy()
        out[self.overflow] = self.spec.cap
        return out

    def min_point(self) -> tuple[float, float, float]:
        """(crb, theta1, theta2) of the smallest defined cell, row-major ties."""
        masked = np.where(self.degenerate, np.inf, self.values)
        flat = int(np.argmin(masked))
        i, k = divmod(flat, self.spec.resolution)
        return float(masked[i, k]), float(self.theta[i]), float(self.theta[k])

    def to_csv(self, stream: IO[str]) -> None:
        """Row-major rows of `theta1,theta2,crb,overflow,degenerate`.

        Overflow cells report crb = cap with overflow = 1; degenerate cells
        report crb = nan with degenerate = 1. Floats use %.12g.
        """
        stream.write("theta1,theta2,crb,overflow,degenerate\n")
        cap = self.spec.cap
        n = self.spec.resolution
        for i in range(n):
            t1 = self.theta[i]
            for k in range(n):
                if self.degenerate[i, k]:
                    val, over, deg = math.nan, 0, 1
                elif self.overflow[i, k]:
                    val, over, deg = cap, 1, 0
                else:
                    val, over, deg = self.values[i, k], 0, 0
                stream.write(
                    "%.12g,%.12g,%.12g,%d,%d\n" % (t1, self.theta[k], val, over, deg)
                )


def grid_scan(spec: ScanSpec, workers: int | None = None) -> GridResult:
    """Evaluate the bound on the spec's grid, optionally with a thread pool.

    Output is independent of workers: every cell is computed from its own
    indices into preallocated arrays.
    """
    n = spec.resolution
    theta = spec.theta_axis()
    values = np.full((n, n), np.nan)
    degenerate = np.zeros((n, n), dtype=bool)

    def fill_row(i: int) -> None:
        t1 = theta[i]
        for k in range(n):
            crb, deg = _cell_crb(spec.j, spec.generator, t1, theta[k], spec.phi1, spec.phi2)
            values[i, k] = crb
            degenerate[i, k] = deg

    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill_row, range(n)))
    else:
        for i in range(n):
            fill_row(i)

    with np.errstate(invalid="ignore"):
        overflow = ~degenerate & (values > spec.cap)
    for arr in (theta, values, overflow, degenerate):
        arr.flags.writeable = False
    return GridResult(spec, theta, values, overflow, degenerate)


# ---------------------------------------------------------------------------
# Heisenberg-limit search

@dataclass(frozen=True)
class HlSearchSpec:
    """Search request: find cat angles whose bound reaches 1/(2j).

    tolerance is the relative acceptance slack (crb <= (1/(2j))(1+tol));
    seeds is how many coarse-grid starts are polished.
    """

    j: SpinJ
    generator: Generator
    tolerance: float = 1e-3
    seeds: int = 16

    def __post_init__(self):
        if not isinstance(self.j, SpinJ):
            raise TypeError("j must be a SpinJ")
        if not isinstance(self.generator, Generator):
            raise TypeError("generator must be a Generator")
        tol = float(self.tolerance)
        if not 0.0 < tol <= 0.1:
            raise ValueError("tolerance must lie in (0, 0.1]")
        if not isinstance(self.seeds, int) or self.seeds < 1:
            raise ValueError("seeds must be a positive integer")

    @property
    def target(self) -> float:
        return 1.0 / (2.0 * self.j.j)


@dataclass(frozen=True)
class HlPoint:
    theta1: float
    theta2: float
    phi1: float
    phi2: float
    crb: float


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

# full angle box; phi1 only needs half its range in the seed grid because
# a global phase rotation maps (phi1, phi2) -> (phi1 + c, phi2 + c)
_BOUNDS = ((0.0, math.pi), (0.0, math.pi), (0.0, 2 * math.pi), (0.0, 2 * math.pi))


def _golden_min(f, lo: float, hi: float, tol: float = 1e-12):
    a, b = lo, hi
    h = b - a
    c = b - _INVPHI * h
    d = a + _INVPHI * h
    fc, fd = f(c), f(d)
    while h > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _INVPHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


def _polish(f, start, max_sweeps: int = 40):
    x = list(start)
    best = f(x)
    for _ in range(max_sweeps):
        before = best
        for k, (lo, hi) in enumerate(_BOUNDS):
            def line(v, k=k):
                trial = list(x)
                trial[k] = v
                return f(trial)

            v, fv = _golden_min(line, lo, hi)
            if fv < best:
                x[k] = v
                best = fv
        if before - best < 1e-13:
            break
    return x, best


def _seed_starts(f, seeds: int) -> list[tuple[float, ...]]:
    thetas = [math.pi * i / 8 for i in range(9)]
    phis = [math.pi * k / 4 for k in range(8)]
    ranked = []
    for t1 in thetas:
        for t2 in thetas:
            for p1 in phis[:4]:
                for p2 in phis:
                    val = f((t1, t2, p1, p2))
                    if math.isfinite(val):
                        ranked.append((val, t1, t2, p1, p2))
    ranked.sort()
    return [r[1:] for r in ranked[:seeds]]


def find_hl(spec: HlSearchSpec) -> list[HlPoint]:
    """Locate Heisenberg-limit points for the given spin and generator.

    Returns accepted points sorted by (crb, theta1, theta2, phi1, phi2);
    raises NoHlFoundError when no polished seed reaches the target within
    the acceptance slack.
    """

    def objective(x) -> float:
        crb, deg = _cell_crb(spec.j, spec.generator, x[0], x[1], x[2], x[3])
        return math.inf if deg else crb

    accept = spec.target * (1.0 + spec.tolerance)
    found: dict[tuple, HlPoint] = {}
    for start in _seed_starts(objective, spec.seeds):
        x, val = _polish(objective, start)
        if val <= accept:
            key = tuple(round(v, 9) for v in x)
            pt = HlPoint(x[0], x[1], x[2], x[3], val)
            old = found.get(key)
            if old is None or pt.crb < old.crb:
                found[key] = pt
    if not found:
        raise NoHlFoundError(
            f"no point reached crb <= {accept:.6g} for j={spec.j}, "
            f"generator {spec.generator.name}"
        )
    return sorted(
        found.values(), key=lambda p: (p.crb, p.theta1, p.theta2, p.phi1, p.phi2)
    )
