"""Closed-form Cramer-Rao bounds for two-component spin cat states.

Every analytic bound the library knows is catalogued here as a case of
ClosedFormCase: general spin-1/2 expressions for Jz and Jx phases, their
special-surface reductions, and the spin-1 Jz families at relative phase
0, pi/2 and pi. Each case doubles as an entry in FAMILIES, which pins the
remaining parameters and lets sweep_family compare the formula against the
numeric engine point by point on its constraint surface.

Conventions shared with the engine: a bound is returned as a float, with
+inf standing for a diverging bound (vanishing Fisher information). A
closed form evaluating above CRB_DIVERGENCE_CEILING = (1e-14)^(-1/2) is
clamped to +inf so that exact zeros of the engine (qfi floor 1e-14) and
exact zeros of a formula denominator classify identically. Degenerate cat
points, where no state exists, also compare as divergence events in sweeps.

Two deliberately wrong variants, crb_one_z_phi_pi_variant and
crb_one_z_phi_pi_equal_theta_variant, are kept as discrepancy witnesses:
they look like the phi = pi family but disagree with the numeric engine
except on thin slices, and regression tests pin that disagreement so the
family evaluators cannot quietly regress to them.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Mapping

from .catstate import DEGENERACY_FLOOR, CatParams, DegenerateCatError
from .coherent import CoherentParams
from .dicke import SpinJ
from .metrology import Generator, QFI_DIVERGENCE_FLOOR, cat_crb

__all__ = [
    "ClosedFormCase",
    "CRB_DIVERGENCE_CEILING",
    "crb_half_z",
    "crb_half_z_reductions",
    "crb_half_x",
    "crb_half_x_reductions",
    "crb_one_z",
    "crb_one_z_reductions",
    "crb_one_z_phi_pi_variant",
    "crb_one_z_phi_pi_equal_theta_variant",
    "FamilyDefinition",
    "FAMILIES",
    "SweepReport",
    "sweep_family",
]

HALF_PI = math.pi / 2
PI = math.pi

# bounds at or above this are classified as divergent; the mirror image of
# the engine's qfi floor so both sides agree on events
CRB_DIVERGENCE_CEILING = 1.0 / math.sqrt(QFI_DIVERGENCE_FLOOR)

_THETA_SLACK = 1e-9


class ClosedFormCase(enum.Enum):
    # spin-1/2, generator Jz
    HALF_Z_GENERAL = "half_z_general"
    HALF_Z_MIRROR = "half_z_mirror"
    HALF_Z_PHI0 = "half_z_phi0"
    HALF_Z_PHIHALF = "half_z_phihalf"
    HALF_Z_PHIPI = "half_z_phipi"
    HALF_Z_EQUATOR = "half_z_equator"
    # spin-1/2, generator Jx
    HALF_X_GENERAL = "half_x_general"
    HALF_X_PHI2HALF = "half_x_phi2half"
    HALF_X_EQUALTHETA = "half_x_equaltheta"
    HALF_X_EQUATOR = "half_x_equator"
    HALF_X_PHI_00 = "half_x_phi_00"
    HALF_X_PHI_0PI = "half_x_phi_0pi"
    HALF_X_PHI34_THETA2_ZERO = "half_x_phi34_theta2_zero"
    HALF_X_PHI34_THETA1_ZERO = "half_x_phi34_theta1_zero"
    # spin-1, generator Jz
    ONE_Z_PHI0 = "one_z_phi0"
    ONE_Z_PHI0_MIRROR = "one_z_phi0_mirror"
    ONE_Z_PHIHALF = "one_z_phihalf"
    ONE_Z_PHIHALF_MIRROR = "one_z_phihalf_mirror"
    ONE_Z_PHIHALF_EQUALTHETA = "one_z_phihalf_equaltheta"
    ONE_Z_PHIPI = "one_z_phipi"
    ONE_Z_PHIPI_EQUALTHETA = "one_z_phipi_equaltheta"
    ONE_Z_ANTIPODAL = "one_z_antipodal"


# ---------------------------------------------------------------------------
# extended-real plumbing

def _extended(value: float) -> float:
    if not math.isfinite(value) or value <= 0.0 or value >= CRB_DIVERGENCE_CEILING:
        return math.inf
    return value


def _sqrt_ratio(num: float, den: float) -> float:
    """sqrt(num/den) as an extended real; vanishing pieces mean divergence."""
    if den <= 0.0 or num <= 0.0 or not math.isfinite(den):
        return math.inf
    return _extended(math.sqrt(num / den))


def _check_theta(name: str, value: float) -> float:
    v = float(value)
    if not math.isfinite(v) or v < -_THETA_SLACK or v > PI + _THETA_SLACK:
        raise ValueError(f"{name} must lie in [0, pi], got {value!r}")
    return min(max(v, 0.0), PI)


# ---------------------------------------------------------------------------
# spin-1/2, generator Jz

def crb_half_z(theta1: float, theta2: float, phi1: float, phi2: float) -> float:
    """General j = 1/2 Jz bound.

        sqrt( 2 [1 + c1 c2 + cos(dphi) s1 s2]^2 /
              ((c1+c2)^2 [2 - cos t1 - cos t2 + 4 cos(dphi) s1 s2]) )

    with ck = cos(tk/2), sk = sin(tk/2). The denominator bracket is
    evaluated as 2(s1-s2)^2 + 4(1+cos dphi) s1 s2, an exact half-angle
    identity that avoids cancellation near the dphi = pi diagonal.
    """
    theta1 = _check_theta("theta1", theta1)
    theta2 = _check_theta("theta2", theta2)
    c1, c2 = math.cos(theta1 / 2), math.cos(theta2 / 2)
    s1, s2 = math.sin(theta1 / 2), math.sin(theta2 / 2)
    cphi = math.cos(phi1 - phi2)
    half_norm = 1.0 + c1 * c2 + cphi * s1 * s2  # = 1/(2 N^2)
    bracket = 2.0 * (s1 - s2) ** 2 + 4.0 * (1.0 + cphi) * s1 * s2
    return _sqrt_ratio(2.0 * half_norm**2, (c1 + c2) ** 2 * bracket)


def _half_z_mirror(theta1: float, phi_diff: float) -> float:
    # theta2 = pi - theta1 restriction of crb_half_z
    st = math.sin(theta1)
    cphi = math.cos(phi_diff)
    num = (2.0 + st * (1.0 + cphi)) ** 2
    den = (1.0 + st) * (1.0 + st * cphi)
    if den <= 0.0:
        return math.inf
    return _extended(0.5 * math.sqrt(num / den))


def _half_z_phi0(theta1: float, theta2: float) -> float:
    s = abs(math.sin((theta1 + theta2) / 2))
    return math.inf if s == 0.0 else _extended(1.0 / s)


def _half_z_phihalf(theta1: float, theta2: float) -> float:
    c1, c2 = math.cos(theta1 / 2), math.cos(theta2 / 2)
    s1, s2 = math.sin(theta1 / 2), math.sin(theta2 / 2)
    num = 2.0 * (1.0 + c1 * c2) ** 2
    den = (c1 + c2) ** 2 * 2.0 * (s1 * s1 + s2 * s2)
    return _sqrt_ratio(num, den)


def _half_z_phipi(theta1: float, theta2: float) -> float:
    s = abs(math.sin((theta1 - theta2) / 2))
    return math.inf if s == 0.0 else _extended(1.0 / s)


def _half_z_equator(phi_diff: float) -> float:
    den = 4.0 * abs(math.cos(phi_diff / 2))
    if den == 0.0:
        return math.inf
    return _extended((3.0 + math.cos(phi_diff)) / den)


_HALF_Z_REDUCTIONS: dict[ClosedFormCase, tuple[tuple[str, ...], Callable]] = {
    ClosedFormCase.HALF_Z_MIRROR: (
        ("theta1", "phi_diff"),
        lambda p: _half_z_mirror(_check_theta("theta1", p["theta1"]), p["phi_diff"]),
    ),
    ClosedFormCase.HALF_Z_PHI0: (
        ("theta1", "theta2"),
        lambda p: _half_z_phi0(
            _check_theta("theta1", p["theta1"]), _check_theta("theta2", p["theta2"])
        ),
    ),
    ClosedFormCase.HALF_Z_PHIHALF: (
        ("theta1", "theta2"),
        lambda p: _half_z_phihalf(
            _check_theta("theta1", p["theta1"]), _check_theta("theta2", p["theta2"])
        ),
    ),
    ClosedFormCase.HALF_Z_PHIPI: (
        ("theta1", "theta2"),
        lambda p: _half_z_phipi(
            _check_theta("theta1", p["theta1"]), _check_theta("theta2", p["theta2"])
        ),
    ),
    ClosedFormCase.HALF_Z_EQUATOR: (
        ("phi_diff",),
        lambda p: _half_z_equator(p["phi_diff"]),
    ),
}


def _dispatch_reduction(
    table: Mapping[ClosedFormCase, tuple[tuple[str, ...], Callable]],
    group: str,
    case: ClosedFormCase,
    params: Mapping[str, float],
) -> float:
    if case not in table:
        raise ValueError(f"{case.value!r} is not a {group} reduction")
    required, fn = table[case]
    missing = set(required) - set(params)
    extra = set(params) - set(required)
    if missing or extra:
        raise ValueError(
            f"{case.value} takes parameters {sorted(required)}; "
            f"missing {sorted(missing)}, unexpected {sorted(extra)}"
        )
    for name, value in params.items():
        if not math.isfinite(float(value)):
            raise ValueError(f"{name} must be finite, got {value!r}")
    return fn(params)


def crb_half_z_reductions(case: ClosedFormCase, params: Mapping[str, float]) -> float:
    """Special-surface reductions of crb_half_z.

    Cases and their free parameters:
      HALF_Z_MIRROR    theta1, phi_diff   (theta2 = pi - theta1)
      HALF_Z_PHI0      theta1, theta2     -> 1/|sin((t1+t2)/2)|
      HALF_Z_PHIHALF   theta1, theta2
      HALF_Z_PHIPI     theta1, theta2     -> 1/|sin((t1-t2)/2)|
      HALF_Z_EQUATOR   phi_diff           (t1 = t2 = pi/2)
    """
    return _dispatch_reduction(_HALF_Z_REDUCTIONS, "half-Z", case, params)


# ---------------------------------------------------------------------------
# spin-1/2, generator Jx

def crb_half_x(theta1: float, theta2: float, phi1: float, phi2: float) -> float:
    """General j = 1/2 Jx bound.

        [ 1 - (c1+c2)^2 (cos(phi1) s1 + cos(phi2) s2)^2
              / (1 + c1 c2 + cos(phi1-phi2) s1 s2)^2 ]^(-1/2)

    Both phases enter individually: the bound hits the Heisenberg limit
    exactly on cos(phi1) s1 + cos(phi2) s2 = 0.
    """
    theta1 = _check_theta("theta1", theta1)
    theta2 = _check_theta("theta2", theta2)
    c1, c2 = math.cos(theta1 / 2), math.cos(theta2 / 2)
    s1, s2 = math.sin(theta1 / 2), math.sin(theta2 / 2)
    half_norm = 1.0 + c1 * c2 + math.cos(phi1 - phi2) * s1 * s2
    if half_norm <= 0.0:
        return math.inf  # degenerate neighbourhood
    pol = (c1 + c2) * (math.cos(phi1) * s1 + math.cos(phi2) * s2) / half_norm
    qfi_like = 1.0 - pol * pol
    if qfi_like <= QFI_DIVERGENCE_FLOOR:
        return math.inf
    return _extended(1.0 / math.sqrt(qfi_like))


def _half_x_equal_theta(theta: float) -> float:
    den = 15.0 + 12.0 * math.cos(theta) + 5.0 * math.cos(2 * theta)
    return _sqrt_ratio(2.0 * (3.0 + math.cos(theta)) ** 2, den)


def _half_x_equator(phi1: float, phi2: float) -> float:
    ratio = 4.0 * (math.cos(phi1) + math.cos(phi2)) ** 2 / (
        3.0 + math.cos(phi1 - phi2)
    ) ** 2
    qfi_like = 1.0 - ratio
    if qfi_like <= QFI_DIVERGENCE_FLOOR:
        return math.inf
    return _extended(1.0 / math.sqrt(qfi_like))


def _inv_abs_cos(x: float) -> float:
    c = abs(math.cos(x))
    return math.inf if c == 0.0 else _extended(1.0 / c)


def _half_x_phi_0pi(theta1: float, theta2: float) -> float:
    # on the (0, pi) phase surface the cat norm is 2 + 2 cos((t1+t2)/2),
    # vanishing at (pi, pi); the bare 1/|cos((t1-t2)/2)| stays finite there,
    # so the degenerate corner must be flagged the way the engine flags it
    if 2.0 + 2.0 * math.cos((theta1 + theta2) / 2) <= DEGENERACY_FLOOR:
        return math.inf
    return _inv_abs_cos((theta1 - theta2) / 2)


_HALF_X_REDUCTIONS: dict[ClosedFormCase, tuple[tuple[str, ...], Callable]] = {
    ClosedFormCase.HALF_X_PHI2HALF: (
        ("theta1", "theta2"),
        lambda p: crb_half_x(p["theta1"], p["theta2"], 0.0, HALF_PI),
    ),
    ClosedFormCase.HALF_X_EQUALTHETA: (
        ("theta",),
        lambda p: _half_x_equal_theta(_check_theta("theta", p["theta"])),
    ),
    ClosedFormCase.HALF_X_EQUATOR: (
        ("phi1", "phi2"),
        lambda p: _half_x_equator(p["phi1"], p["phi2"]),
    ),
    ClosedFormCase.HALF_X_PHI_00: (
        ("theta1", "theta2"),
        lambda p: _inv_abs_cos(
            (_check_theta("theta1", p["theta1"]) + _check_theta("theta2", p["theta2"]))
            / 2
        ),
    ),
    ClosedFormCase.HALF_X_PHI_0PI: (
        ("theta1", "theta2"),
        lambda p: _half_x_phi_0pi(
            _check_theta("theta1", p["theta1"]), _check_theta("theta2", p["theta2"])
        ),
    ),
    ClosedFormCase.HALF_X_PHI34_THETA2_ZERO: (
        ("theta1",),
        lambda p: _inv_abs_cos(_check_theta("theta1", p["theta1"]) / 2),
    ),
    ClosedFormCase.HALF_X_PHI34_THETA1_ZERO: (
        ("theta2",),
        lambda p: _extended(
            2.0 / math.sqrt(3.0 + math.cos(_check_theta("theta2", p["theta2"])))
        ),
    ),
}


def crb_half_x_reductions(case: ClosedFormCase, params: Mapping[str, float]) -> float:
    """Special-surface reductions of crb_half_x.

    Cases and their free parameters:
      HALF_X_PHI2HALF          theta1, theta2  (phi1 = 0, phi2 = pi/2)
      HALF_X_EQUALTHETA        theta           (same slice, t1 = t2)
      HALF_X_EQUATOR           phi1, phi2      (t1 = t2 = pi/2)
      HALF_X_PHI_00            theta1, theta2  -> 1/|cos((t1+t2)/2)|
      HALF_X_PHI_0PI           theta1, theta2  -> 1/|cos((t1-t2)/2)|
      HALF_X_PHI34_THETA2_ZERO theta1          (phi2 = 3pi/4, t2 = 0) -> 1/cos(t1/2)
      HALF_X_PHI34_THETA1_ZERO theta2          (phi2 = 3pi/4, t1 = 0) -> 2/sqrt(3+cos t2)
    """
    return _dispatch_reduction(_HALF_X_REDUCTIONS, "half-X", case, params)


# ---------------------------------------------------------------------------
# spin-1, generator Jz

def _one_z_phi0(theta1: float, theta2: float) -> float:
    a = math.cos(3 * theta1 - theta2) + math.cos(3 * theta2 - theta1)
    b = math.cos(2 * theta1) + math.cos(2 * theta2)
    c = math.cos(2 * (theta1 - theta2))
    d = math.cos(theta1 + theta2)
    num = 2.0 * (math.cos(theta1 - theta2) + 3.0) ** 2
    return _sqrt_ratio(num, a - 8.0 * b + 2.0 * c - 18.0 * d + 30.0)


def _one_z_phihalf(theta1: float, theta2: float) -> float:
    ct1, ct2 = math.cos(theta1), math.cos(theta2)
    a = ct1 + ct2 + 2.0
    b = math.cos(2 * theta1) + math.cos(2 * theta2) - 8.0 * ct1 * ct2 + 6.0
    c = 4.0 * (ct1 * ct2 - 1.0) ** 2
    return _sqrt_ratio(a * a, a * b - c)


def _one_z_phipi(theta1: float, theta2: float) -> float:
    # theta2 -> -theta2 image of the phi = 0 family
    a = math.cos(3 * theta1 + theta2) + math.cos(theta1 + 3 * theta2)
    b = math.cos(2 * theta1) + math.cos(2 * theta2)
    c = math.cos(2 * (theta1 + theta2))
    d = math.cos(theta1 - theta2)
    num = 2.0 * (math.cos(theta1 + theta2) + 3.0) ** 2
    return _sqrt_ratio(num, a - 8.0 * b + 2.0 * c - 18.0 * d + 30.0)


_ONE_Z_GENERALS = (
    (0.0, _one_z_phi0),
    (HALF_PI, _one_z_phihalf),
    (PI, _one_z_phipi),
)


def crb_one_z(phi_family: float, theta1: float, theta2: float) -> float:
    """Spin-1 Jz bound for relative phase phi2 - phi1 in {0, pi/2, pi}.

    Other relative phases have no closed form here; evaluate those with the
    numeric engine. phi_family must match one of the three values exactly
    (within 1e-12).
    """
    theta1 = _check_theta("theta1", theta1)
    theta2 = _check_theta("theta2", theta2)
    for value, fn in _ONE_Z_GENERALS:
        if abs(phi_family - value) <= 1e-12:
            return fn(theta1, theta2)
    raise ValueError(
        f"phi_family must be one of 0, pi/2, pi; got {phi_family!r}"
    )


def _one_z_phi0_mirror(theta1: float) -> float:
    return _extended(math.sqrt((3.0 - math.cos(2 * theta1)) / 8.0))


def _one_z_phihalf_mirror(theta1: float) -> float:
    den = 12.0 * math.cos(2 * theta1) - math.cos(4 * theta1) + 21.0
    return _sqrt_ratio(8.0, den)


def _one_z_phihalf_equal_theta(theta1: float) -> float:
    s = abs(math.sin(theta1))
    return math.inf if s == 0.0 else _extended(1.0 / s)


def _one_z_phipi_equal_theta(theta1: float) -> float:
    s2 = math.sin(theta1) ** 2
    return math.inf if s2 == 0.0 else _extended((3.0 + math.cos(2 * theta1)) / (4.0 * s2))


_ONE_Z_REDUCTIONS: dict[ClosedFormCase, tuple[tuple[str, ...], Callable]] = {
    ClosedFormCase.ONE_Z_PHI0_MIRROR: (
        ("theta1",),
        lambda p: _one_z_phi0_mirror(_check_theta("theta1", p["theta1"])),
    ),
    ClosedFormCase.ONE_Z_PHIHALF_MIRROR: (
        ("theta1",),
        lambda p: _one_z_phihalf_mirror(_check_theta("theta1", p["theta1"])),
    ),
    ClosedFormCase.ONE_Z_PHIHALF_EQUALTHETA: (
        ("theta1",),
        lambda p: _one_z_phihalf_equal_theta(_check_theta("theta1", p["theta1"])),
    ),
    ClosedFormCase.ONE_Z_PHIPI_EQUALTHETA: (
        ("theta1",),
        lambda p: _one_z_phipi_equal_theta(_check_theta("theta1", p["theta1"])),
    ),
    ClosedFormCase.ONE_Z_ANTIPODAL: (
        ("theta1",),
        lambda p: (_check_theta("theta1", p["theta1"]), 0.5)[1],
    ),
}


def crb_one_z_reductions(case: ClosedFormCase, params: Mapping[str, float]) -> float:
    """Special-surface reductions of the spin-1 Jz families.

    Cases and their free parameters (all take theta1):
      ONE_Z_PHI0_MIRROR        theta2 = pi - theta1, dphi = 0
      ONE_Z_PHIHALF_MIRROR     theta2 = pi - theta1, dphi = pi/2
      ONE_Z_PHIHALF_EQUALTHETA theta2 = theta1,      dphi = pi/2 -> 1/|sin t1|
      ONE_Z_PHIPI_EQUALTHETA   theta2 = theta1,      dphi = pi   -> (3+cos 2t1)/(4 sin^2 t1)
      ONE_Z_ANTIPODAL          theta2 = pi - theta1, dphi = pi   -> 1/2 identically
    """
    return _dispatch_reduction(_ONE_Z_REDUCTIONS, "spin-1 Jz", case, params)


# ---------------------------------------------------------------------------
# discrepancy witnesses: variants that look right and are not

def crb_one_z_phi_pi_variant(theta1: float, theta2: float) -> float:
    """Sign-flipped variant of the phi = pi family. Witness only.

    Identical to crb_one_z(pi, ...) except cos(theta1 - 3 theta2) replaces
    cos(theta1 + 3 theta2). It agrees with the numeric engine on the
    theta1 = theta2 = pi/2 point and strays elsewhere (regression-tested),
    so it must never be promoted into the family evaluator.
    """
    a = math.cos(3 * theta1 + theta2) + math.cos(theta1 - 3 * theta2)
    b = math.cos(2 * theta1) + math.cos(2 * theta2)
    c = math.cos(2 * (theta1 + theta2))
    d = math.cos(theta1 - theta2)
    num = 2.0 * (math.cos(theta1 + theta2) + 3.0) ** 2
    return _sqrt_ratio(num, a - 8.0 * b + 2.0 * c - 18.0 * d + 30.0)


def crb_one_z_phi_pi_equal_theta_variant(theta1: float) -> float:
    """Equal-theta variant with |sin t1| unsquared. Witness only.

    Coincides with the exact reduction (3+cos 2t1)/(4 sin^2 t1) exactly at
    t1 = pi/2 and nowhere else away from the poles; regression-tested as a
    known-wrong form.
    """
    s = abs(math.sin(theta1))
    return math.inf if s == 0.0 else _extended((3.0 + math.cos(2 * theta1)) / (4.0 * s))


# ---------------------------------------------------------------------------
# family registry and formula-vs-engine sweeps

HALF = SpinJ(1)
ONE = SpinJ(2)

# generic pinned phases for the general families; chosen away from any
# divergence surface of the swept grids (see sweep tests)
_GENERAL_Z_PHASES = (0.7, 0.1)
_GENERAL_X_PHASES = (0.9, 2.1)

_THETA_DOMAIN = (0.0, PI)
_PHI_DOMAIN = (0.0, 2 * PI)


@dataclass(frozen=True)
class FamilyDefinition:
    """One constraint surface: free parameters, the embedding into full cat
    angles (theta1, theta2, phi1, phi2), the closed form on that surface,
    and the spin/generator of the engine it must match."""

    case: ClosedFormCase
    spin: SpinJ
    generator: Generator
    free_params: tuple[tuple[str, float, float], ...]
    angles: Callable[[Mapping[str, float]], tuple[float, float, float, float]]
    formula: Callable[[Mapping[str, float]], float]


def _fam(case, spin, free_params, angles, formula) -> FamilyDefinition:
    return FamilyDefinition(
        case=case,
        spin=spin,
        generator=Generator.X if "half_x" in case.value else Generator.Z,
        free_params=free_params,
        angles=angles,
        formula=formula,
    )


_T1 = ("theta1",) + _THETA_DOMAIN
_T2 = ("theta2",) + _THETA_DOMAIN

FAMILIES: dict[ClosedFormCase, FamilyDefinition] = {
    f.case: f
    for f in [
        _fam(
            ClosedFormCase.HALF_Z_GENERAL,
            HALF,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], *_GENERAL_Z_PHASES),
            lambda p: crb_half_z(p["theta1"], p["theta2"], *_GENERAL_Z_PHASES),
        ),
        _fam(
            ClosedFormCase.HALF_Z_MIRROR,
            HALF,
            (_T1, ("phi_diff",) + _PHI_DOMAIN),
            lambda p: (p["theta1"], PI - p["theta1"], p["phi_diff"], 0.0),
            lambda p: crb_half_z_reductions(ClosedFormCase.HALF_Z_MIRROR, p),
        ),
        _fam(
            ClosedFormCase.HALF_Z_PHI0,
            HALF,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, 0.0),
            lambda p: crb_half_z_reductions(ClosedFormCase.HALF_Z_PHI0, p),
        ),
        _fam(
            ClosedFormCase.HALF_Z_PHIHALF,
            HALF,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, HALF_PI),
            lambda p: crb_half_z_reductions(ClosedFormCase.HALF_Z_PHIHALF, p),
        ),
        _fam(
            ClosedFormCase.HALF_Z_PHIPI,
            HALF,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, PI),
            lambda p: crb_half_z_reductions(ClosedFormCase.HALF_Z_PHIPI, p),
        ),
        _fam(
            ClosedFormCase.HALF_Z_EQUATOR,
            HALF,
            (("phi_diff",) + _PHI_DOMAIN,),
            lambda p: (HALF_PI, HALF_PI, 0.0, p["phi_diff"]),
            lambda p: crb_half_z_reductions(ClosedFormCase.HALF_Z_EQUATOR, p),
        ),
        _fam(
            ClosedFormCase.HALF_X_GENERAL,
            HALF,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], *_GENERAL_X_PHASES),
            lambda p: crb_half_x(p["theta1"], p["theta2"], *_GENERAL_X_PHASES),
        ),
        _fam(
            ClosedFormCase.HALF_X_PHI2HALF,
            HALF,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, HALF_PI),
            lambda p: crb_half_x_reductions(ClosedFormCase.HALF_X_PHI2HALF, p),
        ),
        _fam(
            ClosedFormCase.HALF_X_EQUALTHETA,
            HALF,
            (("theta",) + _THETA_DOMAIN,),
            lambda p: (p["theta"], p["theta"], 0.0, HALF_PI),
            lambda p: crb_half_x_reductions(ClosedFormCase.HALF_X_EQUALTHETA, p),
        ),
        _fam(
            ClosedFormCase.HALF_X_EQUATOR,
            HALF,
            (("phi1",) + _PHI_DOMAIN, ("phi2",) + _PHI_DOMAIN),
            lambda p: (HALF_PI, HALF_PI, p["phi1"], p["phi2"]),
            lambda p: crb_half_x_reductions(ClosedFormCase.HALF_X_EQUATOR, p),
        ),
        _fam(
            ClosedFormCase.HALF_X_PHI_00,
            HALF,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, 0.0),
            lambda p: crb_half_x_reductions(ClosedFormCase.HALF_X_PHI_00, p),
        ),
        _fam(
            ClosedFormCase.HALF_X_PHI_0PI,
            HALF,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, PI),
            lambda p: crb_half_x_reductions(ClosedFormCase.HALF_X_PHI_0PI, p),
        ),
        _fam(
            ClosedFormCase.HALF_X_PHI34_THETA2_ZERO,
            HALF,
            (_T1,),
            lambda p: (p["theta1"], 0.0, 0.0, 3 * PI / 4),
            lambda p: crb_half_x_reductions(
                ClosedFormCase.HALF_X_PHI34_THETA2_ZERO, p
            ),
        ),
        _fam(
            ClosedFormCase.HALF_X_PHI34_THETA1_ZERO,
            HALF,
            (_T2,),
            lambda p: (0.0, p["theta2"], 0.0, 3 * PI / 4),
            lambda p: crb_half_x_reductions(
                ClosedFormCase.HALF_X_PHI34_THETA1_ZERO, p
            ),
        ),
        _fam(
            ClosedFormCase.ONE_Z_PHI0,
            ONE,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, 0.0),
            lambda p: crb_one_z(0.0, p["theta1"], p["theta2"]),
        ),
        _fam(
            ClosedFormCase.ONE_Z_PHI0_MIRROR,
            ONE,
            (_T1,),
            lambda p: (p["theta1"], PI - p["theta1"], 0.0, 0.0),
            lambda p: crb_one_z_reductions(ClosedFormCase.ONE_Z_PHI0_MIRROR, p),
        ),
        _fam(
            ClosedFormCase.ONE_Z_PHIHALF,
            ONE,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, HALF_PI),
            lambda p: crb_one_z(HALF_PI, p["theta1"], p["theta2"]),
        ),
        _fam(
            ClosedFormCase.ONE_Z_PHIHALF_MIRROR,
            ONE,
            (_T1,),
            lambda p: (p["theta1"], PI - p["theta1"], 0.0, HALF_PI),
            lambda p: crb_one_z_reductions(ClosedFormCase.ONE_Z_PHIHALF_MIRROR, p),
        ),
        _fam(
            ClosedFormCase.ONE_Z_PHIHALF_EQUALTHETA,
            ONE,
            (_T1,),
            lambda p: (p["theta1"], p["theta1"], 0.0, HALF_PI),
            lambda p: crb_one_z_reductions(
                ClosedFormCase.ONE_Z_PHIHALF_EQUALTHETA, p
            ),
        ),
        _fam(
            ClosedFormCase.ONE_Z_PHIPI,
            ONE,
            (_T1, _T2),
            lambda p: (p["theta1"], p["theta2"], 0.0, PI),
            lambda p: crb_one_z(PI, p["theta1"], p["theta2"]),
        ),
        _fam(
            ClosedFormCase.ONE_Z_PHIPI_EQUALTHETA,
            ONE,
            (_T1,),
            lambda p: (p["theta1"], p["theta1"], 0.0, PI),
            lambda p: crb_one_z_reductions(ClosedFormCase.ONE_Z_PHIPI_EQUALTHETA, p),
        ),
        _fam(
            ClosedFormCase.ONE_Z_ANTIPODAL,
            ONE,
            (_T1, ("phi1",) + _PHI_DOMAIN),
            lambda p: (p["theta1"], PI - p["theta1"], p["phi1"], p["phi1"] + PI),
            lambda p: crb_one_z_reductions(
                ClosedFormCase.ONE_Z_ANTIPODAL, {"theta1": p["theta1"]}
            ),
        ),
    ]
}


@dataclass(frozen=True)
class SweepReport:
    """Outcome of one formula-vs-engine constraint-surface sweep."""

    case: ClosedFormCase
    points: int
    finite_points: int
    max_abs_deviation: float
    event_mismatches: int
    worst_point: tuple | None

    def passed(self, tol: float) -> bool:
        return self.event_mismatches == 0 and self.max_abs_deviation <= tol


def _engine_value(defn: FamilyDefinition, params: Mapping[str, float]) -> float:
    t1, t2, p1, p2 = defn.angles(params)
    cat = CatParams(defn.spin, CoherentParams(t1, p1), CoherentParams(t2, p2))
    try:
        return cat_crb(cat, defn.generator).crb
    except DegenerateCatError:
        return math.inf  # no state: compare as a divergence event


def _grid_points(defn: FamilyDefinition, resolution: int):
    names = [fp[0] for fp in defn.free_params]
    if len(names) == 1:
        name, lo, hi = defn.free_params[0]
        n = resolution * resolution
        for i in range(n):
            yield {name: lo + (hi - lo) * (i / (n - 1))}
    else:
        (n1, lo1, hi1), (n2, lo2, hi2) = defn.free_params
        for a in range(resolution):
            x = lo1 + (hi1 - lo1) * (a / (resolution - 1))
            for b in range(resolution):
                yield {n1: x, n2: lo2 + (hi2 - lo2) * (b / (resolution - 1))}


def sweep_family(case: ClosedFormCase, resolution: int = 50) -> SweepReport:
    """Compare the closed form against the numeric engine on the family grid.

    Divergences (and degenerate-cat points) must coincide as events; finite
    points are compared by absolute deviation.
    """
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    defn = FAMILIES[case]
    points = finite = mismatches = 0
    worst = 0.0
    worst_point = mismatch_point = None
    for params in _grid_points(defn, resolution):
        points += 1
        fv = defn.formula(params)
        ev = _engine_value(defn, params)
        f_div = math.isinf(fv)
        e_div = math.isinf(ev)
        if f_div != e_div:
            mismatches += 1
            mismatch_point = (dict(params), fv, ev)
        elif not f_div:
            finite += 1
            dev = abs(fv - ev)
            if dev > worst:
                worst = dev
                worst_point = (dict(params), fv, ev)
    if mismatch_point is not None:
        worst_point = mismatch_point
    return SweepReport(
        case=case,
        points=points,
        finite_points=finite,
        max_abs_deviation=worst,
        event_mismatches=mismatches,
        worst_point=worst_point,
    )
