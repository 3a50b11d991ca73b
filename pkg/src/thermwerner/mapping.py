"""Werner mixing parameter <-> temperature correspondence."""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple

from .exceptions import DomainError, ValidationError
from .measures import _stable_ratio
from .rootfind import bisect, expand_bracket
from .states import ModelParams, check_temperature
from .tolerances import TOL

SEPARABLE_BOUND = 1.0 / 3.0
CHSH_BOUND = 1.0 / math.sqrt(2.0)


class CriticalConstants(NamedTuple):
    t_c: float
    b_c: float


class WernerRegime(str, Enum):
    SEPARABLE = "separable"
    ENTANGLED_LOCAL = "entangled-local"
    CHSH_VIOLATING = "chsh-violating"


class MapResult(NamedTuple):
    x: float
    in_domain: bool  # False when B > B_c, where the map is not one to one


def critical_constants(p: ModelParams) -> CriticalConstants:
    return CriticalConstants(t_c=8.0 * p.j_h / (p.k_b * math.log(3.0)), b_c=4.0 * p.j_h)


def at_critical_field(p: ModelParams) -> bool:
    return abs(p.b - p.critical_field) <= TOL.critical_field * p.j_h


def in_bijection_domain(p: ModelParams) -> bool:
    return p.b <= p.critical_field or at_critical_field(p)


def x_of_temperature(p: ModelParams, t: float) -> float:
    """Werner mixing parameter matched to the Gibbs state at temperature ``t``.

    Not clamped: values below 1/3 are returned for ``t > T_c``.
    """
    t = check_temperature(t)
    return (2.0 / 3.0) * (_stable_ratio(p, t) + 0.5)


def map_temperature(p: ModelParams, t: float) -> MapResult:
    return MapResult(x_of_temperature(p, t), in_bijection_domain(p))


def x_range(p: ModelParams) -> tuple[float, float]:
    """Open interval of x reached by the forward map at field ``p.b``."""
    if not in_bijection_domain(p):
        raise DomainError(f"B={p.b} exceeds B_c={p.critical_field}: the map is not invertible")
    return 0.0, (2.0 / 3.0 if at_critical_field(p) else 1.0)


def temperature_of_x(p: ModelParams, x: float) -> float:
    """Invert the map by bisection on the temperature."""
    x = float(x)
    lo_x, hi_x = x_range(p)
    if not lo_x < x < hi_x:
        raise DomainError(f"x={x} outside the attainable interval ({lo_x}, {hi_x:.6g}) at B={p.b}")
    t_c = critical_constants(p).t_c

    def residual(t: float) -> float:
        return x_of_temperature(p, t) - x

    lo, hi = expand_bracket(residual, 1e-6 * t_c, 1e3 * t_c)
    return bisect(residual, lo, hi, xtol=1e-12 * t_c)


def effective_temperature(x: float, p: ModelParams) -> float:
    """Temperature assigned to a Werner state of mixing ``x``; same contract as :func:`temperature_of_x`."""
    return temperature_of_x(p, x)


def classify_werner(x: float) -> WernerRegime:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValidationError(f"x must lie in [0, 1], got {x}")
    if x <= SEPARABLE_BOUND:
        return WernerRegime.SEPARABLE
    if x <= CHSH_BOUND:
        return WernerRegime.ENTANGLED_LOCAL
    return WernerRegime.CHSH_VIOLATING
