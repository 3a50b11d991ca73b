"""Bisection for monotone scalar functions."""

from __future__ import annotations

from typing import Callable

from .exceptions import ConvergenceError


def expand_bracket(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    factor: float = 2.0,
    max_expansions: int = 60,
) -> tuple[float, float]:
    """Grow a positive bracket ``[lo, hi]`` geometrically until ``f`` changes sign.

    ``lo`` is divided and ``hi`` multiplied by ``factor``; only the end that
    fails to straddle the root is moved.
    """
    f_lo, f_hi = f(lo), f(hi)
    for _ in range(max_expansions):
        if f_lo == 0.0 or f_hi == 0.0 or (f_lo < 0.0) != (f_hi < 0.0):
            return lo, hi
        # a decreasing f with both values positive needs a larger hi, and so on
        if abs(f_lo) < abs(f_hi):
            lo /= factor
            f_lo = f(lo)
        else:
            hi *= factor
            f_hi = f(hi)
    raise ConvergenceError(f"no sign change in [{lo:.6g}, {hi:.6g}] after {max_expansions} expansions")


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    xtol: float,
    max_iter: int = 500,
) -> float:
    """Root of ``f`` in ``[lo, hi]`` where ``f(lo)`` and ``f(hi)`` differ in sign."""
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise ConvergenceError(f"f does not change sign on [{lo:.6g}, {hi:.6g}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol or mid in (lo, hi):
            return mid
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    raise ConvergenceError(f"bisection did not reach xtol={xtol} in {max_iter} iterations")


def bisect_predicate(pred: Callable[[float], bool], lo: float, hi: float, *, xtol: float) -> float:
    """Boundary between ``pred`` true at ``lo`` and false at ``hi``."""
    if not pred(lo) or pred(hi):
        raise ConvergenceError("predicate must hold at lo and fail at hi")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
