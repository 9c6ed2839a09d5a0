"""Real special functions: Gamma, upper incomplete Gamma, erfc, and the
Gaussian-decay kernel f(s, a) = (pi a^2)^(-s/2) * Gamma(s/2, pi a^2).

Everything here is real-argument double precision with a 1e-12 relative
accuracy target so that downstream 1e-6 tolerances are never limited by
special functions.  The incomplete gamma uses the classical numerically
stable split: lower series for x < a + 1, Lentz continued fraction above.
Non-positive first arguments (needed by the zeta evaluators just outside
the critical strip) are reached through the downward recurrence
Gamma(a, x) = (Gamma(a+1, x) - x^a e^(-x)) / a.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

_SERIES_ITERS = 120
_CF_ITERS = 300
_TINY = 1e-300


def gamma(x: float) -> float:
    """Gamma function for positive real x."""
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"gamma requires finite x > 0, got {x!r}")
    try:
        return math.gamma(x)
    except OverflowError as exc:
        raise DomainError(f"gamma({x}) overflows double precision") from exc


def erfc(x: float) -> float:
    """Complementary error function."""
    if not math.isfinite(x):
        raise DomainError(f"erfc requires finite x, got {x!r}")
    return math.erfc(x)


def _lower_series(a: float, x: float) -> float:
    # gamma_lower(a, x) = x^a e^-x sum_k x^k / (a (a+1) ... (a+k))
    term = 1.0 / a
    total = term
    for k in range(1, _SERIES_ITERS):
        term *= x / (a + k)
        total += term
        if abs(term) < abs(total) * 1e-17:
            break
    return total * math.exp(-x + a * math.log(x))


def _upper_cf(a: float, x: float) -> float:
    # Lentz continued fraction for Gamma(a, x), reliable for x >= a + 1.
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _CF_ITERS):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    return math.exp(-x + a * math.log(x)) * h


def _e1_series(x: float) -> float:
    # E1(x) = -gamma - log x + sum (-1)^(k+1) x^k / (k k!), for small x
    total = -_EULER_GAMMA - math.log(x)
    term = 1.0
    for k in range(1, 40):
        term *= -x / k
        total -= term / k
        if abs(term) < 1e-18:
            break
    return total


_EULER_GAMMA = 0.5772156649015328606


def _gamma_upper(a: float, x: float) -> float:
    """Gamma(a, x) for real a.  Requires x > 0 when a <= 0."""
    if x < 0.0:
        raise DomainError(f"Gamma(a, x) requires x >= 0, got x={x!r}")
    if x == 0.0:
        if a <= 0.0:
            raise DomainError("Gamma(a, 0) diverges for a <= 0")
        return gamma(a)
    if a > 0.0:
        if x < a + 1.0:
            return gamma(a) - _lower_series(a, x)
        return _upper_cf(a, x)
    if x >= 1.0:
        # The continued fraction stays well conditioned for a <= 0 once
        # x is away from the origin; the recurrence below would cancel.
        return _upper_cf(a, x)
    # Small x: descend from a lifted parameter.  A non-positive integer a
    # routes through Gamma(0, x) = E1(x); anything else lifts into (0, 1].
    # The x^z term dominates each difference, so no cancellation occurs.
    logx = math.log(x)
    if abs(a - round(a)) < 1e-12:
        a = float(round(a))
        val = _e1_series(x)
        steps = int(-a)
    else:
        steps = int(math.ceil(-a)) + 1
        val = _gamma_upper(a + steps, x)
    for j in range(steps, 0, -1):
        z = a + j - 1.0
        val = (val - math.exp(z * logx - x)) / z
    return val


def upper_incomplete_gamma(a: float, x: float) -> float:
    """Upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt.

    Series for small x, continued fraction for large x, switching near
    x = a + 1 where both behave well.
    """
    if not (math.isfinite(a) and math.isfinite(x)):
        raise DomainError("upper_incomplete_gamma requires finite arguments")
    if a <= 0.0:
        raise DomainError(f"upper_incomplete_gamma requires a > 0, got {a!r}")
    if x < 0.0:
        raise DomainError(f"upper_incomplete_gamma requires x >= 0, got {x!r}")
    return _gamma_upper(a, x)


def _gamma_upper_grid(a: float, x: np.ndarray) -> np.ndarray:
    """Vectorised Gamma(a, x) over an array of x > 0, fixed a.

    Same algorithm as the scalar path with fixed iteration counts; used by
    the lattice-sum evaluators where thousands of kernel values share one a.
    """
    x = np.asarray(x, dtype=float)
    if a <= 0.0:
        if np.any(x <= 0.0):
            raise DomainError("Gamma(a, x) with a <= 0 requires x > 0")
        out = np.empty_like(x)
        small = x < 1.0
        if np.any(small):
            xs = x[small]
            logxs = np.log(xs)
            if abs(a - round(a)) < 1e-12:
                a = float(round(a))
                val = np.array([_e1_series(float(t)) for t in xs])
                steps = int(-a)
            else:
                steps = int(math.ceil(-a)) + 1
                val = _gamma_upper_grid(a + steps, xs)
            for j in range(steps, 0, -1):
                z = a + j - 1.0
                val = (val - np.exp(z * logxs - xs)) / z
            out[small] = val
        if np.any(~small):
            out[~small] = _cf_grid(a, x[~small])
        return out

    out = np.empty_like(x)
    lo = x < a + 1.0
    hi = ~lo

    if np.any(lo):
        xs = x[lo]
        term = np.full_like(xs, 1.0 / a)
        total = term.copy()
        for k in range(1, _SERIES_ITERS):
            term = term * xs / (a + k)
            total += term
        with np.errstate(divide="ignore"):
            logxs = np.where(xs > 0.0, np.log(xs), -np.inf)
        out[lo] = math.gamma(a) - total * np.exp(-xs + a * logxs)

    if np.any(hi):
        out[hi] = _cf_grid(a, x[hi])

    return out


def _cf_grid(a: float, x: np.ndarray) -> np.ndarray:
    b = x + 1.0 - a
    c = np.full_like(x, 1.0 / _TINY)
    d = 1.0 / b
    h = d.copy()
    for i in range(1, _CF_ITERS):
        an = -i * (i - a)
        b = b + 2.0
        d = an * d + b
        np.copyto(d, _TINY, where=np.abs(d) < _TINY)
        c = b + an / c
        np.copyto(c, _TINY, where=np.abs(c) < _TINY)
        d = 1.0 / d
        h = h * (d * c)
    return np.exp(-x + a * np.log(x)) * h


def f_term(s: float, a: float) -> float:
    """Kernel f(s, a) = (pi a^2)^(-s/2) Gamma(s/2, pi a^2).

    Equals int_1^inf t^(s/2) exp(-pi t a^2) dt/t; strictly positive and
    monotone decreasing in a.  Defined for any real s (the integral has
    Gaussian decay); the evaluators use it on (0, n) and just outside.
    """
    if not (math.isfinite(s) and math.isfinite(a)):
        raise DomainError("f_term requires finite arguments")
    if a <= 0.0:
        raise DomainError(f"f_term requires a > 0, got {a!r}")
    x = math.pi * a * a
    g = _gamma_upper(s / 2.0, x)
    return x ** (-s / 2.0) * g


def f_term_grid(s: float, a: np.ndarray) -> np.ndarray:
    """Vectorised f(s, a) over an array of positive a, fixed s."""
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return np.zeros(0)
    if np.any(a <= 0.0):
        raise DomainError("f_term_grid requires a > 0")
    x = math.pi * a * a
    return x ** (-s / 2.0) * _gamma_upper_grid(s / 2.0, x)
