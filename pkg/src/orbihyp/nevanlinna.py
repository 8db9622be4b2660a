"""Nevanlinna theory for polynomial curves f = [f_0 : ... : f_n] : C -> P^n.

Polynomials are coefficient sequences in ascending order (c_0 + c_1 z + ...).
Everything is normalised at radius 1: counting functions integrate from 1,
and the order function is the Cartan form

    T(r) = mean_theta log ||f(r e^{i theta})|| - mean_theta log ||f(e^{i theta})||.

The default norm is the max norm (Cartan's characteristic), for which a
monomial curve [1 : z^d] has T(r) = d log r exactly.  ``norm="fubini-study"``
uses the Euclidean norm instead; the two differ by a bounded amount.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import integrate

from .core import INF, Multiplicity, as_multiplicity, is_infinite

ROOT_TOL = 1e-8
_PANELS = 64
_FALLBACK_TOL = 1e-7
_GAP = 1e-4
_GAP_CEILING = 1e3
NORMS = ("max", "fubini-study")


class QuadratureError(RuntimeError):
    """Adaptive quadrature of a circle mean did not converge."""


@dataclass(frozen=True)
class ZeroDivisor:
    zeros: Tuple[Tuple[complex, int], ...] = ()

    def __post_init__(self):
        zs = tuple((complex(z), int(nu)) for z, nu in self.zeros)
        if any(nu < 1 for _, nu in zs):
            raise ValueError("zero multiplicities must be >= 1")
        locs = [z for z, _ in zs]
        if len(set(locs)) != len(locs):
            raise ValueError("zero locations must be distinct")
        object.__setattr__(self, "zeros", zs)

    @property
    def degree(self) -> int:
        return sum(nu for _, nu in self.zeros)

    def multiplicities(self) -> List[int]:
        return sorted(nu for _, nu in self.zeros)


def counting_function(E: ZeroDivisor, r: float, l: Multiplicity = INF) -> float:
    """N^l(r, E) = sum over |z_i| < r of min(nu_i, l) log(r / max(|z_i|, 1))."""
    if r < 1:
        raise ValueError(f"radius r={r} must be >= 1")
    l = as_multiplicity(l)
    total = 0.0
    for z, nu in E.zeros:
        a = abs(z)
        if a < r:
            total += (nu if is_infinite(l) else min(nu, l)) * math.log(r / max(a, 1.0))
    return total


# -- polynomials -------------------------------------------------------------

def _trim(c: np.ndarray, tol: float = 0.0) -> np.ndarray:
    c = np.asarray(c, dtype=complex)
    if c.size == 0:
        return np.zeros(1, dtype=complex)
    scale = np.abs(c).max()
    if scale == 0:
        return np.zeros(1, dtype=complex)
    keep = np.nonzero(np.abs(c) > tol * scale)[0]
    return c[: keep[-1] + 1] if keep.size else np.zeros(1, dtype=complex)


def _degree(c: np.ndarray) -> int:
    c = _trim(c)
    return -1 if (c.size == 1 and c[0] == 0) else c.size - 1


def _monic(c: np.ndarray) -> np.ndarray:
    return c / c[-1]


def _gcd(a: np.ndarray, b: np.ndarray, tol: float = ROOT_TOL) -> np.ndarray:
    """Monic numerical gcd by the Euclidean algorithm.

    Remainders are declared zero once their coefficients fall below
    ``tol`` times the size of the polynomials being divided, or below
    ``_GAP_CEILING * tol`` after collapsing by a factor ``_GAP`` relative to
    the previous remainder (rounding noise from clustered roots).
    """
    a, b = _trim(a), _trim(b)
    if _degree(b) < 0:
        return _monic(a)
    if _degree(a) < _degree(b):
        a, b = b, a
    prev = 1.0
    while True:
        if _degree(b) == 0:
            return np.ones(1, dtype=complex)
        a_n, b_n = a / np.abs(a).max(), b / np.abs(b).max()
        _, rem = P.polydiv(a_n, b_n)
        size = np.abs(rem).max() if rem.size else 0.0
        if size <= tol or (size <= _GAP_CEILING * tol and size <= _GAP * prev):
            return _monic(b)
        prev = size
        a, b = b_n, _trim(rem, tol)


def _exact_div(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    quo, _ = P.polydiv(a, b)
    return _trim(quo)


def square_free_parts(c: Sequence[complex], tol: float = ROOT_TOL) -> List[Tuple[np.ndarray, int]]:
    """Square-free decomposition: pairs (a_k, k) with c ~ prod a_k^k and each
    a_k square-free.  Constant factors are dropped.

    Uses the chain g_0 = c, g_k = gcd(g_{k-1}, g_{k-1}'); the roots of
    h_k = g_{k-1} / g_k are those of multiplicity >= k, so a_k = h_k / h_{k+1}.
    Only gcds with a derivative are taken, which keeps the noise down.
    """
    f = _monic(_trim(np.asarray(c, dtype=complex)))
    if _degree(f) < 1:
        return []
    chain = [f]
    while _degree(chain[-1]) > 0:
        g = chain[-1]
        chain.append(_gcd(g, P.polyder(g), tol))
    hs = [_exact_div(a, b) for a, b in zip(chain, chain[1:])]
    parts = []
    for k, h in enumerate(hs, start=1):
        a = _exact_div(h, hs[k]) if k < len(hs) else h
        if _degree(a) > 0:
            parts.append((_monic(a), k))
    return parts


def _roots_with_multiplicity(c, tol: float = ROOT_TOL) -> List[Tuple[complex, int]]:
    out = []
    for part, mult in square_free_parts(c, tol):
        for z in P.polyroots(part):
            out.append((complex(z), mult))
    return out


# -- curves ------------------------------------------------------------------

def _as_coeffs(poly) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(poly, dtype=complex))
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("a polynomial is a nonempty list of coefficients")
    return _trim(arr)


@dataclass(frozen=True)
class PolynomialCurve:
    """A map C -> P^n given by n + 1 polynomials without a common zero."""

    coordinates: Tuple[np.ndarray, ...]
    tol: float = field(default=ROOT_TOL, compare=False)

    def __post_init__(self):
        coords = tuple(_as_coeffs(c) for c in self.coordinates)
        if len(coords) < 2:
            raise ValueError("a curve in P^n needs at least two coordinates")
        nonzero = [c for c in coords if _degree(c) >= 0]
        if not nonzero:
            raise ValueError("all coordinates vanish identically")
        g = nonzero[0]
        for c in nonzero[1:]:
            if _degree(g) == 0:
                break
            g = _gcd(g, c, self.tol)
        if _degree(g) > 0:
            zs = ", ".join(f"{z:.6g}" for z in P.polyroots(g))
            raise ValueError(f"coordinates share a common zero at {zs}")
        object.__setattr__(self, "coordinates", coords)

    @classmethod
    def of(cls, *coords, tol: float = ROOT_TOL) -> "PolynomialCurve":
        return cls(tuple(coords), tol)

    @classmethod
    def monomial(cls, d: int) -> "PolynomialCurve":
        """[1 : z^d]."""
        return cls(([1.0], [0.0] * d + [1.0]))

    @property
    def n(self) -> int:
        return len(self.coordinates) - 1

    @property
    def degree(self) -> int:
        """Algebraic degree max_j deg f_j (the coordinates are coprime)."""
        return max(_degree(c) for c in self.coordinates)

    def evaluate(self, z) -> np.ndarray:
        """Array of shape (n + 1, *z.shape)."""
        z = np.asarray(z, dtype=complex)
        return np.stack([P.polyval(z, c) for c in self.coordinates])

    def combination(self, H: Sequence[complex]) -> np.ndarray:
        """Coefficients of H(f) = sum_j a_j f_j."""
        a = np.asarray(H, dtype=complex)
        if a.shape != (self.n + 1,):
            raise ValueError(f"hyperplane needs {self.n + 1} coefficients, got {a.size}")
        if not np.any(a):
            raise ValueError("hyperplane coefficients are all zero")
        out = np.zeros(1, dtype=complex)
        for aj, c in zip(a, self.coordinates):
            out = P.polyadd(out, aj * c)
        return _trim(out)


def pullback_divisor(f: PolynomialCurve, H: Sequence[complex]) -> ZeroDivisor:
    """Zeros of H(f) with multiplicities from a square-free decomposition."""
    c = f.combination(H)
    scale = max(np.abs(fc).max() for fc in f.coordinates) * np.abs(np.asarray(H)).max()
    if _degree(c) < 0 or np.abs(c).max() <= f.tol * scale:
        raise ValueError("image in H: the combination vanishes identically")
    return ZeroDivisor(tuple(_roots_with_multiplicity(c, f.tol)))


def _circle_mean(func, r: float, tol: float) -> float:
    g = lambda t: func(r * complex(math.cos(t), math.sin(t)))
    res = integrate.quad(g, 0.0, 2 * math.pi, epsabs=tol, epsrel=tol, limit=400, full_output=1)
    if len(res) <= 3:
        return res[0] / (2 * math.pi)
    # kinks of the max norm can stall quad; retry on short panels and only
    # give up if the combined error estimate is large
    edges = np.linspace(0.0, 2 * math.pi, _PANELS + 1)
    total = err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        v, e = integrate.quad(g, a, b, epsabs=tol / _PANELS, epsrel=tol, limit=200, full_output=1)[:2]
        total += v
        err += e
    if err > max(_FALLBACK_TOL, tol) * (1 + abs(total)):
        raise QuadratureError(f"circle mean at r={r} did not converge (error estimate {err:.3g})")
    return total / (2 * math.pi)


def _log_norm(f: PolynomialCurve, norm: str):
    if norm not in NORMS:
        raise ValueError(f"norm must be one of {NORMS}")
    coords = f.coordinates
    if norm == "max":
        return lambda z: math.log(max(abs(P.polyval(z, c)) for c in coords))
    return lambda z: 0.5 * math.log(sum(abs(P.polyval(z, c)) ** 2 for c in coords))


def order_function(f: PolynomialCurve, r: float, norm: str = "max", tol: float = 1e-10) -> float:
    """T_f(r), normalised so that T_f(1) = 0."""
    if r < 1:
        raise ValueError(f"radius r={r} must be >= 1")
    if r == 1:
        return 0.0
    log_norm = _log_norm(f, norm)
    return _circle_mean(log_norm, r, tol) - _circle_mean(log_norm, 1.0, tol)


def proximity_function(f: PolynomialCurve, H: Sequence[complex], r: float,
                       norm: str = "max", tol: float = 1e-10) -> float:
    """m_f(r, H) = mean log(||f|| ||a||' / |H(f)|) over |z| = r.

    ||a||' is the dual norm of the one used for f (l1 against max, l2
    against Euclidean), so the integrand is nonnegative.
    """
    if r < 1:
        raise ValueError(f"radius r={r} must be >= 1")
    a = np.asarray(H, dtype=complex)
    dual = np.abs(a).sum() if norm == "max" else np.linalg.norm(a)
    hc = f.combination(a)
    log_norm = _log_norm(f, norm)

    def integrand(z):
        v = abs(P.polyval(z, hc))
        return log_norm(z) + math.log(dual) - (math.log(v) if v > 0 else -745.0)

    return _circle_mean(integrand, r, tol)


def fmt_residual(f: PolynomialCurve, H: Sequence[complex], r: float,
                 norm: str = "max", tol: float = 1e-10) -> float:
    """T(r) - N(r, H) - m(r, H); constant in r by Jensen's formula."""
    N = counting_function(pullback_divisor(f, H), r)
    return order_function(f, r, norm, tol) - N - proximity_function(f, H, r, norm, tol)


@dataclass(frozen=True)
class DefectEstimate:
    value: float
    l: Multiplicity
    r_max: float
    radii: Tuple[float, ...]
    trajectory: Tuple[Optional[float], ...]
    order: float
    counting: float


def defect_estimate(f: PolynomialCurve, H: Sequence[complex], l: Multiplicity = 1,
                    r_max: float = 1e3, points: int = 12, norm: str = "max",
                    tol: float = 1e-10) -> DefectEstimate:
    """1 - N^l(r, H) / T(r) at r = r_max, with the same ratio on a
    geometric grid of radii up to r_max for inspecting convergence."""
    if r_max <= 1:
        raise ValueError("r_max must exceed 1")
    if points < 1:
        raise ValueError("points must be positive")
    l = as_multiplicity(l)
    E = pullback_divisor(f, H)
    radii = np.geomspace(r_max ** (1.0 / points), r_max, points)
    radii[-1] = r_max
    traj = []
    T = N = 0.0
    for r in radii:
        T = order_function(f, float(r), norm, tol)
        N = counting_function(E, float(r), l)
        traj.append(1 - N / T if T > 10 * tol else None)
    if T <= 10 * tol:
        raise ValueError("order function vanishes at r_max: constant map")
    return DefectEstimate(
        value=traj[-1], l=l, r_max=float(r_max),
        radii=tuple(float(r) for r in radii), trajectory=tuple(traj),
        order=T, counting=N,
    )
