"""Kobayashi metric of the model orbifold disk (D / (1 - 1/n){0}).

The metric is the push-forward of the Poincare metric 4|dw|^2/(1-|w|^2)^2
under w -> w^n, i.e. density

    4 / (n^2 |z|^(2-2/n) (1 - |z|^(2/n))^2)

with respect to |dz|^2, and 4/(|z|^2 log^2 |z|^2) on the punctured disk
when n is infinite.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize, sparse
from scipy.sparse.csgraph import dijkstra

from .core import Multiplicity, as_multiplicity, is_infinite


class _ConePoint:
    """Returned by :func:`density` at the cone point of a finite n > 1."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __float__(self):
        return math.inf

    def __repr__(self):
        return "CONE_POINT"


CONE_POINT = _ConePoint()


@dataclass(frozen=True)
class ModelOrbifoldDisk:
    n: Multiplicity

    def __post_init__(self):
        object.__setattr__(self, "n", as_multiplicity(self.n))

    @property
    def punctured(self) -> bool:
        return is_infinite(self.n)


def _check_point(d: ModelOrbifoldDisk, z: complex) -> complex:
    z = complex(z)
    if abs(z) >= 1:
        raise ValueError(f"{z} is not in the open unit disk")
    if z == 0 and d.punctured:
        raise ValueError("the origin is deleted when n is infinite")
    return z


def radial_density(n: Multiplicity, r):
    """Density as a function of |z| = r (vectorised, r > 0)."""
    r = np.asarray(r, dtype=float)
    if is_infinite(n):
        return 4.0 / (r**2 * np.log(r**2) ** 2)
    return 4.0 / (n**2 * r ** (2 - 2 / n) * (1 - r ** (2 / n)) ** 2)


def density(d: ModelOrbifoldDisk, z: complex):
    """Conformal factor of the orbifold Kobayashi metric at z."""
    z = _check_point(d, z)
    if z == 0:
        if d.n == 1:
            return 4.0
        return CONE_POINT
    return float(radial_density(d.n, abs(z)))


def poincare_distance(a: complex, b: complex) -> float:
    """Distance for 4|dw|^2/(1-|w|^2)^2, so d(0, r) = log((1+r)/(1-r))."""
    num = abs(a - b)
    den = abs(1 - a.conjugate() * b)
    return 2 * math.atanh(min(num / den, 1.0)) if num else 0.0


def _upper_half_plane_distance(x1, y1, x2, y2) -> float:
    return 2 * math.asinh(math.hypot(x1 - x2, y1 - y2) / (2 * math.sqrt(y1 * y2)))


def distance(d: ModelOrbifoldDisk, p: complex, q: complex, lift_bound: int = 16) -> float:
    """Orbifold Kobayashi distance between p and q.

    For finite n this is the minimum Poincare distance between a fixed
    n-th root of p and the n roots of q.  For n = inf the punctured disk is
    covered by the upper half plane through tau -> exp(i tau); lifts of q
    differ by 2 pi k and |k| <= ``lift_bound`` are searched.
    """
    p, q = _check_point(d, p), _check_point(d, q)
    if p == q:
        return 0.0
    n = d.n
    if is_infinite(n):
        x1, y1 = cmath.phase(p), -math.log(abs(p))
        x2, y2 = cmath.phase(q), -math.log(abs(q))
        return min(
            _upper_half_plane_distance(x1, y1, x2 + 2 * math.pi * k, y2)
            for k in range(-lift_bound, lift_bound + 1)
        )
    wp = abs(p) ** (1 / n) * cmath.exp(1j * cmath.phase(p) / n) if p else 0j
    rq, aq = abs(q) ** (1 / n), cmath.phase(q)
    lifts = [rq * cmath.exp(1j * (aq + 2 * math.pi * k) / n) for k in range(n)]
    return min(poincare_distance(wp, w) for w in lifts)


def ahlfors_schwarz_ratio(d: ModelOrbifoldDisk, m: int, t: complex) -> float:
    """(f^* omega) / (Poincare density) at t for f(t) = t^m.

    Written as (m/n)^2 |t|^(2(m-n)/n) ((1 - |t|^2) / (1 - |t|^(2m/n)))^2,
    which is exactly 1 when m = n.
    """
    if d.punctured:
        raise ValueError("t -> t^m meets the deleted origin; not an orbifold morphism")
    n = d.n
    if m < n:
        raise ValueError(f"t^{m} is not an orbifold morphism to multiplicity {n}")
    r = abs(complex(t))
    if not 0 < r < 1:
        raise ValueError("t must satisfy 0 < |t| < 1")
    x = r ** 2.0
    xe = r ** (2 * m / n)
    return (m / n) ** 2 * r ** (2 * (m - n) / n) * ((1 - x) / (1 - xe)) ** 2


# -- numerical oracle -------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(6)
_GL_NODES = 0.5 * (_GL_NODES + 1)
_GL_WEIGHTS = 0.5 * _GL_WEIGHTS


def _log_polar_factor(n: Multiplicity, u):
    """lambda(u) with metric = lambda^2 (du^2 + dtheta^2), u = log|z|."""
    r = np.exp(u)
    return r * np.sqrt(radial_density(n, r))


def _segment_lengths(n, u0, t0, u1, t1):
    du, dt = u1 - u0, t1 - t0
    chord = np.hypot(du, dt)
    lam = _log_polar_factor(n, u0[..., None] + du[..., None] * _GL_NODES)
    return chord * (lam @ _GL_WEIGHTS)


def _radial_length(n: Multiplicity, r0: float, r1: float) -> float:
    """Length of the radial segment [r0, r1] for finite n.

    Integrates in s with r = s^n, which removes the integrable blow-up of
    the density at the cone point; the Jacobian is applied numerically.
    """
    lo, hi = sorted((r0, r1))

    def f(s):  # quad never samples the endpoints
        return math.sqrt(float(radial_density(n, s**n))) * n * s ** (n - 1)

    val, _ = integrate.quad(f, lo ** (1 / n), hi ** (1 / n), limit=200, epsabs=1e-13, epsrel=1e-13)
    return val


def _stencil(k: int):
    vecs = []
    for a in range(-k, k + 1):
        for b in range(-k, k + 1):
            if (a, b) != (0, 0) and math.gcd(a, b) == 1:
                vecs.append((a, b))
    return vecs


def _graph_path(n, up, tp, uq, tq, h, depth, stencil_radius):
    """Dijkstra on a (u, theta) grid anchored at p; returns the polyline."""
    dtheta = tq - tp
    margin = 4 * stencil_radius
    j_lo = min(0, math.floor(dtheta / h)) - margin
    j_hi = max(0, math.ceil(dtheta / h)) + margin
    i_hi = math.floor((max(up, uq) - up) / h)
    i_lo = math.floor((min(up, uq) - depth - up) / h)
    rows = np.arange(i_lo, i_hi + 1)
    cols = np.arange(j_lo, j_hi + 1)
    U = up + rows * h
    T = tp + cols * h
    nr, nc = len(rows), len(cols)
    idx = np.arange(nr * nc).reshape(nr, nc)
    src = idx[-i_lo, -j_lo]
    q_node = nr * nc

    heads, tails, weights = [], [], []
    for a, b in _stencil(stencil_radius):
        if (a, b) < (0, 0):
            continue
        r0 = slice(max(0, -a), nr - max(0, a))
        c0 = slice(max(0, -b), nc - max(0, b))
        r1 = slice(max(0, a), nr - max(0, -a) if a < 0 else nr)
        c1 = slice(max(0, b), nc - max(0, -b) if b < 0 else nc)
        i0, i1 = idx[r0, c0].ravel(), idx[r1, c1].ravel()
        u0 = U[i0 // nc]
        u1 = U[i1 // nc]
        w = _segment_lengths(n, u0, np.zeros_like(u0), u1, np.full_like(u1, b * h))
        heads.append(i0)
        tails.append(i1)
        weights.append(w)

    # q joins the grid through every node in a stencil-sized box around it
    near_r = np.nonzero(np.abs(U - uq) <= stencil_radius * h)[0]
    near_c = np.nonzero(np.abs(T - tq) <= stencil_radius * h)[0]
    rr, cc = np.meshgrid(near_r, near_c, indexing="ij")
    rr, cc = rr.ravel(), cc.ravel()
    w = _segment_lengths(n, U[rr], T[cc], np.full(rr.shape, uq), np.full(rr.shape, tq))
    heads.append(idx[rr, cc])
    tails.append(np.full(rr.shape, q_node))
    weights.append(w)

    heads = np.concatenate(heads)
    tails = np.concatenate(tails)
    weights = np.concatenate(weights)
    g = sparse.coo_matrix((weights, (heads, tails)), shape=(q_node + 1, q_node + 1)).tocsr()
    dist, pred = dijkstra(g, directed=False, indices=src, return_predecessors=True)
    path = [q_node]
    while path[-1] != src:
        path.append(pred[path[-1]])
    path.reverse()
    pts = [(U[i // nc], T[i % nc]) if i != q_node else (uq, tq) for i in path]
    touched_bottom = any(i != q_node and i // nc == 0 for i in path)
    return np.array(pts), float(dist[q_node]), touched_bottom


def _resample(poly: np.ndarray, count: int) -> np.ndarray:
    seg = np.hypot(*np.diff(poly, axis=0).T)
    s = np.concatenate([[0.0], np.cumsum(seg)])
    target = np.linspace(0.0, s[-1], count + 1)
    return np.column_stack([np.interp(target, s, poly[:, 0]), np.interp(target, s, poly[:, 1])])


_U_CEILING = 1e-9


def _relax_once(n, poly: np.ndarray):
    """Minimise the length of a polyline with fixed endpoints.

    Each interior vertex moves along the normal of the initial polyline,
    which removes the sliding degeneracy along the curve.
    """
    start, end = poly[0], poly[-1]
    tangent = poly[2:] - poly[:-2]
    tangent /= np.hypot(*tangent.T)[:, None]
    normal = np.column_stack([-tangent[:, 1], tangent[:, 0]])
    base = poly[1:-1]
    eps = 1e-7

    def length_and_grad(s):
        pts = np.vstack([start, base + s[:, None] * normal, end])
        u, t = pts[:, 0], pts[:, 1]
        if np.any(u >= 0):
            return math.inf, np.zeros_like(s)
        du, dt = np.diff(u), np.diff(t)
        chord = np.hypot(du, dt)
        us = u[:-1, None] + du[:, None] * _GL_NODES
        lam = _log_polar_factor(n, us)
        dlam = (_log_polar_factor(n, us + eps) - _log_polar_factor(n, us - eps)) / (2 * eps)
        mean_lam = lam @ _GL_WEIGHTS
        safe = np.where(chord > 0, chord, 1.0)
        # partial derivatives of each segment length w.r.t. its two end points
        d_end_u = du / safe * mean_lam + chord * (dlam @ (_GL_WEIGHTS * _GL_NODES))
        d_start_u = -du / safe * mean_lam + chord * (dlam @ (_GL_WEIGHTS * (1 - _GL_NODES)))
        d_t = dt / safe * mean_lam
        gu = np.zeros(len(pts))
        gt = np.zeros(len(pts))
        gu[1:] += d_end_u
        gu[:-1] += d_start_u
        gt[1:] += d_t
        gt[:-1] -= d_t
        grad = gu[1:-1] * normal[:, 0] + gt[1:-1] * normal[:, 1]
        return float(chord @ mean_lam), grad

    if len(base) == 0:
        return length_and_grad(np.zeros(0))[0], poly
    # keep every vertex strictly inside the disk (u < 0)
    room = (-_U_CEILING - base[:, 0]) / np.where(normal[:, 0] != 0, normal[:, 0], np.nan)
    lower = np.where(normal[:, 0] < 0, room, -np.inf)
    upper = np.where(normal[:, 0] > 0, room, np.inf)
    res = optimize.minimize(
        length_and_grad, np.zeros(len(base)), jac=True, method="L-BFGS-B",
        bounds=optimize.Bounds(np.minimum(lower, 0.0), np.maximum(upper, 0.0)),
        options={"maxiter": 500, "ftol": 0.0, "gtol": 1e-10},
    )
    return float(res.fun), np.vstack([start, base + res.x[:, None] * normal, end])


def _relax(n, poly: np.ndarray, segments: int, rounds: int = 12) -> np.ndarray:
    """Alternate even resampling with normal relaxation until the length
    stops decreasing; returns the best polyline."""
    best, best_poly = math.inf, poly
    for _ in range(rounds):
        length, poly = _relax_once(n, _resample(poly, segments))
        if length > best - 1e-13:
            break
        best, best_poly = length, poly
    return best_poly


def _polyline_length(n, poly: np.ndarray, max_du: float = 0.01) -> float:
    """Length of a (u, theta) polyline with every segment split so that
    the quadrature never spans more than ``max_du`` in u."""
    u0, t0 = poly[:-1, 0], poly[:-1, 1]
    du, dt = np.diff(poly[:, 0]), np.diff(poly[:, 1])
    k = np.maximum(1, np.ceil(np.abs(du) / max_du)).astype(int)
    seg = np.repeat(np.arange(len(k)), k)
    j = np.arange(seg.size) - np.repeat(np.cumsum(k) - k, k)
    a, b = j / k[seg], (j + 1) / k[seg]
    lengths = _segment_lengths(n, u0[seg] + a * du[seg], t0[seg] + a * dt[seg],
                               u0[seg] + b * du[seg], t0[seg] + b * dt[seg])
    return float(lengths.sum())


def geodesic_oracle_distance(d: ModelOrbifoldDisk, p: complex, q: complex, resolution: int = 256) -> float:
    """Distance from a discretisation of the density metric alone.

    Works in log-polar coordinates (u, theta) where the metric is conformal
    to du^2 + dtheta^2.  A shortest path on a grid of angular step
    2 pi / ``resolution`` locates the geodesic, which is then relaxed as a
    polyline with ``resolution // 4`` segments.  The result is the length
    of an explicit curve, measured with segments fine enough that the
    quadrature error is negligible, hence an upper bound.
    For finite n the path through the cone point (two radial legs) is also
    considered; endpoints at the origin use radial quadrature directly.
    """
    if resolution < 64:
        raise ValueError("resolution must be >= 64")
    p, q = _check_point(d, p), _check_point(d, q)
    if p == q:
        return 0.0
    n = d.n
    if p == 0 or q == 0:
        return _radial_length(n, 0.0, abs(q if p == 0 else p))
    through_origin = math.inf
    if not d.punctured:
        through_origin = _radial_length(n, 0.0, abs(p)) + _radial_length(n, 0.0, abs(q))

    up, tp = math.log(abs(p)), cmath.phase(p)
    uq = math.log(abs(q))
    tq = tp + math.remainder(cmath.phase(q) - tp, 2 * math.pi)
    h = 2 * math.pi / resolution
    depth = 1.0
    while True:
        poly, _, touched = _graph_path(n, up, tp, uq, tq, h, depth, stencil_radius=2)
        if not touched or depth > 64:
            break
        depth *= 2
    refined = _polyline_length(n, _relax(n, poly, max(16, resolution // 4)))
    return min(refined, _polyline_length(n, poly), through_origin)
