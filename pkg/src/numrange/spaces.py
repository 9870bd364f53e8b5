"""Norm geometry for the supported spaces.

A :class:`SpaceSpec` names the ambient norm: Hilbert (``l2``), ``lp`` with
1 < p < inf, ``l1``, ``linf``, or a 2-D ``polygon`` norm given by the
vertices of its (symmetric, convex) unit ball.  This module owns norm
evaluation, norming functionals (single functionals or parameterised
families), Birkhoff orthogonality, and the polygon helpers used elsewhere.

Only ``l2`` supports complex scalars; the other spaces are real.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    InputFormatError,
    NotUnitVector,
)

_ACTIVE_TOL = 1e-10  # active coordinate / active face detection


@dataclass(frozen=True)
class SpaceSpec:
    """Ambient norm: variant in {"l2","lp","l1","linf","polygon"}.

    For ``lp`` the exponent ``p`` must be finite and > 1 (use the dedicated
    variants for p = 1, inf).  For ``polygon`` the unit-ball vertices are a
    (m, 2) array in counterclockwise order, symmetric under negation.
    """

    variant: str
    n: int
    p: float = 0.0
    vertices: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise InputFormatError(f"dimension must be >= 1, got {self.n}")
        if self.variant not in ("l2", "lp", "l1", "linf", "polygon"):
            raise InputFormatError(f"unknown space variant {self.variant!r}")
        if self.variant == "lp":
            if not (1.0 < self.p < math.inf):
                raise InputFormatError(f"lp needs finite p > 1, got p={self.p}")
        if self.variant == "polygon":
            if self.n != 2:
                raise DimensionMismatch("polygon spaces are 2-dimensional")
            V = np.asarray(self.vertices, dtype=float)
            _validate_polygon(V)

    @property
    def unit_tol(self):
        return 1e-12 if self.variant == "l2" else 1e-10

    @property
    def strictly_convex(self):
        return self.variant in ("l2", "lp")

    @property
    def smooth(self):
        return self.variant in ("l2", "lp")

    def vertex_array(self):
        return np.asarray(self.vertices, dtype=float)

    def face_functionals(self):
        """Rows f_k with unit ball = {x : f_k . x <= 1 for all k} (polygon only)."""
        if self.variant != "polygon":
            raise FieldMismatch("face functionals exist only for polygon spaces")
        return _face_functionals(self.vertex_array())


def space_l2(n):
    return SpaceSpec("l2", n)


def space_lp(p, n):
    return SpaceSpec("lp", n, p=float(p))


def space_l1(n):
    return SpaceSpec("l1", n)


def space_linf(n):
    return SpaceSpec("linf", n)


def space_polygon(vertices):
    V = np.asarray(vertices, dtype=float)
    return SpaceSpec("polygon", 2, vertices=tuple(map(tuple, V)))


def _validate_polygon(V):
    if V.ndim != 2 or V.shape[1] != 2 or V.shape[0] < 4:
        raise InputFormatError("polygon needs at least 4 vertices of dimension 2")
    norms = np.hypot(V[:, 0], V[:, 1])
    if np.any(norms < 1e-12):
        raise InputFormatError("polygon vertices must be nonzero")
    m = V.shape[0]
    # convex position, counterclockwise
    for k in range(m):
        a, b, c = V[k - 1], V[k], V[(k + 1) % m]
        cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
        if cross <= 1e-12:
            raise InputFormatError("polygon vertices must be in strict convex position, CCW")
    # symmetry under negation
    for v in V:
        d = np.min(np.hypot(V[:, 0] + v[0], V[:, 1] + v[1]))
        if d > 1e-9:
            raise InputFormatError("polygon must be symmetric under negation")


def _face_functionals(V):
    """Functional per edge (v_k, v_{k+1}): the unique f with f(v_k)=f(v_{k+1})=1."""
    m = V.shape[0]
    F = np.empty((m, 2))
    for k in range(m):
        a, b = V[k], V[(k + 1) % m]
        F[k] = np.linalg.solve(np.array([a, b]), np.ones(2))
    return F


def norm_in(space, x):
    """Norm of ``x`` in ``space``.  Complex input only for l2."""
    x = np.asarray(x)
    if x.shape != (space.n,):
        raise DimensionMismatch(f"vector of shape {x.shape} in {space.n}-dim space")
    if np.iscomplexobj(x) and space.variant != "l2":
        if np.max(np.abs(x.imag)) > 0:
            raise FieldMismatch(f"{space.variant} spaces are real")
        x = x.real
    if space.variant == "l2":
        return float(np.linalg.norm(x))
    if space.variant == "lp":
        ax = np.abs(x)
        s = ax.max()
        if s == 0.0:
            return 0.0
        return float(s * np.sum((ax / s) ** space.p) ** (1.0 / space.p))
    if space.variant == "l1":
        return float(np.sum(np.abs(x)))
    if space.variant == "linf":
        return float(np.max(np.abs(x)))
    F = space.face_functionals()
    return float(np.max(F @ x))


def normalize_in(space, x):
    nx = norm_in(space, x)
    if nx == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return np.asarray(x) / nx


def unit_tolerance_ok(space, x):
    return abs(norm_in(space, x) - 1.0) <= space.unit_tol


class FunctionalFamily:
    """Set of norming functionals at a unit vector x: {f in S_dual : f(x) = 1}.

    kind "point":   the single functional ``coeffs`` (smooth norms).
    kind "box":     fixed part + free coordinates in [-1, 1] (l1).
    kind "simplex": convex hull of the rows of ``extremes`` (linf, polygon vertex).
    """

    def __init__(self, kind, space, x, coeffs=None, free_mask=None, extremes=None):
        self.kind = kind
        self.space = space
        self.x = np.asarray(x)
        self.coeffs = None if coeffs is None else np.asarray(coeffs)
        self.free_mask = None if free_mask is None else np.asarray(free_mask, dtype=bool)
        self.extremes = None if extremes is None else np.asarray(extremes)

    def value_range(self, y):
        """(lo, hi) of f(y) over the family.  Real spaces only for box/simplex."""
        y = np.asarray(y)
        if self.kind == "point":
            v = _pair(self.coeffs, y)
            if np.iscomplexobj(np.asarray(v)):
                raise FieldMismatch("value_range needs a real pairing; use pair() for complex")
            return float(v), float(v)
        if self.kind == "box":
            base = float(np.dot(self.coeffs, y))
            slack = float(np.sum(np.abs(y[self.free_mask])))
            return base - slack, base + slack
        vals = self.extremes @ y
        return float(np.min(vals)), float(np.max(vals))

    def pair(self, y):
        """f(y) for the canonical (point) functional; complex-aware."""
        if self.kind != "point":
            raise FieldMismatch("pair() is for point families; use value_range")
        return complex(_pair(self.coeffs, y))

    def max_abs(self, y):
        """max |f(y)| over the family, with an attaining functional."""
        if self.kind == "point":
            v = _pair(self.coeffs, y)
            return abs(v), self.coeffs
        lo, hi = self.value_range(y)
        if abs(hi) >= abs(lo):
            return abs(hi), self._attainer(y, want_max=True)
        return abs(lo), self._attainer(y, want_max=False)

    def min_abs(self, y):
        """min |f(y)| over the family, with an attaining functional."""
        if self.kind == "point":
            v = _pair(self.coeffs, y)
            return abs(v), self.coeffs
        lo, hi = self.value_range(y)
        if lo <= 0.0 <= hi:
            return 0.0, self._zero_attainer(y, lo, hi)
        if abs(lo) <= abs(hi):
            return abs(lo), self._attainer(y, want_max=False)
        return abs(hi), self._attainer(y, want_max=True)

    def _attainer(self, y, want_max):
        if self.kind == "box":
            f = self.coeffs.copy()
            sgn = 1.0 if want_max else -1.0
            f[self.free_mask] = sgn * np.sign(y[self.free_mask])
            # sign(0) = 0 is still inside the box
            return f
        vals = self.extremes @ y
        k = int(np.argmax(vals) if want_max else np.argmin(vals))
        return self.extremes[k]

    def _zero_attainer(self, y, lo, hi):
        if hi == lo:
            return self._attainer(y, True)
        t = -lo / (hi - lo)
        return (1.0 - t) * self._attainer(y, want_max=False) + t * self._attainer(y, want_max=True)

    def representatives(self, cap=16):
        """Extreme-point functionals of the family (capped), as NormingFunctional."""
        if self.kind == "point":
            reps = [self.coeffs]
        elif self.kind == "simplex":
            reps = list(self.extremes)
        else:
            free = np.flatnonzero(self.free_mask)
            reps = []
            k = min(len(free), max(0, int(math.log2(cap)) if cap > 1 else 0))
            for bits in range(2 ** k):
                f = self.coeffs.copy()
                for j, idx in enumerate(free[:k]):
                    f[idx] = 1.0 if (bits >> j) & 1 else -1.0
                reps.append(f)
                if len(reps) >= cap:
                    break
            if not reps:
                reps = [self.coeffs]
        return [self._wrap(f) for f in reps]

    def _wrap(self, coeffs):
        return NormingFunctional(
            coeffs=np.asarray(coeffs),
            dual_norm=dual_norm_in(self.space, coeffs),
            pairing=float(np.real(_pair(coeffs, self.x))),
        )


@dataclass(frozen=True)
class NormingFunctional:
    """A unit dual functional with pairing f(x) = 1 at its base point."""

    coeffs: np.ndarray
    dual_norm: float
    pairing: float


def _pair(f, y):
    f = np.asarray(f)
    if np.iscomplexobj(f) or np.iscomplexobj(np.asarray(y)):
        return np.vdot(f, y).conjugate() if False else np.sum(np.asarray(f) * np.asarray(y))
    return float(np.dot(f, y))


def dual_norm_in(space, f):
    f = np.asarray(f)
    if space.variant == "l2":
        return float(np.linalg.norm(f))
    if space.variant == "lp":
        q = space.p / (space.p - 1.0)
        return norm_in(space_lp(q, space.n), np.abs(f))
    if space.variant == "l1":
        return float(np.max(np.abs(f)))
    if space.variant == "linf":
        return float(np.sum(np.abs(f)))
    V = space.vertex_array()
    return float(np.max(np.abs(V @ f)))


def norming_functionals(x, space):
    """Norming functionals at unit ``x``: a FunctionalFamily.

    lp (1<p<inf): unique, f_i = sign(x_i)|x_i|^{p-1} (conj phase in the
    complex l2 case).  l1: box family, free coefficients off the support.
    linf: simplex over the coordinates with |x_i| = 1.  polygon: the face
    functional of the containing edge, or the two-face simplex at a vertex.
    """
    x = np.asarray(x)
    if not unit_tolerance_ok(space, x):
        raise NotUnitVector(f"|x| = {norm_in(space, x)!r} in {space.variant}")
    if space.variant == "l2":
        return FunctionalFamily("point", space, x, coeffs=np.conj(x))
    if np.iscomplexobj(x):
        x = x.real
    if space.variant == "lp":
        f = np.sign(x) * np.abs(x) ** (space.p - 1.0)
        return FunctionalFamily("point", space, x, coeffs=f)
    if space.variant == "l1":
        supp = np.abs(x) > _ACTIVE_TOL
        f = np.where(supp, np.sign(x), 0.0)
        return FunctionalFamily("box", space, x, coeffs=f, free_mask=~supp)
    if space.variant == "linf":
        active = np.abs(x) >= 1.0 - _ACTIVE_TOL
        rows = []
        for i in np.flatnonzero(active):
            e = np.zeros(space.n)
            e[i] = np.sign(x[i])
            rows.append(e)
        return FunctionalFamily("simplex", space, x, extremes=np.array(rows))
    F = space.face_functionals()
    vals = F @ x
    active = np.flatnonzero(vals >= 1.0 - _ACTIVE_TOL)
    if len(active) == 1:
        return FunctionalFamily("point", space, x, coeffs=F[active[0]])
    return FunctionalFamily("simplex", space, x, extremes=F[active])


def birkhoff_orthogonal(x, y, space, tol=1e-9):
    """x is Birkhoff-James orthogonal to y: ||x + t y|| >= ||x|| for all t.

    Ternary search on the convex map t -> ||x + t y||; the bracket
    |t| <= 2||x||/||y|| always contains the minimizer.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    nx = norm_in(space, x)
    if nx == 0.0:
        raise ValueError("x must be nonzero")
    ny = norm_in(space, y)
    if ny == 0.0:
        return True
    lo, hi = -2.0 * nx / ny, 2.0 * nx / ny

    def g(t):
        return norm_in(space, x + t * y)

    for _ in range(200):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if g(m1) <= g(m2):
            hi = m2
        else:
            lo = m1
    tmin = 0.5 * (lo + hi)
    gmin = min(g(tmin), g(lo), g(hi))
    return gmin >= nx - tol


def polygon_boundary_points(space, count):
    """~count points on the polygon unit sphere, spread by arc length."""
    V = space.vertex_array()
    m = V.shape[0]
    lens = np.array([np.linalg.norm(V[(k + 1) % m] - V[k]) for k in range(m)])
    weights = lens / lens.sum()
    pts = []
    for k in range(m):
        nk = max(1, int(round(weights[k] * count)))
        for j in range(nk):
            t = j / nk
            pts.append((1.0 - t) * V[k] + t * V[(k + 1) % m])
    return np.array(pts)


def extreme_points(space):
    """Extreme points of the unit ball when finitely many (l1, linf, polygon)."""
    n = space.n
    if space.variant == "l1":
        eye = np.eye(n)
        return np.vstack([eye, -eye])
    if space.variant == "linf":
        if n > 20:
            raise DimensionTooLarge(f"2^{n} sign vectors")
        out = np.empty((2 ** n, n))
        for b in range(2 ** n):
            out[b] = [1.0 if (b >> i) & 1 else -1.0 for i in range(n)]
        return out
    if space.variant == "polygon":
        return space.vertex_array()
    raise FieldMismatch(f"{space.variant} has infinitely many extreme points")


def parse_space(spec, n=None):
    """Space from its JSON form: "l1"/"l2"/"linf" strings (n from context),
    {"variant":"lp","p":4,"n":2}, or {"variant":"polygon","vertices":[...]}."""
    if isinstance(spec, str):
        name = spec.lower()
        if name in ("l1", "l2", "linf"):
            if n is None:
                raise InputFormatError(f"space {name!r} needs a dimension")
            return SpaceSpec(name, n)
        raise InputFormatError(f"unknown space string {spec!r}")
    if not isinstance(spec, dict):
        raise InputFormatError(f"space spec must be a string or object, got {type(spec)}")
    try:
        variant = spec["variant"]
    except KeyError:
        raise InputFormatError("space object needs a 'variant'") from None
    if variant == "polygon":
        return space_polygon(spec["vertices"])
    dim = spec.get("n", n)
    if dim is None:
        raise InputFormatError("space object needs 'n'")
    if variant == "lp":
        return space_lp(spec["p"], int(dim))
    return SpaceSpec(variant, int(dim))


def space_to_json(space):
    if space.variant == "polygon":
        return {"variant": "polygon", "vertices": [list(v) for v in space.vertices]}
    if space.variant == "lp":
        return {"variant": "lp", "p": space.p, "n": space.n}
    return {"variant": space.variant, "n": space.n}


from .errors import DimensionTooLarge  # noqa: E402  (used in extreme_points)
