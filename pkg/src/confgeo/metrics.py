"""Charts and metric fields.

A :class:`Chart` names the coordinates and knows where they break down
(for example the axis r = 0 of cylindrical coordinates).  A
:class:`MetricField` is a chart-tagged map from points to symmetric
positive-definite matrices, optionally carrying closed-form first and
second partial derivatives.  Everything downstream (Christoffel symbols,
curvature, geodesic integration) consumes these two types.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ChartSingularityError, DegenerateMetricError, DomainError

# Points closer to a coordinate singularity than this are rejected.
AXIS_TOL = 1e-6


@dataclass(frozen=True)
class Chart:
    """A named coordinate chart.

    ``singular_mask`` maps an array of points with shape (..., dim) to a
    boolean array flagging points on (or too near) the singular locus.
    ``to_cartesian`` embeds chart coordinates into flat background
    coordinates; it is used for chart-independent distances.
    """

    name: str
    dimension: int
    coordinate_names: tuple[str, ...]
    singular_mask: Optional[Callable[[np.ndarray], np.ndarray]] = None
    to_cartesian: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError("chart dimension must be at least 2")
        if len(self.coordinate_names) != self.dimension:
            raise ValueError("need exactly one name per coordinate")

    def is_singular(self, points) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        if self.singular_mask is None:
            return np.zeros(points.shape[:-1], dtype=bool)
        return np.asarray(self.singular_mask(points))

    def require_regular(self, points):
        if np.any(self.is_singular(points)):
            raise ChartSingularityError(
                f"point on the singular locus of chart '{self.name}'"
            )

    def embed(self, points) -> np.ndarray:
        """Map chart coordinates to flat background coordinates."""
        points = np.asarray(points, dtype=float)
        if self.to_cartesian is None:
            return points
        return np.asarray(self.to_cartesian(points))


def cartesian_chart(dimension: int = 3) -> Chart:
    names = ("x", "y", "z", "w")[:dimension]
    return Chart("cartesian", dimension, names)


def polar_chart() -> Chart:
    def embed(p):
        r, phi = p[..., 0], p[..., 1]
        return np.stack([r * np.cos(phi), r * np.sin(phi)], axis=-1)

    return Chart(
        "polar",
        2,
        ("r", "phi"),
        singular_mask=lambda p: p[..., 0] < AXIS_TOL,
        to_cartesian=embed,
    )


def cylindrical_chart() -> Chart:
    def embed(p):
        r, phi, z = p[..., 0], p[..., 1], p[..., 2]
        return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=-1)

    return Chart(
        "cylindrical",
        3,
        ("r", "phi", "z"),
        singular_mask=lambda p: p[..., 0] < AXIS_TOL,
        to_cartesian=embed,
    )


def sphere_chart() -> Chart:
    return Chart(
        "sphere",
        2,
        ("theta", "phi"),
        singular_mask=lambda p: np.minimum(p[..., 0], np.pi - p[..., 0]) < AXIS_TOL,
    )


@dataclass(frozen=True)
class MetricField:
    """A smooth metric on (part of) a chart.

    ``evaluate`` must accept points of shape (..., dim) and return
    matrices of shape (..., dim, dim); all built-in metrics are
    vectorized so that finite-difference stencils evaluate in one call.

    ``analytic_partials``, when given, maps a single point of shape
    (dim,) to the pair ``(dg, d2g)`` with ``dg[a, i, j] = d_a g_ij`` and
    ``d2g[a, b, i, j] = d_a d_b g_ij``.
    """

    chart: Chart
    evaluate: Callable[[np.ndarray], np.ndarray]
    analytic_partials: Optional[Callable[[np.ndarray], tuple]] = None
    domain_predicate: Optional[Callable[[np.ndarray], np.ndarray]] = None
    name: str = ""

    @property
    def dimension(self) -> int:
        return self.chart.dimension

    def __call__(self, points) -> np.ndarray:
        return np.asarray(self.evaluate(np.asarray(points, dtype=float)))

    def check_point(self, point):
        """Reject chart-singular or out-of-domain points."""
        point = np.asarray(point, dtype=float)
        self.chart.require_regular(point)
        if self.domain_predicate is not None and not np.all(
            self.domain_predicate(point)
        ):
            raise DomainError(f"point {point} outside domain of '{self.name}'")

    def inverse(self, point) -> np.ndarray:
        g = self(point)
        try:
            ginv = np.linalg.inv(g)
        except np.linalg.LinAlgError as exc:
            raise DegenerateMetricError(f"metric singular at {point}") from exc
        if not np.all(np.isfinite(ginv)):
            raise DegenerateMetricError(f"metric singular at {point}")
        # inv() can succeed on nearly singular matrices; check the residual.
        eye = np.eye(self.dimension)
        if np.max(np.abs(g @ ginv - eye)) > 1e-8:
            raise DegenerateMetricError(f"metric ill-conditioned at {point}")
        return ginv

    def inner(self, point, u, w) -> float:
        g = self(point)
        return float(np.asarray(u) @ g @ np.asarray(w))

    def norm(self, point, u) -> float:
        return float(np.sqrt(max(self.inner(point, u, u), 0.0)))


# ---------------------------------------------------------------------------
# standard metrics
# ---------------------------------------------------------------------------


def _constant_partials(dim):
    dg = np.zeros((dim, dim, dim))
    d2g = np.zeros((dim, dim, dim, dim))
    return lambda point: (dg, d2g)


def euclidean_metric(dimension: int = 3, analytic: bool = True) -> MetricField:
    """Flat metric in Cartesian coordinates."""
    eye = np.eye(dimension)

    def evaluate(points):
        points = np.asarray(points, dtype=float)
        return np.broadcast_to(eye, points.shape[:-1] + eye.shape).copy()

    return MetricField(
        cartesian_chart(dimension),
        evaluate,
        analytic_partials=_constant_partials(dimension) if analytic else None,
        name=f"euclidean{dimension}d",
    )


def flat_polar_metric(analytic: bool = True) -> MetricField:
    """Flat 2D metric dr^2 + r^2 dphi^2."""

    def evaluate(points):
        points = np.asarray(points, dtype=float)
        r = points[..., 0]
        g = np.zeros(points.shape[:-1] + (2, 2))
        g[..., 0, 0] = 1.0
        g[..., 1, 1] = r * r
        return g

    def partials(point):
        r = float(point[0])
        dg = np.zeros((2, 2, 2))
        d2g = np.zeros((2, 2, 2, 2))
        dg[0, 1, 1] = 2.0 * r
        d2g[0, 0, 1, 1] = 2.0
        return dg, d2g

    return MetricField(
        polar_chart(),
        evaluate,
        analytic_partials=partials if analytic else None,
        name="flat_polar",
    )


def flat_cylindrical_metric(analytic: bool = True) -> MetricField:
    """Flat 3D metric dr^2 + r^2 dphi^2 + dz^2."""

    def evaluate(points):
        points = np.asarray(points, dtype=float)
        r = points[..., 0]
        g = np.zeros(points.shape[:-1] + (3, 3))
        g[..., 0, 0] = 1.0
        g[..., 1, 1] = r * r
        g[..., 2, 2] = 1.0
        return g

    def partials(point):
        r = float(point[0])
        dg = np.zeros((3, 3, 3))
        d2g = np.zeros((3, 3, 3, 3))
        dg[0, 1, 1] = 2.0 * r
        d2g[0, 0, 1, 1] = 2.0
        return dg, d2g

    return MetricField(
        cylindrical_chart(),
        evaluate,
        analytic_partials=partials if analytic else None,
        name="flat_cylindrical",
    )


def round_sphere_metric(radius: float = 1.0) -> MetricField:
    """Round 2-sphere of the given radius, g = R^2 (dtheta^2 + sin^2 theta dphi^2).

    No analytic partials: this metric is the standard target for
    finite-difference convergence tests.
    """

    def evaluate(points):
        points = np.asarray(points, dtype=float)
        th = points[..., 0]
        g = np.zeros(points.shape[:-1] + (2, 2))
        g[..., 0, 0] = radius**2
        g[..., 1, 1] = (radius * np.sin(th)) ** 2
        return g

    return MetricField(sphere_chart(), evaluate, name=f"sphere(R={radius})")


def polynomial_metric(
    exponents: np.ndarray,
    coefficients: np.ndarray,
    dimension: int = 3,
    name: str = "polynomial",
) -> MetricField:
    """Flat metric plus a polynomial symmetric perturbation.

    ``exponents`` has shape (m, dim) with non-negative integer entries,
    ``coefficients`` has shape (m, dim, dim) and is symmetric in its last
    two indices.  The entry g_ij(x) is delta_ij + sum_k c[k, i, j] x^e[k].
    Exact first and second partials follow from the power rule, which
    makes these metrics a cross-check for the finite-difference pipeline.
    """
    exponents = np.asarray(exponents, dtype=int)
    coefficients = np.asarray(coefficients, dtype=float)
    eye = np.eye(dimension)

    def monomials(points, exps):
        # points (..., dim), exps (m, dim) -> (..., m)
        return np.prod(points[..., None, :] ** exps, axis=-1)

    def evaluate(points):
        points = np.asarray(points, dtype=float)
        mono = monomials(points, exponents)
        return eye + np.einsum("...m,mij->...ij", mono, coefficients)

    # Precompute derivative tables: d/dx_a (x^e) = e_a x^(e - 1_a).
    def derive(exps, coefs, axis):
        mask = exps[:, axis] > 0
        new_exps = exps[mask].copy()
        new_coefs = coefs[mask] * new_exps[:, axis, None, None]
        new_exps[:, axis] -= 1
        return new_exps, new_coefs

    first = [derive(exponents, coefficients, a) for a in range(dimension)]
    second = [
        [derive(first[a][0], first[a][1], b) for b in range(dimension)]
        for a in range(dimension)
    ]

    def partials(point):
        point = np.asarray(point, dtype=float)
        dg = np.zeros((dimension, dimension, dimension))
        d2g = np.zeros((dimension, dimension, dimension, dimension))
        for a in range(dimension):
            exps, coefs = first[a]
            if len(exps):
                dg[a] = np.einsum("m,mij->ij", monomials(point, exps), coefs)
            for b in range(dimension):
                exps2, coefs2 = second[a][b]
                if len(exps2):
                    d2g[a, b] = np.einsum(
                        "m,mij->ij", monomials(point, exps2), coefs2
                    )
        return dg, d2g

    return MetricField(
        cartesian_chart(dimension), evaluate, analytic_partials=partials, name=name
    )
