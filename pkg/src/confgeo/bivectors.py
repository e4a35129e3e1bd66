"""Antisymmetric rank-2 contravariant tensors and their transport.

The conformal geodesic equation is checked through bivector-valued
residuals, so the only algebra needed is the wedge of two vectors, a
metric norm, and the covariant derivative along a curve.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curvature import christoffel
from .errors import BasePointMismatchError
from .metrics import MetricField


@dataclass(frozen=True)
class Bivector:
    """Contravariant antisymmetric tensor B^mn anchored at a point."""

    components: np.ndarray
    base_point: np.ndarray

    def __post_init__(self):
        comp = np.asarray(self.components, dtype=float)
        object.__setattr__(self, "components", comp)
        object.__setattr__(
            self, "base_point", np.asarray(self.base_point, dtype=float)
        )
        if np.max(np.abs(comp + comp.T)) > 1e-6 * (1.0 + np.max(np.abs(comp))):
            raise ValueError("bivector components must be antisymmetric")

    def norm(self, field: MetricField) -> float:
        """Metric norm |B| = sqrt(1/2 B^mn B^ab g_ma g_nb).

        The 1/2 makes |u ^ w| = |u| |w| sin(angle) for unit bivectors.
        """
        g = field(self.base_point)
        low = g @ self.components @ g.T
        return float(np.sqrt(max(0.5 * np.sum(self.components * low), 0.0)))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.components)))


def wedge(u, w, base_point) -> Bivector:
    """(u ^ w)^mn = u^m w^n - u^n w^m."""
    u = np.asarray(u, dtype=float)
    w = np.asarray(w, dtype=float)
    return Bivector(np.outer(u, w) - np.outer(w, u), base_point)


def bivector_covariant_derivative(
    field: MetricField, point, velocity, B: Bivector, dB_dt
) -> Bivector:
    """Covariant derivative of a bivector along a curve.

    ``dB_dt`` is the plain parameter derivative of the components; the
    result adds the connection terms
    (nabla_v B)^mn = dB^mn/dt + Gamma^m_rs v^r B^sn + Gamma^n_rs v^r B^ms.
    """
    point = np.asarray(point, dtype=float)
    if not np.allclose(point, B.base_point, rtol=0.0, atol=1e-12):
        raise BasePointMismatchError(
            f"bivector anchored at {B.base_point}, derivative requested at {point}"
        )
    gamma = christoffel(field, point)
    v = np.asarray(velocity, dtype=float)
    comp = B.components
    cov = (
        np.asarray(dB_dt, dtype=float)
        + np.einsum("mrs,r,sn->mn", gamma, v, comp)
        + np.einsum("nrs,r,ms->mn", gamma, v, comp)
    )
    return Bivector(cov, point)
