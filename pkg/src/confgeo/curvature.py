"""Pointwise differential geometry: metric derivatives, Christoffel
symbols, Riemann/Ricci/scalar curvature and the Schouten tensor.

Derivatives come from the metric's closed-form partials when it has
them, otherwise from central finite differences: 4th-order stencils for
first derivatives and symmetric 4th-order stencils (5-point diagonal,
composed 4x4 cross) for second derivatives.  All tensors are dense; the
dimensions here are 2 or 3.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import StepSizeError
from .metrics import MetricField

# Default finite-difference step, scaled per coordinate by max(1, |x_a|).
DEFAULT_FD_STEP = 1e-4

_OFF1 = (-2, -1, 1, 2)
_W1 = np.array([1.0, -8.0, 8.0, -1.0]) / 12.0
_W2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0


def _fd_steps(point: np.ndarray, step: Optional[float]) -> np.ndarray:
    base = DEFAULT_FD_STEP if step is None else float(step)
    if base <= 0.0:
        raise StepSizeError("finite-difference step must be positive")
    scale = np.maximum(1.0, np.abs(point))
    h = base * scale
    if np.any(h <= 64.0 * np.finfo(float).eps * scale):
        raise StepSizeError(f"step {base} underflows at point {point}")
    return h


def _fd_metric_derivatives(field: MetricField, point: np.ndarray, h: np.ndarray):
    """One batched metric evaluation over the full stencil.

    Returns (g, dg, d2g) with dg[a, i, j] = d_a g_ij and
    d2g[a, b, i, j] = d_a d_b g_ij.
    """
    n = point.size
    pts = [point]
    for a in range(n):
        for o in _OFF1:
            p = point.copy()
            p[a] += o * h[a]
            pts.append(p)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for a, b in pairs:
        for oa in _OFF1:
            for ob in _OFF1:
                p = point.copy()
                p[a] += oa * h[a]
                p[b] += ob * h[b]
                pts.append(p)

    values = field(np.asarray(pts))
    g0 = values[0]
    dg = np.empty((n, n, n))
    d2g = np.empty((n, n, n, n))
    idx = 1
    for a in range(n):
        vals = values[idx : idx + 4]
        idx += 4
        dg[a] = np.tensordot(_W1, vals, axes=(0, 0)) / h[a]
        stack = np.stack([vals[0], vals[1], g0, vals[2], vals[3]])
        d2g[a, a] = np.tensordot(_W2, stack, axes=(0, 0)) / h[a] ** 2
    for a, b in pairs:
        vals = values[idx : idx + 16].reshape(4, 4, n, n)
        idx += 16
        mixed = np.einsum("p,q,pqij->ij", _W1, _W1, vals) / (h[a] * h[b])
        d2g[a, b] = mixed
        d2g[b, a] = mixed
    return g0, dg, d2g


def _metric_jets(field: MetricField, point, step=None):
    point = np.asarray(point, dtype=float)
    field.check_point(point)
    if field.analytic_partials is not None:
        dg, d2g = field.analytic_partials(point)
        return field(point), np.asarray(dg, float), np.asarray(d2g, float)
    h = _fd_steps(point, step)
    return _fd_metric_derivatives(field, point, h)


def metric_derivatives(field: MetricField, point, order: int, step=None):
    """First (dg[a, i, j]) or second (d2g[a, b, i, j]) partials of g at a point."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    _, dg, d2g = _metric_jets(field, point, step)
    return dg if order == 1 else d2g


def christoffel(field: MetricField, point, step=None) -> np.ndarray:
    """Levi-Civita connection coefficients Gamma[m, a, b] = Gamma^m_ab."""
    point = np.asarray(point, dtype=float)
    g, dg, _ = _metric_jets(field, point, step)
    ginv = field.inverse(point)
    # T[s, a, b] = d_a g_sb + d_b g_sa - d_s g_ab
    T = np.einsum("asb->sab", dg) + np.einsum("bsa->sab", dg) - dg
    return 0.5 * np.einsum("ms,sab->mab", ginv, T)


@dataclass(frozen=True)
class CurvatureBundle:
    """All pointwise curvature data derived from one metric jet.

    Index conventions: riemann[m, n, a, b] = R^m_nab with
    R^m_nab = d_a Gamma^m_nb - d_b Gamma^m_na + Gamma^m_sa Gamma^s_nb
    - Gamma^m_sb Gamma^s_na, ricci[n, b] = R^m_nmb, and for dimension
    n >= 3 the Schouten tensor
    schouten = (ricci - scalar/(2(n-1)) g) / (n-2).
    With these signs the unit round sphere has ricci = g and scalar 2.
    For dimension 2 ``schouten`` is None.
    """

    point: np.ndarray
    metric: np.ndarray
    inverse_metric: np.ndarray
    christoffel: np.ndarray
    riemann: np.ndarray
    riemann_lowered: np.ndarray
    ricci: np.ndarray
    scalar: float
    schouten: Optional[np.ndarray]


def curvature(field: MetricField, point, step=None) -> CurvatureBundle:
    """Curvature bundle at a point, from analytic or finite-difference jets."""
    point = np.asarray(point, dtype=float)
    g, dg, d2g = _metric_jets(field, point, step)
    ginv = field.inverse(point)

    T = np.einsum("asb->sab", dg) + np.einsum("bsa->sab", dg) - dg
    gamma = 0.5 * np.einsum("ms,sab->mab", ginv, T)

    dginv = -np.einsum("mr,crt,ts->cms", ginv, dg, ginv)
    dT = (
        np.einsum("casb->csab", d2g)
        + np.einsum("cbsa->csab", d2g)
        - np.einsum("csab->csab", d2g)
    )
    dgamma = 0.5 * (
        np.einsum("cms,sab->cmab", dginv, T) + np.einsum("ms,csab->cmab", ginv, dT)
    )

    riemann = (
        np.einsum("amnb->mnab", dgamma)
        - np.einsum("bmna->mnab", dgamma)
        + np.einsum("msa,snb->mnab", gamma, gamma)
        - np.einsum("msb,sna->mnab", gamma, gamma)
    )
    riemann_lowered = np.einsum("ms,snab->mnab", g, riemann)
    ricci = np.einsum("mnmb->nb", riemann)
    scalar = float(np.einsum("ab,ab->", ginv, ricci))

    n = point.size
    if n >= 3:
        schouten = (ricci - scalar / (2.0 * (n - 1)) * g) / (n - 2)
    else:
        schouten = None

    return CurvatureBundle(
        point=point,
        metric=g,
        inverse_metric=ginv,
        christoffel=gamma,
        riemann=riemann,
        riemann_lowered=riemann_lowered,
        ricci=ricci,
        scalar=scalar,
        schouten=schouten,
    )


def kulkarni_nomizu(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Kulkarni-Nomizu product of two symmetric 2-tensors.

    (A o B)_mnab = A_ma B_nb + A_nb B_ma - A_mb B_na - A_na B_mb.
    The result carries all algebraic symmetries of a Riemann tensor.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("inputs must be square matrices of equal dimension")
    return (
        np.einsum("ma,nb->mnab", A, B)
        + np.einsum("nb,ma->mnab", A, B)
        - np.einsum("mb,na->mnab", A, B)
        - np.einsum("na,mb->mnab", A, B)
    )


def raise_index(field: MetricField, point, T: np.ndarray, slots=(0,)) -> np.ndarray:
    """Raise the given slots of a rank-2 covariant tensor with g^{-1}."""
    ginv = field.inverse(point)
    out = np.asarray(T, dtype=float)
    for slot in slots:
        if slot == 0:
            out = np.einsum("ma,ab->mb", ginv, out)
        elif slot == 1:
            out = np.einsum("nb,ab->an", ginv, out)
        else:
            raise ValueError("slots must be 0 and/or 1")
    return out


def hat_apply(field: MetricField, point, H: np.ndarray, u: np.ndarray) -> np.ndarray:
    """The 'hat' map of a 2-covector: (H^ u)^m = g^ma H_ab u^b."""
    ginv = field.inverse(point)
    return np.einsum("ma,ab,b->m", ginv, np.asarray(H, float), np.asarray(u, float))
