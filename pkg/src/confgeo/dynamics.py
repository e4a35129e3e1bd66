"""Conformal geodesic dynamics.

The proper-time conformal geodesic equation is the third-order system

    nabla_u a = u (-|a|^2 - u . L^u) + L^u,   a = nabla_u u,  |u| = 1,

with L the Schouten tensor.  This module provides its right-hand side as
a first-order system in (x, u, a), the equivalent bivector-valued
residuals (proper-time wedge form and the reparametrization-invariant
unparametrized form), conversion from arbitrary parametrizations to the
proper-time gauge, an embedded Dormand-Prince 5(4) integrator with
optional per-step gauge renormalization, arc-length quadrature, and a
containment-based spiral detector.

Only the proper-time system is integrated; the unparametrized equation
has a parametrization gauge freedom and is used here as a residual
verifier on given curves.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad

from .bivectors import Bivector, wedge
from .curvature import curvature
from .errors import ConfgeoError, ImmersionError
from .metrics import MetricField

GAUGE_TOL = 1e-9


# ---------------------------------------------------------------------------
# states
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeodesicState:
    """Proper-time state (position, unit velocity, orthogonal acceleration)."""

    x: np.ndarray
    u: np.ndarray
    a: np.ndarray
    s: float = 0.0

    def __post_init__(self):
        for name in ("x", "u", "a"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), float))

    def gauge_residuals(self, field: MetricField) -> tuple[float, float]:
        """(| |u|^2 - 1 |, |g(u, a)|) at the state's point."""
        g = field(self.x)
        return (
            abs(float(self.u @ g @ self.u) - 1.0),
            abs(float(self.u @ g @ self.a)),
        )

    def require_gauge(self, field: MetricField, tol: float = GAUGE_TOL):
        e_norm, e_orth = self.gauge_residuals(field)
        if e_norm > tol or e_orth > tol:
            raise ConfgeoError(
                f"state violates proper-time gauge: | |u|^2-1 |={e_norm:.3e}, "
                f"|g(u,a)|={e_orth:.3e}"
            )


@dataclass(frozen=True)
class UnparamState:
    """Arbitrary-parameter state with velocity v and acceleration b = nabla_v v."""

    x: np.ndarray
    v: np.ndarray
    b: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        for name in ("x", "v", "b"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), float))

    def speed(self, field: MetricField) -> float:
        return field.norm(self.x, self.v)


@dataclass(frozen=True)
class IntegratorConfig:
    rtol: float = 1e-8
    atol: float = 1e-8
    max_step: float = np.inf
    min_step: float = 0.0
    max_steps: int = 100_000
    renormalize: bool = True
    curvature_step: Optional[float] = None  # None: finite-difference default

    def __post_init__(self):
        if self.rtol <= 0.0 or self.atol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.min_step > self.max_step:
            raise ValueError("min_step must not exceed max_step")
        if self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")


@dataclass
class Trajectory:
    """Accepted integration samples plus per-sample diagnostics."""

    field: MetricField
    s: np.ndarray
    states: list[GeodesicState]
    arc_length: np.ndarray
    gauge_error: np.ndarray
    projection: np.ndarray
    status: str = "ok"
    message: str = ""
    marked_point: Optional[np.ndarray] = None
    marked_distance: Optional[np.ndarray] = None
    rhs_evaluations: int = 0

    def __len__(self):
        return len(self.states)

    def positions(self) -> np.ndarray:
        return np.array([st.x for st in self.states])

    def cartesian_positions(self) -> np.ndarray:
        return self.field.chart.embed(self.positions())

    @property
    def final_state(self) -> GeodesicState:
        return self.states[-1]

    @property
    def max_projection(self) -> float:
        return float(np.max(self.projection)) if len(self.projection) else 0.0

    @property
    def max_gauge_error(self) -> float:
        return float(np.max(self.gauge_error)) if len(self.gauge_error) else 0.0


# ---------------------------------------------------------------------------
# right-hand sides and residuals
# ---------------------------------------------------------------------------


def _schouten_at(field, x, curvature_step, override):
    if override is not None:
        return np.asarray(override(x), float)
    bundle = curvature(field, x, step=curvature_step)
    if bundle.schouten is None:
        raise ConfgeoError(
            "Schouten tensor undefined in dimension 2; "
            "supply a schouten override"
        )
    return bundle.schouten


def propertime_rhs(
    field: MetricField,
    state: GeodesicState,
    curvature_step: Optional[float] = None,
    schouten_override: Optional[Callable] = None,
):
    """Coordinate derivatives (dx, du, da) of the proper-time system.

    dx = u, du = a - Gamma(u, u), and da converts nabla_u a to the plain
    parameter derivative of the components of a.
    """
    x, u, a = state.x, state.u, state.a
    field.check_point(x)
    bundle = curvature(field, x, step=curvature_step)
    gamma = bundle.christoffel
    g = bundle.metric
    if schouten_override is not None:
        L = np.asarray(schouten_override(x), float)
    else:
        L = bundle.schouten
        if L is None:
            raise ConfgeoError(
                "Schouten tensor undefined in dimension 2; "
                "supply a schouten override"
            )
    l_hat_u = bundle.inverse_metric @ L @ u
    a_sq = float(a @ g @ a)
    u_lu = float(u @ L @ u)  # u . L^u = L(u, u)

    dx = u.copy()
    du = a - np.einsum("mab,a,b->m", gamma, u, u)
    da = (
        -np.einsum("mab,a,b->m", gamma, u, a)
        + (-a_sq - u_lu) * u
        + l_hat_u
    )
    return dx, du, da


def wedge_form_residual(
    field: MetricField,
    state: GeodesicState,
    da: np.ndarray,
    curvature_step: Optional[float] = None,
) -> Bivector:
    """Residual of the wedge form nabla_u(u ^ a) = u ^ L^u.

    ``da`` is the candidate parameter derivative of the components of a.
    The residual vanishes exactly when da agrees with the proper-time
    right-hand side up to a multiple of u (the wedge is blind to
    tangential differences, which the gauge conditions determine).
    """
    x, u, a = state.x, state.u, state.a
    bundle = curvature(field, x, step=curvature_step)
    gamma = bundle.christoffel
    if bundle.schouten is None:
        raise ConfgeoError("wedge form needs dimension >= 3")
    l_hat_u = bundle.inverse_metric @ bundle.schouten @ u

    u_dot = a - np.einsum("mab,a,b->m", gamma, u, u)
    da = np.asarray(da, float)
    B = np.outer(u, a) - np.outer(a, u)
    dB = (np.outer(u_dot, a) + np.outer(u, da)) - (
        np.outer(a, u_dot) + np.outer(da, u)
    )
    cov = (
        dB
        + np.einsum("mrs,r,sn->mn", gamma, u, B)
        + np.einsum("nrs,r,ms->mn", gamma, u, B)
    )
    rhs = np.outer(u, l_hat_u) - np.outer(l_hat_u, u)
    return Bivector(cov - rhs, x)


def unparam_residual(
    field: MetricField,
    state: UnparamState,
    db: np.ndarray,
    curvature_step: Optional[float] = None,
    schouten_override: Optional[Callable] = None,
) -> Bivector:
    """Residual of nabla_v (v ^ b / |v|^3) = (v ^ L^v) / |v|.

    Zero (to rounding) for any parametrization of a conformal geodesic.
    ``db`` is the parameter derivative of the components of b; the
    normalized bivector is differentiated by the quotient rule using
    d|v|/dt = g(v, b) / |v|.
    """
    x, v, b = state.x, state.v, state.b
    bundle = curvature(field, x, step=curvature_step)
    g = bundle.metric
    gamma = bundle.christoffel
    speed2 = float(v @ g @ v)
    if speed2 <= 0.0:
        raise ImmersionError("unparametrized state has |v| = 0")
    speed = np.sqrt(speed2)

    if schouten_override is not None:
        L = np.asarray(schouten_override(x), float)
    else:
        L = bundle.schouten
        if L is None:
            raise ConfgeoError(
                "Schouten tensor undefined in dimension 2; "
                "supply a schouten override"
            )
    l_hat_v = bundle.inverse_metric @ L @ v

    v_dot = b - np.einsum("mab,a,b->m", gamma, v, v)
    db = np.asarray(db, float)
    S = np.outer(v, b) - np.outer(b, v)
    dS = (np.outer(v_dot, b) + np.outer(v, db)) - (
        np.outer(b, v_dot) + np.outer(db, v)
    )
    cov_S = (
        dS
        + np.einsum("mrs,r,sn->mn", gamma, v, S)
        + np.einsum("nrs,r,ms->mn", gamma, v, S)
    )
    dspeed = float(v @ g @ b) / speed
    cov_W = cov_S / speed**3 - 3.0 * S * dspeed / speed**4
    rhs = (np.outer(v, l_hat_v) - np.outer(l_hat_v, v)) / speed
    return Bivector(cov_W - rhs, x)


def unparam_residual_scale(
    field: MetricField,
    state: UnparamState,
    db: np.ndarray,
    curvature_step: Optional[float] = None,
    schouten_override: Optional[Callable] = None,
) -> float:
    """Magnitude of the terms that cancel inside unparam_residual.

    Residuals are best judged relative to this: for the spiral curve
    the individual terms blow up like e^(1/t) while their sum vanishes.
    """
    x, v, b = state.x, state.v, state.b
    g = field(x)
    speed = np.sqrt(float(v @ g @ v))
    L = _schouten_at(field, x, curvature_step, schouten_override)
    ginv = field.inverse(x)
    l_hat_v = ginv @ L @ v
    db = np.asarray(db, float)
    S = np.abs(np.outer(v, b) - np.outer(b, v)).max()
    pieces = [
        np.abs(np.outer(v, db) - np.outer(db, v)).max() / speed**3,
        3.0 * S * abs(float(v @ g @ b)) / speed**4,
        np.abs(np.outer(v, l_hat_v) - np.outer(l_hat_v, v)).max() / speed,
    ]
    return max(max(pieces), 1e-300)


def from_unparametrized(field: MetricField, state: UnparamState) -> GeodesicState:
    """Convert to the proper-time gauge.

    u = v / |v| and a is the |v|^-2 scaled part of b orthogonal to v;
    the output satisfies |u| = 1 and g(u, a) = 0 exactly by construction.
    """
    x, v, b = state.x, state.v, state.b
    g = field(x)
    speed2 = float(v @ g @ v)
    if speed2 <= 0.0:
        raise ImmersionError("cannot reparametrize a state with |v| = 0")
    u = v / np.sqrt(speed2)
    a = (b - (float(v @ g @ b) / speed2) * v) / speed2
    return GeodesicState(x=x, u=u, a=a, s=0.0)


def circle_state(radius: float, dimension: int = 3) -> GeodesicState:
    """Proper-time initial data of a circle in flat space (z = 0 plane)."""
    x = np.zeros(dimension)
    u = np.zeros(dimension)
    a = np.zeros(dimension)
    x[0] = radius
    u[1] = 1.0
    a[0] = -1.0 / radius
    return GeodesicState(x=x, u=u, a=a, s=0.0)


# ---------------------------------------------------------------------------
# Dormand-Prince 5(4) integration
# ---------------------------------------------------------------------------

_DP_A = [
    np.array([]),
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]),
]
_DP_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_DP_ERR = np.array(
    [
        71 / 57600,
        0.0,
        -71 / 16695,
        71 / 1920,
        -17253 / 339200,
        22 / 525,
        -1 / 40,
    ]
)


def _pack(state: GeodesicState) -> np.ndarray:
    return np.concatenate([state.x, state.u, state.a])


def _unpack(y: np.ndarray, n: int, s: float) -> GeodesicState:
    return GeodesicState(x=y[:n], u=y[n : 2 * n], a=y[2 * n :], s=s)


def integrate(
    field: MetricField,
    initial: GeodesicState,
    s_span: tuple[float, float],
    config: Optional[IntegratorConfig] = None,
    stop: Optional[Callable[[GeodesicState], bool]] = None,
    marked_point=None,
) -> Trajectory:
    """Integrate the proper-time conformal geodesic equation.

    Adaptive embedded Dormand-Prince 5(4) on the first-order system in
    (x, u, a); the 5th-order solution is propagated.  Runs in either
    s-direction.  With ``renormalize`` on, each accepted step projects u
    back to unit norm and a to the orthogonal complement of u, and the
    metric size of that projection is recorded per sample so silent
    drift cannot hide an equation violation.

    On step underflow, leaving the metric domain, or exceeding
    ``max_steps``, the partial trajectory is returned with a diagnostic
    status instead of raising.
    """
    config = config or IntegratorConfig()
    n = field.dimension
    initial.require_gauge(field, tol=1e-6)

    s0, s1 = float(s_span[0]), float(s_span[1])
    direction = 1.0 if s1 >= s0 else -1.0
    span = abs(s1 - s0)

    counter = {"rhs": 0}

    def rhs(y):
        counter["rhs"] += 1
        st = _unpack(y, n, 0.0)
        dx, du, da = propertime_rhs(field, st, curvature_step=config.curvature_step)
        return np.concatenate([dx, du, da])

    marked = None if marked_point is None else np.asarray(marked_point, float)

    def diag_distance(state):
        if marked is None:
            return np.nan
        return float(np.linalg.norm(field.chart.embed(state.x) - marked))

    s_vals = [s0]
    states = [GeodesicState(initial.x, initial.u, initial.a, s0)]
    arc = [0.0]
    gauge = [max(initial.gauge_residuals(field))]
    proj = [0.0]
    dist = [diag_distance(initial)]
    status, message = "ok", ""

    def finish():
        return Trajectory(
            field=field,
            s=np.array(s_vals),
            states=states,
            arc_length=np.array(arc),
            gauge_error=np.array(gauge),
            projection=np.array(proj),
            status=status,
            message=message,
            marked_point=marked,
            marked_distance=np.array(dist) if marked is not None else None,
            rhs_evaluations=counter["rhs"],
        )

    if stop is not None and stop(states[0]):
        status, message = "stopped", "stop condition met at the initial state"
        return finish()
    if span == 0.0:
        return finish()

    y = _pack(initial)
    s = s0
    try:
        k1 = rhs(y)
    except ConfgeoError as exc:
        status, message = "left_domain", str(exc)
        return finish()

    # initial step heuristic
    scale = config.atol + config.rtol * np.abs(y)
    d0 = np.sqrt(np.mean((y / scale) ** 2))
    d1 = np.sqrt(np.mean((k1 / scale) ** 2))
    h = 0.01 * d0 / d1 if d1 > 1e-10 else 1e-6
    h = direction * min(h, span, config.max_step)

    eps = np.finfo(float).eps
    steps = 0
    K = np.empty((7, y.size))

    while direction * (s1 - s) > 0.0:
        if steps >= config.max_steps:
            status, message = "max_steps", f"exceeded {config.max_steps} steps"
            break
        if abs(h) < max(config.min_step, 16.0 * eps * max(abs(s), 1.0)):
            status, message = "step_underflow", f"step {h:.3e} underflowed at s={s:.6g}"
            break
        if direction * (s + h - s1) > 0.0:
            h = s1 - s

        K[0] = k1
        failed_domain = False
        try:
            for i in range(1, 7):
                yi = y + h * (K[:i].T @ _DP_A[i])
                K[i] = rhs(yi)
        except ConfgeoError as exc:
            failed_domain = True
            domain_exc = exc

        if failed_domain:
            # shrink toward the domain boundary; give up when h underflows
            h *= 0.5
            if abs(h) < max(config.min_step, 16.0 * eps * max(abs(s), 1.0)):
                status, message = "left_domain", str(domain_exc)
                break
            continue

        y_new = y + h * (K.T @ _DP_B5)
        err_vec = h * (K.T @ _DP_ERR)
        sc = config.atol + config.rtol * np.maximum(np.abs(y), np.abs(y_new))
        err = np.sqrt(np.mean((err_vec / sc) ** 2))

        if err <= 1.0:
            s_new = s + h
            st_new = _unpack(y_new.copy(), n, s_new)
            proj_size = 0.0
            if config.renormalize:
                g = field(st_new.x)
                u = st_new.u
                nu = np.sqrt(float(u @ g @ u))
                u_new = u / nu
                a = st_new.a
                a_new = a - float(u_new @ g @ a) * u_new
                du, da_ = u_new - u, a_new - a
                proj_size = float(
                    np.sqrt(max(du @ g @ du, 0.0)) + np.sqrt(max(da_ @ g @ da_, 0.0))
                )
                st_new = GeodesicState(st_new.x, u_new, a_new, s_new)
                y_new = _pack(st_new)

            # arc length: trapezoid of |u|_g over the step
            g_prev = field(states[-1].x)
            g_here = field(st_new.x)
            sp_prev = np.sqrt(float(states[-1].u @ g_prev @ states[-1].u))
            sp_here = np.sqrt(float(st_new.u @ g_here @ st_new.u))
            arc.append(arc[-1] + 0.5 * (sp_prev + sp_here) * abs(h))

            s_vals.append(s_new)
            states.append(st_new)
            gauge.append(max(st_new.gauge_residuals(field)))
            proj.append(proj_size)
            dist.append(diag_distance(st_new))

            s, y = s_new, y_new
            steps += 1

            if stop is not None and stop(st_new):
                status, message = "stopped", "stop condition met"
                break

            # FSAL is invalidated by renormalization; recompute k1 then.
            if config.renormalize and proj_size > 0.0:
                try:
                    k1 = rhs(y)
                except ConfgeoError as exc:
                    status, message = "left_domain", str(exc)
                    break
            else:
                k1 = K[6]

            factor = 0.9 * err ** -0.2 if err > 0.0 else 5.0
        else:
            factor = max(0.2, 0.9 * err ** -0.2)

        h *= min(5.0, max(0.2, factor))
        if abs(h) > config.max_step:
            h = direction * config.max_step

    return finish()


# ---------------------------------------------------------------------------
# arc length and spiral detection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ArcLengthResult:
    value: float
    estimated_error: float
    converged: bool  # False: quadrature flagged trouble; value is a partial sum

    def __float__(self):
        return self.value


def arc_length(
    field: MetricField,
    curve: Callable[[float], np.ndarray],
    t_span: tuple[float, float],
    tol: float = 1e-9,
    velocity: Optional[Callable[[float], np.ndarray]] = None,
) -> ArcLengthResult:
    """Adaptive quadrature of |curve'(t)|_g over the span.

    Velocity defaults to a 4th-order finite difference of the curve.
    """
    t0, t1 = float(t_span[0]), float(t_span[1])

    if velocity is None:

        def velocity(t, _c=curve):
            h = 1e-6 * max(1.0, abs(t))
            return (
                _c(t - 2 * h) - 8.0 * _c(t - h) + 8.0 * _c(t + h) - _c(t + 2 * h)
            ) / (12.0 * h)

    def integrand(t):
        x = np.asarray(curve(t), float)
        v = np.asarray(velocity(t), float)
        sp2 = float(v @ field(x) @ v)
        if sp2 <= 0.0:
            raise ImmersionError(f"curve not immersed at t={t}")
        return np.sqrt(sp2)

    value, abserr, info, *rest = quad(
        integrand, t0, t1, epsabs=tol, epsrel=tol, limit=200, full_output=True
    )
    converged = not rest  # quad appends a message only on trouble
    return ArcLengthResult(float(value), float(abserr), converged)


@dataclass(frozen=True)
class SpiralRadiusReport:
    radius: float
    contained: bool
    s0: Optional[float]  # first parameter after which the trajectory stays inside


@dataclass(frozen=True)
class SpiralReport:
    candidate_point: np.ndarray
    entries: tuple[SpiralRadiusReport, ...]
    arc_growing: bool
    spiral_consistent: bool

    @property
    def verdict(self) -> str:
        return "spiral-consistent" if self.spiral_consistent else "not contained"


def detect_spiral(traj: Trajectory, candidate_point, radii) -> SpiralReport:
    """Containment analysis of a trajectory around a candidate point.

    For each radius rho, finds the first sample index after which every
    later sample stays within distance rho of the candidate (distances
    in flat background coordinates).  The verdict is spiral-consistent
    when containment holds for every tested radius and arc length is
    still growing at the end of the trajectory.  A finite trajectory can
    only ever be consistent with spiraling, never prove it.
    """
    candidate = np.asarray(candidate_point, float)
    pos = traj.cartesian_positions()
    d = np.linalg.norm(pos - candidate, axis=1)
    # suffix maximum: suff[i] = max(d[i:])
    suff = np.maximum.accumulate(d[::-1])[::-1]

    entries = []
    for rho in radii:
        inside = np.flatnonzero(suff <= float(rho))
        if inside.size:
            entries.append(SpiralRadiusReport(float(rho), True, float(traj.s[inside[0]])))
        else:
            entries.append(SpiralRadiusReport(float(rho), False, None))

    arc = traj.arc_length
    arc_growing = len(arc) >= 2 and arc[-1] > arc[-2]
    consistent = arc_growing and all(e.contained for e in entries)
    return SpiralReport(candidate, tuple(entries), arc_growing, consistent)
