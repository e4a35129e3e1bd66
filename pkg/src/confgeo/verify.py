"""Executable verification suite.

Each check_* function reproduces one mathematical claim of the
construction as a pass/fail report with explicit tolerances, seeded
random instances where randomness is involved, and a deliberately
broken input that must be flagged (so a vacuous pass cannot slip
through).  Reports serialize to stable JSON: identical seeds and
tolerances give byte-identical JSON (wall time is reported only in the
human-readable rendering).
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bivectors import wedge
from .curvature import curvature, kulkarni_nomizu, metric_derivatives
from .dynamics import (
    GeodesicState,
    IntegratorConfig,
    Trajectory,
    UnparamState,
    arc_length,
    detect_spiral,
    from_unparametrized,
    integrate,
    propertime_rhs,
    unparam_residual,
    unparam_residual_scale,
    wedge_form_residual,
)
from .metrics import (
    MetricField,
    flat_cylindrical_metric,
    flat_polar_metric,
    polynomial_metric,
)
from .spiral import (
    example_metric,
    h_profile,
    k_exact,
    m_covariant,
    spiral_acceleration_dot,
    spiral_point,
    spiral_state,
    spiral_velocity,
)

CHECK_NAMES = ("lemma1", "lemma2", "lemma3", "lemma5", "proposition")


@dataclass(frozen=True)
class CheckReport:
    name: str
    status: str  # "pass" | "fail"
    metrics: dict
    tolerances: dict
    seed: Optional[int]
    wall_time_s: float
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        # Wall time intentionally excluded: JSON output is byte-identical
        # for identical (seed, tolerances).
        return {
            "name": self.name,
            "status": self.status,
            "metrics": {k: _plain(v) for k, v in sorted(self.metrics.items())},
            "seed": self.seed,
            "tolerances": {k: _plain(v) for k, v in sorted(self.tolerances.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"check {self.name}: {self.status.upper()}"]
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        for key in sorted(self.tolerances):
            lines.append(f"  tolerance {key}: {self.tolerances[key]:.3e}")
        for key in sorted(self.metrics):
            val = self.metrics[key]
            if isinstance(val, float):
                lines.append(f"  {key}: {val:.6e}")
            else:
                lines.append(f"  {key}: {val}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        lines.append(f"  wall time: {self.wall_time_s:.2f} s")
        return "\n".join(lines) + "\n"


def _plain(value):
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    return value


def _report(name, passed, metrics, tolerances, seed, t_start, notes=()):
    return CheckReport(
        name=name,
        status="pass" if passed else "fail",
        metrics=metrics,
        tolerances=tolerances,
        seed=seed,
        wall_time_s=time.perf_counter() - t_start,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------


def _monomial_exponents(dimension: int, degree: int) -> np.ndarray:
    exps = []

    def rec(prefix, remaining):
        if len(prefix) == dimension:
            exps.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)

    rec([], degree)
    return np.array(exps, dtype=int)


@dataclass(frozen=True)
class RandomMetricSpec:
    """Flat metric plus a seeded polynomial perturbation, PD on the unit box."""

    seed: int
    dimension: int = 3
    degree: int = 3
    eps: float = 0.1  # per-coefficient bound

    def build(self, max_resample: int = 50) -> MetricField:
        rng = np.random.default_rng(self.seed)
        exps = _monomial_exponents(self.dimension, self.degree)
        m = len(exps)
        # Keep the total perturbation well inside the PD region so the
        # resampling loop terminates quickly; each coefficient still
        # respects the stated bound.
        amp = min(self.eps, 0.015)
        grid_1d = np.linspace(-1.0, 1.0, 5)
        grid = np.stack(
            np.meshgrid(*([grid_1d] * self.dimension), indexing="ij"), axis=-1
        ).reshape(-1, self.dimension)
        for _ in range(max_resample):
            coefs = rng.uniform(-amp, amp, size=(m, self.dimension, self.dimension))
            coefs = 0.5 * (coefs + coefs.transpose(0, 2, 1))
            fld = polynomial_metric(
                exps, coefs, self.dimension, name=f"random(seed={self.seed})"
            )
            eigs = np.linalg.eigvalsh(fld(grid))
            if eigs.min() > 0.05:
                return fld
        raise RuntimeError("could not sample a positive-definite metric")


def random_metric(rng: np.random.Generator, dimension: int = 3) -> MetricField:
    return RandomMetricSpec(seed=int(rng.integers(2**63)), dimension=dimension).build()


def random_gauge_state(
    field: MetricField, rng: np.random.Generator, box: float = 0.6
) -> GeodesicState:
    """Random proper-time state: |u|_g = 1 and g(u, a) = 0 by construction."""
    n = field.dimension
    x = rng.uniform(-box, box, size=n)
    g = field(x)
    u = rng.standard_normal(n)
    u = u / np.sqrt(u @ g @ u)
    a = rng.standard_normal(n)
    a = a - (a @ g @ u) * u
    a_norm = np.sqrt(a @ g @ a)
    a = a * (rng.uniform(0.3, 1.5) / a_norm)
    return GeodesicState(x=x, u=u, a=a)


def _orthogonal_direction(g, u, rng):
    w = rng.standard_normal(len(u))
    w = w - (w @ g @ u) / (u @ g @ u) * u
    return w / np.sqrt(w @ g @ w)


# ---------------------------------------------------------------------------
# check 'lemma1': wedge form of the proper-time equation
# ---------------------------------------------------------------------------


def check_lemma1(trials: int = 100, seed: int = 42, tol: float = 1e-9) -> CheckReport:
    """Equivalence of the proper-time equation and its wedge form.

    For seeded random (metric, state) pairs, (a) the wedge-form residual
    of the equation's right-hand side vanishes, and (b) reconstructing
    the acceleration derivative from the wedge form's tangential
    completion c = -|a|^2 - u.L^u reproduces the right-hand side.
    """
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    max_residual = 0.0
    max_converse = 0.0
    min_negative = np.inf
    for _ in range(trials):
        fld = random_metric(rng)
        st = random_gauge_state(fld, rng)
        _, _, da = propertime_rhs(fld, st)
        res = wedge_form_residual(fld, st, da).norm(fld)
        max_residual = max(max_residual, res)

        bundle = curvature(fld, st.x)
        l_hat_u = bundle.inverse_metric @ bundle.schouten @ st.u
        c = -float(st.a @ bundle.metric @ st.a) - float(st.u @ bundle.schouten @ st.u)
        da_converse = (
            -np.einsum("mab,a,b->m", bundle.christoffel, st.u, st.a)
            + c * st.u
            + l_hat_u
        )
        dev = np.max(np.abs(da - da_converse)) / max(1.0, np.max(np.abs(da)))
        max_converse = max(max_converse, dev)

        w = _orthogonal_direction(bundle.metric, st.u, rng)
        res_neg = wedge_form_residual(fld, st, da + 1e-3 * w).norm(fld)
        min_negative = min(min_negative, res_neg)

    passed = max_residual <= tol and max_converse <= 1e-12 and min_negative > tol
    return _report(
        "lemma1",
        passed,
        {
            "trials": trials,
            "max_wedge_residual": max_residual,
            "max_converse_deviation": max_converse,
            "min_negative_control_residual": min_negative,
        },
        {"residual": tol, "converse": 1e-12},
        seed,
        t0,
    )


# ---------------------------------------------------------------------------
# check 'lemma2': reparametrization invariance
# ---------------------------------------------------------------------------


def _reparametrized(field, st, da, lam0, lam1, lam2):
    """State and db for the same curve traversed with speed lam0 = ds/dt."""
    bundle_gamma = curvature(field, st.x).christoffel
    u_dot = st.a - np.einsum("mab,a,b->m", bundle_gamma, st.u, st.u)
    v = lam0 * st.u
    b = lam1 * st.u + lam0**2 * st.a
    db = lam2 * st.u + lam1 * lam0 * u_dot + 2.0 * lam0 * lam1 * st.a + lam0**3 * da
    return UnparamState(x=st.x, v=v, b=b, t=0.0), db


def check_lemma2(
    trials: int = 50, reparams: int = 5, seed: int = 43, tol: float = 1e-8
) -> CheckReport:
    """Reparametrization invariance of the unparametrized wedge equation.

    Conformal geodesic data is rebuilt under random parameter changes
    with speeds ds/dt in [0.2, 5]; the unparametrized residual must stay
    zero and the identity v ^ b = |v|^3 u ^ a must hold.
    """
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    max_residual = 0.0
    max_identity = 0.0
    min_negative = np.inf
    for _ in range(trials):
        fld = random_metric(rng)
        st = random_gauge_state(fld, rng)
        _, _, da = propertime_rhs(fld, st)
        g = fld(st.x)
        for _ in range(reparams):
            lam0 = float(np.exp(rng.uniform(np.log(0.2), np.log(5.0))))
            lam1 = float(rng.uniform(-1.0, 1.0))
            lam2 = float(rng.uniform(-1.0, 1.0))
            ust, db = _reparametrized(fld, st, da, lam0, lam1, lam2)
            res = unparam_residual(fld, ust, db).norm(fld)
            max_residual = max(max_residual, res)

            speed = ust.speed(fld)
            lhs = np.outer(ust.v, ust.b) - np.outer(ust.b, ust.v)
            rhs = speed**3 * (np.outer(st.u, st.a) - np.outer(st.a, st.u))
            scale = max(np.max(np.abs(rhs)), 1e-300)
            max_identity = max(max_identity, np.max(np.abs(lhs - rhs)) / scale)

            w = _orthogonal_direction(g, ust.v, rng)
            res_neg = unparam_residual(fld, ust, db + 1e-3 * w).norm(fld)
            min_negative = min(min_negative, res_neg)

    passed = max_residual <= tol and max_identity <= 1e-12 and min_negative > tol
    return _report(
        "lemma2",
        passed,
        {
            "trials": trials,
            "reparametrizations": reparams,
            "max_unparam_residual": max_residual,
            "max_wedge_identity_deviation": max_identity,
            "min_negative_control_residual": min_negative,
        },
        {"residual": tol, "wedge_identity": 1e-12},
        seed,
        t0,
    )


# ---------------------------------------------------------------------------
# check 'lemma3': the forcing function and infinite length
# ---------------------------------------------------------------------------

FLATNESS_GRID = (0.2, 0.15, 0.1, 0.07, 0.05)


def forcing_residual_relative(t: float, k_override=None) -> float:
    """Relative residual of nabla_v(v^b/|v|^3) = k (v^M^v)/|v| on the flat plane."""
    fld = flat_polar_metric()
    st = spiral_state(t, dimension=2)
    db = spiral_acceleration_dot(t, dimension=2)
    kfun = k_override if k_override is not None else k_exact

    def override(x):
        return kfun(x[0]) * m_covariant(x[0], 2)

    res = unparam_residual(fld, st, db, schouten_override=override)
    scale = unparam_residual_scale(fld, st, db, schouten_override=override)
    return res.max_abs() / scale


def flatness_table(grid=FLATNESS_GRID, n_max: int = 8) -> np.ndarray:
    """Table T[n-1, i] = |k(t_i)| / t_i^n over the grid."""
    ts = np.asarray(grid, float)
    kv = np.abs(k_exact(ts))
    return np.array([kv / ts**n for n in range(1, n_max + 1)])


def check_lemma3(
    grid_points: int = 50, tol: float = 1e-9, seed: Optional[int] = None
) -> CheckReport:
    """The forcing identity, flatness of k at 0, and infinite length.

    Flatness is certified against its leading-term oracle e^(-1/t)/t:
    |k| must match the oracle closely on the sample grid, decrease with
    t on the tail t <= 0.1 for every power weight t^-n with n <= 8, and
    be far below any fixed power at the smallest sample.  The weighted
    sequence |k(t)|/t^n is *not* monotone over the full sample grid for
    n >= 5 (it peaks near t = 1/(n+1)); the violation count is reported
    as a metric for reference.
    """
    t0 = time.perf_counter()
    ts = np.linspace(0.3, 1.0, grid_points)
    residuals = np.array([forcing_residual_relative(t) for t in ts])
    max_residual = float(residuals.max())

    # flatness against the leading-term oracle
    grid = np.array(FLATNESS_GRID)
    kv = np.abs(k_exact(grid))
    oracle = np.exp(-1.0 / grid) / grid
    oracle_dev = float(np.max(np.abs(kv / oracle - 1.0)))
    table = flatness_table()
    tail = table[:, 2:]  # t in {0.1, 0.07, 0.05}
    tail_decreasing = bool(np.all(np.diff(tail, axis=1) < 0.0))
    monotone_violations = int(np.sum(np.diff(table, axis=1) >= 0.0))
    k_small = float(np.abs(k_exact(0.05)))

    # infinite-length evidence: length(t -> 1) >= log(1/t)
    fld = flat_polar_metric()
    length_ok = True
    lengths = {}
    for t_low in (0.5, 0.2, 0.1):
        res = arc_length(
            fld,
            lambda t: spiral_point(t, 2),
            (t_low, 1.0),
            tol=1e-9,
            velocity=lambda t: spiral_velocity(t, 2),
        )
        lengths[f"length_from_{t_low}"] = res.value
        if not (res.converged and res.value >= np.log(1.0 / t_low)):
            length_ok = False

    # negative control: a slightly wrong forcing function must be flagged
    res_neg = forcing_residual_relative(0.5, k_override=lambda t: 0.999 * k_exact(t))

    passed = (
        max_residual <= tol
        and oracle_dev <= 1e-2
        and tail_decreasing
        and k_small <= 1e-6
        and length_ok
        and res_neg > tol
    )
    metrics = {
        "grid_points": grid_points,
        "max_forcing_residual_rel": max_residual,
        "flatness_oracle_deviation": oracle_dev,
        "flatness_tail_decreasing": tail_decreasing,
        "flatness_full_grid_monotone_violations": monotone_violations,
        "abs_k_at_0.05": k_small,
        "negative_control_residual": float(res_neg),
    }
    metrics.update(lengths)
    return _report(
        "lemma3",
        passed,
        metrics,
        {"forcing_residual": tol, "flatness_oracle": 1e-2, "k_at_0.05": 1e-6},
        seed,
        t0,
        notes=(
            "full-grid monotonicity of |k(t)|/t^n fails for n >= 5 because the "
            "weighted profile peaks at t = 1/(n+1); flatness is certified via "
            "the leading-term oracle and the tail trend instead",
        ),
    )


# ---------------------------------------------------------------------------
# check 'lemma5': curvature of the example metric
# ---------------------------------------------------------------------------


def check_lemma5(
    radii=(0.2, 0.35, 0.5, 0.75, 1.0),
    tol: float = 1e-6,
    seed: Optional[int] = None,
) -> CheckReport:
    """Curvature structure of the example metric on the plane z = 0.

    At each sample radius: induced metric flat, first z-derivatives
    vanish, finite-difference Ricci equals -2 h(r) M, finite-difference
    Riemann equals -2 dz^2 o (h M), and M is trace-free with vanishing
    contractions against dz^2.
    """
    t0 = time.perf_counter()
    fld = example_metric("cylindrical")
    dz2 = np.zeros((3, 3))
    dz2[2, 2] = 1.0

    max_induced = 0.0
    max_dz = 0.0
    max_ricci = 0.0
    max_riemann = 0.0
    max_m_traces = 0.0
    min_negative = np.inf
    for r in radii:
        x = np.array([float(r), 0.0, 0.0])
        g = fld(x)
        induced = g[:2, :2] - np.diag([1.0, r * r])
        max_induced = max(max_induced, np.max(np.abs(induced)))

        dg = metric_derivatives(fld, x, order=1)
        max_dz = max(max_dz, np.max(np.abs(dg[2])))

        bundle = curvature(fld, x)
        hM = h_profile(r) * m_covariant(r, 3)
        max_ricci = max(max_ricci, np.max(np.abs(bundle.ricci - (-2.0 * hM))))
        expected_riem = -2.0 * kulkarni_nomizu(dz2, hM)
        max_riemann = max(
            max_riemann, np.max(np.abs(bundle.riemann_lowered - expected_riem))
        )

        M = m_covariant(r, 3)
        ginv = bundle.inverse_metric
        trace_m = abs(float(np.einsum("ab,ab->", ginv, M)))
        contraction = np.max(np.abs(M @ ginv @ dz2))
        max_m_traces = max(max_m_traces, trace_m, contraction)

        # negative control: a 5% miscalibrated profile must be detected
        wrong = np.max(np.abs(bundle.ricci - (-2.0 * 1.05 * hM)))
        min_negative = min(min_negative, wrong)

    passed = (
        max_induced <= 1e-12
        and max_dz <= 1e-10
        and max_ricci <= tol
        and max_riemann <= tol
        and max_m_traces <= 1e-12
        and min_negative > tol
    )
    return _report(
        "lemma5",
        passed,
        {
            "radii": list(float(r) for r in radii),
            "max_induced_metric_deviation": max_induced,
            "max_dz_metric_at_plane": max_dz,
            "max_ricci_deviation": max_ricci,
            "max_riemann_deviation": max_riemann,
            "max_m_trace_or_contraction": max_m_traces,
            "min_negative_control_deviation": min_negative,
        },
        {"curvature": tol, "induced": 1e-12, "dz": 1e-10},
        seed,
        t0,
    )


# ---------------------------------------------------------------------------
# check 'proposition': the integrated spiral
# ---------------------------------------------------------------------------


def spiral_tracking_errors(traj: Trajectory) -> tuple[np.ndarray, float]:
    """Per-sample planar distance to the analytic spiral at matched radius.

    The curve's radius equals its parameter, so each sample of radius r
    is compared against (r cos e^(1/r), r sin e^(1/r)); proper-time
    matching would be ill-conditioned because s(t) grows violently.
    Returns (errors, max |z|).
    """
    pos = traj.positions()
    r = pos[:, 0]
    dphi = pos[:, 1] - np.exp(1.0 / r)
    errors = 2.0 * r * np.abs(np.sin(0.5 * dphi))
    return errors, float(np.max(np.abs(pos[:, 2])))


def spiral_tracking_run(
    t0: float = 0.8,
    t_end: float = 0.3,
    integrator_tol: float = 1e-10,
    curvature_step: float = 1e-2,
    metric: Optional[MetricField] = None,
    max_steps: int = 400_000,
    s_bound: float = 60.0,
) -> tuple[Trajectory, float, float]:
    """Integrate the conformal geodesic from the spiral's data inward.

    Proper time increases outward along the curve, so the inward run
    integrates toward negative s until the radius reaches t_end.  The
    z = 0 plane is an exact invariant of the flow, and on it the finite
    differences of the metric are exact for moderate steps (the only
    r-dependence at z = 0 is the flat r^2 and the z-polynomial
    coefficients), hence the enlarged default curvature step.
    Returns (trajectory, max tracking error, max |z|).
    """
    fld = metric if metric is not None else example_metric("cylindrical")
    initial = from_unparametrized(fld, spiral_state(t0))
    cfg = IntegratorConfig(
        rtol=integrator_tol,
        atol=integrator_tol,
        max_steps=max_steps,
        curvature_step=curvature_step,
    )
    traj = integrate(
        fld,
        initial,
        (0.0, -s_bound),
        cfg,
        stop=lambda st: st.x[0] <= t_end,
        marked_point=np.zeros(3),
    )
    errors, max_z = spiral_tracking_errors(traj)
    return traj, float(np.max(errors)), max_z


def check_proposition(
    t0: float = 0.8,
    t_end: float = 0.3,
    tol: float = 1e-4,
    integrator_tol: float = 1e-10,
    seed: Optional[int] = None,
) -> CheckReport:
    """The curve is a conformal geodesic of the example metric and spirals.

    (i) v ^ L^v = v ^ Ric^v along the curve (they differ by a multiple
    of the metric in dimension 3); (ii) the integrated conformal
    geodesic tracks the analytic curve at matched radius and stays in
    the plane; (iii) the trajectory is containment-consistent with a
    spiral toward the origin; (iv) its length dwarfs the flat chord.
    The negative control re-runs the integration with the radial
    profile switched off, which must visibly leave the spiral.
    """
    t_start = time.perf_counter()
    fld = example_metric("cylindrical")

    max_identity = 0.0
    for t in np.linspace(0.3, 1.0, 8):
        st = spiral_state(float(t))
        bundle = curvature(fld, st.x, step=1e-2)
        w_l = wedge(st.v, bundle.inverse_metric @ bundle.schouten @ st.v, st.x)
        w_r = wedge(st.v, bundle.inverse_metric @ bundle.ricci @ st.v, st.x)
        max_identity = max(
            max_identity, np.max(np.abs(w_l.components - w_r.components))
        )

    traj, max_track, max_z = spiral_tracking_run(
        t0=t0, t_end=t_end, integrator_tol=integrator_tol
    )
    reached = traj.status == "stopped"

    report = detect_spiral(traj, np.zeros(3), (0.8, 0.6, 0.4))
    start = traj.field.chart.embed(traj.states[0].x)
    end = traj.field.chart.embed(traj.states[-1].x)
    chord = float(np.linalg.norm(end - start))
    arc_total = float(traj.arc_length[-1])
    arc_factor = arc_total / chord if chord > 0 else np.inf

    # negative control: without the curvature profile the same initial
    # data follows a flat-space conformal geodesic (a circle) instead
    flat = flat_cylindrical_metric()
    flat_initial = from_unparametrized(flat, spiral_state(t0))
    flat_cfg = IntegratorConfig(rtol=1e-8, atol=1e-8, max_steps=50_000)
    flat_traj = integrate(flat, flat_initial, (0.0, -3.0), flat_cfg)
    flat_errors, _ = spiral_tracking_errors(flat_traj)
    departure = float(np.max(flat_errors))

    passed = (
        max_identity <= 1e-10
        and reached
        and max_track <= tol
        and max_z <= 1e-8
        and traj.max_projection <= 1e-6
        and report.spiral_consistent
        and arc_factor >= 10.0
        and departure > 1e-2
    )
    metrics = {
        "max_schouten_ricci_wedge_identity": max_identity,
        "reached_target_radius": reached,
        "samples": len(traj),
        "max_tracking_error": max_track,
        "max_abs_z": max_z,
        "max_gauge_projection": traj.max_projection,
        "spiral_consistent": report.spiral_consistent,
        "containment_s0": {
            f"rho_{e.radius}": (e.s0 if e.contained else None) for e in report.entries
        },
        "arc_length": arc_total,
        "chord": chord,
        "arc_over_chord": arc_factor,
        "negative_control_departure": departure,
    }
    return _report(
        "proposition",
        passed,
        metrics,
        {
            "tracking": tol,
            "wedge_identity": 1e-10,
            "z_excursion": 1e-8,
            "gauge_projection": 1e-6,
            "arc_over_chord": 10.0,
            "negative_departure": 1e-2,
        },
        seed,
        t_start,
    )


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------


def run_checks(
    selection: str = "all",
    seed: int = 42,
    tol: Optional[float] = None,
    proposition_tol: float = 1e-4,
) -> list[CheckReport]:
    """Run one named check or all of them, with optional tolerance override.

    ``tol`` replaces the primary tolerance of each selected check; the
    secondary tolerances (identities, negative controls) are fixed.
    """
    if selection not in CHECK_NAMES + ("all",):
        raise ValueError(f"unknown selection '{selection}'")
    wanted = CHECK_NAMES if selection == "all" else (selection,)
    reports = []
    for name in wanted:
        if name == "lemma1":
            reports.append(check_lemma1(seed=seed, tol=tol or 1e-9))
        elif name == "lemma2":
            reports.append(check_lemma2(seed=seed + 1, tol=tol or 1e-8))
        elif name == "lemma3":
            reports.append(check_lemma3(tol=tol or 1e-9, seed=seed))
        elif name == "lemma5":
            reports.append(check_lemma5(tol=tol or 1e-6, seed=seed))
        elif name == "proposition":
            reports.append(
                check_proposition(tol=tol or proposition_tol, seed=seed)
            )
    return reports
