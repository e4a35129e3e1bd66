"""A conformal geodesic that spirals: the end-to-end reproduction.

The 3D metric

    ds^2 = (1 + h^2 z^4)(dr^2 + r^2 dphi^2) + 4 h z^2 r dr dphi + dz^2

restricts to the flat metric on z = 0 and leaves that plane totally
geodesic, but its Ricci tensor on the plane equals -2 h(r) M.  With
h = -k/2 built from the forcing function, the curve (r, phi) = (t,
e^(1/t)) becomes a genuine conformal geodesic of the 3D space, and it
spirals into the origin with infinite proper length.

This script integrates the conformal geodesic equation numerically from
curve data at t = 0.8 inward and compares against the closed form.
"""
import numpy as np

from confgeo import detect_spiral
from confgeo.verify import spiral_tracking_run

print("integrating inward from t = 0.8 until the radius reaches 0.3 ...")
traj, max_err, max_z = spiral_tracking_run(
    t0=0.8, t_end=0.3, integrator_tol=1e-10
)
print(f"  {len(traj)} accepted steps, status '{traj.status}'")
print(f"  proper time elapsed:   {abs(traj.s[-1]):.4f}")
print(f"  arc length:            {traj.arc_length[-1]:.4f}")
start = traj.field.chart.embed(traj.states[0].x)
end = traj.field.chart.embed(traj.states[-1].x)
print(f"  straight-line chord:   {np.linalg.norm(end - start):.4f}")
phi0, phi1 = traj.positions()[0, 1], traj.positions()[-1, 1]
print(f"  winding accumulated:   {abs(phi1 - phi0) / (2*np.pi):.2f} turns")
print(f"  max distance from the analytic spiral (matched radius): {max_err:.2e}")
print(f"  max |z| (the plane is an exact invariant):              {max_z:.2e}")

print()
print("halving the integrator tolerance halves the tracking error:")
for tol in (4e-10, 2e-10, 1e-10):
    _, err, _ = spiral_tracking_run(t0=0.8, t_end=0.3, integrator_tol=tol)
    print(f"  tol {tol:.0e}: tracking error {err:.3e}")

print()
print("containment analysis around the origin:")
report = detect_spiral(traj, np.zeros(3), (0.8, 0.6, 0.4))
for entry in report.entries:
    print(f"  ball of radius {entry.radius}: trajectory stays inside from "
          f"s = {entry.s0:.4f} on")
print(f"verdict: {report.verdict}")
print()
print("(a finite run can only ever be consistent with spiraling; the")
print(" closed form says the winding below radius r grows like e^(1/r))")
print()
print("For CSV + gnuplot output of the same run:")
print("  confgeo trace --t0 0.8 --t-end 0.3 --out spiral_run")
