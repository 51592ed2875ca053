"""Solve the singular boundary-value problem for the elliptic catenoid.

The boundary data collapses the curve to a single point at the origin and
prescribes the null radial field (e^{i theta}, 1) along the unit circle.  The
coefficient match recovers h = (z - 1/zbar)/2, w = ln|z| exactly.
"""

import numpy as np

from maxsurf.annulus import CircleFunction
from maxsurf.bjorling import (
    BjorlingData,
    boundary_reproduction_errors,
    circle_identities_report,
    solve,
    validate,
)
from maxsurf.surface import evaluate, gauss_map, normal

zero = CircleFunction.from_dict({})
data = BjorlingData(
    curve_planar=zero,
    curve_height=zero,
    radial_planar=CircleFunction.from_dict({1: 1.0}),
    radial_height=CircleFunction.from_dict({0: 1.0}),
)

report = validate(data)
print("validation:", report.as_dict())

surface = solve(data)
n = surface.planar.truncation
print(f"a_1 = {surface.planar.holo[n + 1]:.6g}")
print(f"b_1 = {surface.planar.antiholo[n + 1]:.6g}")
print(f"height log coefficient = {surface.height.log_coeff:.6g}")

ids = circle_identities_report(surface, data)
print("circle identities:", ids.as_dict())
print("boundary reproduction:", boundary_reproduction_errors(surface, data))

for z in (2.0, 0.5, 1.5 * np.exp(0.7j)):
    p, w = evaluate(surface, z)
    print(f"z = {z:.3g}: position = ({p:.4g}, {w:.4g}), "
          f"gauss = {gauss_map(surface, z):.4g}, normal = {normal(surface, z)}")
