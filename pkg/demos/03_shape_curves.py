"""Euler-characteristic curves and transforms of embedded complexes.

Height filtrations give the Euler characteristic transform; growing spheres
give the Euler-Bessel transform, computed along two independent routes.
"""

import math

import numpy as np

from eucalc import (
    EmbeddedComplex,
    PLFunction,
    ect,
    euler_bessel,
    euler_bessel_index,
    level_curve,
    sublevel_curve,
    sublevel_transform,
)
from eucalc import kernels

hollow_square = EmbeddedComplex(
    [[0, 0], [1, 0], [1, 1], [0, 1]], [(0, 1), (1, 2), (2, 3), (0, 3)]
)

print("Euler characteristic transform of the hollow square:")
for xi in ([0.0, 1.0], [1.0, 0.0], [1.0, 1.0]):
    curve = ect(hollow_square, xi)
    print(f"  xi={xi}: jumps {list(curve.jumps)}")

heights = PLFunction(hollow_square, [0.0, 1.0, 2.0, 1.0])
print("\nSublevel and level curves of a height function:")
print(f"  sublevel jumps: {list(sublevel_curve(hollow_square, heights).jumps)}")
print(f"  level curve:    {level_curve(hollow_square, heights)}")

print("\nSublevel magnitude sweep (Laplace kernel) over 8 directions:")
for k in range(8):
    angle = 2 * math.pi * k / 8
    xi = [math.cos(angle), math.sin(angle)]
    value = sublevel_transform(hollow_square, None, xi, kernels.laplace())
    print(f"  angle {angle:.2f}: {value:+.6f}")

print("\nEuler-Bessel transform along two independent routes:")
for center in ([0.5, 0.5], [2.0, 0.5], [-1.0, -1.0]):
    v = np.array(center)
    direct = euler_bessel(hollow_square, v)
    index = euler_bessel_index(hollow_square, v)
    print(f"  center {center}: sweep {direct:.9f}, index formula {index:.9f}")
