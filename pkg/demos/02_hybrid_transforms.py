"""Closed-form hybrid transforms of planar constructible functions.

The transforms integrate a kernel against the 1-D pushforward of the input
along each direction, so shapes with zero area still have rich transforms.
"""

import math

import numpy as np

from eucalc import CFND, euler_fourier, euler_laplace
from eucalc.cfnd import ClosedPolytope
from eucalc.geometry import Polytope

# A rectangle with and without its boundary edges: the classical Laplace
# transform cannot tell these apart, the hybrid one can.
a, b, c, d = 0.0, 1.0, 0.0, 2.0
closed = CFND.from_polytope_points([[a, c], [b, c], [a, d], [b, d]])
half_open = CFND.from_box([a, c], [b, d])
xi = np.array([1.0, 1.0])
print("Rectangle with different boundary conventions at xi = (1, 1):")
print(f"  closed    [0,1]x[0,2]: {euler_laplace(closed, xi):.6f}")
print(f"  half-open [0,1)x[0,2): {euler_laplace(half_open, xi):.6f}")

# Triangle with its hypotenuse removed: the transform is blind to the long
# leg whenever the direction stays in the matching branch region.
bb = 2.0
triangle = CFND.from_polytope_points([[0, 0], [1, 0], [0, bb]]) - \
    CFND.from_polytope_points([[1, 0], [0, bb]])
print("\nTriangle without hypotenuse, branch structure of the transform:")
for direction in ([1.0, 1.0], [2.0, 0.5], [0.5, 2.0]):
    got = euler_laplace(triangle, direction)
    xx, yy = direction
    want = 1 - math.exp(-xx) if bb * yy >= xx else 1 - math.exp(-bb * yy)
    print(f"  xi={direction}: {got:.6f} (closed form {want:.6f})")

# A polygonal circle: the boundary has zero area but transform 4 sinh(r|xi|).
n, r = 256, 1.0
angles = np.linspace(0, 2 * np.pi, n, endpoint=False)
pts = r * np.column_stack([np.cos(angles), np.sin(angles)])
terms = []
for i in range(n):
    terms.append((1, ClosedPolytope(Polytope(np.array([pts[i], pts[(i + 1) % n]])))))
    terms.append((-1, ClosedPolytope(Polytope(pts[i][None, :]))))
circle = CFND(2, tuple(terms))
print("\n256-gon boundary vs the round circle closed form:")
for s in (0.5, 1.0, 2.0):
    got = euler_laplace(circle, [s, 0.0])
    print(f"  |xi|={s}: {got:.6f} vs 4 sinh = {4 * math.sinh(s):.6f}")
    gotF = euler_fourier(circle, [s, 0.0])
    print(f"           Fourier {gotF.real:+.6f} vs 4 sin  = {4 * math.sin(s):+.6f}")
