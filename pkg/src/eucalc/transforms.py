"""Hybrid integral transforms of constructible functions.

A hybrid transform pairs a Lebesgue kernel with the pushforward of a
constructible function along a linear form:

    T[phi](xi) = integral over R of kappa(t) * (xi_* phi)(t) dt.

Since pushforwards of the generator classes are exact step functions and the
kernels carry exact antiderivatives, every value below is a closed form, not
a quadrature.
"""

import csv
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels as _kernels
from .cfnd import pushforward_linear
from .errors import NonIntegrable


def hybrid_transform(phi, xi, kernel):
    """Lebesgue pairing of the kernel against the pushforward along xi."""
    return pushforward_linear(phi, xi).lebesgue_pair(kernel)


def euler_laplace(phi, xi):
    """Hybrid transform with kernel exp(-t)."""
    return hybrid_transform(phi, xi, _kernels.laplace())


def magnitude(phi, xi):
    """Alias of euler_laplace: the magnitude of the underlying sheaf data."""
    return euler_laplace(phi, xi)


def euler_fourier(phi, xi):
    """Hybrid transform with kernel exp(-it)."""
    return hybrid_transform(phi, xi, _kernels.fourier())


def gr_euler_fourier(phi, xi):
    """Hybrid transform with kernel 1_[0,inf) (Ghrist-Robinson style)."""
    return hybrid_transform(phi, xi, _kernels.heaviside())


def ecb_transform(phi, xi, a):
    """Hybrid transform with kernel 1_(-inf,a): barcode Euler characteristic."""
    return hybrid_transform(phi, xi, _kernels.ecb(a))


@dataclass
class TransformGrid:
    """Transform values over a direction x radius grid.

    values[i][j] holds T[phi](radii[j] * directions[i]); cells where the
    transform is not defined hold None.
    """

    directions: np.ndarray  # (m, d)
    radii: np.ndarray  # (n,)
    values: list  # nested lists of scalar or None

    def missing_fraction(self):
        cells = [v for row in self.values for v in row]
        if not cells:
            return 0.0
        return sum(v is None for v in cells) / len(cells)


def grid_eval(phi, kernel, directions, radii, threads=None):
    """Evaluate the transform on every (direction, radius) pair.

    Rows are independent; `threads` > 1 maps them over a thread pool.  Cells
    where integrability fails are recorded as None.
    """
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    radii = np.asarray(radii, dtype=float)

    def row(direction):
        out = []
        for r in radii:
            try:
                out.append(hybrid_transform(phi, r * direction, kernel))
            except NonIntegrable:
                out.append(None)
        return out

    if threads is None:
        threads = int(os.environ.get("EHC_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(row, directions))
    else:
        values = [row(d) for d in directions]
    return TransformGrid(directions=directions, radii=radii, values=values)


def grid_to_csv(grid, stream):
    """Write the grid as CSV rows dir_1,...,dir_d,radius,re,im.

    Missing cells leave the re/im fields empty.  Output is deterministic for
    fixed inputs.
    """
    d = grid.directions.shape[1]
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow([f"dir_{k + 1}" for k in range(d)] + ["radius", "re", "im"])
    for direction, row in zip(grid.directions, grid.values):
        for radius, value in zip(grid.radii, row):
            head = [repr(float(c)) for c in direction] + [repr(float(radius))]
            if value is None:
                writer.writerow(head + ["", ""])
            else:
                z = complex(value)
                writer.writerow(head + [repr(z.real), repr(z.imag)])


def direction_circle(count):
    """count unit directions evenly spread on the circle (dimension 2)."""
    angles = np.linspace(0.0, 2.0 * np.pi, count, endpoint=False)
    return np.column_stack([np.cos(angles), np.sin(angles)])
