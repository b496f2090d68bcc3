"""Tour of the exact step-function algebra on the real line.

Indicators of intervals are the atoms of the calculus: integration against
the Euler characteristic sees how the endpoints are attached, unlike the
Lebesgue integral.
"""

from eucalc import CF1D

closed = CF1D.segment(0, 1)
open_ = CF1D.open_interval(0, 1)
half = CF1D.half_open(0, 1)

print("Euler integrals distinguish interval types:")
print(f"  closed [0,1]    -> {closed.euler_integral():+d}")
print(f"  open   (0,1)    -> {open_.euler_integral():+d}")
print(f"  half   [0,1)    -> {half.euler_integral():+d}")

print("\nConvolution follows exact endpoint bookkeeping:")
conv = half.convolve(CF1D.half_open(0, 2))
print(f"  1_[0,1) * 1_[0,2) = {conv}")
print("  (equals 1_[0,2) - 1_[1,3), the textbook half-open rule)")

print("\nDuality swaps open and closed intervals up to sign:")
print(f"  D 1_[0,1] = {closed.dualize()}")
print(f"  D D 1_[0,1] = 1_[0,1]? {closed.dualize().dualize().equals(closed)}")

print("\nEuler integral is multiplicative under convolution:")
phi = CF1D.segment(0, 2, 2) - CF1D.point(1)
psi = CF1D.open_interval(-1, 1)
lhs = phi.convolve(psi).euler_integral()
rhs = phi.euler_integral() * psi.euler_integral()
print(f"  integral(phi * psi) = {lhs}, product of integrals = {rhs}")
