import math

import numpy as np
import pytest

from eucalc.cf1d import CF1D, recompose
from eucalc.errors import DegenerateMap, ImproperConvolution, NonCompactSupport, NonIntegrable
from eucalc import kernels
from eucalc.verify import random_cf1d


class TestEvaluate:
    def test_closed_interval_endpoint(self):
        assert CF1D.segment(0, 1).evaluate(0) == 1

    def test_open_interval_endpoint(self):
        assert CF1D.open_interval(0, 1).evaluate(0) == 0

    def test_point_under_sum(self):
        phi = CF1D.segment(0, 2, 2) - CF1D.point(1)
        assert phi.evaluate(1) == 1


class TestCanonicalForm:
    def test_removable_breakpoint_dropped(self):
        phi = CF1D((0.0, 1.0, 2.0), (1, 1, 1), (0, 1, 1, 0))
        assert phi.breakpoints == (0.0, 2.0)

    def test_scale_by_zero(self):
        assert CF1D.segment(0, 1).scale(0).is_zero()

    def test_close_breakpoints_merge_on_add(self):
        phi = CF1D.segment(0, 1) + CF1D.segment(1 + 1e-12, 2)
        assert phi.breakpoints == (0.0, 1.0, 2.0)
        assert phi.evaluate(1) == 2

    def test_half_open_from_difference(self):
        assert (CF1D.segment(0, 2) - CF1D.point(2)).equals(CF1D.half_open(0, 2))


class TestEulerIntegral:
    def test_closed_interval(self):
        assert CF1D.segment(-2, 5).euler_integral() == 1

    def test_open_interval(self):
        assert CF1D.open_interval(-2, 5).euler_integral() == -1

    def test_half_open_interval(self):
        assert CF1D.half_open(-2, 5).euler_integral() == 0
        assert CF1D.interval(-2, 5, False, True).euler_integral() == 0

    def test_noncompact_rejected(self):
        with pytest.raises(NonCompactSupport):
            CF1D.ray_up(0).euler_integral()


class TestDecompose:
    def test_closed_interval_single_generator(self):
        gens = CF1D.segment(0, 1).decompose()
        assert len(gens) == 1 and gens[0].kind == "segment"

    def test_open_interval_three_generators(self):
        kinds = sorted((g.kind, g.coefficient) for g in CF1D.open_interval(0, 1).decompose())
        assert kinds == [("point", -1), ("point", -1), ("segment", 1)]

    def test_up_ray(self):
        gens = CF1D.ray_up(0).decompose()
        assert len(gens) == 1 and gens[0].kind == "ray_up"

    def test_round_trip_randomized(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            phi = random_cf1d(rng, compact=bool(rng.integers(0, 2)))
            assert recompose(phi.decompose()).equals(phi)


class TestConvolve:
    def test_half_open_rule(self):
        got = CF1D.half_open(0, 1).convolve(CF1D.half_open(0, 2))
        want = CF1D.half_open(0, 2) - CF1D.half_open(1, 3)
        assert got.equals(want)

    def test_closed_interval_with_up_ray(self):
        got = CF1D.segment(-1, 4).convolve(CF1D.ray_up(0))
        assert got.equals(CF1D.ray_up(-1))

    def test_point_is_unit(self):
        phi = CF1D.segment(0, 2, 3) - CF1D.open_interval(1, 2)
        assert CF1D.point(0).convolve(phi).equals(phi)

    def test_opposite_rays_rejected(self):
        with pytest.raises(ImproperConvolution):
            CF1D.ray_up(0).convolve(CF1D.ray_down(0))

    def test_commutative_associative_randomized(self):
        rng = np.random.default_rng(1)
        for _ in range(30):
            phi, psi, theta = (random_cf1d(rng) for _ in range(3))
            assert phi.convolve(psi).equals(psi.convolve(phi))
            assert phi.convolve(psi).convolve(theta).equals(phi.convolve(psi.convolve(theta)))

    def test_euler_integral_multiplicative(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            phi, psi = random_cf1d(rng), random_cf1d(rng)
            assert phi.convolve(psi).euler_integral() == phi.euler_integral() * psi.euler_integral()


class TestDualize:
    def test_closed_to_open(self):
        assert CF1D.segment(0, 1).dualize().equals(CF1D.open_interval(0, 1).scale(-1))

    def test_open_to_closed(self):
        assert CF1D.open_interval(0, 1).dualize().equals(CF1D.segment(0, 1).scale(-1))

    def test_point_fixed(self):
        assert CF1D.point(2).dualize().equals(CF1D.point(2))

    def test_involution_and_integral_randomized(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            phi = random_cf1d(rng, compact=bool(rng.integers(0, 2)))
            assert phi.dualize().dualize().equals(phi)
            if phi.is_compactly_supported():
                assert phi.dualize().euler_integral() == phi.euler_integral()


class TestPushforwardAffine:
    def test_scaling(self):
        assert CF1D.segment(0, 1).pushforward_affine(2).equals(CF1D.segment(0, 2))

    def test_reflection_flips_half_open(self):
        got = CF1D.half_open(0, 1).pushforward_affine(-1)
        assert got.equals(CF1D.interval(-1, 0, False, True))

    def test_translation(self):
        assert CF1D.segment(0, 1).pushforward_affine(1, 3).equals(CF1D.segment(3, 4))

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateMap):
            CF1D.segment(0, 1).pushforward_affine(0)


class TestLebesguePair:
    def test_laplace_on_interval(self):
        got = CF1D.segment(0, 1).lebesgue_pair(kernels.laplace())
        assert got == pytest.approx(1 - math.exp(-1), abs=1e-15)

    def test_laplace_on_up_ray(self):
        got = CF1D.ray_up(1.5).lebesgue_pair(kernels.laplace())
        assert got == pytest.approx(math.exp(-1.5), abs=1e-15)

    def test_point_is_null(self):
        for kernel in (kernels.laplace(), kernels.fourier(), kernels.heaviside()):
            assert CF1D.point(0.7).lebesgue_pair(kernel) == 0

    def test_laplace_needs_left_bounded_support(self):
        with pytest.raises(NonIntegrable):
            CF1D.ray_down(0).lebesgue_pair(kernels.laplace())

    def test_fourier_needs_compact_support(self):
        with pytest.raises(NonIntegrable):
            CF1D.ray_up(0).lebesgue_pair(kernels.fourier())

    def test_duality_flips_sign(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            phi = random_cf1d(rng)
            for kernel in (kernels.laplace(), kernels.fourier()):
                assert phi.dualize().lebesgue_pair(kernel) == pytest.approx(
                    -phi.lebesgue_pair(kernel), abs=1e-12
                )

    def test_window_equals_restriction(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            phi = random_cf1d(rng)
            a, b = sorted(rng.uniform(-4, 4, size=2))
            if b - a < 0.1:
                continue
            windowed = kernels.compose_window(kernels.laplace(), a, b)
            assert phi.lebesgue_pair(windowed) == pytest.approx(
                phi.restrict(a, b).lebesgue_pair(kernels.laplace()), abs=1e-12
            )


class TestRightClosed:
    def test_half_open_is(self):
        assert CF1D.half_open(0, 1).is_right_closed()

    def test_closed_is_not(self):
        assert not CF1D.segment(0, 1).is_right_closed()

    def test_left_open_is_not(self):
        assert not CF1D.interval(0, 1, False, True).is_right_closed()


class TestJson:
    def test_schema(self):
        data = CF1D.half_open(0, 1).to_json()
        assert data == {
            "breakpoints": [0.0, 1.0],
            "pointValues": [1, 0],
            "intervalValues": [0, 1, 0],
        }

    def test_round_trip(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            phi = random_cf1d(rng, compact=False)
            assert CF1D.from_json(phi.to_json()).equals(phi)
