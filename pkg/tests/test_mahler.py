"""Mahler measures: root product vs quadrature, growth laws, entropies."""

import math

import mpmath as mp
import numpy as np
import pytest

from circtrees import (DisconnectedGraphError, associated_laurent,
                       asymptotic_ratio, find_roots, mahler_quadrature,
                       mahler_root_product, thermo_limit)
from circtrees.mahler import _ordinary_image

# closed forms verified to high precision; the two-decimal figures carry a
# relative tolerance since they are truncated rather than rounded
A_12 = (3 + math.sqrt(5)) / 2
A_123 = 0.5 * (2 + math.sqrt(7) + math.sqrt(7 + 4 * math.sqrt(7)))
K_12 = 0.25 * (3 + math.sqrt(5)) * (4 + math.sqrt(3)
                                    + math.sqrt(15 + 8 * math.sqrt(3)))

GOLDEN = [
    ((1, 2), "even", 2.618033988749895),
    ((1, 3), "even", 2.89),
    ((2, 3), "even", 2.96),
    ((1, 2, 3), "even", 4.42),
    ((1, 2), "diagonal", 14.54),
    ((1, 2, 3), "diagonal", 32.7865),
]


class TestSpectrum:
    def test_cycle_spectrum_is_trivial(self):
        spectrum = associated_laurent((1,), "even")
        est = mahler_root_product(spectrum)
        assert est.value == pytest.approx(1.0, abs=1e-12)
        assert est.small_measure == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("steps", [(1, 2), (1, 3), (2, 3), (1, 2, 3),
                                       (1, 4), (2, 3, 5)])
    def test_unit_root_multiplicity_exactly_two(self, steps):
        # z = 1 is a double root of the polynomial image, exactly
        poly = _ordinary_image(steps)
        assert poly(1) == 0
        assert poly.derivative()(1) == 0
        assert poly.derivative().derivative()(1) != 0

    @pytest.mark.parametrize("steps", [(1, 2), (1, 3), (2, 3), (1, 2, 3)])
    def test_palindromic_coefficients(self, steps):
        poly = _ordinary_image(steps)
        assert poly.coeffs == tuple(reversed(poly.coeffs))
        spectrum = associated_laurent(steps, "even")
        for e, c in spectrum.laurent_coeffs.items():
            assert spectrum.laurent_coeffs[-e] == c

    @pytest.mark.parametrize("steps", [(1, 2), (1, 3), (2, 3), (1, 2, 3),
                                       (1, 2, 4)])
    def test_off_circle_roots_pair_up(self, steps):
        # 2(s_k - 1) roots off the circle, in (z, 1/z) pairs, none on it
        spectrum = associated_laurent(steps, "even")
        roots = [(z, r, m) for z, r, m in spectrum.all_roots()
                 if abs(abs(z) - 1) > 1e-10]
        count = sum(m for _, _, m in roots)
        assert count == 2 * (max(steps) - 1)
        for z, radius, _ in roots:
            assert abs(abs(z) - 1) > 100 * radius  # strict dichotomy
            partner = min(abs(w - 1 / z) for w, _, _ in roots)
            assert partner < 1e-15 * max(1, abs(1 / z))

    def test_reduction_divides_out_gcd(self):
        spectrum = associated_laurent((2, 4), "even")
        assert spectrum.reduced and spectrum.reduced_steps == (1, 2)
        raw = associated_laurent((2, 4), "even", reduce=False)
        assert not raw.reduced and raw.reduced_steps == (2, 4)


class TestGoldenValues:
    @pytest.mark.parametrize("steps,family,target", GOLDEN)
    def test_root_product(self, steps, family, target):
        est = mahler_root_product(associated_laurent(steps, family))
        assert est.value == pytest.approx(target, rel=5e-3)

    def test_closed_forms_tight(self):
        rp = lambda s, f: mahler_root_product(associated_laurent(s, f)).value
        assert abs(rp((1, 2), "even") - A_12) < 1e-9
        assert abs(rp((1, 2, 3), "even") - A_123) < 1e-9
        assert abs(rp((1, 2), "diagonal") - K_12) < 1e-9
        assert abs(rp((1,), "diagonal") - (2 + math.sqrt(3))) < 1e-9

    def test_2_3_measure_is_quartic_root(self):
        # the growth constant of the (2,3) family is the lone real root
        # above 1 of  1 - 3z + z^2 - 3z^3 + z^4
        candidates = [z.real for z in np.roots([1, -3, 1, -3, 1])
                      if abs(z.imag) < 1e-9 and z.real > 1]
        assert len(candidates) == 1
        est = mahler_root_product(associated_laurent((2, 3), "even"))
        # refine the double-precision quartic root before the 1e-9 compare
        with mp.workprec(120):
            root = mp.findroot(
                lambda z: 1 - 3 * z + z ** 2 - 3 * z ** 3 + z ** 4,
                candidates[0])
            assert abs(est.value - root) < 1e-9

    @pytest.mark.parametrize("steps,family,target", GOLDEN)
    def test_quadrature_agrees(self, steps, family, target):
        spectrum = associated_laurent(steps, family)
        rp = mahler_root_product(spectrum)
        quad = mahler_quadrature(spectrum)
        assert abs(rp.value - quad.value) < 1e-8
        assert abs(rp.value - quad.value) <= \
            rp.error_bound + quad.error_bound + 1e-12
        assert quad.method == "quadrature" and rp.method == "root-product"

    def test_estimate_consistency(self):
        est = mahler_root_product(associated_laurent((1, 3), "even"))
        assert est.value >= 1
        assert abs(est.value - math.exp(est.small_measure)) <= est.error_bound


class TestScalingInvariance:
    @pytest.mark.parametrize("base,scale", [((1, 2), 2), ((1, 2), 3),
                                            ((1, 3), 2), ((1, 2, 3), 2)])
    def test_scaled_steps_same_measure(self, base, scale):
        plain = mahler_root_product(associated_laurent(base, "even"))
        scaled_steps = tuple(scale * s for s in base)
        scaled = mahler_root_product(
            associated_laurent(scaled_steps, "even", reduce=False))
        assert abs(plain.value - scaled.value) < 1e-9

    def test_scaled_rebuild_reduces(self):
        auto = mahler_root_product(associated_laurent((2, 4), "even"))
        base = mahler_root_product(associated_laurent((1, 2), "even"))
        assert abs(auto.value - base.value) < 1e-12


class TestMultiplicativity:
    @pytest.mark.parametrize("steps", [(1,), (1, 2), (1, 2, 3)])
    def test_diagonal_measure_factorizes(self, steps):
        # M(L (L+2)) = M(L) M(L+2)
        whole = mahler_root_product(associated_laurent(steps, "diagonal"))
        left = mahler_root_product(associated_laurent(steps, "even"))
        shifted = _ordinary_image(steps, shift=2)
        right = mp.mpf(1)
        cr = find_roots(shifted, 256)
        for z, m in zip(cr.roots, cr.multiplicities):
            if abs(z) > 1:
                right *= abs(z) ** m
        assert whole.value == pytest.approx(left.value * float(right),
                                            rel=1e-12)


class TestAsymptotics:
    def test_fibonacci_family_ratio(self):
        assert abs(asymptotic_ratio((1, 2), "even", 30) - 1) < 1e-4

    def test_cycle_family_is_exact(self):
        for n in (5, 12, 30):
            assert asymptotic_ratio((1,), "even", n) == pytest.approx(
                1.0, abs=1e-12)

    def test_diagonal_family(self):
        assert abs(asymptotic_ratio((1, 2, 3), "diagonal", 20) - 1) < 0.02

    def test_gcd_family_with_scaling_factor(self):
        # d = 2 enters as d^2/q; odd orders only
        assert abs(asymptotic_ratio((2, 4), "even", 29) - 1) < 0.05
        with pytest.raises(DisconnectedGraphError):
            asymptotic_ratio((2, 4), "even", 12)

    @pytest.mark.parametrize("steps,family", [
        ((1, 2), "even"), ((1, 3), "even"), ((2, 3), "even"),
        ((1, 2, 3), "even"), ((1,), "diagonal"), ((1, 2), "diagonal"),
        ((1, 2, 3), "diagonal")])
    def test_error_shrinks_with_order(self, steps, family):
        measure = mahler_root_product(associated_laurent(steps, family))
        lo = abs(asymptotic_ratio(steps, family, 10, measure=measure) - 1)
        hi = abs(asymptotic_ratio(steps, family, 20, measure=measure) - 1)
        assert hi < lo


class TestThermoLimit:
    def test_cycle_entropy_vanishes(self):
        series = thermo_limit((1,), "even", [10, 100])
        assert series.target == pytest.approx(0.0, abs=1e-12)
        assert series.values[1] == pytest.approx(math.log(100) / 100)

    def test_fibonacci_family_entropy(self):
        series = thermo_limit((1, 2), "even", [40])
        assert abs(series.values[0] - math.log(A_12)) < 0.1
        assert series.target == pytest.approx(math.log(A_12), abs=1e-12)

    def test_2_3_family_target(self):
        # the finite-size error ~ log(n/q)/n peaks near n = e q, so compare
        # well past the hump
        series = thermo_limit((2, 3), "even", [40, 400])
        assert series.target == pytest.approx(math.log(2.9655726339), abs=1e-6)
        assert abs(series.values[1] - series.target) < 0.01
        assert abs(series.values[1] - series.target) < \
            abs(series.values[0] - series.target)

    def test_diagonal_entropy(self):
        series = thermo_limit((1, 2), "diagonal", [30])
        assert abs(series.values[0] - math.log(14.5351502718)) < 0.15
