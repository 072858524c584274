import math
import unittest

import numpy as np

from pyturncalc.types import CentralGateError, NonPositiveInputError, OutOfRangeError
from pyturncalc.su2 import (
    Su2Gate, EulerAngles, identity, multiply, inverse, exact_eq, projective_eq, from_euler,
    random_gates, hadamard,
)
from pyturncalc.turns import Turn, gate_from_turn, turn_from_gate, turn_positional_coordinates
from pyturncalc.optics import (
    QWP, HWP, COMPENSATOR, ROTATOR,
    compensator, qwp, hwp, rotator, physical_rotation, PlateElement, ElementStack, evaluate_stack,
    retardance_from_physical, hq_commute, hwp_pair_rotation, absorb_rotation,
    rotator_to_birefringence, variable_rotator_stack, from_modified_euler, rotate_element,
    classify_stack_turn, turn_positional_decomposition, euler_positional_dictionary,
    hq_family_member, hq_family_member_scan,
)

RT2 = 1.0 / math.sqrt(2.0)


class TestOptics(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(5)

    def assertGateEqual(self, u, v, tol=1e-12):
        self.assertTrue(exact_eq(u, v, tol), '{} != {}'.format(u, v))

    def angles(self, count, low=-math.pi, high=math.pi):
        return [float(x) for x in self.rng.uniform(low, high, count)]

    def test_element_gates(self):
        self.assertGateEqual(compensator(0.0, 0.0), identity())
        self.assertGateEqual(compensator(0.0, 0.5 * math.pi), Su2Gate(RT2, (RT2, 0.0, 0.0)))
        self.assertGateEqual(compensator(0.0, math.pi), hwp(0.0))
        self.assertGateEqual(qwp(0.0), Su2Gate(RT2, (RT2, 0.0, 0.0)))
        self.assertGateEqual(rotator(2.0 * math.pi), identity().negate())
        self.assertGateEqual(physical_rotation(0.3), rotator(0.6))

        for phi in self.angles(200):
            self.assertGateEqual(multiply(qwp(phi), qwp(phi)), hwp(phi))
            self.assertGateEqual(qwp(phi + math.pi), qwp(phi))
            self.assertGateEqual(hwp(phi + math.pi), hwp(phi))
            self.assertGateEqual(hwp(phi + 0.5 * math.pi), hwp(phi).negate())

    def test_hwp_is_hadamard(self):
        h = hwp(math.pi / 8.0)
        self.assertTrue(projective_eq(h, hadamard()))
        hadamard_matrix = np.array([[1.0, 1.0], [1.0, -1.0]]) * RT2
        self.assertTrue(np.allclose(h.to_matrix(), -1j * hadamard_matrix, atol=1e-12))

    def test_physical_rotation_covariance(self):
        for phi, psi, eta, alpha in zip(*(self.angles(100) for _ in range(4))):
            elements = [
                PlateElement.quarter(psi),
                PlateElement.half(psi),
                PlateElement.plate(psi, abs(eta)),
                PlateElement.optical_rotator(alpha),
            ]
            spin = physical_rotation(phi)
            for element in elements:
                expected = multiply(multiply(spin, element.gate()), inverse(spin))
                self.assertGateEqual(rotate_element(element, phi).gate(), expected)

    def test_plate_element(self):
        e = PlateElement.quarter(math.pi + 0.2)
        self.assertEqual(e.kind, QWP)
        self.assertAlmostEqual(e.orientation, 0.2, places=12)

        # retardance above 2pi folds with a quarter-turn of the fast axis
        for eta in (7.0, -1.0, 11.0, 2.0 * math.pi):
            e = PlateElement.plate(0.3, eta)
            self.assertTrue(0.0 <= e.retardance <= 2.0 * math.pi)
            self.assertGateEqual(e.gate(), compensator(0.3, eta))

        r = PlateElement.optical_rotator(-1.0)
        self.assertEqual(r.kind, ROTATOR)
        self.assertGateEqual(r.gate(), rotator(-1.0))

        bad_params = [
            {'kind': 'mirror'},
            {'kind': COMPENSATOR, 'orientation': 0.1},
            {'kind': ROTATOR},
        ]
        for kwargs in bad_params:
            with self.assertRaises(ValueError):
                PlateElement(**kwargs)

    def test_evaluate_stack(self):
        self.assertGateEqual(evaluate_stack(ElementStack()), identity())
        a, b, c = PlateElement.quarter(0.1), PlateElement.half(0.7), PlateElement.quarter(1.9)
        stack = ElementStack([a, b, c])
        expected = multiply(multiply(c.gate(), b.gate()), a.gate())
        self.assertGateEqual(evaluate_stack(stack), expected)
        self.assertGateEqual(stack.gate(), expected)
        self.assertEqual(stack.matrix_order(), [c, b, a])
        self.assertEqual(len(stack), 3)

    def test_retardance_from_physical(self):
        self.assertAlmostEqual(retardance_from_physical(0.01, 100.0, 1.0), 1.0, places=12)
        self.assertEqual(retardance_from_physical(0.01, 0.0, 1.0), 0.0)
        single = retardance_from_physical(0.009, 100.0, 1.0)
        double = retardance_from_physical(0.009, 200.0, 1.0)
        self.assertAlmostEqual(double, (2.0 * single) % (2.0 * math.pi), places=12)
        self.assertAlmostEqual(retardance_from_physical(0.1, 100.0, 1.0), 10.0 - 2.0 * math.pi, places=12)

        bad_params = [
            (0.01, 100.0, 0.0),
            (0.01, 100.0, -1.0),
            (-0.01, 100.0, 1.0),
            (0.01, -1.0, 1.0),
        ]
        for args in bad_params:
            with self.assertRaises(NonPositiveInputError):
                retardance_from_physical(*args)

    def test_hq_commute(self):
        self.assertAlmostEqual(hq_commute(0.0, 0.25 * math.pi), 0.75 * math.pi, places=12)
        self.assertAlmostEqual(hq_commute(0.4, 0.4), 0.4, places=12)
        for h, q in zip(self.angles(1000), self.angles(1000)):
            r = hq_commute(h, q)
            self.assertGateEqual(multiply(hwp(h), qwp(q)), multiply(qwp(r), hwp(h)))

    def test_hwp_pair_rotation(self):
        self.assertAlmostEqual(hwp_pair_rotation(0.3, 0.3), 2.0 * math.pi, places=12)
        self.assertGateEqual(rotator(hwp_pair_rotation(0.3, 0.3)), identity().negate())
        for phi1, phi2 in zip(self.angles(1000), self.angles(1000)):
            alpha = hwp_pair_rotation(phi1, phi2)
            self.assertTrue(0.0 <= alpha < 4.0 * math.pi)
            self.assertGateEqual(multiply(hwp(phi1), hwp(phi2)), rotator(alpha))
            # H_phi H_{pi/2 + phi'} = R(4 (phi - phi'))
            self.assertGateEqual(multiply(hwp(phi1), hwp(0.5 * math.pi + phi2)), rotator(4.0 * (phi1 - phi2)))

    def test_absorb_rotation(self):
        self.assertEqual(absorb_rotation(0.3, 0.0), 0.3)
        self.assertAlmostEqual(absorb_rotation(0.3, 2.0 * math.pi), 0.3 + 0.5 * math.pi, places=12)
        for phi, alpha in zip(self.angles(500), self.angles(500, -4.0 * math.pi, 4.0 * math.pi)):
            post = absorb_rotation(phi, alpha, 'post')
            self.assertGateEqual(multiply(rotator(alpha), hwp(phi)), hwp(post))
            pre = absorb_rotation(phi, alpha, 'pre')
            self.assertGateEqual(multiply(hwp(phi), rotator(alpha)), hwp(pre))

        with self.assertRaises(ValueError):
            absorb_rotation(0.3, 1.0, 'middle')

    def test_rotator_to_birefringence(self):
        stack = rotator_to_birefringence(-0.25 * math.pi, 1.0)
        self.assertAlmostEqual(stack.elements[0].orientation, 0.5 * math.pi, places=12)
        self.assertEqual(stack.elements[2].orientation, 0.0)
        self.assertGateEqual(evaluate_stack(rotator_to_birefringence(0.4, 0.0)), identity())
        for phi, eta in zip(self.angles(500), self.angles(500, 0.0, 2.0 * math.pi)):
            self.assertGateEqual(evaluate_stack(rotator_to_birefringence(phi, eta)), compensator(phi, eta))

    def test_variable_rotator_stack(self):
        for alpha in self.angles(200, -4.0 * math.pi, 4.0 * math.pi):
            stack = variable_rotator_stack(alpha)
            self.assertEqual([e.kind for e in stack], [HWP, HWP])
            self.assertGateEqual(evaluate_stack(stack), rotator(alpha))

    def test_from_modified_euler(self):
        for xi, eta, zeta in zip(self.angles(500, -10.0, 10.0), self.angles(500, 0.0, math.pi),
                                 self.angles(500, -10.0, 10.0)):
            e = EulerAngles(xi, eta, zeta)
            rotator_first, plate_first = from_modified_euler(e)
            self.assertGateEqual(evaluate_stack(rotator_first), from_euler(e))
            self.assertGateEqual(evaluate_stack(plate_first), from_euler(e))

    def test_hwp_only_stacks(self):
        self.assertEqual(classify_stack_turn(identity()), 'null')
        self.assertEqual(classify_stack_turn(rotator(0.4)), 'rotator')
        self.assertEqual(classify_stack_turn(qwp(0.3)), 'plate')
        self.assertEqual(classify_stack_turn(from_euler(EulerAngles(0.3, 0.5, 0.1))), 'general')
        for size in range(1, 7):
            for _ in range(100):
                stack = ElementStack([PlateElement.half(phi) for phi in self.angles(size)])
                kind = classify_stack_turn(evaluate_stack(stack))
                if size % 2 == 1:
                    self.assertEqual(kind, 'plate')
                else:
                    self.assertIn(kind, ('rotator', 'null'))

    def test_hq_family(self):
        self.assertTrue(hq_family_member(multiply(hwp(0.3), qwp(1.1))))
        self.assertTrue(hq_family_member(qwp(0.2)))
        self.assertFalse(hq_family_member(identity()))
        self.assertFalse(hq_family_member(rotator(math.pi / 3.0)))
        for h, q in zip(self.angles(500), self.angles(500)):
            self.assertTrue(hq_family_member(multiply(hwp(h), qwp(q))))

        self.assertTrue(hq_family_member_scan(multiply(hwp(0.3), qwp(1.1)), resolution=1e-2))
        self.assertTrue(hq_family_member_scan(multiply(hwp(2.9), qwp(0.05)).negate(), resolution=1e-2))
        self.assertFalse(hq_family_member_scan(identity(), resolution=1e-2))
        self.assertFalse(hq_family_member_scan(rotator(math.pi / 3.0), resolution=1e-2))

    def test_hq_family_scan_rejects_nearby_gates(self):
        member = multiply(hwp(0.3), qwp(1.1))
        a0, a1, a2, a3 = member.components
        # moved 3e-2 rad off the a0^2 + a3^2 = 1/2 torus, along its normal
        c = math.sqrt(2.0) * math.cos(0.25 * math.pi - 3e-2)
        s = math.sqrt(2.0) * math.sin(0.25 * math.pi - 3e-2)
        nearby = Su2Gate(c * a0, (s * a1, s * a2, c * a3))
        self.assertFalse(hq_family_member(nearby))
        self.assertFalse(hq_family_member_scan(nearby, resolution=1e-2))
        self.assertTrue(hq_family_member_scan(member, resolution=1e-2))

    def test_positional_decomposition(self):
        # a pure rotator has a trivial compensator part
        d = turn_positional_decomposition(rotator(0.5 * math.pi))
        self.assertTrue(d.degenerate)
        self.assertAlmostEqual(d.rotation, 0.5 * math.pi, places=12)
        self.assertGateEqual(d.compensator_after.gate(), identity())

        d = turn_positional_decomposition(compensator(0.0, 1.2))
        self.assertFalse(d.degenerate)
        self.assertGateEqual(rotator(d.rotation), identity())
        self.assertGateEqual(d.compensator_after.gate(), compensator(0.0, 1.2))

        for u in random_gates(self.rng, 1000):
            d = turn_positional_decomposition(u)
            self.assertGateEqual(evaluate_stack(d.rotator_first()), u, tol=1e-10)
            self.assertGateEqual(evaluate_stack(d.compensator_first()), u, tol=1e-10)

        for u in (identity(), identity().negate()):
            with self.assertRaises(CentralGateError):
                turn_positional_decomposition(u)

        data = turn_positional_decomposition(qwp(0.2)).to_json()
        self.assertEqual(sorted(data), ['compensator_first', 'degenerate', 'rotator_alpha', 'rotator_first'])

    def test_euler_positional_dictionary(self):
        e = euler_positional_dictionary(0.5 * math.pi, 0.0, 0.0)
        self.assertAlmostEqual(e.xi, -0.5 * math.pi, places=15)
        self.assertAlmostEqual(e.eta, 0.0, places=15)
        self.assertAlmostEqual(e.zeta, 0.5 * math.pi, places=15)
        self.assertGateEqual(from_euler(e), identity())

        for u in random_gates(self.rng, 500):
            t = turn_from_gate(u)
            phi1, theta, phi2 = turn_positional_coordinates(t)
            e = euler_positional_dictionary(theta, phi1, phi2)
            self.assertGateEqual(from_euler(e), gate_from_turn(t), tol=1e-10)

        for theta in (-0.1, math.pi + 0.1):
            with self.assertRaises(OutOfRangeError):
                euler_positional_dictionary(theta, 0.0, 0.0)

    def test_serialization(self):
        def assert_serialization_identity(element):
            restored = PlateElement.from_json(element.to_json())
            self.assertEqual(restored.to_json(), element.to_json())
            self.assertGateEqual(restored.gate(), element.gate())

        assert_serialization_identity(PlateElement.quarter(0.3))
        assert_serialization_identity(PlateElement.half(2.0))
        assert_serialization_identity(PlateElement.plate(0.1, 1.7))
        assert_serialization_identity(PlateElement.optical_rotator(5.0))

        self.assertEqual(PlateElement.optical_rotator(5.0).to_json(), {'kind': ROTATOR, 'alpha': 5.0})
        self.assertEqual(PlateElement.half(0.25).to_json(), {'kind': HWP, 'phi': 0.25})

        stack = ElementStack([PlateElement.quarter(0.1), PlateElement.optical_rotator(1.0)])
        self.assertGateEqual(ElementStack.from_json(stack.to_json()).gate(), stack.gate())


if __name__ == '__main__':
    unittest.main()
