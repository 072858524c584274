import io
import json
import math
import os
import re
import tempfile
import unittest
from contextlib import redirect_stdout, redirect_stderr

import numpy as np

from pyturncalc.types import ParseError, NonUnitaryMatrixError
from pyturncalc.su2 import Su2Gate, identity, exact_eq, hadamard
from pyturncalc.turns import Turn
from pyturncalc.poincare import PoincarePoint, JonesVector
from pyturncalc.optics import hwp
from pyturncalc.cli import main, parse_gate_spec, parse_turn_spec, parse_state_spec

RT2 = 1.0 / math.sqrt(2.0)


def run_cli(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestParsers(unittest.TestCase):

    def assertGateEqual(self, u, v, tol=1e-12):
        self.assertTrue(exact_eq(u, v, tol), '{} != {}'.format(u, v))

    def test_gate_specs(self):
        self.assertGateEqual(parse_gate_spec('named:identity'), identity())
        self.assertGateEqual(parse_gate_spec('quat:0,0,1,0'), Su2Gate(0.0, (0.0, 1.0, 0.0)))
        self.assertGateEqual(parse_gate_spec('quat:2,0,0,0'), identity())
        self.assertGateEqual(parse_gate_spec('euler:0,1.5707963267948966,0'), Su2Gate(RT2, (RT2, 0.0, 0.0)))
        self.assertGateEqual(parse_gate_spec('euler:0,90,0', degrees=True), Su2Gate(RT2, (RT2, 0.0, 0.0)))
        self.assertGateEqual(parse_gate_spec('axis:0,0,2,3.141592653589793'), Su2Gate(0.0, (0.0, 0.0, 1.0)))
        self.assertGateEqual(parse_gate_spec('plate:hwp,22.5', degrees=True), hwp(math.pi / 8.0))
        self.assertGateEqual(parse_gate_spec('plate:rot,0'), identity())
        self.assertGateEqual(parse_gate_spec('PLATE:QWP,0'), Su2Gate(RT2, (RT2, 0.0, 0.0)))

        m = parse_gate_spec('matrix:{0},0,{0},0,{0},0,-{0},0'.format(RT2))
        self.assertGateEqual(m, hadamard())

    def test_bad_gate_specs(self):
        bad_specs = {
            'bogus:1,2': 0,
            'euler:1,x,3': 8,
            'euler:1,2': 6,
            'named:toffoli': 6,
            'plate:lens,1': 6,
            'plate:qwp': 6,
            'nocolon': 7,
        }
        for spec, position in bad_specs.items():
            with self.assertRaises(ParseError) as ctx:
                parse_gate_spec(spec)
            self.assertEqual(ctx.exception.position, position, spec)

        with self.assertRaises(NonUnitaryMatrixError):
            parse_gate_spec('matrix:1,0,0,0,0,0,2,0')

    def test_turn_specs(self):
        t = parse_turn_spec('turn:0,0,1,45', degrees=True)
        self.assertTrue(t.approx_eq(Turn((0.0, 0.0, 1.0), 0.25 * math.pi), 1e-12))
        t = parse_turn_spec('quat:0,0,1,0')
        self.assertTrue(t.approx_eq(Turn((0.0, 1.0, 0.0), 0.5 * math.pi), 1e-12))
        with self.assertRaises(ParseError):
            parse_turn_spec('turn:0,0,1')

    def test_state_specs(self):
        p = parse_state_spec('point:0,0,2,0.5')
        self.assertIsInstance(p, PoincarePoint)
        self.assertTrue(np.allclose(p.direction, (0.0, 0.0, 1.0)))
        self.assertEqual(p.radius, 0.5)
        self.assertEqual(parse_state_spec('point:1,0,0').radius, 1.0)

        e = parse_state_spec('jones:1,0,0,1')
        self.assertIsInstance(e, JonesVector)
        self.assertTrue(np.allclose(e.as_array(), (RT2, 1j * RT2)))

        for spec in ('point:1,2', 'jones:1,0', 'spin:1,0,0'):
            with self.assertRaises(ParseError):
                parse_state_spec(spec)


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def write_document(self, name, document):
        path = os.path.join(self.folder.name, name)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(document, f)
        return path

    def run_ok(self, *argv):
        code, out, err = run_cli(*argv)
        self.assertEqual(code, 0, err)
        return json.loads(out)

    def test_convert(self):
        report = self.run_ok('convert', '--from', 'quat:0,0,1,0', '--to', 'turn')
        self.assertTrue(np.allclose(report['turn']['axis'], (0.0, 1.0, 0.0)))
        self.assertAlmostEqual(report['turn']['length'], 0.5 * math.pi, places=8)
        self.assertFalse(report['turn']['central'])

        report = self.run_ok('--degrees', 'convert', '--from', 'euler:10,20,30', '--to', 'euler')
        self.assertTrue(np.allclose(report['euler'], (10.0, 20.0, 30.0), atol=1e-6))

        report = self.run_ok('convert', '--from', 'named:pauli-x', '--to', 'matrix')
        self.assertTrue(np.allclose(report['matrix'], [[[0, 0], [0, -1]], [[0, -1], [0, 0]]]))

        report = self.run_ok('convert', '--from', 'named:identity', '--to', 'axis-angle')
        self.assertTrue(report['axis_angle']['degenerate'])

    def test_output_is_deterministic(self):
        argv = ('synthesize', '--gate', 'euler:0.3,1.1,2.7', '--config', 'hqq', '--nmr')
        first = run_cli(*argv)
        second = run_cli(*argv)
        self.assertEqual(first, second)
        self.assertTrue(first[1].endswith('}\n'))
        self.assertIsNone(re.search(r'-0\.0[,\s\]]', first[1]))

    def test_compose(self):
        report = self.run_ok('compose', 'named:pauli-x', 'named:pauli-z', '--verify')
        self.assertTrue(report['verified'])
        self.assertLess(report['discrepancy'], 1e-9)
        # pauli-x acts first, so the product is pauli-z pauli-x
        self.assertTrue(np.allclose(report['gate'], (0.0, 0.0, 0.0, 1.0)))

        report = self.run_ok('compose', 'euler:0.1,0.2,0.3', 'axis:1,1,0,2', 'plate:qwp,0.4', '--algebraic')
        self.assertEqual(report['path'], 'algebraic')
        self.assertNotIn('verified', report)

    def test_synthesize(self):
        report = self.run_ok('synthesize', '--gate', 'named:identity', '--config', 'qqh', '--nmr')
        self.assertEqual(report['config'], 'QQH')
        self.assertEqual(report['sign'], 1)
        self.assertEqual([p['flip'] for p in report['pulses']], ['pi', 'pi/2', 'pi/2'])

        report = self.run_ok('--degrees', 'synthesize', '--gate', 'named:hadamard')
        self.assertEqual(report['config'], 'QHQ')
        self.assertEqual(len(report['angles_deg']), 3)

    def test_gadget(self):
        report = self.run_ok('gadget', '--gate', 'named:identity')
        self.assertTrue(np.allclose(report['dials_rad'], (0.25 * math.pi, 0.75 * math.pi, 0.25 * math.pi)))
        report = self.run_ok('--degrees', 'gadget', '--gate', 'named:identity')
        self.assertEqual(report['dials_deg'], [45.0, 135.0, 45.0])

    def test_act(self):
        report = self.run_ok('act', '--turn', 'turn:0,0,1,0.7853981633974483', '--state', 'point:1,0,0,0.5')
        self.assertTrue(np.allclose(report['point'], (0.0, 1.0, 0.0), atol=1e-8))
        self.assertEqual(report['r'], 0.5)

        report = self.run_ok('act', '--turn', 'turn:0,0,1,0.7853981633974483', '--state', 'jones:1,0,0,0')
        self.assertTrue(np.allclose(report['point'], (0.0, 1.0, 0.0), atol=1e-8))
        self.assertTrue(np.allclose(report['jones'], [[RT2, 0.0], [RT2, 0.0]], atol=1e-8))

    def test_phase(self):
        path = self.write_document('octant.json', {'vertices': [[0, 0, 1], [1, 0, 0], [0, 1, 0]]})
        report = self.run_ok('phase', '--polygon', path)
        self.assertAlmostEqual(report['area'], 0.5 * math.pi, places=8)
        self.assertAlmostEqual(report['bargmann'], 0.5 * math.pi, places=8)
        self.assertTrue(np.allclose(report['midpoint_turn']['axis'], (0.0, 0.0, 1.0)))
        self.assertAlmostEqual(report['midpoint_turn']['length'], 0.25 * math.pi, places=8)

    def test_stack(self):
        path = self.write_document('stack.json', {'elements': [
            {'kind': 'QWP', 'phi': 0.0},
            {'kind': 'HWP', 'phi': 0.3},
            {'kind': 'ROTATOR', 'alpha': 1.0},
        ]})
        report = self.run_ok('stack', '--file', path)
        self.assertEqual(len(report['gate']), 4)
        self.assertIn('positional', report)

        path = self.write_document('empty.json', {'elements': []})
        report = self.run_ok('stack', '--file', path)
        self.assertTrue(report['turn']['axis'] == [0.0, 0.0, 1.0] and report['turn']['length'] == 0.0)
        self.assertNotIn('positional', report)

    def test_diagram(self):
        source = self.write_document('scene.json', {'objects': [
            {'type': 'turn', 'axis': [0, 0, 1], 'length': 0.7},
            {'type': 'arc', 'tail': [1, 0, 0], 'head': [0, 0, -1]},
            {'type': 'polygon', 'vertices': [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
        ]})
        first = os.path.join(self.folder.name, 'first.svg')
        second = os.path.join(self.folder.name, 'second.svg')
        report = self.run_ok('diagram', '--in', source, '--out', first)
        self.assertEqual(report['objects'], 3)
        self.run_ok('diagram', '--in', source, '--out', second)
        with open(first, 'rb') as f:
            first_bytes = f.read()
        with open(second, 'rb') as f:
            second_bytes = f.read()
        self.assertIn(b'<svg', first_bytes)
        self.assertEqual(first_bytes, second_bytes)

        self.run_ok('diagram', '--in', source, '--out', first, '--view', '1,1,1')

    def test_usage_errors(self):
        usage_cases = [
            ('convert',),
            ('convert', '--from', 'quat:1,0,0,0', '--to', 'spinor'),
            ('convert', '--from', 'bogus:1', '--to', 'turn'),
            ('synthesize', '--gate', 'euler:1,2'),
            ('phase', '--polygon', os.path.join(self.folder.name, 'missing.json')),
            ('frobnicate',),
        ]
        for argv in usage_cases:
            code, out, err = run_cli(*argv)
            self.assertEqual(code, 1, argv)
            self.assertEqual(out, '')
            self.assertIn('usage error', err)

    def test_domain_errors(self):
        degenerate = self.write_document('degenerate.json', {'vertices': [[1, 0, 0], [0, 1, 0], [0, -1, 0]]})
        domain_cases = [
            ('act', '--turn', 'turn:0,0,1,1', '--state', 'point:0,0,0'),
            ('phase', '--polygon', degenerate),
            ('convert', '--from', 'matrix:1,0,0,0,0,0,2,0', '--to', 'quat'),
        ]
        for argv in domain_cases:
            code, out, err = run_cli(*argv)
            self.assertEqual(code, 2, argv)
            self.assertIn('error', err)

    def test_help(self):
        code, out, _ = run_cli('--help')
        self.assertEqual(code, 0)
        self.assertIn('pyturncalc', out)


if __name__ == '__main__':
    unittest.main()
