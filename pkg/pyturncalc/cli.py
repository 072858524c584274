"""
Command-line front end. Every subcommand parses its inputs, calls the
library and prints a JSON report; exit code 0 on success, 1 on usage
errors and 2 on domain errors.
"""
import sys
import math
import logging
import argparse
from typing import List, Optional, Sequence, TextIO

import numpy as np

from .types import TurnCalcError, ParseError
from .su2 import (
    Su2Gate, AxisAngle, EulerAngles, gate_from_components, gate_from_matrix, named_gate,
    from_axis_angle, from_euler, to_axis_angle, to_euler, multiply, exact_eq,
)
from .turns import Turn, turn_from_gate, gate_from_turn, compose_turns
from .poincare import (
    PoincarePoint, JonesVector, apply_turn_to_point, apply_gate_to_jones, point_from_jones,
)
from .pancharatnam import SphericalPolygon, polygon_area, bargmann_n, midpoint_turn
from .optics import PlateElement, ElementStack, evaluate_stack, turn_positional_decomposition
from .synthesis import synthesize, dial_positions, to_nmr, CONFIGS
from .diagram import DiagramRenderer, load_objects
from .persistence import dumps_document, FileSystemDocumentStorageAdapter

GATE_SPEC_ARITY = {'euler': 3, 'axis': 4, 'quat': 4, 'matrix': 8}


class UsageError(Exception):
    pass


def _numbers(body: str, offset: int, expected: Optional[int] = None) -> List[float]:
    values = []
    position = offset
    for token in body.split(','):
        try:
            values.append(float(token))
        except ValueError:
            raise ParseError('not a number: {!r}'.format(token.strip()), position)
        position += len(token) + 1
    if expected is not None and len(values) != expected:
        raise ParseError('expected {} numbers, got {}'.format(expected, len(values)), offset)
    return values


def _split_spec(text: str):
    head, sep, body = text.partition(':')
    if not sep:
        raise ParseError("missing ':' after the spec kind", len(text))
    return head.strip().lower(), body, len(head) + 1


def parse_gate_spec(text: str, degrees: bool = False) -> Su2Gate:
    """
    Gate from one of
    named:<id> | euler:xi,eta,zeta | axis:x,y,z,alpha | quat:a0,a1,a2,a3 |
    matrix:re,im,re,im,re,im,re,im (row-major) | plate:qwp|hwp|rot,<angle>
    """
    kind, body, offset = _split_spec(text)
    angle = math.radians if degrees else float

    if kind == 'named':
        try:
            return named_gate(body.strip())
        except ValueError as e:
            raise ParseError(str(e), offset)
    if kind == 'plate':
        plate, sep, rest = body.partition(',')
        if not sep:
            raise ParseError('expected plate:<qwp|hwp|rot>,<angle>', offset)
        value = angle(_numbers(rest, offset + len(plate) + 1, 1)[0])
        plate = plate.strip().lower()
        if plate == 'qwp':
            return PlateElement.quarter(value).gate()
        if plate == 'hwp':
            return PlateElement.half(value).gate()
        if plate == 'rot':
            return PlateElement.optical_rotator(value).gate()
        raise ParseError('unknown plate {!r}'.format(plate), offset)
    if kind not in GATE_SPEC_ARITY:
        raise ParseError('unknown gate spec kind {!r}'.format(kind), 0)

    values = _numbers(body, offset, GATE_SPEC_ARITY[kind])
    if kind == 'euler':
        return from_euler(EulerAngles(*[angle(v) for v in values]))
    if kind == 'axis':
        return from_axis_angle(AxisAngle(values[:3], angle(values[3])))
    if kind == 'quat':
        return gate_from_components(values[0], values[1:])
    m = np.array([complex(values[k], values[k + 1]) for k in range(0, 8, 2)]).reshape(2, 2)
    return gate_from_matrix(m)


def parse_turn_spec(text: str, degrees: bool = False) -> Turn:
    """turn:x,y,z,length or any gate spec."""
    kind, body, offset = _split_spec(text)
    if kind == 'turn':
        values = _numbers(body, offset, 4)
        return Turn(values[:3], math.radians(values[3]) if degrees else values[3])
    return turn_from_gate(parse_gate_spec(text, degrees))


def parse_state_spec(text: str):
    """point:x,y,z[,r] or jones:re,im,re,im."""
    kind, body, offset = _split_spec(text)
    if kind == 'point':
        values = _numbers(body, offset)
        if len(values) not in (3, 4):
            raise ParseError('expected 3 or 4 numbers', offset)
        return PoincarePoint(values[:3], values[3] if len(values) == 4 else 1.0)
    if kind == 'jones':
        values = _numbers(body, offset, 4)
        return JonesVector(complex(values[0], values[1]), complex(values[2], values[3]))
    raise ParseError('unknown state spec kind {!r}'.format(kind), 0)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = _ArgumentParser(prog='pyturncalc', description="SU(2) gates as Hamilton's turns")
    parser.add_argument('--degrees', action='store_true', help='read and report angles in degrees')
    parser.add_argument('--verbose', action='store_true', help='debug logging')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    p = commands.add_parser('convert', help='convert a gate between parametrizations')
    p.add_argument('--from', dest='source', required=True, metavar='GATESPEC')
    p.add_argument('--to', dest='target', required=True, choices=['euler', 'axis-angle', 'quat', 'matrix', 'turn'])

    p = commands.add_parser('compose', help='compose gates, the first one acting first')
    p.add_argument('gates', nargs='+', metavar='GATESPEC')
    path = p.add_mutually_exclusive_group()
    path.add_argument('--geometric', dest='path', action='store_const', const='geometric')
    path.add_argument('--algebraic', dest='path', action='store_const', const='algebraic')
    p.add_argument('--verify', action='store_true', help='run both paths and compare them')
    p.set_defaults(path='geometric')

    p = commands.add_parser('synthesize', help='dial angles of a three-plate gadget')
    p.add_argument('--gate', required=True, metavar='GATESPEC')
    p.add_argument('--config', default='qhq', choices=[c.lower() for c in CONFIGS])
    p.add_argument('--nmr', action='store_true', help='also emit the NMR pulse schedule')

    p = commands.add_parser('gadget', help='Q-H-Q dial positions of a gate')
    p.add_argument('--gate', required=True, metavar='GATESPEC')

    p = commands.add_parser('act', help='act with a turn on a state')
    p.add_argument('--turn', required=True, metavar='TURNSPEC')
    p.add_argument('--state', required=True, metavar='STATESPEC')

    p = commands.add_parser('phase', help='area, Bargmann invariant and midpoint turn of a polygon')
    p.add_argument('--polygon', required=True, metavar='FILE')

    p = commands.add_parser('stack', help='evaluate an element stack')
    p.add_argument('--file', required=True, metavar='FILE')

    p = commands.add_parser('diagram', help='draw turns, arcs and polygons as SVG')
    p.add_argument('--in', dest='source', required=True, metavar='FILE')
    p.add_argument('--out', required=True, metavar='FILE')
    p.add_argument('--view', default=None, metavar='X,Y,Z', help='custom viewing direction')

    return parser.parse_args(argv)


class CliRunner(object):

    def __init__(self, degrees: bool = False, out: TextIO = None, logger: logging.Logger = None):
        self.logger = logger if logger is not None else logging.getLogger("turncalc")
        self.degrees = degrees
        self.out = out if out is not None else sys.stdout

    def _angle_out(self, value: float) -> float:
        return math.degrees(value) if self.degrees else value

    def _emit(self, document: dict):
        self.out.write(dumps_document(document))

    def _read_document(self, path: str) -> dict:
        document = FileSystemDocumentStorageAdapter(path).read()
        if document is None:
            raise UsageError('file not found: {}'.format(path))
        return document

    def gate_spec(self, text: str) -> Su2Gate:
        return parse_gate_spec(text, self.degrees)

    def run(self, args: argparse.Namespace):
        handler = getattr(self, 'cmd_' + args.command)
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug('running {}'.format(args.command))
        handler(args)

    def cmd_convert(self, args):
        u = self.gate_spec(args.source)
        report = {'gate': u.to_json()}
        if args.target == 'euler':
            report['euler'] = [self._angle_out(a) for a in to_euler(u).as_tuple()]
        elif args.target == 'axis-angle':
            aa = to_axis_angle(u)
            report['axis_angle'] = {'axis': list(aa.axis), 'angle': self._angle_out(aa.angle),
                                    'degenerate': aa.degenerate}
        elif args.target == 'matrix':
            m = u.to_matrix()
            report['matrix'] = [[[c.real, c.imag] for c in row] for row in m]
        elif args.target == 'turn':
            t = turn_from_gate(u)
            report['turn'] = {'axis': list(t.axis), 'length': self._angle_out(t.length), 'central': t.central}
        self._emit(report)

    def cmd_compose(self, args):
        gates = [self.gate_spec(g) for g in args.gates]
        algebraic = None
        geometric = None
        if args.path == 'algebraic' or args.verify:
            algebraic = gates[0]
            for g in gates[1:]:
                algebraic = multiply(g, algebraic)
        if args.path == 'geometric' or args.verify:
            total = turn_from_gate(gates[0])
            for g in gates[1:]:
                total = compose_turns(total, turn_from_gate(g))
            geometric = gate_from_turn(total)
        result = geometric if args.path == 'geometric' else algebraic
        t = turn_from_gate(result)
        report = {
            'path': args.path,
            'gate': result.to_json(),
            'turn': {'axis': list(t.axis), 'length': self._angle_out(t.length)},
        }
        if args.verify:
            report['verified'] = exact_eq(geometric, algebraic, 1e-9)
            report['discrepancy'] = float(np.linalg.norm(geometric.components - algebraic.components))
        self._emit(report)

    def cmd_synthesize(self, args):
        u = self.gate_spec(args.gate)
        setting = synthesize(u, args.config)
        report = setting.to_json()
        if self.degrees:
            report['angles_deg'] = [math.degrees(a) for a in setting.angles]
        if args.nmr:
            report['pulses'] = [p.to_json() for p in to_nmr(setting)]
        self._emit(report)

    def cmd_gadget(self, args):
        dials = dial_positions(self.gate_spec(args.gate))
        report = {'config': 'QHQ', 'dials_rad': list(dials)}
        if self.degrees:
            report['dials_deg'] = [math.degrees(a) for a in dials]
        self._emit(report)

    def cmd_act(self, args):
        t = parse_turn_spec(args.turn, self.degrees)
        state = parse_state_spec(args.state)
        if isinstance(state, JonesVector):
            moved = apply_gate_to_jones(gate_from_turn(t), state)
            report = moved.to_json()
            report['point'] = list(point_from_jones(moved))
        else:
            report = apply_turn_to_point(t, state).to_json()
        self._emit(report)

    def cmd_phase(self, args):
        poly = SphericalPolygon.from_json(self._read_document(args.polygon))
        t = midpoint_turn(poly)
        self._emit({
            'area': polygon_area(poly),
            'bargmann': bargmann_n(poly),
            'midpoint_turn': t.to_json(),
        })

    def cmd_stack(self, args):
        stack = ElementStack.from_json(self._read_document(args.file))
        u = evaluate_stack(stack)
        t = turn_from_gate(u)
        report = {'gate': u.to_json(), 'turn': t.to_json()}
        if not t.central:
            report['positional'] = turn_positional_decomposition(u).to_json()
        self._emit(report)

    def cmd_diagram(self, args):
        objects = load_objects(self._read_document(args.source))
        if args.view is not None:
            view = _numbers(args.view, 0, 3)
            renderer = DiagramRenderer(projection='orthographic-custom', view=view, logger=self.logger)
        else:
            renderer = DiagramRenderer(logger=self.logger)
        svg = renderer.render_svg(objects)
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(svg)
        self._emit({'out': args.out, 'objects': len(objects)})


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parse_args(argv)
    except UsageError as e:
        sys.stderr.write('usage error: {}\n'.format(e))
        return 1
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else 0

    logging.basicConfig(
        format='%(asctime)s %(threadName)s [%(name)s %(levelname)s] %(message)s',
        level=logging.DEBUG if args.verbose else logging.WARNING,
    )
    runner = CliRunner(degrees=args.degrees)
    try:
        runner.run(args)
    except (UsageError, ParseError, ValueError, OSError) as e:
        sys.stderr.write('usage error: {}\n'.format(e))
        return 1
    except TurnCalcError as e:
        sys.stderr.write('error: {}\n'.format(e))
        return 2
    return 0


if __name__ == '__main__':
    sys.exit(main())
