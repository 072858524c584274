"""
Turns: directed great-circle arcs on the sphere of turns, up to sliding.

A turn is stored canonically as (axis, length) with length in [0, pi]; arcs
are generated on demand. Composition is done with spherical geometry only
and is checked against quaternion multiplication in the tests.
"""
import math
import logging
from typing import Sequence, Tuple

import numpy as np

from .types import (
    NEAR_ZERO_NORM, NORM_TOL, CENTRAL_TOL, COAXIAL_TOL,
    NearZeroNormError, AntipodalPairError, DegenerateArcError,
)
from .su2 import Su2Gate, TWO_PI

logger = logging.getLogger("turncalc")

E1 = np.array([1.0, 0.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])
E1.setflags(write=False)
E3.setflags(write=False)


def unit_vector(v: Sequence[float]) -> np.ndarray:
    v = np.array(v, dtype=float)
    if v.shape != (3,):
        raise ValueError('a unit vector needs exactly 3 components')
    norm = float(np.linalg.norm(v))
    if norm <= NEAR_ZERO_NORM:
        raise NearZeroNormError(norm)
    v = v / norm
    v.setflags(write=False)
    return v


def rotate_vector(axis: np.ndarray, angle: float, v: np.ndarray) -> np.ndarray:
    """Right-handed rotation of v by angle about the unit vector axis."""
    c = math.cos(angle)
    s = math.sin(angle)
    return v * c + np.cross(axis, v) * s + axis * float(np.dot(axis, v)) * (1.0 - c)


class Turn(object):
    """T(axis, length): the gate cos(length) tau0 - i sin(length) axis.tau."""

    __slots__ = ('axis', 'length', 'central')

    def __init__(self, axis: Sequence[float], length: float):
        axis = unit_vector(axis)
        length = math.fmod(float(length), TWO_PI)
        if length < 0:
            length += TWO_PI
        # T(n, pi + a) = T(-n, pi - a)
        if length > math.pi:
            axis = -axis
            length = TWO_PI - length
        central = False
        if length <= CENTRAL_TOL:
            axis, length, central = E3, 0.0, True
        elif math.pi - length <= CENTRAL_TOL:
            axis, length, central = E3, math.pi, True
        axis.setflags(write=False)
        self.axis = axis
        self.length = length
        self.central = central

    @classmethod
    def null(cls) -> 'Turn':
        return cls(E3, 0.0)

    def gate(self) -> Su2Gate:
        return gate_from_turn(self)

    def reverse(self) -> 'Turn':
        return reverse(self)

    def approx_eq(self, other: 'Turn', tol: float = 1e-9) -> bool:
        """Equality of the gate images, which sidesteps the central-axis convention."""
        return gate_from_turn(self).exact_eq(gate_from_turn(other), tol)

    def to_json(self) -> dict:
        return {'axis': [float(x) for x in self.axis], 'length': self.length}

    @classmethod
    def from_json(cls, data: dict) -> 'Turn':
        return cls(data['axis'], data['length'])

    def __repr__(self) -> str:
        return 'Turn(axis=({:.9g}, {:.9g}, {:.9g}), length={:.9g}{})'.format(
            *self.axis, self.length, ', central' if self.central else '')


class Arc(object):
    """Directed great-circle arc from tail to head."""

    __slots__ = ('tail', 'head')

    def __init__(self, tail: Sequence[float], head: Sequence[float]):
        self.tail = unit_vector(tail)
        self.head = unit_vector(head)

    def turn(self, strict: bool = True) -> Turn:
        return turn_from_arc(self.tail, self.head, strict=strict)

    def length(self) -> float:
        return math.atan2(float(np.linalg.norm(np.cross(self.tail, self.head))),
                          float(np.dot(self.tail, self.head)))

    def to_json(self) -> dict:
        return {
            'tail': [float(x) for x in self.tail],
            'head': [float(x) for x in self.head],
        }

    @classmethod
    def from_json(cls, data: dict) -> 'Arc':
        return cls(data['tail'], data['head'])

    def __repr__(self) -> str:
        return 'Arc(tail=({:.9g}, {:.9g}, {:.9g}), head=({:.9g}, {:.9g}, {:.9g}))'.format(
            *self.tail, *self.head)


def turn_from_gate(u: Su2Gate) -> Turn:
    norm_a = float(np.linalg.norm(u.a))
    if norm_a <= CENTRAL_TOL:
        return Turn(E3, 0.0 if u.a0 > 0 else math.pi)
    return Turn(u.a / norm_a, math.atan2(norm_a, u.a0))


def gate_from_turn(t: Turn) -> Su2Gate:
    return Su2Gate(math.cos(t.length), math.sin(t.length) * t.axis)


def turn_from_arc(tail: Sequence[float], head: Sequence[float], strict: bool = True) -> Turn:
    """
    The turn with a0 = tail.head and a = tail x head.
    An antipodal pair stands for the central pi-turn but fixes no great
    circle: it raises AntipodalPairError unless strict is False.
    """
    tail = unit_vector(tail)
    head = unit_vector(head)
    dot = float(np.dot(tail, head))
    if 1.0 + dot < NORM_TOL:
        turn = Turn(E3, math.pi)
        if strict:
            raise AntipodalPairError(tail=tail, head=head, turn=turn)
        return turn
    cross = np.cross(tail, head)
    q = np.array([dot, cross[0], cross[1], cross[2]])
    q /= np.linalg.norm(q)
    return turn_from_gate(Su2Gate(q[0], q[1:]))


def representative_arc(t: Turn) -> Arc:
    """
    The arc of t whose tail sits on the equator of the sphere of turns.
    Rotator turns (axis along the pole) have the equator as great circle and
    anchor their tail at azimuth 0.
    """
    if t.central:
        return Arc(E1, E1 if t.length == 0.0 else -E1)
    c = np.cross(t.axis, E3)
    norm_c = float(np.linalg.norm(c))
    tail = E1 if norm_c <= COAXIAL_TOL else c / norm_c
    head = rotate_vector(t.axis, t.length, tail)
    return Arc(tail, head)


def slide_arc(arc: Arc, delta: float) -> Arc:
    """Rigidly slide the arc by delta along its own great circle."""
    normal = np.cross(arc.tail, arc.head)
    norm = float(np.linalg.norm(normal))
    if norm <= NEAR_ZERO_NORM:
        raise DegenerateArcError('tail and head are equal or antipodal')
    normal = normal / norm
    return Arc(rotate_vector(normal, delta, arc.tail), rotate_vector(normal, delta, arc.head))


def reverse(t: Turn) -> Turn:
    return Turn(-t.axis, t.length)


def _arc_composition(first: Turn, second: Turn, through: np.ndarray) -> Turn:
    # first ends and second starts at the common point of both great circles
    tail = rotate_vector(first.axis, -first.length, through)
    head = rotate_vector(second.axis, second.length, through)
    return turn_from_arc(tail, head, strict=False)


def compose_turns(first: Turn, second: Turn) -> Turn:
    """
    Sum of two turns, first then second, by the parallelogram rule on the
    sphere of turns. The gate of the result is gate(second) gate(first).
    """
    if first.central:
        if first.length == 0.0:
            return second
        return turn_from_gate(gate_from_turn(second).negate())
    if second.central:
        if second.length == 0.0:
            return first
        return turn_from_gate(gate_from_turn(first).negate())

    direction = 1.0 if float(np.dot(first.axis, second.axis)) >= 0 else -1.0
    # first x (second - s first) == first x second
    cross = np.cross(first.axis, second.axis - direction * first.axis)
    norm_cross = float(np.linalg.norm(cross))
    if norm_cross < COAXIAL_TOL:
        logger.debug('coaxial turns, adding lengths along the common axis')
        return Turn(first.axis, first.length + direction * second.length)

    through = cross / norm_cross
    result = _arc_composition(first, second, through)
    if logger.isEnabledFor(logging.DEBUG):
        other = _arc_composition(first, second, -through)
        discrepancy = float(np.linalg.norm(
            gate_from_turn(result).components - gate_from_turn(other).components))
        logger.debug('turn composition through the two intersections differs by {:.3e}'.format(discrepancy))
    return result


def compose_all(turns: Sequence[Turn]) -> Turn:
    result = Turn.null()
    for t in turns:
        result = compose_turns(result, t)
    return result


def so3_canonicalize(t: Turn) -> Turn:
    """Turns of length l and reversed turns of length pi - l share a rotation."""
    if t.length > 0.5 * math.pi:
        return Turn(-t.axis, math.pi - t.length)
    return t


def turn_sqrt(t: Turn) -> Turn:
    return Turn(t.axis, 0.5 * t.length)


def commutator_turn(v: Turn, u: Turn) -> Turn:
    """Geometric counterpart of commutator(v, u) = v^-1 u^-1 v u."""
    step = compose_turns(u, v)
    step = compose_turns(step, reverse(u))
    return compose_turns(step, reverse(v))


def turn_positional_coordinates(t: Turn) -> Tuple[float, float, float]:
    """(phi1, theta, phi2): tail at (pi/2, phi1) and head at (theta, phi2) of the representative arc."""
    arc = representative_arc(t)
    phi1 = math.atan2(arc.tail[1], arc.tail[0])
    theta = math.atan2(math.hypot(arc.head[0], arc.head[1]), arc.head[2])
    phi2 = math.atan2(arc.head[1], arc.head[0])
    return phi1, theta, phi2
