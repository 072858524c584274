"""
Geometric phase on the Poincare sphere.

Oriented areas are positive for vertices listed counterclockwise as seen
from outside the sphere, which is the sign of Im tr(rho1 rho2 rho3).
"""
import math
import logging
from typing import List, Sequence

import numpy as np

from .types import (
    ANTIPODAL_TOL, NORM_TOL,
    DegenerateArcError, DegenerateTripleError, OrthogonalStatesError, AntipodalTransportError,
)
from .turns import Turn, unit_vector, turn_from_arc, gate_from_turn, compose_all
from .poincare import JonesVector, inner_product, point_from_jones, apply_gate_to_jones

logger = logging.getLogger("turncalc")

FOUR_PI = 4.0 * math.pi


def _same_or_antipodal(a: np.ndarray, b: np.ndarray, tol: float = ANTIPODAL_TOL) -> bool:
    return float(np.linalg.norm(a - b)) <= tol or float(np.linalg.norm(a + b)) <= tol


class SphericalPolygon(object):
    """Closed geodesic polygon; the vertex order fixes the orientation."""

    __slots__ = ('vertices',)

    def __init__(self, vertices: Sequence[Sequence[float]]):
        if len(vertices) < 3:
            raise ValueError('a spherical polygon needs at least 3 vertices')
        vs = [unit_vector(v) for v in vertices]
        for k, v in enumerate(vs):
            w = vs[(k + 1) % len(vs)]
            if _same_or_antipodal(v, w):
                raise DegenerateTripleError('vertices {} and {} are equal or antipodal'.format(k, (k + 1) % len(vs)))
        self.vertices = tuple(vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def sides(self):
        n = len(self.vertices)
        return [(self.vertices[k], self.vertices[(k + 1) % n]) for k in range(n)]

    def reversed(self) -> 'SphericalPolygon':
        return SphericalPolygon(list(reversed(self.vertices)))

    def to_json(self) -> dict:
        return {'vertices': [[float(x) for x in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> 'SphericalPolygon':
        return cls(data['vertices'])

    def __repr__(self) -> str:
        return 'SphericalPolygon({} vertices)'.format(len(self.vertices))


def in_phase(e1: JonesVector, e2: JonesVector, tol: float = 1e-9) -> bool:
    """Pancharatnam's criterion: the overlap is real and positive."""
    overlap = inner_product(e1, e2)
    modulus = abs(overlap)
    if modulus <= tol:
        raise OrthogonalStatesError(modulus)
    return abs(overlap.imag) <= tol * modulus and overlap.real > 0


def bargmann3(m1: Sequence[float], m2: Sequence[float], m3: Sequence[float]) -> float:
    """2 arg tr(rho1 rho2 rho3), in (-2pi, 2pi]."""
    m1, m2, m3 = unit_vector(m1), unit_vector(m2), unit_vector(m3)
    for a, b in ((m1, m2), (m2, m3), (m3, m1)):
        if _same_or_antipodal(a, b):
            raise DegenerateTripleError('two of the three points are equal or antipodal')
    re = 1.0 + float(np.dot(m1, m2) + np.dot(m2, m3) + np.dot(m3, m1))
    im = float(np.dot(m1, np.cross(m2, m3)))
    return 2.0 * math.atan2(im, re)


def bargmann_n(poly: SphericalPolygon) -> float:
    """Fan sum of triangle invariants anchored at the first vertex."""
    v = poly.vertices
    total = 0.0
    for k in range(1, len(v) - 1):
        if _same_or_antipodal(v[0], v[k]) or _same_or_antipodal(v[0], v[k + 1]):
            raise DegenerateTripleError('fan triangle through vertex {} is degenerate'.format(k))
        total += bargmann3(v[0], v[k], v[k + 1])
    return total


def bargmann_from_jones(vectors: Sequence[JonesVector]) -> float:
    """2 arg of the cyclic product of overlaps; every vector enters as bra and ket."""
    if len(vectors) < 2:
        raise ValueError('at least two states are needed')
    product = complex(1.0, 0.0)
    for k, e in enumerate(vectors):
        product *= inner_product(e, vectors[(k + 1) % len(vectors)])
    if abs(product) <= NORM_TOL:
        raise OrthogonalStatesError(abs(product))
    return 2.0 * math.atan2(product.imag, product.real)


def _tangent(v: np.ndarray, towards: np.ndarray) -> np.ndarray:
    t = towards - float(np.dot(towards, v)) * v
    return t / np.linalg.norm(t)


def polygon_area(poly: SphericalPolygon) -> float:
    """
    Oriented area by Gauss-Bonnet: the enclosed area on the left of the
    boundary is 2pi minus the sum of the signed turning angles. Areas above
    2pi are read as clockwise polygons of negative area.
    """
    v = poly.vertices
    n = len(v)
    normal = np.cross(v[0], v[1])
    normal = normal / np.linalg.norm(normal)
    if all(abs(float(np.dot(w, normal))) < NORM_TOL for w in v):
        return 0.0
    turning = 0.0
    for k in range(n):
        here = v[k]
        t_in = -_tangent(here, v[k - 1])
        t_out = _tangent(here, v[(k + 1) % n])
        turning += math.atan2(float(np.dot(here, np.cross(t_in, t_out))), float(np.dot(t_in, t_out)))
    enclosed = 2.0 * math.pi - turning
    if enclosed <= 2.0 * math.pi:
        return enclosed
    return -(FOUR_PI - enclosed)


def geodesic_midpoint(a: Sequence[float], b: Sequence[float]) -> np.ndarray:
    a, b = unit_vector(a), unit_vector(b)
    s = a + b
    norm = float(np.linalg.norm(s))
    if norm <= ANTIPODAL_TOL:
        raise DegenerateArcError('midpoint of antipodal points is undefined')
    return s / norm


def half_side_turns(poly: SphericalPolygon) -> List[Turn]:
    return [turn_from_arc(a, geodesic_midpoint(a, b)) for a, b in poly.sides()]


def midpoint_turn(poly: SphericalPolygon) -> Turn:
    """Sum of the half-side turns; equals T(first vertex, area / 2)."""
    return compose_all(half_side_turns(poly))


def in_phase_transport(e: JonesVector, target: Sequence[float]) -> JonesVector:
    """Carry e to the state at target along the geodesic, keeping it in phase."""
    here = point_from_jones(e)
    target = unit_vector(target)
    if float(np.linalg.norm(here + target)) <= ANTIPODAL_TOL:
        raise AntipodalTransportError()
    if float(np.linalg.norm(here - target)) <= ANTIPODAL_TOL:
        return e
    turn = turn_from_arc(here, geodesic_midpoint(here, target))
    return apply_gate_to_jones(gate_from_turn(turn), e)


def transport_around(e: JonesVector, poly: SphericalPolygon) -> JonesVector:
    """
    In-phase transport through every vertex and back to the first one.
    e must sit at the first vertex; the result differs from e by the phase
    exp(-i area / 2).
    """
    start = poly.vertices[0]
    if float(np.linalg.norm(point_from_jones(e) - start)) > 1e-9:
        raise ValueError('the state should sit at the first vertex of the polygon')
    current = e
    for vertex in list(poly.vertices[1:]) + [start]:
        current = in_phase_transport(current, vertex)
    return current


def closing_phase(e: JonesVector, poly: SphericalPolygon) -> float:
    """arg <e, transported e> after one circuit."""
    overlap = inner_product(e, transport_around(e, poly))
    return math.atan2(overlap.imag, overlap.real)
