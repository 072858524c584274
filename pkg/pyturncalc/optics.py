"""
Jones matrices of retarders and rotators, and the identities relating them.

Stacks are always listed in the order light meets the elements; the matrix
product is read the other way round, so the last element is the leftmost
factor.
"""
import math
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .types import CentralGateError, NonPositiveInputError, OutOfRangeError
from .su2 import Su2Gate, EulerAngles, identity, multiply, TWO_PI, FOUR_PI, wrap_angle
from .turns import turn_from_gate, turn_positional_coordinates

logger = logging.getLogger("turncalc")

QWP = 'QWP'
HWP = 'HWP'
COMPENSATOR = 'COMPENSATOR'
ROTATOR = 'ROTATOR'
KINDS = (QWP, HWP, COMPENSATOR, ROTATOR)

QUARTER_PI = 0.25 * math.pi
HALF_PI = 0.5 * math.pi


def compensator(phi: float, eta: float) -> Su2Gate:
    """C_phi(eta): retardance eta, fast axis at phi."""
    s = math.sin(0.5 * eta)
    return Su2Gate(math.cos(0.5 * eta), (s * math.cos(2.0 * phi), s * math.sin(2.0 * phi), 0.0))


def qwp(phi: float) -> Su2Gate:
    return compensator(phi, HALF_PI)


def hwp(phi: float) -> Su2Gate:
    # -i (cos 2phi tau1 + sin 2phi tau2), kept free of cos(pi/2) round-off
    return Su2Gate(0.0, (math.cos(2.0 * phi), math.sin(2.0 * phi), 0.0))


def rotator(alpha: float) -> Su2Gate:
    """R(alpha) = exp(-i alpha/2 tau3); R(2pi) = -tau0."""
    return Su2Gate(math.cos(0.5 * alpha), (0.0, 0.0, math.sin(0.5 * alpha)))


def physical_rotation(phi: float) -> Su2Gate:
    """Rotating a component by phi conjugates it by exp(-i phi tau3) = R(2 phi)."""
    return rotator(2.0 * phi)


class PlateElement(object):
    """One optical component: a QWP, an HWP, a compensator or a rotator."""

    __slots__ = ('kind', 'orientation', 'retardance', 'rotation')

    def __init__(self, kind: str, orientation: float = 0.0, retardance: Optional[float] = None,
                 rotation: Optional[float] = None):
        kind = kind.upper()
        if kind not in KINDS:
            raise ValueError('kind should be one of {}'.format(', '.join(KINDS)))
        self.kind = kind
        self.orientation = 0.0
        self.retardance = None
        self.rotation = None
        if kind == ROTATOR:
            if rotation is None:
                raise ValueError('a rotator needs a rotation angle')
            self.rotation = wrap_angle(rotation, FOUR_PI)
            return
        if kind == COMPENSATOR:
            if retardance is None:
                raise ValueError('a compensator needs a retardance')
            # C_phi(eta) = C_{phi + pi/2}(4pi - eta) keeps the sign while folding eta into [0, 2pi]
            retardance = wrap_angle(retardance, FOUR_PI)
            if retardance > TWO_PI:
                retardance = FOUR_PI - retardance
                orientation += HALF_PI
            self.retardance = retardance
        self.orientation = wrap_angle(orientation, math.pi)

    @classmethod
    def quarter(cls, phi: float) -> 'PlateElement':
        return cls(QWP, phi)

    @classmethod
    def half(cls, phi: float) -> 'PlateElement':
        return cls(HWP, phi)

    @classmethod
    def plate(cls, phi: float, eta: float) -> 'PlateElement':
        return cls(COMPENSATOR, phi, retardance=eta)

    @classmethod
    def optical_rotator(cls, alpha: float) -> 'PlateElement':
        return cls(ROTATOR, rotation=alpha)

    def gate(self) -> Su2Gate:
        if self.kind == QWP:
            return qwp(self.orientation)
        if self.kind == HWP:
            return hwp(self.orientation)
        if self.kind == COMPENSATOR:
            return compensator(self.orientation, self.retardance)
        return rotator(self.rotation)

    def to_json(self) -> dict:
        if self.kind == ROTATOR:
            return {'kind': self.kind, 'alpha': self.rotation}
        data = {'kind': self.kind, 'phi': self.orientation}
        if self.kind == COMPENSATOR:
            data['eta'] = self.retardance
        return data

    @classmethod
    def from_json(cls, data: dict) -> 'PlateElement':
        kind = data['kind'].upper()
        if kind == ROTATOR:
            return cls(kind, rotation=data['alpha'])
        return cls(kind, data.get('phi', 0.0), retardance=data.get('eta'))

    def __repr__(self) -> str:
        if self.kind == ROTATOR:
            return 'PlateElement(ROTATOR, alpha={:.9g})'.format(self.rotation)
        if self.kind == COMPENSATOR:
            return 'PlateElement(COMPENSATOR, phi={:.9g}, eta={:.9g})'.format(self.orientation, self.retardance)
        return 'PlateElement({}, phi={:.9g})'.format(self.kind, self.orientation)


class ElementStack(object):
    """Components in the order light meets them."""

    __slots__ = ('elements',)

    def __init__(self, elements: Sequence[PlateElement] = ()):
        self.elements = tuple(elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def matrix_order(self) -> List[PlateElement]:
        return list(reversed(self.elements))

    def gate(self) -> Su2Gate:
        return evaluate_stack(self)

    def to_json(self) -> dict:
        return {'elements': [e.to_json() for e in self.elements]}

    @classmethod
    def from_json(cls, data: dict) -> 'ElementStack':
        return cls([PlateElement.from_json(e) for e in data['elements']])

    def __repr__(self) -> str:
        return 'ElementStack({})'.format(', '.join(repr(e) for e in self.elements))


def evaluate_stack(stack: ElementStack) -> Su2Gate:
    result = identity()
    for element in stack:
        result = multiply(element.gate(), result)
    return result


def retardance_from_physical(delta_n: float, thickness: float, wavelength: float) -> float:
    """eta = delta_n * thickness / wavelength, reduced mod 2pi."""
    if wavelength <= 0:
        raise NonPositiveInputError('wavelength', wavelength)
    if delta_n < 0:
        raise NonPositiveInputError('delta_n', delta_n)
    if thickness < 0:
        raise NonPositiveInputError('thickness', thickness)
    return wrap_angle(delta_n * thickness / wavelength, TWO_PI)


def hq_commute(phi_h: float, phi_q: float) -> float:
    """Angle of the QWP after moving it across the HWP: H_h Q_q = Q_{2h - q} H_h."""
    return wrap_angle(2.0 * phi_h - phi_q, math.pi)


def hwp_pair_rotation(phi1: float, phi2: float) -> float:
    """H_phi1 H_phi2 = R(2pi + 4 (phi1 - phi2))."""
    return wrap_angle(TWO_PI + 4.0 * (phi1 - phi2), FOUR_PI)


def absorb_rotation(phi: float, alpha: float, side: str = 'post') -> float:
    """
    Fold a rotator into an HWP. 'post' means the rotator comes after the plate
    on the beam (R(alpha) H_phi = H_{phi + alpha/4}); 'pre' means before it
    (H_phi R(alpha) = H_{phi - alpha/4}).
    """
    if side == 'post':
        return wrap_angle(phi + 0.25 * alpha, math.pi)
    if side == 'pre':
        return wrap_angle(phi - 0.25 * alpha, math.pi)
    raise ValueError("side should be 'pre' or 'post'")


def rotator_to_birefringence(phi: float, eta: float) -> ElementStack:
    """Two QWPs around a rotator R(eta) act as the plate C_phi(eta)."""
    return ElementStack([
        PlateElement.quarter(-QUARTER_PI + phi),
        PlateElement.optical_rotator(eta),
        PlateElement.quarter(QUARTER_PI + phi),
    ])


def variable_rotator_stack(alpha: float) -> ElementStack:
    """Two HWPs realizing R(alpha)."""
    return ElementStack([
        PlateElement.half(0.0),
        PlateElement.half(0.25 * (alpha - TWO_PI)),
    ])


def from_modified_euler(e: EulerAngles) -> Tuple[ElementStack, ElementStack]:
    """
    u(xi, eta, zeta) as a variable plate after a rotator, C_{xi/2}(eta) R(xi + zeta),
    and as a rotator after a plate, R(xi + zeta) C_{-zeta/2}(eta).
    """
    spin = e.xi + e.zeta
    rotator_first = ElementStack([
        PlateElement.optical_rotator(spin),
        PlateElement.plate(0.5 * e.xi, e.eta),
    ])
    plate_first = ElementStack([
        PlateElement.plate(-0.5 * e.zeta, e.eta),
        PlateElement.optical_rotator(spin),
    ])
    return rotator_first, plate_first


def rotate_element(element: PlateElement, phi: float) -> PlateElement:
    """Physically rotate a component by phi about the beam."""
    if element.kind == ROTATOR:
        return PlateElement.optical_rotator(element.rotation)
    return PlateElement(element.kind, element.orientation + phi, retardance=element.retardance)


def classify_stack_turn(u: Su2Gate, tol: float = 1e-9) -> str:
    """
    'null' for +/- identity, 'rotator' for turns along the equator of the
    sphere of turns, 'plate' for turns through its poles, 'general' otherwise.
    """
    t = turn_from_gate(u)
    if t.central:
        return 'null'
    axial = abs(float(t.axis[2]))
    if axial >= 1.0 - tol:
        return 'rotator'
    if axial <= tol:
        return 'plate'
    return 'general'


class PositionalDecomposition(object):
    """u = C R and u = R C' read from the representative arc of the turn of u."""

    def __init__(self, rotation: float, compensator_after: PlateElement,
                 compensator_before: PlateElement, degenerate: bool):
        self.rotation = rotation
        # left factor of u = C R
        self.compensator_after = compensator_after
        # right factor of u = R C'
        self.compensator_before = compensator_before
        # set for pure rotators, whose compensator part is trivial
        self.degenerate = degenerate

    def rotator_first(self) -> ElementStack:
        return ElementStack([PlateElement.optical_rotator(self.rotation), self.compensator_after])

    def compensator_first(self) -> ElementStack:
        return ElementStack([self.compensator_before, PlateElement.optical_rotator(self.rotation)])

    def to_json(self) -> dict:
        return {
            'rotator_alpha': self.rotation,
            'rotator_first': self.rotator_first().to_json(),
            'compensator_first': self.compensator_first().to_json(),
            'degenerate': self.degenerate,
        }


def turn_positional_decomposition(u: Su2Gate) -> PositionalDecomposition:
    t = turn_from_gate(u)
    if t.central:
        raise CentralGateError()
    phi1, theta, phi2 = turn_positional_coordinates(t)
    eta = math.pi - 2.0 * theta
    degenerate = abs(eta) <= 1e-12
    if degenerate:
        logger.debug('turn lies on the equator, compensator part is trivial')
    return PositionalDecomposition(
        rotation=wrap_angle(2.0 * phi2 - 2.0 * phi1, FOUR_PI),
        compensator_after=PlateElement.plate(-QUARTER_PI + 0.5 * phi2, eta),
        compensator_before=PlateElement.plate(-QUARTER_PI + phi1 - 0.5 * phi2, eta),
        degenerate=degenerate,
    )


def euler_positional_dictionary(theta: float, phi1: float, phi2: float) -> EulerAngles:
    """Euler angles of the turn whose arc runs from (pi/2, phi1) to (theta, phi2)."""
    if theta < 0.0 or theta > math.pi:
        raise OutOfRangeError('theta', theta, 0.0, math.pi)
    return EulerAngles(-HALF_PI + phi2, math.pi - 2.0 * theta, HALF_PI + phi2 - 2.0 * phi1)


def hq_family_member(u: Su2Gate, tol: float = 1e-8) -> bool:
    """
    True when u = H_h Q_q for some plate angles. Those products are exactly the
    gates with a0^2 + a3^2 = 1/2: turns from a 45 degree latitude circle to the
    equator of the sphere of turns.
    """
    return abs(u.a0 * u.a0 + float(u.a[2]) ** 2 - 0.5) <= tol


def hq_family_member_scan(u: Su2Gate, resolution: float = 1e-3, chunk: int = 128) -> bool:
    """Brute-force grid search over (phi_h, phi_q) in [0, pi)^2."""
    grid = np.arange(0.0, math.pi, resolution)
    target = u.components
    # half a grid cell at speed 2 along phi_h and sqrt2 along phi_q
    threshold = 0.5 * (2.0 + math.sqrt(2.0)) * resolution
    scale = math.sqrt(0.5)
    for start in range(0, len(grid), chunk):
        h = 2.0 * grid[start:start + chunk, None]
        q = 2.0 * grid[None, :]
        a0 = -scale * np.cos(h - q)
        a1 = scale * np.cos(h) * np.ones_like(q)
        a2 = scale * np.sin(h) * np.ones_like(q)
        a3 = scale * np.sin(q - h)
        distance = np.sqrt((a0 - target[0]) ** 2 + (a1 - target[1]) ** 2
                           + (a2 - target[2]) ** 2 + (a3 - target[3]) ** 2)
        if float(distance.min()) <= threshold:
            return True
    return False
