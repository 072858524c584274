"""
Qubit states on the Poincare sphere, as Jones vectors and as density matrices.

Coordinates follow the tau-convention: m_k = tr(rho tau_k), so the poles are
the circular polarizations and the equator holds the linear ones. theta is
measured from +z and phi from +x.
"""
import math
import logging
from typing import Sequence, Tuple

import numpy as np

from .types import NEAR_ZERO_NORM, NORM_TOL, NearZeroNormError, OutOfRangeError
from .su2 import Su2Gate, TAU0, TAU
from .turns import Turn, E3, unit_vector

logger = logging.getLogger("turncalc")

SQRT_HALF = math.sqrt(0.5)


class PoincarePoint(object):
    """Direction on the sphere plus a radius, the degree of polarization."""

    __slots__ = ('direction', 'radius')

    def __init__(self, direction: Sequence[float], radius: float = 1.0):
        if radius < 0.0 or radius > 1.0:
            raise OutOfRangeError('radius', radius, 0.0, 1.0)
        self.direction = unit_vector(direction)
        self.radius = float(radius)

    def is_pure(self, tol: float = 1e-12) -> bool:
        return abs(self.radius - 1.0) <= tol

    def polar_coordinates(self) -> Tuple[float, float]:
        """(theta, phi) of the direction."""
        m = self.direction
        return math.acos(max(-1.0, min(1.0, float(m[2])))), math.atan2(m[1], m[0])

    def to_json(self) -> dict:
        return {'point': [float(x) for x in self.direction], 'r': self.radius}

    @classmethod
    def from_json(cls, data: dict) -> 'PoincarePoint':
        return cls(data['point'], data.get('r', 1.0))

    def __repr__(self) -> str:
        return 'PoincarePoint(({:.9g}, {:.9g}, {:.9g}), r={:.9g})'.format(*self.direction, self.radius)


class JonesVector(object):
    """Normalized pair of complex transverse amplitudes."""

    __slots__ = ('_e',)

    def __init__(self, e1: complex, e2: complex):
        e = np.array([e1, e2], dtype=complex)
        norm = float(np.linalg.norm(e))
        if norm <= NEAR_ZERO_NORM:
            raise NearZeroNormError(norm)
        if abs(norm - 1.0) > NORM_TOL and logger.isEnabledFor(logging.DEBUG):
            logger.debug('normalizing Jones vector with norm {:.12f}'.format(norm))
        e = e / norm
        e.setflags(write=False)
        self._e = e

    @classmethod
    def from_array(cls, e: Sequence[complex]) -> 'JonesVector':
        return cls(e[0], e[1])

    @property
    def e1(self) -> complex:
        return complex(self._e[0])

    @property
    def e2(self) -> complex:
        return complex(self._e[1])

    def as_array(self) -> np.ndarray:
        return self._e

    def with_phase(self, gamma: float) -> 'JonesVector':
        return JonesVector.from_array(np.exp(1j * gamma) * self._e)

    def to_json(self) -> dict:
        return {'jones': [[float(c.real), float(c.imag)] for c in self._e]}

    @classmethod
    def from_json(cls, data: dict) -> 'JonesVector':
        (r1, i1), (r2, i2) = data['jones']
        return cls(complex(r1, i1), complex(r2, i2))

    def __repr__(self) -> str:
        return 'JonesVector({:.9g}, {:.9g})'.format(self.e1, self.e2)


class DensityMatrix(object):
    """Hermitian, unit-trace, positive 2x2 matrix."""

    __slots__ = ('matrix',)

    def __init__(self, matrix, tol: float = 1e-12):
        m = np.array(matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError('density matrix should be 2x2')
        if float(np.max(np.abs(m - m.conj().T))) > tol:
            raise ValueError('density matrix should be Hermitian')
        if abs(complex(np.trace(m)) - 1.0) > tol:
            raise ValueError('density matrix should have unit trace')
        if float(np.min(np.linalg.eigvalsh(m))) < -tol:
            raise ValueError('density matrix should be positive semi-definite')
        m.setflags(write=False)
        self.matrix = m

    def is_pure(self, tol: float = 1e-10) -> bool:
        return float(np.max(np.abs(self.matrix @ self.matrix - self.matrix))) <= tol

    def __repr__(self) -> str:
        return 'DensityMatrix({})'.format(np.array2string(self.matrix, precision=9))


class Rotation3(object):
    """Proper orthogonal 3x3 matrix, the adjoint image of a gate."""

    __slots__ = ('matrix',)

    def __init__(self, matrix, tol: float = 1e-10):
        m = np.array(matrix, dtype=float)
        if m.shape != (3, 3):
            raise ValueError('rotation matrix should be 3x3')
        if float(np.max(np.abs(m.T @ m - np.eye(3)))) > tol:
            raise ValueError('rotation matrix should be orthogonal')
        if abs(float(np.linalg.det(m)) - 1.0) > tol:
            raise ValueError('rotation matrix should have determinant +1')
        m.setflags(write=False)
        self.matrix = m

    def apply(self, v: Sequence[float]) -> np.ndarray:
        return self.matrix @ np.asarray(v, dtype=float)

    def __matmul__(self, other: 'Rotation3') -> 'Rotation3':
        return Rotation3(self.matrix @ other.matrix)

    def __repr__(self) -> str:
        return 'Rotation3({})'.format(np.array2string(self.matrix, precision=9))


def jones_from_point(m: Sequence[float]) -> JonesVector:
    """Jones vector of a pure state, with the global phase of the closed-form expression."""
    theta, phi = PoincarePoint(m).polar_coordinates()
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    lead = np.exp(-0.5j * phi) * c
    trail = np.exp(0.5j * phi) * s
    return JonesVector(SQRT_HALF * (lead + trail), SQRT_HALF * 1j * (lead - trail))


def _bloch_components(rho: np.ndarray) -> np.ndarray:
    return np.array([float(np.trace(rho @ t).real) for t in TAU])


def point_from_jones(e: JonesVector) -> np.ndarray:
    v = e.as_array()
    rho = np.outer(v, v.conj())
    return unit_vector(_bloch_components(rho))


def density_from_point(p: PoincarePoint) -> DensityMatrix:
    m = p.radius * p.direction
    return DensityMatrix(0.5 * (TAU0 + m[0] * TAU[0] + m[1] * TAU[1] + m[2] * TAU[2]))


def density_from_jones(e: JonesVector) -> DensityMatrix:
    v = e.as_array()
    return DensityMatrix(np.outer(v, v.conj()))


def point_from_density(rho: DensityMatrix) -> PoincarePoint:
    m = _bloch_components(rho.matrix)
    r = float(np.linalg.norm(m))
    if r <= NEAR_ZERO_NORM:
        # maximally mixed: the direction carries no information
        return PoincarePoint(E3, 0.0)
    return PoincarePoint(m / r, min(r, 1.0))


def entropy(r: float) -> float:
    """Von Neumann entropy in bits of a state at distance r from the centre."""
    if r < 0.0 or r > 1.0:
        raise OutOfRangeError('r', r, 0.0, 1.0)
    p = np.array([0.5 * (1.0 + r), 0.5 * (1.0 - r)])
    p = p[p > 0.0]
    return float(-np.sum(p * np.log2(p))) + 0.0


def apply_turn(t: Turn, m: Sequence[float]) -> np.ndarray:
    """Rotate m by twice the turn length about the turn axis."""
    m = np.asarray(m, dtype=float)
    n = t.axis
    along = float(np.dot(m, n)) * n
    double = 2.0 * t.length
    return along + math.cos(double) * (m - along) + math.sin(double) * np.cross(n, m)


def apply_turn_to_point(t: Turn, p: PoincarePoint) -> PoincarePoint:
    return PoincarePoint(apply_turn(t, p.direction), p.radius)


def so3_image(u: Su2Gate) -> Rotation3:
    w = u.a0
    v = u.a
    skew = np.array([
        [0.0, -v[2], v[1]],
        [v[2], 0.0, -v[0]],
        [-v[1], v[0], 0.0],
    ])
    return Rotation3((w * w - float(np.dot(v, v))) * np.eye(3) + 2.0 * np.outer(v, v) + 2.0 * w * skew)


def inner_product(e1: JonesVector, e2: JonesVector) -> complex:
    """Conjugate-linear in the first argument."""
    return complex(np.vdot(e1.as_array(), e2.as_array()))


def apply_gate_to_jones(u: Su2Gate, e: JonesVector) -> JonesVector:
    return JonesVector.from_array(u.to_matrix() @ e.as_array())


def linear_polarization(alpha: float) -> JonesVector:
    """Linear polarization at angle alpha from x1; sits at (cos 2alpha, sin 2alpha, 0)."""
    return JonesVector(math.cos(alpha), math.sin(alpha))


def jones_ratio(m: Sequence[float]) -> complex:
    """z = E2/E1 of the state at m, infinite at (-1, 0, 0)."""
    m = unit_vector(m)
    denominator = 1.0 + float(m[0])
    if denominator <= NORM_TOL:
        return complex(math.inf, 0.0)
    return complex(m[1], m[2]) / denominator
