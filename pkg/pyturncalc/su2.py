"""
Exact SU(2) arithmetic in the tau-convention.

A gate is stored as its homogeneous Euler parameters (a0, a1, a2, a3), a unit
4-vector with u = a0 tau0 - i a.tau. The 2x2 complex matrix is a derived view.
The tau matrices are a cyclic relabelling of the Pauli matrices:
tau1 = sigma3, tau2 = sigma1, tau3 = sigma2.
"""
import math
import logging
from typing import Iterable, List, Sequence

import numpy as np

from .types import (
    NORM_TOL, NEAR_ZERO_NORM, NORM_DRIFT_LIMIT, CENTRAL_TOL,
    NearZeroNormError, NormDriftError, NonUnitaryMatrixError,
)

logger = logging.getLogger("turncalc")

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


def _frozen(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


TAU0 = _frozen([[1, 0], [0, 1]], dtype=complex)
TAU1 = _frozen([[1, 0], [0, -1]], dtype=complex)
TAU2 = _frozen([[0, 1], [1, 0]], dtype=complex)
TAU3 = _frozen([[0, -1j], [1j, 0]], dtype=complex)
TAU = (TAU1, TAU2, TAU3)


def wrap_angle(value: float, period: float) -> float:
    """Reduce value into [0, period)."""
    r = math.fmod(value, period)
    if r < 0:
        r += period
    if r >= period:
        r = 0.0
    return r


class Su2Gate(object):
    """Unit quaternion (a0, a) housing the homogeneous Euler parameters of a gate."""

    __slots__ = ('_q',)

    def __init__(self, a0: float, a: Sequence[float]):
        q = np.array([a0, a[0], a[1], a[2]], dtype=float)
        norm = float(np.linalg.norm(q))
        if abs(norm - 1.0) > NORM_DRIFT_LIMIT:
            raise NormDriftError(norm)
        if abs(norm - 1.0) > NORM_TOL and logger.isEnabledFor(logging.DEBUG):
            logger.debug('renormalizing gate with norm drift {:.3e}'.format(norm - 1.0))
        q = q / norm
        q.setflags(write=False)
        self._q = q

    @property
    def a0(self) -> float:
        return float(self._q[0])

    @property
    def a(self) -> np.ndarray:
        return self._q[1:]

    @property
    def components(self) -> np.ndarray:
        return self._q

    def to_matrix(self) -> np.ndarray:
        a0, a1, a2, a3 = self._q
        return np.array([
            [a0 - 1j * a1, -1j * a2 - a3],
            [-1j * a2 + a3, a0 + 1j * a1],
        ], dtype=complex)

    def multiply(self, right: 'Su2Gate') -> 'Su2Gate':
        return multiply(self, right)

    def inverse(self) -> 'Su2Gate':
        return inverse(self)

    def negate(self) -> 'Su2Gate':
        return Su2Gate(-self._q[0], -self._q[1:])

    def trace(self) -> float:
        return trace(self)

    def is_central(self, tol: float = CENTRAL_TOL) -> bool:
        return float(np.linalg.norm(self._q[1:])) <= tol

    def exact_eq(self, other: 'Su2Gate', tol: float = 1e-10) -> bool:
        return exact_eq(self, other, tol)

    def projective_eq(self, other: 'Su2Gate', tol: float = 1e-10) -> bool:
        return projective_eq(self, other, tol)

    def to_json(self) -> List[float]:
        return [float(x) for x in self._q]

    @classmethod
    def from_json(cls, data: Sequence[float]) -> 'Su2Gate':
        if len(data) != 4:
            raise ValueError('gate JSON should be an array [a0, a1, a2, a3]')
        return gate_from_components(data[0], data[1:])

    def __repr__(self) -> str:
        return 'Su2Gate(a0={:.9g}, a=({:.9g}, {:.9g}, {:.9g}))'.format(*self._q)


class AxisAngle(object):
    """u = cos(angle/2) tau0 - i sin(angle/2) axis.tau, angle in [0, 2pi]."""

    def __init__(self, axis: Sequence[float], angle: float, degenerate: bool = False):
        axis = np.array(axis, dtype=float)
        norm = float(np.linalg.norm(axis))
        if norm <= NEAR_ZERO_NORM:
            raise NearZeroNormError(norm)
        axis = axis / norm
        axis.setflags(write=False)
        self.axis = axis
        self.angle = float(angle)
        self.degenerate = degenerate

    def to_json(self) -> dict:
        return {'axis': [float(x) for x in self.axis], 'angle': self.angle}

    def __repr__(self) -> str:
        return 'AxisAngle(axis=({:.9g}, {:.9g}, {:.9g}), angle={:.9g}{})'.format(
            *self.axis, self.angle, ', degenerate' if self.degenerate else '')


class EulerAngles(object):
    """u = exp(-i xi/2 tau3) exp(-i eta/2 tau1) exp(-i zeta/2 tau3)."""

    def __init__(self, xi: float, eta: float, zeta: float):
        self.xi = float(xi)
        self.eta = float(eta)
        self.zeta = float(zeta)

    def as_tuple(self):
        return (self.xi, self.eta, self.zeta)

    def to_json(self) -> List[float]:
        return [self.xi, self.eta, self.zeta]

    def __repr__(self) -> str:
        return 'EulerAngles(xi={:.9g}, eta={:.9g}, zeta={:.9g})'.format(self.xi, self.eta, self.zeta)


def gate_from_components(a0: float, a: Sequence[float]) -> Su2Gate:
    q = np.array([a0, a[0], a[1], a[2]], dtype=float)
    norm = float(np.linalg.norm(q))
    if norm <= NEAR_ZERO_NORM:
        raise NearZeroNormError(norm)
    q = q / norm
    return Su2Gate(q[0], q[1:])


def identity() -> Su2Gate:
    return Su2Gate(1.0, (0.0, 0.0, 0.0))


def multiply(left: Su2Gate, right: Su2Gate) -> Su2Gate:
    a0, a = left.a0, left.a
    b0, b = right.a0, right.a
    c0 = a0 * b0 - float(np.dot(a, b))
    c = a0 * b + b0 * a + np.cross(a, b)
    return Su2Gate(c0, c)


def multiply_all(gates: Iterable[Su2Gate]) -> Su2Gate:
    """Product of gates written left to right as matrix factors."""
    result = identity()
    for g in gates:
        result = multiply(result, g)
    return result


def inverse(u: Su2Gate) -> Su2Gate:
    return Su2Gate(u.a0, -u.a)


def commutator(v: Su2Gate, u: Su2Gate) -> Su2Gate:
    """[v, u] = v^-1 u^-1 v u."""
    return multiply(multiply(multiply(inverse(v), inverse(u)), v), u)


def trace(u: Su2Gate) -> float:
    return 2.0 * u.a0


def to_matrix(u: Su2Gate) -> np.ndarray:
    return u.to_matrix()


def exact_eq(u: Su2Gate, v: Su2Gate, tol: float = 1e-10) -> bool:
    return float(np.linalg.norm(u.components - v.components)) <= tol


def projective_eq(u: Su2Gate, v: Su2Gate, tol: float = 1e-10) -> bool:
    d_plus = float(np.linalg.norm(u.components - v.components))
    d_minus = float(np.linalg.norm(u.components + v.components))
    return min(d_plus, d_minus) <= tol


def relative_sign(u: Su2Gate, v: Su2Gate) -> int:
    """+1 when u is closer to v, -1 when u is closer to -v."""
    return 1 if float(np.dot(u.components, v.components)) >= 0 else -1


def to_axis_angle(u: Su2Gate) -> AxisAngle:
    norm_a = float(np.linalg.norm(u.a))
    if norm_a <= CENTRAL_TOL:
        angle = 0.0 if u.a0 > 0 else TWO_PI
        return AxisAngle((0.0, 0.0, 1.0), angle, degenerate=True)
    angle = 2.0 * math.atan2(norm_a, u.a0)
    return AxisAngle(u.a / norm_a, angle)


def from_axis_angle(aa: AxisAngle) -> Su2Gate:
    half = 0.5 * aa.angle
    return Su2Gate(math.cos(half), math.sin(half) * aa.axis)


def from_euler(e: EulerAngles) -> Su2Gate:
    """Product of the three exponential factors, in closed form."""
    half_sum = 0.5 * (e.xi + e.zeta)
    half_diff = 0.5 * (e.xi - e.zeta)
    c = math.cos(0.5 * e.eta)
    s = math.sin(0.5 * e.eta)
    return Su2Gate(
        c * math.cos(half_sum),
        (s * math.cos(half_diff), s * math.sin(half_diff), c * math.sin(half_sum)),
    )


def to_euler(u: Su2Gate, gimbal_tol: float = 1e-12) -> EulerAngles:
    """
    Invert from_euler with xi in [0, 4pi), eta in [0, pi], zeta in [0, 2pi).
    xi needs the doubled range for the round trip to be sign-exact.
    At eta in {0, pi} only xi +/- zeta is determined and zeta is set to 0.
    """
    a0, (a1, a2, a3) = u.a0, u.a
    c = math.hypot(a0, a3)
    s = math.hypot(a1, a2)
    eta = 2.0 * math.atan2(s, c)
    if s <= gimbal_tol:
        logger.debug('gimbal degeneracy at eta = 0, setting zeta = 0')
        return EulerAngles(wrap_angle(2.0 * math.atan2(a3, a0), FOUR_PI), 0.0, 0.0)
    if c <= gimbal_tol:
        logger.debug('gimbal degeneracy at eta = pi, setting zeta = 0')
        return EulerAngles(wrap_angle(2.0 * math.atan2(a2, a1), FOUR_PI), math.pi, 0.0)
    half_sum = math.atan2(a3, a0)
    half_diff = math.atan2(a2, a1)
    zeta_raw = half_sum - half_diff
    xi_raw = half_sum + half_diff
    # shifting xi and zeta together by 2pi leaves the gate unchanged
    k = math.floor(zeta_raw / TWO_PI)
    zeta = zeta_raw - k * TWO_PI
    if zeta >= TWO_PI:
        zeta -= TWO_PI
        k += 1
    elif zeta < 0:
        zeta += TWO_PI
        k -= 1
    xi = wrap_angle(xi_raw - k * TWO_PI, FOUR_PI)
    return EulerAngles(xi, eta, zeta)


def unitarity_deviation(m: np.ndarray) -> float:
    m = np.asarray(m, dtype=complex)
    return float(np.linalg.norm(m.conj().T @ m - np.eye(2)))


def gate_from_matrix(m, canonical_branch: bool = True, unitary_tol: float = 1e-8) -> Su2Gate:
    """
    Project a 2x2 unitary onto SU(2) by dividing out det^(1/2).
    With canonical_branch the sign is fixed so that a0 >= 0 (ties broken on
    a1 > 0, then a2, then a3); without it an SU(2) input is read sign-exactly.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError('matrix should be 2x2')
    deviation = unitarity_deviation(m)
    if deviation > unitary_tol:
        raise NonUnitaryMatrixError(deviation)
    det = complex(np.linalg.det(m))
    if abs(det - 1.0) > unitary_tol or canonical_branch:
        m = m / np.sqrt(det)
    a0 = 0.5 * (m[0, 0] + m[1, 1]).real
    a1 = (0.5 * (m[1, 1] - m[0, 0])).imag
    a2 = -(0.5 * (m[0, 1] + m[1, 0])).imag
    a3 = (0.5 * (m[1, 0] - m[0, 1])).real
    q = np.array([a0, a1, a2, a3])
    if canonical_branch:
        for x in q:
            if abs(x) > NORM_TOL:
                if x < 0:
                    q = -q
                break
    return gate_from_components(q[0], q[1:])


def random_gates(rng: np.random.Generator, count: int) -> List[Su2Gate]:
    """Gates drawn uniformly on S^3 (Haar measure)."""
    raw = rng.normal(size=(count, 4))
    raw /= np.linalg.norm(raw, axis=1)[:, None]
    return [Su2Gate(q[0], q[1:]) for q in raw]


def hadamard() -> Su2Gate:
    """(sigma1 + sigma3)/sqrt(2) projected to SU(2); equals -i (tau1 + tau2)/sqrt(2)."""
    h = (TAU1 + TAU2) / math.sqrt(2.0)
    return gate_from_matrix(h)


# Pauli gates as -i sigma_k, with sigma1 = tau2, sigma2 = tau3, sigma3 = tau1
NAMED_GATES = {
    'identity': lambda: identity(),
    'pauli-x': lambda: Su2Gate(0.0, (0.0, 1.0, 0.0)),
    'pauli-y': lambda: Su2Gate(0.0, (0.0, 0.0, 1.0)),
    'pauli-z': lambda: Su2Gate(0.0, (1.0, 0.0, 0.0)),
    'hadamard': hadamard,
}


def named_gate(name: str) -> Su2Gate:
    try:
        factory = NAMED_GATES[name.lower()]
    except KeyError:
        raise ValueError('unknown gate name {!r}, expected one of {}'.format(name, ', '.join(NAMED_GATES)))
    return factory()
