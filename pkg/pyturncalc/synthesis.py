"""
Universal gadget: any SU(2) gate from two quarter-wave plates and one
half-wave plate, in any of the three orders, and its NMR counterpart.

Configuration names read in matrix order (QQH means Q Q H written left to
right), while GadgetSetting.angles are stored in the order light meets the
plates. So a QQH gadget is hit by the HWP first.
"""
import math
import logging
from typing import List, Optional, Sequence, Tuple

from .su2 import Su2Gate, EulerAngles, identity, multiply, to_euler, relative_sign, wrap_angle, TWO_PI
from .optics import (
    QWP, HWP, PlateElement, ElementStack, evaluate_stack, hq_commute, QUARTER_PI, HALF_PI,
)
from .persistence import DocumentStorageAdapter

QQH = 'QQH'
QHQ = 'QHQ'
HQQ = 'HQQ'
CONFIGS = (QQH, QHQ, HQQ)

# plate kinds met by the light, per configuration
LIGHT_ORDER_KINDS = {
    QQH: (HWP, QWP, QWP),
    QHQ: (QWP, HWP, QWP),
    HQQ: (QWP, QWP, HWP),
}

FLIP_QUARTER = HALF_PI
FLIP_HALF = math.pi


def _check_config(config: str) -> str:
    config = config.upper()
    if config not in CONFIGS:
        raise ValueError('config should be one of {}'.format(', '.join(CONFIGS)))
    return config


class GadgetSetting(object):
    """Three dial angles mod pi, in light order, plus the sign of the realized gate."""

    __slots__ = ('config', 'angles', 'sign')

    def __init__(self, config: str, angles: Sequence[float], sign: int = 1):
        if len(angles) != 3:
            raise ValueError('a gadget setting needs exactly three angles')
        if sign not in (1, -1):
            raise ValueError('sign should be +1 or -1')
        self.config = _check_config(config)
        self.angles = tuple(wrap_angle(a, math.pi) for a in angles)
        self.sign = sign

    def kinds(self) -> Tuple[str, str, str]:
        return LIGHT_ORDER_KINDS[self.config]

    def to_stack(self) -> ElementStack:
        return ElementStack([PlateElement(k, a) for k, a in zip(self.kinds(), self.angles)])

    def to_json(self) -> dict:
        return {'config': self.config, 'angles_rad': list(self.angles), 'sign': self.sign}

    @classmethod
    def from_json(cls, data: dict) -> 'GadgetSetting':
        return cls(data['config'], data['angles_rad'], data.get('sign', 1))

    def __repr__(self) -> str:
        return 'GadgetSetting({}, angles=({:.9g}, {:.9g}, {:.9g}), sign={:+d})'.format(
            self.config, *self.angles, self.sign)


class PulseElement(object):
    """A pi/2 or pi pulse about an equatorial axis at azimuth phase."""

    __slots__ = ('flip', 'phase')

    def __init__(self, flip: float, phase: float):
        if abs(flip - FLIP_QUARTER) <= 1e-12:
            flip = FLIP_QUARTER
        elif abs(flip - FLIP_HALF) <= 1e-12:
            flip = FLIP_HALF
        else:
            raise ValueError('flip should be pi/2 or pi')
        self.flip = flip
        self.phase = wrap_angle(phase, TWO_PI)

    def gate(self) -> Su2Gate:
        s = math.sin(0.5 * self.flip)
        c = 0.0 if self.flip == FLIP_HALF else math.cos(0.5 * self.flip)
        return Su2Gate(c, (s * math.cos(self.phase), s * math.sin(self.phase), 0.0))

    def to_json(self) -> dict:
        return {'flip': 'pi/2' if self.flip == FLIP_QUARTER else 'pi', 'phase_rad': self.phase}

    @classmethod
    def from_json(cls, data: dict) -> 'PulseElement':
        flip = {'pi/2': FLIP_QUARTER, 'pi': FLIP_HALF}.get(data['flip'])
        if flip is None:
            raise ValueError("flip should be 'pi/2' or 'pi'")
        return cls(flip, data['phase_rad'])

    def __repr__(self) -> str:
        return 'PulseElement({}, phase={:.9g})'.format('pi/2' if self.flip == FLIP_QUARTER else 'pi', self.phase)


def variable_birefringence_qqh(eta: float) -> ElementStack:
    """C_{-pi/4}(eta) = Q_0 Q_{eta/2} H_{pi/2 + eta/4}."""
    return ElementStack([
        PlateElement.half(HALF_PI + 0.25 * eta),
        PlateElement.quarter(0.5 * eta),
        PlateElement.quarter(0.0),
    ])


def variable_birefringence_qhq(eta: float) -> ElementStack:
    """C_{-pi/4}(eta) = Q_0 H_{pi/2 + eta/4} Q_0."""
    return ElementStack([
        PlateElement.quarter(0.0),
        PlateElement.half(HALF_PI + 0.25 * eta),
        PlateElement.quarter(0.0),
    ])


def _qhq_angles(e: EulerAngles) -> Tuple[float, float, float]:
    xi, eta, zeta = e.as_tuple()
    return (
        QUARTER_PI - 0.5 * zeta,
        -QUARTER_PI + 0.25 * (xi + eta - zeta),
        QUARTER_PI + 0.5 * xi,
    )


def _config_angles(e: EulerAngles, config: str) -> Tuple[float, float, float]:
    first, half, last = _qhq_angles(e)
    if config == QHQ:
        return first, half, last
    xi, eta, zeta = e.as_tuple()
    if config == QQH:
        # Q_{pi/4 + xi/2} Q_{pi/4 + xi/2 + eta/2} H, the first QWP moved across the HWP
        return half, QUARTER_PI + 0.5 * (xi + eta), last
    # H Q_{pi/4 + (eta - zeta)/2} Q_{pi/4 - zeta/2}, the last QWP moved across the HWP
    return first, QUARTER_PI + 0.5 * (eta - zeta), half


def synthesize(u: Su2Gate, config: str = QHQ) -> GadgetSetting:
    """Dial angles realizing u; the closed forms are linear in the Euler angles of u."""
    config = _check_config(config)
    angles = _config_angles(to_euler(u), config)
    setting = GadgetSetting(config, angles)
    setting.sign = relative_sign(realize(setting), u)
    return setting


def realize(setting: GadgetSetting) -> Su2Gate:
    return evaluate_stack(setting.to_stack())


def dial_positions(u: Su2Gate) -> Tuple[float, float, float]:
    """Q-H-Q dial readings in light order, each mod pi."""
    return tuple(wrap_angle(a, math.pi) for a in _qhq_angles(to_euler(u)))


def qhq_to_qqh(setting: GadgetSetting) -> GadgetSetting:
    """Move the first QWP across the HWP with the H-Q commutation relation."""
    if setting.config != QHQ:
        raise ValueError('expected a QHQ setting')
    first, half, last = setting.angles
    return GadgetSetting(QQH, (half, hq_commute(half, first), last), setting.sign)


def to_nmr(setting: GadgetSetting) -> List[PulseElement]:
    """QWPs become pi/2 pulses and HWPs pi pulses, with phase twice the plate angle."""
    pulses = []
    for kind, angle in zip(setting.kinds(), setting.angles):
        flip = FLIP_QUARTER if kind == QWP else FLIP_HALF
        pulses.append(PulseElement(flip, 2.0 * angle))
    return pulses


def simulate_pulses(pulses: Sequence[PulseElement]) -> Su2Gate:
    """Product of the pulse rotations, later pulses to the left."""
    result = identity()
    for p in pulses:
        result = multiply(p.gate(), result)
    return result


def max_reachable_length(n_qwp: int) -> float:
    """Longest turn a stack of n QWPs can reach."""
    if n_qwp < 1:
        raise ValueError('n_qwp should be a positive integer')
    return min(n_qwp * QUARTER_PI, math.pi)


class UniversalGadget(object):
    """
    A programmable three-plate gadget. program() sets the dials for a gate;
    flush() and restore() keep the setting through a storage adapter.
    """

    def __init__(
        self,
        config: str = QHQ,
        logger: logging.Logger = None,
        storage_adapter: Optional[DocumentStorageAdapter] = None,
    ):
        self.logger = logger if logger is not None else logging.getLogger("turncalc")
        self.config = _check_config(config)
        self.storage_adapter = storage_adapter
        self.setting: Optional[GadgetSetting] = None

    def program(self, u: Su2Gate) -> GadgetSetting:
        self.setting = synthesize(u, self.config)
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug('{} dials set to {}'.format(
                self.config, ', '.join('{:.6f}'.format(a) for a in self.setting.angles)))
        return self.setting

    def _require_setting(self) -> GadgetSetting:
        if self.setting is None:
            raise ValueError('the gadget has not been programmed yet')
        return self.setting

    def gate(self) -> Su2Gate:
        return realize(self._require_setting())

    def stack(self) -> ElementStack:
        return self._require_setting().to_stack()

    def pulses(self) -> List[PulseElement]:
        return to_nmr(self._require_setting())

    def flush(self) -> bool:
        if not self.storage_adapter:
            self.logger.warning('flush called but no storage adapter is available. setting will not be dumped')
            return False
        if self.setting is None:
            self.logger.debug('flush called but the gadget has not been programmed. nothing to dump')
            return False
        try:
            self.storage_adapter.save(self.setting.to_json())
        except Exception as e:
            self.logger.error('error flushing setting to storage adapter', exc_info=1)
            raise e
        self.logger.debug('setting flushed to storage adapter')
        return True

    def restore(self) -> bool:
        if not self.storage_adapter:
            self.logger.warning('restore called but no storage adapter is available. setting will not be loaded')
            return False
        try:
            document = self.storage_adapter.read()
        except Exception as e:
            self.logger.error('error reading setting from storage adapter', exc_info=1)
            raise e
        if document is None:
            self.logger.debug('no stored setting to restore')
            return False
        setting = GadgetSetting.from_json(document)
        if setting.config != self.config:
            raise ValueError('stored setting is for a {} gadget, not {}'.format(setting.config, self.config))
        self.setting = setting
        self.logger.debug('setting restored from storage adapter')
        return True
