from typing import Optional

# numeric tolerances shared across modules
NORM_TOL = 1e-12
NEAR_ZERO_NORM = 1e-9
NORM_DRIFT_LIMIT = 1e-6
CENTRAL_TOL = 1e-9
COAXIAL_TOL = 1e-9
ANTIPODAL_TOL = 1e-9


class TurnCalcError(Exception):
    """Base class of every domain error raised by pyturncalc."""

    def __str__(self) -> str:
        return self.__repr__()

    def __repr__(self) -> str:
        return self.__class__.__name__


class NearZeroNormError(TurnCalcError):
    def __init__(self, norm: float):
        super().__init__()
        self.norm = norm

    def __repr__(self) -> str:
        return 'NearZeroNormError (4-vector norm {:.3e} is too small to normalize)'.format(self.norm)


class NormDriftError(TurnCalcError):
    def __init__(self, norm: float):
        super().__init__()
        self.norm = norm

    def __repr__(self) -> str:
        return 'NormDriftError (norm {:.12f} drifted beyond the renormalization limit)'.format(self.norm)


class AntipodalPairError(TurnCalcError):
    def __init__(self, tail=None, head=None, turn=None):
        super().__init__()
        self.tail = tail
        self.head = head
        # the central pi-turn the pair stands for; its great circle is undefined
        self.turn = turn

    def __repr__(self) -> str:
        return 'AntipodalPairError (tail and head are antipodal, great circle undefined)'


class DegenerateArcError(TurnCalcError):
    def __init__(self, reason: Optional[str] = None):
        super().__init__()
        self.reason = reason

    def __repr__(self) -> str:
        s = 'DegenerateArcError'
        if self.reason is not None:
            s += ' ({})'.format(self.reason)
        return s


class DegenerateTripleError(TurnCalcError):
    def __init__(self, reason: Optional[str] = None):
        super().__init__()
        self.reason = reason

    def __repr__(self) -> str:
        s = 'DegenerateTripleError'
        if self.reason is not None:
            s += ' ({})'.format(self.reason)
        return s


class OrthogonalStatesError(TurnCalcError):
    def __init__(self, overlap: float):
        super().__init__()
        self.overlap = overlap

    def __repr__(self) -> str:
        return 'OrthogonalStatesError (|<E1,E2>| = {:.3e}, phase comparison undefined)'.format(self.overlap)


class AntipodalTransportError(TurnCalcError):
    def __repr__(self) -> str:
        return 'AntipodalTransportError (target is antipodal to the current state)'


class OutOfRangeError(TurnCalcError):
    def __init__(self, name: str, value: float, low: float, high: float):
        super().__init__()
        self.name = name
        self.value = value
        self.low = low
        self.high = high

    def __repr__(self) -> str:
        return 'OutOfRangeError ({} = {} not in [{}, {}])'.format(self.name, self.value, self.low, self.high)


class NonPositiveInputError(TurnCalcError):
    def __init__(self, name: str, value: float):
        super().__init__()
        self.name = name
        self.value = value

    def __repr__(self) -> str:
        return 'NonPositiveInputError ({} = {} should be positive)'.format(self.name, self.value)


class CentralGateError(TurnCalcError):
    def __repr__(self) -> str:
        return 'CentralGateError (gate is +/- identity, positional coordinates undefined)'


class ParseError(TurnCalcError):
    def __init__(self, message: str, position: int = 0):
        super().__init__()
        self.message = message
        self.position = position

    def __repr__(self) -> str:
        return 'ParseError at position {}: {}'.format(self.position, self.message)


class NonUnitaryMatrixError(TurnCalcError):
    def __init__(self, deviation: float):
        super().__init__()
        self.deviation = deviation

    def __repr__(self) -> str:
        return 'NonUnitaryMatrixError (||M^H M - I|| = {:.3e})'.format(self.deviation)
