"""Exception hierarchy shared by every module."""


class TribQuatError(Exception):
    """Base class for domain errors (CLI maps these to exit code 3)."""


class NegativeIndexWithZeroT(TribQuatError, ValueError):
    pass


class DegenerateDelta(TribQuatError, ZeroDivisionError):
    """r + s + t - 1 == 0, so the closed-form partial sums are undefined."""


class UnknownPreset(TribQuatError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown preset"


class ZeroT(TribQuatError, ValueError):
    pass


class NonPositiveDiscriminant(TribQuatError, ValueError):
    pass


class NonInvertibleDenominator(TribQuatError, ValueError):
    pass
