"""Exact generalized Tribonacci sequences and their quaternion lifts."""
from .errors import (
    DegenerateDelta,
    NegativeIndexWithZeroT,
    NonInvertibleDenominator,
    NonPositiveDiscriminant,
    TribQuatError,
    UnknownPreset,
    ZeroT,
)
from .quaternion import Quaternion, q_conj_norm, q_linear, q_mul
from .seq_core import PRESETS, SequenceParams, partial_sum, preset, term, term_via_u, u_term

__version__ = "0.1.0"
