"""Rational generating function of the quaternion sequence and its expansion."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .quat_seq import initial_quats
from .quaternion import Quaternion
from .seq_core import PRESETS, SequenceParams
from .errors import UnknownPreset


@dataclass(frozen=True)
class QuatRationalGF:
    """``(N0 + N1 x + N2 x^2) / (1 - r x - s x^2 - t x^3)`` with quaternion N_k."""

    numerator: tuple
    denominator: tuple  # (1, -r, -s, -t)


def build_gf(params: SequenceParams) -> QuatRationalGF:
    q0, q1, q2 = initial_quats(params)
    r, s, t = params.r, params.s, params.t
    num = (q0, q1 - r * q0, q2 - r * q1 - s * q0)
    return QuatRationalGF(num, (Fraction(1), -r, -s, -t))


def expand(gf: QuatRationalGF, count: int) -> list[Quaternion]:
    """First ``count`` power-series coefficients of ``gf``."""
    _, mr, ms, mt = gf.denominator
    r, s, t = -mr, -ms, -mt
    zero = Quaternion(*(Fraction(0),) * 4)
    out: list[Quaternion] = []
    for n in range(count):
        c = gf.numerator[n] if n < 3 else zero
        if n >= 1:
            c = c + r * out[n - 1]
        if n >= 2:
            c = c + s * out[n - 2]
        if n >= 3:
            c = c + t * out[n - 3]
        out.append(c)
    return out


def multiply_denominator(gf: QuatRationalGF, coeffs: list[Quaternion]) -> list[Quaternion]:
    """Truncated product ``denominator(x) * sum coeffs[n] x^n``; the first
    ``len(coeffs)`` terms."""
    zero = Quaternion(*(Fraction(0),) * 4)
    out = []
    for n in range(len(coeffs)):
        acc = zero
        for k, d in enumerate(gf.denominator):
            if n - k >= 0 and d:
                acc = acc + d * coeffs[n - k]
        out.append(acc)
    return out


# Reference numerators per preset, component -> polynomial coefficients (x^0, x^1, x^2).
TABLE2 = {
    "narayana": {"w": (0, 1, 0), "x": (1, 0, 0), "y": (1, 0, 1), "z": (1, 1, 1)},
    "tribonacci": {"w": (0, 0, 1), "x": (0, 1, 0), "y": (1, 0, 0), "z": (1, 1, 1)},
    "padovan-perrin": {"w": (0, 1, 0), "x": (1, 0, 0), "y": (0, 1, 1), "z": (1, 1, 0)},
    "third-order-jacobsthal": {
        "w": (0, 1, 0), "x": (1, 0, 0), "y": (1, 1, 2), "z": (2, 3, 2),
    },
}
TABLE2_DENOMINATORS = {
    "narayana": (1, -1, 0, -1),
    "tribonacci": (1, -1, -1, -1),
    "padovan-perrin": (1, 0, -1, -1),
    "third-order-jacobsthal": (1, -1, -1, -2),
}


def table2_check(name: str) -> dict:
    """Per-component comparison of the tabulated numerator with :func:`build_gf`."""
    if name not in TABLE2:
        raise UnknownPreset(f"no table entry for {name!r}")
    gf = build_gf(PRESETS[name])
    report = {}
    for comp, golden in TABLE2[name].items():
        got = tuple(getattr(q, comp) for q in gf.numerator)
        report[comp] = got == tuple(Fraction(g) for g in golden)
    report["denominator"] = gf.denominator == tuple(
        Fraction(d) for d in TABLE2_DENOMINATORS[name]
    )
    report["match"] = all(report.values())
    return report
