"""Generalized Tribonacci quaternions ``Q_n = V_n + V_{n+1} i + V_{n+2} j + V_{n+3} k``."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import seq_core
from .errors import DegenerateDelta, ZeroT
from .quaternion import Quaternion
from .seq_core import SequenceParams


def _lift(v0, v1, v2, v3) -> Quaternion:
    return Quaternion(Fraction(v0), Fraction(v1), Fraction(v2), Fraction(v3))


@dataclass
class QuatSeqContext:
    """Rolling window ``(Q_n, Q_{n+1}, Q_{n+2})`` for one sequence.

    Meant to live inside a single computation; do not share across threads.
    """

    params: SequenceParams
    index: int = 0
    window: tuple = field(default=None)

    def __post_init__(self):
        if self.window is None:
            self.window = initial_quats(self.params)

    def advance(self) -> Quaternion:
        p = self.params
        q0, q1, q2 = self.window
        nxt = p.r * q2 + p.s * q1 + p.t * q0
        self.window = (q1, q2, nxt)
        self.index += 1
        return q1

    def __iter__(self):
        while True:
            yield self.window[0]
            self.advance()


def quat_term(params: SequenceParams, n: int) -> Quaternion:
    v = seq_core.window(params, n).values
    p = params
    return _lift(*v, p.r * v[2] + p.s * v[1] + p.t * v[0])


def quat_terms(params: SequenceParams, count: int) -> list[Quaternion]:
    """``Q_0 .. Q_{count-1}`` from one pass over ``V``."""
    v = seq_core.terms(params, count + 3)
    return [Quaternion(*v[n:n + 4]) for n in range(count)]


def initial_quats(params: SequenceParams):
    """``(Q_0, Q_1, Q_2)`` written directly in terms of a, b, c, r, s, t."""
    a, b, c, r, s, t = params.astuple()
    v3 = r * c + s * b + t * a
    v4 = (r * r + s) * c + (t + r * s) * b + r * t * a
    v5 = (r ** 3 + 2 * r * s + t) * c + (r * r * s + s * s + r * t) * b + (r * r * t + s * t) * a
    return (
        Quaternion(a, b, c, v3),
        Quaternion(b, c, v3, v4),
        Quaternion(c, v3, v4, v5),
    )


@dataclass(frozen=True)
class SummationConstants:
    delta: Fraction
    lam: Fraction
    omega_corr: Quaternion

    @classmethod
    def of(cls, params: SequenceParams) -> "SummationConstants":
        d = seq_core.delta(params)
        lam = seq_core.lam(params)
        a, b, c = params.a, params.b, params.c
        omega = Quaternion(lam, lam - d * a, lam - d * (a + b), lam - d * (a + b + c))
        return cls(d, lam, omega)


def quat_partial_sum(params: SequenceParams, n: int) -> Quaternion:
    """Closed form of ``Q_0 + ... + Q_n``."""
    k = SummationConstants.of(params)
    if k.delta == 0:
        raise DegenerateDelta("r + s + t - 1 = 0: closed-form partial sum undefined")
    q0 = quat_term(params, n)
    q1 = quat_term(params, n + 1)
    q2 = quat_term(params, n + 2)
    return (q2 + (1 - params.r) * q1 + params.t * q0 + k.omega_corr) / k.delta


def quat_term_3n(params: SequenceParams, n: int) -> Quaternion:
    """Q_{3n} as the double binomial sum over ``Q_0 .. Q_{2n}`` (0**0 == 1)."""
    r, s, t = params.r, params.s, params.t
    if t == 0:
        raise ZeroT("index-tripling sum requires t != 0")
    qs = quat_terms(params, 2 * n + 1)
    total = Quaternion(*(Fraction(0),) * 4)
    for l in range(n + 1):
        outer = comb(n, l) * t ** (n - l)
        for m in range(l + 1):
            coeff = outer * comb(l, m) * r ** m * s ** (l - m)
            if coeff:
                total = total + coeff * qs[l + m]
    return total


def corollary_term(params: SequenceParams, n: int) -> Quaternion:
    """Q_{n+2} = Q_2 U_{n+2} + (s Q_1 + t Q_0) U_{n+1} + t Q_1 U_n.

    This is the (3,1) entry of ``Q_S S^n``.
    """
    q0, q1, q2 = initial_quats(params)
    s, t = params.s, params.t
    u0, u1, u2 = seq_core.window(params.with_initial(0, 0, 1), n).values
    return u2 * q2 + u1 * (s * q1 + t * q0) + u0 * (t * q1)


# Reference summation forms per preset: (divisor, {index shift: coeff}, constant)
# meaning sum_{l<=n} Q_l = (sum coeff * Q_{n+shift} - constant) / divisor.
TABLE3 = {
    "narayana": (1, {3: 1}, (1, 1, 2, 3)),
    "tribonacci": (2, {2: 1, 0: 1}, (1, 1, 1, 3)),
    "padovan-perrin": (1, {5: 1}, (1, 1, 2, 2)),
    "third-order-jacobsthal": (3, {2: 1, 0: 2}, (1, 1, 4, 7)),
}


def table3_sum(name: str, params: SequenceParams, n: int) -> Quaternion:
    divisor, shifts, const = TABLE3[name]
    total = -Quaternion(*(Fraction(c) for c in const))
    for shift, coeff in shifts.items():
        total = total + coeff * quat_term(params, n + shift)
    return total / divisor
