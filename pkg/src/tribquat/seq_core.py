"""Exact generalized Tribonacci numbers.

``V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}`` with ``V_0, V_1, V_2 = a, b, c``.
All scalars are :class:`fractions.Fraction`; when every parameter is an
integer the inner loops run on plain ``int`` and only the result is wrapped.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Union

from .errors import DegenerateDelta, NegativeIndexWithZeroT, UnknownPreset

ExactScalar = Fraction
Number = Union[int, Fraction, str]

__all__ = [
    "ExactScalar",
    "SequenceParams",
    "SeqWindow",
    "PRESETS",
    "preset",
    "parse_params",
    "term",
    "terms",
    "window",
    "u_term",
    "term_via_u",
    "partial_sum",
    "delta",
    "lam",
]


def _q(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class SequenceParams:
    """Initial values ``(a, b, c)`` and recurrence coefficients ``(r, s, t)``."""

    a: Fraction
    b: Fraction
    c: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "r", "s", "t"):
            object.__setattr__(self, name, _q(getattr(self, name)))

    @classmethod
    def of(cls, a, b, c, r, s, t) -> "SequenceParams":
        return cls(a, b, c, r, s, t)

    def astuple(self) -> tuple:
        return (self.a, self.b, self.c, self.r, self.s, self.t)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.astuple())

    def with_initial(self, a, b, c) -> "SequenceParams":
        return SequenceParams(a, b, c, self.r, self.s, self.t)

    def __str__(self):
        return ",".join(str(x) for x in self.astuple())


class SeqWindow(NamedTuple):
    """Three consecutive terms ``(V_n, V_{n+1}, V_{n+2})`` starting at ``index``."""

    index: int
    values: tuple

    def advance(self, params: SequenceParams) -> "SeqWindow":
        v0, v1, v2 = self.values
        return SeqWindow(
            self.index + 1, (v1, v2, params.r * v2 + params.s * v1 + params.t * v0)
        )


PRESETS = {
    "narayana": SequenceParams(0, 1, 1, 1, 0, 1),
    "tribonacci": SequenceParams(0, 0, 1, 1, 1, 1),
    "padovan-perrin": SequenceParams(0, 1, 0, 0, 1, 1),
    "third-order-jacobsthal": SequenceParams(0, 1, 1, 1, 1, 2),
}


def preset(name: str) -> SequenceParams:
    try:
        return PRESETS[name]
    except KeyError:
        raise UnknownPreset(
            f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}"
        ) from None


def parse_params(text: str) -> SequenceParams:
    """Parse ``"a,b,c,r,s,t"``; each field may be an integer or ``p/q``."""
    fields = [f.strip() for f in text.split(",")]
    if len(fields) != 6:
        raise ValueError(f"expected 6 comma-separated values, got {len(fields)}")
    return SequenceParams(*(Fraction(f) for f in fields))


def _raw(params: SequenceParams):
    if params.is_integral:
        return tuple(int(x) for x in params.astuple())
    return params.astuple()


def _iter_raw(params: SequenceParams) -> Iterator:
    a, b, c, r, s, t = _raw(params)
    while True:
        yield a
        a, b, c = b, c, r * c + s * b + t * a


def iter_terms(params: SequenceParams) -> Iterator[Fraction]:
    """Infinite iterator over ``V_0, V_1, ...``."""
    for v in _iter_raw(params):
        yield Fraction(v)


def terms(params: SequenceParams, count: int) -> list[Fraction]:
    """The first ``count`` terms, computed in a single forward pass."""
    out = []
    it = _iter_raw(params)
    for _ in range(count):
        out.append(Fraction(next(it)))
    return out


def window(params: SequenceParams, n: int) -> SeqWindow:
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b, c, r, s, t = _raw(params)
    for _ in range(n):
        a, b, c = b, c, r * c + s * b + t * a
    return SeqWindow(n, (Fraction(a), Fraction(b), Fraction(c)))


def term(params: SequenceParams, n: int) -> Fraction:
    """V_n by forward iteration. Cost is O(n) big-number additions."""
    return window(params, n).values[0]


def u_term(params: SequenceParams, n: int) -> Fraction:
    """U_n, the sequence with initial values (0, 0, 1) and the same r, s, t.

    ``n`` may be -1 or -2 when ``t != 0``; those values come from running the
    recurrence backwards and equal ``1/t`` and ``-s/t**2``.
    """
    if n < -2:
        raise ValueError("u_term supports n >= -2 only")
    if n < 0:
        if params.t == 0:
            raise NegativeIndexWithZeroT(
                f"U_{n} requires t != 0 (U_-1 = 1/t, U_-2 = -s/t^2)"
            )
        r, s, t = params.r, params.s, params.t
        u0, u1, u2 = Fraction(0), Fraction(0), Fraction(1)
        # backward step: U_{k-3} = (U_k - r U_{k-1} - s U_{k-2}) / t
        u_m1 = (u2 - r * u1 - s * u0) / t
        if n == -1:
            return u_m1
        return (u1 - r * u0 - s * u_m1) / t
    return term(params.with_initial(0, 0, 1), n)


def term_via_u(params: SequenceParams, n: int) -> Fraction:
    """V_n = c U_n + (b s + a t) U_{n-1} + b t U_{n-2}."""
    a, b, c, s, t = params.a, params.b, params.c, params.s, params.t
    if n >= 2:
        # one pass gives U_{n-2}, U_{n-1}, U_n
        u2, u1, u0 = window(params.with_initial(0, 0, 1), n - 2).values
    else:
        u2, u1, u0 = (u_term(params, n - 2), u_term(params, n - 1), u_term(params, n))
    return c * u0 + (b * s + a * t) * u1 + b * t * u2


def delta(params: SequenceParams) -> Fraction:
    return params.r + params.s + params.t - 1


def lam(params: SequenceParams) -> Fraction:
    p = params
    return (p.r + p.s - 1) * p.a + (p.r - 1) * p.b - p.c


def partial_sum(params: SequenceParams, n: int) -> Fraction:
    """Closed form of ``V_0 + ... + V_n``; raises DegenerateDelta when r+s+t = 1."""
    d = delta(params)
    if d == 0:
        raise DegenerateDelta("r + s + t - 1 = 0: closed-form partial sum undefined")
    v0, v1, v2 = window(params, n).values
    return (v2 + (1 - params.r) * v1 + params.t * v0 + lam(params)) / d
