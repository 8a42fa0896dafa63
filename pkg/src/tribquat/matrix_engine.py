"""Companion-matrix ("S-matrix") machinery.

Matrices are plain 3-tuples of 3-tuples. Entries may be ints, Fractions,
residues (ints with a :class:`ModCtx`), or quaternions multiplied on the
left of scalar matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import seq_core
from .errors import NonInvertibleDenominator
from .quaternion import Quaternion
from .quat_seq import quat_terms
from .seq_core import SequenceParams

Mat3 = tuple


class IdentityMismatch(AssertionError):
    """A matrix identity failed to hold for the given parameters."""


@dataclass(frozen=True)
class ModCtx:
    modulus: int

    def __post_init__(self):
        if int(self.modulus) < 2:
            raise ValueError("modulus must be >= 2")

    def residue(self, x) -> int:
        m = self.modulus
        x = Fraction(x)
        try:
            inv = pow(x.denominator, -1, m)
        except ValueError:
            raise NonInvertibleDenominator(
                f"denominator {x.denominator} is not invertible mod {m}"
            ) from None
        return x.numerator * inv % m


IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat_mul(a: Mat3, b: Mat3, mod: int | None = None) -> Mat3:
    rows = []
    for i in range(3):
        ai = a[i]
        row = []
        for j in range(3):
            v = ai[0] * b[0][j] + ai[1] * b[1][j] + ai[2] * b[2][j]
            row.append(v % mod if mod else v)
        rows.append(tuple(row))
    return tuple(rows)


def mat_pow(m: Mat3, n: int, mod: int | None = None) -> Mat3:
    """``m**n`` by square-and-multiply; ``m**0`` is the identity."""
    if n < 0:
        raise ValueError("n must be non-negative")
    result = IDENTITY
    base = tuple(tuple(x % mod for x in row) for row in m) if mod else m
    while n:
        if n & 1:
            result = mat_mul(result, base, mod)
        n >>= 1
        if n:
            base = mat_mul(base, base, mod)
    return result


def mat_pow_ltr(m: Mat3, n: int, mod: int | None = None) -> Mat3:
    """Left-to-right variant of :func:`mat_pow` (different multiplication order)."""
    result = IDENTITY
    for bit in bin(n)[2:] if n else "":
        result = mat_mul(result, result, mod)
        if bit == "1":
            result = mat_mul(result, m, mod)
    return result


def mat_apply(m: Mat3, v) -> tuple:
    return tuple(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3))


def s_matrix(params: SequenceParams) -> Mat3:
    return ((params.r, params.s, params.t), (1, 0, 0), (0, 1, 0))


def _fast_s(params: SequenceParams) -> Mat3:
    if params.is_integral:
        return ((int(params.r), int(params.s), int(params.t)), (1, 0, 0), (0, 1, 0))
    return s_matrix(params)


def _as_fraction(m: Mat3) -> Mat3:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def s_power(params: SequenceParams, n: int) -> Mat3:
    return _as_fraction(mat_pow(_fast_s(params), n))


def u_pattern(params: SequenceParams, n: int) -> Mat3:
    """S^n assembled entry-by-entry from U_{n-2} .. U_{n+2}."""
    s, t = params.s, params.t
    if n >= 2:
        u = list(seq_core.window(params.with_initial(0, 0, 1), n - 2).values)
        u += list(seq_core.window(params.with_initial(0, 0, 1), n + 1).values[:2])
    else:
        u = [seq_core.u_term(params, k) for k in range(n - 2, n + 3)]
    um2, um1, u0, u1, u2 = u
    return (
        (u2, s * u1 + t * u0, t * u1),
        (u1, s * u0 + t * um1, t * u0),
        (u0, s * um1 + t * um2, t * um1),
    )


def s_pow_structure(params: SequenceParams, n: int) -> Mat3:
    """Return S^n built from U values, after checking it against mat_pow."""
    if n < 1:
        raise ValueError("structure identity is stated for n >= 1")
    built = u_pattern(params, n)
    if built != s_power(params, n):
        raise IdentityMismatch(f"S^{n} does not match the U pattern for {params}")
    return built


def advance_state(params: SequenceParams, n: int):
    """``(V_{n+2}, V_{n+1}, V_n)`` as ``S^n (c, b, a)``."""
    a, b, c = params.a, params.b, params.c
    if params.is_integral:
        out = mat_apply(mat_pow(_fast_s(params), n), (int(c), int(b), int(a)))
    else:
        out = mat_apply(mat_pow(s_matrix(params), n), (c, b, a))
    return tuple(Fraction(x) for x in out)


def term_matrix(params: SequenceParams, n: int) -> Fraction:
    return advance_state(params, n)[2]


def term_mod(params: SequenceParams, n: int, ctx: ModCtx, *, ltr: bool = False) -> int:
    """V_n mod m in O(log n) residue multiplications."""
    m = ctx.modulus
    a, b, c, r, s, t = (ctx.residue(x) for x in params.astuple())
    power = (mat_pow_ltr if ltr else mat_pow)(((r, s, t), (1, 0, 0), (0, 1, 0)), n, m)
    return (power[2][0] * c + power[2][1] * b + power[2][2] * a) % m


def term_mod_iter(params: SequenceParams, n: int, ctx: ModCtx) -> int:
    """Iterative oracle for :func:`term_mod`."""
    m = ctx.modulus
    a, b, c, r, s, t = (ctx.residue(x) for x in params.astuple())
    for _ in range(n):
        a, b, c = b, c, (r * c + s * b + t * a) % m
    return a


# ---------------------------------------------------------------------------
# Quaternion matrix


def qs_layout(params: SequenceParams, n: int) -> Mat3:
    """The 3x3 quaternion matrix built from Q_n .. Q_{n+4}."""
    s, t = params.s, params.t
    q0, q1, q2, q3, q4 = quat_terms_from(params, n, 5)
    return (
        (q4, s * q3 + t * q2, t * q3),
        (q3, s * q2 + t * q1, t * q2),
        (q2, s * q1 + t * q0, t * q1),
    )


def quat_terms_from(params: SequenceParams, n: int, count: int) -> list[Quaternion]:
    v0, v1, v2 = seq_core.window(params, n).values
    return quat_terms(params.with_initial(v0, v1, v2), count)


def qs_matrix(params: SequenceParams) -> Mat3:
    return qs_layout(params, 0)


def qs_times(qs: Mat3, m: Mat3) -> Mat3:
    """Quaternion matrix times scalar matrix, keeping the quaternion on the left."""
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = qs[i][0] * m[0][j]
            acc = acc + qs[i][1] * m[1][j]
            acc = acc + qs[i][2] * m[2][j]
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def qs_pow_identity(params: SequenceParams, n: int) -> Mat3:
    """Q_S * S^n, checked against the layout shifted to start at Q_n."""
    if params.is_integral:
        ints = tuple(tuple(q.map(int) for q in row) for row in qs_matrix(params))
        product = qs_times(ints, mat_pow(_fast_s(params), n))
        product = tuple(tuple(q.map(Fraction) for q in row) for row in product)
    else:
        product = qs_times(qs_matrix(params), s_power(params, n))
    if product != qs_layout(params, n):
        raise IdentityMismatch(f"Q_S S^{n} does not match shifted layout for {params}")
    return product
