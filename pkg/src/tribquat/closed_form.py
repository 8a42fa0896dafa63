"""Floating-point closed forms built on the roots of ``x^3 - r x^2 - s x - t``.

Only the one-real/two-complex regime (discriminant > 0) is handled.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveDiscriminant, UnknownPreset
from .quaternion import Quaternion
from .seq_core import PRESETS, SequenceParams


@dataclass(frozen=True)
class Tolerances:
    """Acceptance tolerances for float closed forms.

    ``rel(n)`` widens the Binet tolerance by ``|alpha|**(n - base_n)`` past
    ``base_n`` since the error grows with the dominant power.
    """

    binet_rel: float = 1e-9
    norm_rel: float = 1e-8
    imag_rel: float = 1e-9
    vieta_rel: float = 1e-12
    radical_abs: float = 1e-12
    base_n: int = 40

    def rel(self, n: int, alpha: float = 1.0, base: float | None = None) -> float:
        base = self.binet_rel if base is None else base
        if n <= self.base_n:
            return base
        return base * max(1.0, abs(alpha) ** (n - self.base_n))


DEFAULT_TOL = Tolerances()


def rel_err(approx, exact) -> float:
    """``|approx - exact| / max(|exact|, 1)``; the floor of 1 keeps zeros finite."""
    exact = float(exact) if isinstance(exact, Fraction) else exact
    return abs(approx - exact) / max(abs(exact), 1.0)


def imag_ok(z: complex, tol: float = DEFAULT_TOL.imag_rel) -> bool:
    return abs(z.imag) <= tol * (1.0 + abs(z.real))


def _cbrt(x: float) -> float:
    if x == 0.0:
        return 0.0
    y = math.copysign(abs(x) ** (1.0 / 3.0), x)
    return y - (y * y * y - x) / (3.0 * y * y)


# ---------------------------------------------------------------------------
# Roots

EPS = complex(-0.5, math.sqrt(3.0) / 2.0)


@dataclass(frozen=True)
class CubicRoots:
    alpha: float
    omega1: complex
    omega2: complex
    delta: float
    cardano_a: float
    cardano_b: float

    def as_tuple(self):
        return (complex(self.alpha), self.omega1, self.omega2)


def discriminant(params: SequenceParams) -> Fraction:
    r, s, t = params.r, params.s, params.t
    return (
        r ** 3 * t / 27
        - r ** 2 * s ** 2 / 108
        + r * s * t / 6
        - s ** 3 / 27
        + t ** 2 / 4
    )


def _require_positive(params: SequenceParams) -> Fraction:
    d = discriminant(params)
    if d <= 0:
        raise NonPositiveDiscriminant(
            f"discriminant {d} <= 0: closed forms assume one real and two "
            "complex-conjugate characteristic roots"
        )
    return d


def solve_cubic(params: SequenceParams) -> CubicRoots:
    d = _require_positive(params)
    r, s, t = float(params.r), float(params.s), float(params.t)
    sqrt_d = math.sqrt(float(d))
    h = float(params.r ** 3 / 27 + params.r * params.s / 6 + params.t / 2)
    big_a = _cbrt(h + sqrt_d)
    big_b = _cbrt(h - sqrt_d)

    alpha = r / 3 + big_a + big_b
    f = ((alpha - r) * alpha - s) * alpha - t
    fp = (3 * alpha - 2 * r) * alpha - s
    if fp != 0.0:
        alpha -= f / fp

    # Cardano's complex pair fixes which root is omega1 (Im > 0 since A > B);
    # the values themselves come from deflating by the polished alpha.
    w1_cardano = r / 3 + EPS * big_a + EPS * EPS * big_b
    p = alpha - r
    q = t / alpha if alpha != 0.0 else alpha * (alpha - r) - s
    disc = q - p * p / 4
    im = math.sqrt(disc) if disc > 0 else 0.0
    omega1 = complex(-p / 2, math.copysign(im, w1_cardano.imag))
    return CubicRoots(alpha, omega1, omega1.conjugate(), float(d), big_a, big_b)


# Reference radical expressions for the real root, per preset.
_TABLE1 = {
    "narayana": lambda: 1 / 3
    + _cbrt(29 / 54 + math.sqrt(93) / 18)
    + _cbrt(29 / 54 - math.sqrt(93) / 18),
    "tribonacci": lambda: 1 / 3
    + _cbrt(19 / 27 + math.sqrt(33) / 9)
    + _cbrt(19 / 27 - math.sqrt(33) / 9),
    "padovan-perrin": lambda: _cbrt(1 / 2 + math.sqrt(69) / 18)
    + _cbrt(1 / 2 - math.sqrt(69) / 18),
    "third-order-jacobsthal": lambda: 4 / 3,
}

JACOBSTHAL_NOTE = "printed 4/3 matches Cardano A term, not the root (real root is 2)"


def alpha_radical(name: str) -> float:
    try:
        return _TABLE1[name]()
    except KeyError:
        raise UnknownPreset(f"no table entry for {name!r}") from None


def table1_report(name: str, tol: Tolerances = DEFAULT_TOL) -> dict:
    """Compare the tabulated radical against the solved root (and Cardano A)."""
    printed = alpha_radical(name)
    roots = solve_cubic(PRESETS[name])
    matches_root = abs(printed - roots.alpha) <= tol.radical_abs
    matches_a = abs(printed - roots.cardano_a) <= tol.radical_abs
    note = None
    if not matches_root:
        note = JACOBSTHAL_NOTE if matches_a else "printed value does not match the root"
    return {
        "preset": name,
        "table_value": printed,
        "alpha": roots.alpha,
        "cardano_a": roots.cardano_a,
        "matches_root": matches_root,
        "matches_cardano_a": matches_a,
        "discrepancy": note,
    }


# ---------------------------------------------------------------------------
# Binet forms


@dataclass(frozen=True)
class BinetWeights:
    P: complex
    Q: complex
    R: complex

    @classmethod
    def of(cls, params: SequenceParams, roots: CubicRoots) -> "BinetWeights":
        a, b, c = float(params.a), float(params.b), float(params.c)
        al, w1, w2 = roots.as_tuple()
        return cls(
            c - (w1 + w2) * b + w1 * w2 * a,
            c - (al + w2) * b + al * w2 * a,
            c - (al + w1) * b + al * w1 * a,
        )


def _denoms(roots: CubicRoots):
    al, w1, w2 = roots.as_tuple()
    return (al - w1) * (al - w2), (al - w1) * (w1 - w2), (al - w2) * (w1 - w2)


def _binet(weights, roots: CubicRoots, n: int) -> complex:
    al, w1, w2 = roots.as_tuple()
    d_al, d_w1, d_w2 = _denoms(roots)
    p, q, r = weights
    return p * al ** n / d_al - q * w1 ** n / d_w1 + r * w2 ** n / d_w2


def binet_number(params: SequenceParams, n: int, *, complex_result: bool = False):
    """V_n from the three root powers weighted by P, Q, R."""
    roots = solve_cubic(params)
    w = BinetWeights.of(params, roots)
    z = _binet((w.P, w.Q, w.R), roots, n)
    return z if complex_result else z.real


def binet_u(params: SequenceParams, n: int, *, complex_result: bool = False):
    """U_n; negative ``n`` is allowed when all roots are nonzero (t != 0)."""
    roots = solve_cubic(params)
    z = _binet((1, 1, 1), roots, n)
    return z if complex_result else z.real


def binet_number_residue(params: SequenceParams, n: int) -> complex:
    """V_n rebuilt as ``c U_n + (bs + at) U_{n-1} + bt U_{n-2}`` from binet_u."""
    a, b, c = float(params.a), float(params.b), float(params.c)
    s, t = float(params.s), float(params.t)
    u = [binet_u(params, n - k, complex_result=True) for k in range(3)]
    return c * u[0] + (b * s + a * t) * u[1] + b * t * u[2]


def basis_quat(z: complex) -> Quaternion:
    return Quaternion(complex(1), complex(z), z * z, z * z * z)


def binet_quat(params: SequenceParams, n: int) -> Quaternion:
    """Q_n with complex-valued components; real parts carry the answer."""
    roots = solve_cubic(params)
    w = BinetWeights.of(params, roots)
    al, w1, w2 = roots.as_tuple()
    d_al, d_w1, d_w2 = _denoms(roots)
    return (
        (w.P * al ** n / d_al) * basis_quat(al)
        - (w.Q * w1 ** n / d_w1) * basis_quat(w1)
        + (w.R * w2 ** n / d_w2) * basis_quat(w2)
    )


def jacobsthal_binet_quat(n: int) -> Quaternion:
    """Closed form for the third-order Jacobsthal quaternions (0,1,1;1,1,2)."""
    x1 = complex(-0.5, math.sqrt(3) / 2)
    x2 = x1.conjugate()
    two = Quaternion(1, 2, 4, 8)
    u1 = Quaternion(1, x1, x1 * x1, 1)
    u2 = Quaternion(1, x2, x2 * x2, 1)
    c1 = complex(1, 2 * math.sqrt(3) / 3)
    c2 = c1.conjugate()
    total = (2 ** (n + 1)) * two - (c1 * x1 ** n) * u1 - (c2 * x2 ** n) * u2
    return total / 7


def quat_real(q: Quaternion) -> Quaternion:
    return q.map(lambda z: z.real)


# ---------------------------------------------------------------------------
# Norm


@dataclass(frozen=True)
class NormConstants:
    phi: complex
    bar_alpha: complex
    bar_omega1: complex
    bar_omega2: complex
    cross_alpha_omega1: complex
    cross_alpha_omega2: complex
    cross_omega1_omega2: complex

    @classmethod
    def of(cls, roots: CubicRoots) -> "NormConstants":
        al, w1, w2 = roots.as_tuple()

        def bar(z):
            return 1 + z ** 2 + z ** 4 + z ** 6

        def under(z):
            return 1 + z + z ** 2 + z ** 3

        return cls(
            (al - w1) * (al - w2) * (w1 - w2),
            bar(al), bar(w1), bar(w2),
            under(al * w1), under(al * w2), under(w1 * w2),
        )


def norm_closed(params: SequenceParams, n: int, *, complex_result: bool = False):
    """Nr^2(Q_n) = V_n^2 + ... + V_{n+3}^2 via squared Binet expansion."""
    roots = solve_cubic(params)
    w = BinetWeights.of(params, roots)
    k = NormConstants.of(roots)
    al, w1, w2 = roots.as_tuple()
    P, Q, R = w.P, w.Q, w.R
    cross = (
        (w1 - w2) * (al - w2) * P * Q * k.cross_alpha_omega1 * (al * w1) ** n
        + (w1 - w2) * (w1 - al) * P * R * k.cross_alpha_omega2 * (al * w2) ** n
        + (al - w1) * (al - w2) * Q * R * k.cross_omega1_omega2 * (w1 * w2) ** n
    )
    z = (
        (w1 - w2) ** 2 * P ** 2 * k.bar_alpha * al ** (2 * n)
        + (al - w2) ** 2 * Q ** 2 * k.bar_omega1 * w1 ** (2 * n)
        + (al - w1) ** 2 * R ** 2 * k.bar_omega2 * w2 ** (2 * n)
        - 2 * cross
    ) / k.phi ** 2
    return z if complex_result else z.real
