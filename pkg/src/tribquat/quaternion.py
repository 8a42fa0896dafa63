"""Quaternions over an arbitrary commutative scalar field.

Two scalar domains are used in practice: :class:`fractions.Fraction` for the
exact identities and ``complex`` for the Binet evaluations. In the complex
case the scalar imaginary unit commutes with ``i``, ``j`` and ``k``.
"""
from __future__ import annotations

from numbers import Number
from typing import NamedTuple


class Quaternion(NamedTuple):
    """``w + x i + y j + z k``."""

    w: object = 0
    x: object = 0
    y: object = 0
    z: object = 0

    @classmethod
    def scalar(cls, value) -> "Quaternion":
        zero = value * 0
        return cls(value, zero, zero, zero)

    def map(self, f) -> "Quaternion":
        return Quaternion(f(self.w), f(self.x), f(self.y), f(self.z))

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(
            self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z
        )

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return q_mul(self, other)
        if isinstance(other, Number):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central
        if isinstance(other, Number):
            return Quaternion(other * self.w, other * self.x, other * self.y, other * self.z)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    # NamedTuple would otherwise concatenate
    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0


ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def q_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p * q`` (i^2 = j^2 = k^2 = ijk = -1)."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def q_conj_norm(q: Quaternion):
    """Return ``(q*, Nr^2(q))``."""
    return q.conjugate(), q.norm2()


def q_linear(p: Quaternion, q: Quaternion, alpha, beta) -> Quaternion:
    """Component-wise ``alpha * p + beta * q``."""
    return Quaternion(*(alpha * u + beta * v for u, v in zip(p, q)))


def q_sum(quats, start=None) -> Quaternion:
    total = start if start is not None else Quaternion(0, 0, 0, 0)
    for q in quats:
        total = total + q
    return total
