import cmath
import math
from fractions import Fraction

import pytest

from tribquat import closed_form as cf, quat_seq as qs, seq_core as sc
from tribquat.errors import NonPositiveDiscriminant, UnknownPreset
from tribquat.quaternion import Quaternion
from tribquat.seq_core import PRESETS, SequenceParams
from tribquat.verify import random_params

# Real roots from mpmath.polyroots at 40 digits.
ALPHA = {
    "narayana": 1.4655712318767680267,
    "tribonacci": 1.8392867552141611326,
    "padovan-perrin": 1.324717957244746026,
    "third-order-jacobsthal": 2.0,
}
RANDOM = random_params(20, seed=7)
TOL = cf.DEFAULT_TOL


def newton_root(r, s, t, x=3.0):
    """Independent real-root oracle: Newton on the characteristic cubic from a
    bracket found by bisection."""
    f = lambda x: x ** 3 - r * x ** 2 - s * x - t
    lo, hi = -10.0, 10.0
    for _ in range(200):
        mid = (lo + hi) / 2
        if (f(lo) < 0) == (f(mid) < 0):
            lo = mid
        else:
            hi = mid
    x = (lo + hi) / 2
    for _ in range(5):
        d = 3 * x * x - 2 * r * x - s
        if d:
            x -= f(x) / d
    return x


def test_discriminant_examples():
    assert cf.discriminant(PRESETS["tribonacci"]) == Fraction(11, 27)
    assert cf.discriminant(PRESETS["third-order-jacobsthal"]) == Fraction(49, 36)
    assert cf.discriminant(PRESETS["padovan-perrin"]) == Fraction(23, 108)


def test_discriminant_matches_depressed_cubic():
    # q^2/4 + p^3/27 for y^3 + p y + q after x = y + r/3
    for p in list(PRESETS.values()) + RANDOM:
        r, s, t = p.r, p.s, p.t
        pp = -s - r * r / 3
        qq = -t - r * s / 3 - 2 * r ** 3 / 27
        assert cf.discriminant(p) == qq * qq / 4 + pp ** 3 / 27


@pytest.mark.parametrize("name", list(PRESETS))
def test_solve_cubic_presets(name):
    roots = cf.solve_cubic(PRESETS[name])
    assert abs(roots.alpha - ALPHA[name]) <= 1e-14 * ALPHA[name]
    assert roots.omega2 == roots.omega1.conjugate()
    assert roots.omega1.imag > 0 and roots.delta > 0


def test_jacobsthal_roots():
    roots = cf.solve_cubic(PRESETS["third-order-jacobsthal"])
    assert roots.alpha == pytest.approx(2, abs=1e-12)
    assert roots.omega1 == pytest.approx(complex(-0.5, math.sqrt(3) / 2), abs=1e-12)
    assert roots.cardano_a == pytest.approx(4 / 3, abs=1e-15)


@pytest.mark.parametrize("p", list(PRESETS.values()) + RANDOM, ids=str)
def test_vieta(p):
    roots = cf.solve_cubic(p)
    al, w1, w2 = roots.as_tuple()
    r, s, t = float(p.r), float(p.s), float(p.t)
    assert abs(al + w1 + w2 - r) <= 1e-12 * (1 + abs(r))
    assert abs(al * w1 + al * w2 + w1 * w2 + s) <= 1e-12 * (1 + abs(s))
    assert abs(al * w1 * w2 - t) <= 1e-12 * (1 + abs(t))
    assert roots.alpha == pytest.approx(newton_root(r, s, t), rel=1e-13, abs=1e-13)
    w = cf.BinetWeights.of(p, roots)
    assert abs(w.R - w.Q.conjugate()) <= 1e-12 * (1 + abs(w.Q))


def test_nonpositive_discriminant():
    with pytest.raises(NonPositiveDiscriminant, match="one real and two"):
        cf.solve_cubic(SequenceParams(0, 0, 1, 6, -11, 6))  # roots 1, 2, 3
    with pytest.raises(NonPositiveDiscriminant):
        cf.binet_number(SequenceParams(0, 0, 1, 1, 1, 0), 3)


def test_alpha_radical():
    for name in ("narayana", "tribonacci", "padovan-perrin"):
        assert abs(cf.alpha_radical(name) - cf.solve_cubic(PRESETS[name]).alpha) <= 1e-12
    assert cf.alpha_radical("padovan-perrin") == pytest.approx(1.3247179572447460, abs=1e-15)
    assert cf.alpha_radical("third-order-jacobsthal") == 4 / 3
    rep = cf.table1_report("third-order-jacobsthal")
    assert not rep["matches_root"] and rep["matches_cardano_a"]
    assert "Cardano A" in rep["discrepancy"]
    with pytest.raises(UnknownPreset):
        cf.alpha_radical("fibonacci")


def test_binet_number_examples():
    assert cf.binet_number(PRESETS["tribonacci"], 10) == pytest.approx(81, abs=1e-7)
    assert cf.binet_number(PRESETS["narayana"], 8) == pytest.approx(9, abs=1e-7)
    zero = SequenceParams(0, 0, 0, 1, 1, 1)
    assert all(cf.binet_number(zero, n) == 0 for n in range(10))


def test_binet_u_examples():
    for p in PRESETS.values():
        assert cf.binet_u(p, 2) == pytest.approx(1, abs=1e-9)
        assert cf.binet_u(p, 0) == pytest.approx(0, abs=1e-9)
    assert cf.binet_u(PRESETS["tribonacci"], 12) == pytest.approx(274, abs=1e-6)


def test_binet_quat_examples():
    got = cf.quat_real(cf.binet_quat(PRESETS["third-order-jacobsthal"], 0))
    assert got == pytest.approx(Quaternion(0, 1, 1, 2), abs=1e-8)
    got = cf.quat_real(cf.binet_quat(PRESETS["tribonacci"], 5))
    assert got == pytest.approx(Quaternion(4, 7, 13, 24), abs=1e-7)
    zero = cf.binet_quat(SequenceParams(0, 0, 0, 1, 0, 1), 4)
    assert all(abs(z) == 0 for z in zero)


def test_jacobsthal_binet_examples():
    assert cf.quat_real(cf.jacobsthal_binet_quat(0)) == pytest.approx((0, 1, 1, 2), abs=1e-8)
    assert cf.quat_real(cf.jacobsthal_binet_quat(2)) == pytest.approx((1, 2, 5, 9), abs=1e-8)
    assert cf.jacobsthal_binet_quat(7).w.real == pytest.approx(37, abs=1e-6)
    assert cf.quat_real(cf.jacobsthal_binet_quat(7)) == pytest.approx((37, 73, 146, 293), abs=1e-6)


def test_norm_closed_examples():
    assert cf.norm_closed(PRESETS["tribonacci"], 0) == pytest.approx(2, abs=1e-8)
    assert cf.norm_closed(PRESETS["third-order-jacobsthal"], 0) == pytest.approx(6, abs=1e-8)
    assert cf.norm_closed(SequenceParams(0, 0, 0, 1, 1, 1), 5) == 0


@pytest.mark.parametrize("p", list(PRESETS.values()) + RANDOM, ids=str)
def test_binet_fidelity(p):
    v = sc.terms(p, 45)
    u = sc.terms(p.with_initial(0, 0, 1), 45)
    for n in range(41):
        z = cf.binet_number(p, n, complex_result=True)
        assert cf.rel_err(z.real, v[n]) <= TOL.binet_rel and cf.imag_ok(z)
        zr = cf.binet_number_residue(p, n)
        assert cf.rel_err(zr.real, v[n]) <= TOL.binet_rel and cf.imag_ok(zr)
        zu = cf.binet_u(p, n, complex_result=True)
        assert cf.rel_err(zu.real, u[n]) <= TOL.binet_rel and cf.imag_ok(zu)
    for n in range(31):
        for z, want in zip(cf.binet_quat(p, n), qs.quat_term(p, n)):
            assert cf.rel_err(z.real, want) <= TOL.binet_rel and cf.imag_ok(z)
        zn = cf.norm_closed(p, n, complex_result=True)
        assert cf.rel_err(zn.real, qs.quat_term(p, n).norm2()) <= TOL.norm_rel and cf.imag_ok(zn)


def test_printed_binet_equals_residue_form():
    p = SequenceParams(2, -1, 3, 1, 2, 1)
    for n in range(2, 25):
        assert cmath.isclose(cf.binet_number(p, n, complex_result=True),
                             cf.binet_number_residue(p, n), rel_tol=1e-11, abs_tol=1e-9)


def test_basis_quat_ratios():
    z = complex(-0.3, 0.7)
    q = cf.basis_quat(z)
    assert q.x / q.w == z and q.y / q.w == z * z
    assert abs(q.z / q.w - z ** 3) < 1e-15


def test_tolerance_schedule():
    tol = cf.Tolerances()
    assert tol.rel(40, 1.8) == 1e-9
    assert tol.rel(42, 2.0) == pytest.approx(4e-9)
    assert tol.rel(100, 0.5) == 1e-9
