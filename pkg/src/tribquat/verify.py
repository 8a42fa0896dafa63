"""Identity registry: every formula checked against an independent path."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import closed_form as cf
from . import genfun, matrix_engine as me, quat_seq as qs, seq_core as sc
from .quaternion import Quaternion
from .seq_core import PRESETS, SequenceParams

REJECTION_RULE = (
    "random params: integers a,b,c,r,s,t drawn uniformly from [-3, 3]; "
    "rejected when t = 0, r+s+t-1 = 0, or discriminant <= 0"
)
MODULI = (2, 97, 10**9 + 7)


class Skip(Exception):
    pass


@dataclass
class Ctx:
    params: SequenceParams
    lo: int
    hi: int
    tol: cf.Tolerances
    moduli: tuple = MODULI
    _v: list = field(default=None, repr=False)
    _q: list = field(default=None, repr=False)

    @property
    def ns(self):
        return range(self.lo, self.hi + 1)

    def v(self, n):
        if self._v is None or len(self._v) <= n:
            self._v = sc.terms(self.params, max(2 * self.hi + 8, n + 1))
        return self._v[n]

    def q(self, n):
        if self._q is None or len(self._q) <= n:
            self._q = qs.quat_terms(self.params, max(2 * self.hi + 8, n + 1))
        return self._q[n]

    @property
    def preset_name(self):
        for name, p in PRESETS.items():
            if p == self.params:
                return name
        return None

    def need_delta(self):
        if sc.delta(self.params) == 0:
            raise Skip("r + s + t - 1 = 0")

    def need_t(self):
        if self.params.t == 0:
            raise Skip("t = 0")

    def need_disc(self):
        if cf.discriminant(self.params) <= 0:
            raise Skip("discriminant <= 0")

    def need_preset(self):
        if self.preset_name is None:
            raise Skip("not a tabulated preset")
        return self.preset_name

    def binet_tol(self, n, base=None):
        roots = cf.solve_cubic(self.params)
        dominant = max(abs(roots.alpha), abs(roots.omega1))
        return self.tol.rel(n, dominant, base)


def _s(x) -> str:
    return str(x)


def _qs(q: Quaternion) -> dict:
    return {"w": _s(q.w), "x": _s(q.x), "y": _s(q.y), "z": _s(q.z)}


def _exact(ctx, name, n, got, want):
    if got != want:
        conv = _qs if isinstance(want, Quaternion) else _s
        return {"n": n, "check": name, "got": conv(got), "expected": conv(want)}
    return None


def _float(n, got: complex, want, tol, imag_tol, name="value"):
    err = cf.rel_err(complex(got).real, want)
    if err > tol or not cf.imag_ok(complex(got), imag_tol):
        return {"n": n, "check": name, "got": repr(complex(got)), "expected": _s(want),
                "rel_err": err}
    return None


# ---------------------------------------------------------------------------
# checks; each returns a counterexample dict or None, or raises Skip


def chk_recurrence(ctx: Ctx):
    p = ctx.params
    for n in ctx.ns:
        bad = _exact(ctx, "term", n, sc.term(p, n), ctx.v(n))
        if bad:
            return bad
        if n >= 3:
            rhs = p.r * ctx.v(n - 1) + p.s * ctx.v(n - 2) + p.t * ctx.v(n - 3)
            bad = _exact(ctx, "recurrence", n, ctx.v(n), rhs)
            if bad:
                return bad


def chk_basis(ctx: Ctx):
    start = ctx.lo if ctx.params.t != 0 else max(ctx.lo, 2)
    for n in range(start, ctx.hi + 1):
        bad = _exact(ctx, "term_via_u", n, sc.term_via_u(ctx.params, n), ctx.v(n))
        if bad:
            return bad


def chk_sum(ctx: Ctx):
    ctx.need_delta()
    for n in ctx.ns:
        direct = sum((ctx.v(l) for l in range(n + 1)), Fraction(0))
        bad = _exact(ctx, "partial_sum", n, sc.partial_sum(ctx.params, n), direct)
        if bad:
            return bad


def chk_quat_lift(ctx: Ctx):
    for n in ctx.ns:
        want = Quaternion(ctx.v(n), ctx.v(n + 1), ctx.v(n + 2), ctx.v(n + 3))
        bad = _exact(ctx, "quat_term", n, qs.quat_term(ctx.params, n), want)
        if bad:
            return bad


def chk_quat_recurrence(ctx: Ctx):
    p = ctx.params
    for n in ctx.ns:
        if n >= 3:
            rhs = p.r * ctx.q(n - 1) + p.s * ctx.q(n - 2) + p.t * ctx.q(n - 3)
            bad = _exact(ctx, "quat recurrence", n, ctx.q(n), rhs)
            if bad:
                return bad


def chk_initial(ctx: Ctx):
    for n, q in enumerate(qs.initial_quats(ctx.params)):
        bad = _exact(ctx, "initial_quats", n, q, ctx.q(n))
        if bad:
            return bad


def chk_quat_sum(ctx: Ctx):
    ctx.need_delta()
    running = Quaternion(*(Fraction(0),) * 4)
    for l in range(ctx.lo):
        running = running + ctx.q(l)
    for n in ctx.ns:
        running = running + ctx.q(n)
        bad = _exact(ctx, "quat_partial_sum", n, qs.quat_partial_sum(ctx.params, n), running)
        if bad:
            return bad


def chk_binomial(ctx: Ctx):
    ctx.need_t()
    for n in range(ctx.lo, min(ctx.hi, 10) + 1):
        bad = _exact(ctx, "quat_term_3n", n, qs.quat_term_3n(ctx.params, n), ctx.q(3 * n))
        if bad:
            return bad


def chk_corollary(ctx: Ctx):
    for n in ctx.ns:
        bad = _exact(ctx, "corollary_term", n, qs.corollary_term(ctx.params, n), ctx.q(n + 2))
        if bad:
            return bad


def chk_genfun(ctx: Ctx):
    coeffs = genfun.expand(genfun.build_gf(ctx.params), ctx.hi + 1)
    for n in ctx.ns:
        bad = _exact(ctx, "genfun coefficient", n, coeffs[n], ctx.q(n))
        if bad:
            return bad
    back = genfun.multiply_denominator(genfun.build_gf(ctx.params), coeffs)
    zero = Quaternion(*(Fraction(0),) * 4)
    for n, got in enumerate(back):
        want = genfun.build_gf(ctx.params).numerator[n] if n < 3 else zero
        bad = _exact(ctx, "denominator * series", n, got, want)
        if bad:
            return bad


def chk_advance(ctx: Ctx):
    for n in ctx.ns:
        want = (ctx.v(n + 2), ctx.v(n + 1), ctx.v(n))
        got = me.advance_state(ctx.params, n)
        if got != want:
            return {"n": n, "check": "advance_state", "got": [_s(x) for x in got],
                    "expected": [_s(x) for x in want]}


def chk_structure(ctx: Ctx):
    start = max(ctx.lo, 1 if ctx.params.t != 0 else 2)
    for n in range(start, ctx.hi + 1):
        try:
            me.s_pow_structure(ctx.params, n)
        except me.IdentityMismatch as exc:
            return {"n": n, "check": "s_pow_structure", "detail": str(exc)}


def chk_qs_matrix(ctx: Ctx):
    for n in ctx.ns:
        try:
            me.qs_pow_identity(ctx.params, n)
        except me.IdentityMismatch as exc:
            return {"n": n, "check": "qs_pow_identity", "detail": str(exc)}


def chk_term_mod(ctx: Ctx):
    for m in ctx.moduli:
        mc = me.ModCtx(m)
        try:
            expected = [x for x in (mc.residue(ctx.v(n)) for n in ctx.ns)]
        except me.NonInvertibleDenominator:
            continue
        for n, want in zip(ctx.ns, expected):
            got = me.term_mod(ctx.params, n, mc)
            if got != want:
                return {"n": n, "check": f"term_mod m={m}", "got": got, "expected": want}


def chk_vieta(ctx: Ctx):
    ctx.need_disc()
    roots = cf.solve_cubic(ctx.params)
    al, w1, w2 = roots.as_tuple()
    r, s, t = (float(x) for x in (ctx.params.r, ctx.params.s, ctx.params.t))
    tol = ctx.tol.vieta_rel
    for label, got, want in (
        ("sum", al + w1 + w2, r),
        ("pair", al * w1 + al * w2 + w1 * w2, -s),
        ("product", al * w1 * w2, t),
    ):
        if abs(got - want) > tol * (1 + abs(want)):
            return {"check": f"vieta {label}", "got": repr(got), "expected": want}
    if w2 != w1.conjugate():
        return {"check": "conjugate pair", "got": repr((w1, w2))}


def chk_binet_number(ctx: Ctx):
    ctx.need_disc()
    for n in range(ctx.lo, ctx.hi + 1):
        z = cf.binet_number(ctx.params, n, complex_result=True)
        bad = _float(n, z, ctx.v(n), ctx.binet_tol(n), ctx.tol.imag_rel, "binet_number")
        if bad:
            return bad
        zr = cf.binet_number_residue(ctx.params, n) if ctx.params.t != 0 or n >= 2 else None
        if zr is not None:
            bad = _float(n, zr, ctx.v(n), ctx.binet_tol(n), ctx.tol.imag_rel, "residue form")
            if bad:
                return bad


def chk_binet_u(ctx: Ctx):
    ctx.need_disc()
    u = sc.terms(ctx.params.with_initial(0, 0, 1), ctx.hi + 1)
    for n in ctx.ns:
        z = cf.binet_u(ctx.params, n, complex_result=True)
        bad = _float(n, z, u[n], ctx.binet_tol(n), ctx.tol.imag_rel, "binet_u")
        if bad:
            return bad


def chk_binet_quat(ctx: Ctx):
    ctx.need_disc()
    for n in range(ctx.lo, min(ctx.hi, 30) + 1):
        got = cf.binet_quat(ctx.params, n)
        for comp, zg, want in zip("wxyz", got, ctx.q(n)):
            bad = _float(n, zg, want, ctx.binet_tol(n), ctx.tol.imag_rel, f"binet_quat.{comp}")
            if bad:
                return bad


def chk_jacobsthal(ctx: Ctx):
    if ctx.preset_name != "third-order-jacobsthal":
        raise Skip("only defined for the third-order Jacobsthal preset")
    for n in range(ctx.lo, min(ctx.hi, 30) + 1):
        got = cf.jacobsthal_binet_quat(n)
        for comp, zg, want in zip("wxyz", got, ctx.q(n)):
            bad = _float(n, zg, want, ctx.tol.binet_rel, ctx.tol.imag_rel, f"jacobsthal.{comp}")
            if bad:
                return bad


def chk_norm(ctx: Ctx):
    ctx.need_disc()
    for n in range(ctx.lo, min(ctx.hi, 30) + 1):
        z = cf.norm_closed(ctx.params, n, complex_result=True)
        want = ctx.q(n).norm2()
        bad = _float(n, z, want, ctx.binet_tol(n, ctx.tol.norm_rel), ctx.tol.imag_rel, "norm")
        if bad:
            return bad


def chk_table1(ctx: Ctx):
    name = ctx.need_preset()
    rep = cf.table1_report(name, ctx.tol)
    if name == "third-order-jacobsthal":
        ok = (
            abs(rep["alpha"] - 2.0) <= ctx.tol.radical_abs
            and rep["matches_cardano_a"]
            and rep["discrepancy"] is not None
        )
    else:
        ok = rep["matches_root"]
    if not ok:
        return {"check": "table1", "report": rep}


def chk_table2(ctx: Ctx):
    name = ctx.need_preset()
    rep = genfun.table2_check(name)
    if not rep["match"]:
        return {"check": "table2", "report": rep}


def chk_table3(ctx: Ctx):
    name = ctx.need_preset()
    for n in ctx.ns:
        bad = _exact(ctx, "table3", n, qs.table3_sum(name, ctx.params, n),
                     qs.quat_partial_sum(ctx.params, n))
        if bad:
            return bad


REGISTRY: dict[str, Callable[[Ctx], dict | None]] = {
    "eq1-recurrence": chk_recurrence,
    "eq3-basis": chk_basis,
    "eq12-sum": chk_sum,
    "eq6-quat-lift": chk_quat_lift,
    "eq7-quat-recurrence": chk_quat_recurrence,
    "eq8-initial": chk_initial,
    "eq11-genfun": chk_genfun,
    "eq13-quat-sum": chk_quat_sum,
    "eq19-binomial": chk_binomial,
    "corollary": chk_corollary,
    "eq14-advance": chk_advance,
    "eq15-structure": chk_structure,
    "eq17-qs-matrix": chk_qs_matrix,
    "mod-term": chk_term_mod,
    "roots-vieta": chk_vieta,
    "eq2-binet-number": chk_binet_number,
    "eq4-binet-u": chk_binet_u,
    "eq10-binet-quat": chk_binet_quat,
    "eq9-jacobsthal-binet": chk_jacobsthal,
    "eq18-norm": chk_norm,
    "table1-radicals": chk_table1,
    "table2-golden": chk_table2,
    "table3-golden": chk_table3,
}


def random_params(count: int, seed: int = 0, bound: int = 3) -> list[SequenceParams]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = SequenceParams(*(rng.randint(-bound, bound) for _ in range(6)))
        if p.t == 0 or sc.delta(p) == 0 or cf.discriminant(p) <= 0:
            continue
        out.append(p)
    return out


def default_param_sets(seed: int = 0, count: int = 10) -> list[SequenceParams]:
    return list(PRESETS.values()) + random_params(count, seed)


def run(param_sets, lo: int = 0, hi: int = 60, tol: cf.Tolerances = cf.DEFAULT_TOL,
        moduli=MODULI) -> dict:
    """Run every registered identity over every parameter set.

    Each identity appears once in the report; its status is ``fail`` if any
    parameter set fails, ``pass`` if at least one passes, else ``skipped``.
    """
    records = []
    for ident, check in REGISTRY.items():
        passed, skipped, failure = [], [], None
        for p in param_sets:
            ctx = Ctx(p, lo, hi, tol, tuple(moduli))
            try:
                bad = check(ctx)
            except Skip as exc:
                skipped.append({"params": str(p), "reason": str(exc)})
                continue
            if bad is not None:
                failure = {"params": str(p), **bad}
                break
            passed.append(str(p))
        if failure is not None:
            status = "fail"
        elif passed:
            status = "pass"
        else:
            status = "skipped"
        records.append({
            "id": ident,
            "status": status,
            "counterexample": failure,
            "params": passed,
            "skipped": skipped,
            "n_range": [lo, hi],
        })
    return {"identities": records, "rejection_rule": REJECTION_RULE}


def all_passed(report: dict) -> bool:
    return all(r["status"] != "fail" for r in report["identities"])
