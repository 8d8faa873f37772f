"""The acceptance battery: every verification the package promises, as
structured checks runnable from the CLI (`eisenzero verify`) or pytest.

Suites:
  core  reduced scopes (fast, < 5 minutes)
  full  the complete battery at the documented scopes and tolerances

Each criterion function takes a VerifyContext and returns a list of Check
records; scan results are cached across criteria. The environment variable
EISENZERO_TAMPER_CHECK=<check-id> forces that check to fail (negative
control for the exit-status contract)."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field as dc_field

import numpy as np

from ._coeffs import EULER_GAMMA
from .constant_term import (
    HeckeSpec,
    c_scatter,
    hecke_det_direct,
    hecke_det_product,
    hecke_entire_with_scale,
    hecke_line_with_scale,
    maass_selberg_norm_real,
    phi,
    phi_center_value,
    real_zero_threshold,
)
from .fields import FIELD_Q, QUADRATIC_FIELDS, FieldSpec
from .report import Check, VerifyReport, make_check
from .spectral import astar_all, astar_kronecker, astar_spectral, monotonicity_check
from .zerofind import (
    Rect,
    ScanConfig,
    certify_simple,
    count_rectangle,
    find_real_zero,
    scan_line_auto,
    threshold_crossing,
    winding_number,
)
from .zeta import dirichlet_l, hurwitz_block, lambda_completed, lambda_K, lattice_zeta_bruteforce
from .zeta import log_xi_derivative_at_zero

TAMPER_ENV = "EISENZERO_TAMPER_CHECK"

ASTAR_Q_EXACT = 4.0 * math.pi * math.exp(-EULER_GAMMA)


@dataclass
class VerifyContext:
    scope: str = "full"
    _scans: dict = dc_field(default_factory=dict)
    _certified: set = dc_field(default_factory=set)

    @property
    def full(self) -> bool:
        return self.scope == "full"

    def scan(self, field: FieldSpec, a: float, t_max: float,
             step: float = 0.05):
        key = (field.label, a, t_max, step)
        if key not in self._scans:
            cfg = ScanConfig(t_min=0.5, t_max=t_max, step=step)
            self._scans[key] = scan_line_auto(field, a, cfg)
        return self._scans[key]

    def certified_scan(self, field: FieldSpec, a: float, t_max: float):
        recs = self.scan(field, a, t_max)
        key = (field.label, a, t_max)
        if key not in self._certified:
            for rec in recs:
                certify_simple(rec)
            self._certified.add(key)
        return recs


# ---------------------------------------------------------------------------
# criterion 1: functional equations


def _fe_grid(n: int, im_max: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    re = rng.uniform(-0.8, 2.0, n)
    im = rng.uniform(0.4, im_max, n) * rng.choice([-1.0, 1.0], n)
    return re + 1j * im


def crit_functional_equations(ctx: VerifyContext) -> list[Check]:
    checks = []
    grid = _fe_grid(50, 50.0, 101)
    v1 = lambda_completed(grid)
    v2 = lambda_completed(1.0 - grid)
    worst = float((np.abs(v1 - v2) / np.abs(v1)).max())
    checks.append(make_check(
        "fe-lambda-q", "Lambda(s) = Lambda(1-s) on a 50-point grid, |Im s| <= 50",
        worst, 0.0, 1e-10, worst <= 1e-10,
    ))
    Ds = QUADRATIC_FIELDS if ctx.full else {1: QUADRATIC_FIELDS[1], 3: QUADRATIC_FIELDS[3]}
    for D, f in Ds.items():
        grid = _fe_grid(50, 30.0, 200 + D)
        v1 = lambda_K(f, grid)
        v2 = lambda_K(f, 1.0 - grid)
        worst = float((np.abs(v1 - v2) / np.abs(v1)).max())
        checks.append(make_check(
            f"fe-lambda-k-{D}", "Lambda_K(s) = Lambda_K(1-s) on a 50-point grid, |Im s| <= 30",
            worst, 0.0, 1e-10, worst <= 1e-10,
        ))
    return checks


# criterion 2: Davenport identity


def crit_davenport(ctx: VerifyContext) -> list[Check]:
    d0, _ = log_xi_derivative_at_zero(FIELD_Q)
    measured = 1.0 + d0
    expected = (math.log(4.0 * math.pi) - EULER_GAMMA) / 2.0
    diff = abs(measured - expected)
    return [make_check(
        "davenport", "1 + xi'(0)/xi(0) = (log 4 pi - gamma)/2",
        measured, expected, 1e-8, diff <= 1e-8,
    )]


# criterion 3: a* for Q


def crit_astar_q(ctx: VerifyContext) -> list[Check]:
    v = astar_spectral(FIELD_Q).value
    rel = abs(v - ASTAR_Q_EXACT) / ASTAR_Q_EXACT
    checks = [make_check(
        "astar-q", "a* = 4 pi e^(-gamma) (spectral route)",
        v, ASTAR_Q_EXACT, 1e-8, rel <= 1e-8,
    )]
    # printed value is the truncation 7.055...; consistency means v in [7.055, 7.056)
    ok = abs(v - 7.0555) <= 5e-4
    checks.append(make_check(
        "astar-q-printed", "a* truncates to the printed 7.055",
        v, 7.0555, 5e-4, ok,
    ))
    return checks


# criterion 4: a*_K closed forms and three-route agreement


def crit_astar_k(ctx: VerifyContext) -> list[Check]:
    checks = []
    printed = {1: (3.00681, 1e-5), 2: (3.2581, 1e-4)}
    Ds = list(QUADRATIC_FIELDS) if ctx.full else [1, 2, 3]
    for D in Ds:
        f = QUADRATIC_FIELDS[D]
        routes = astar_all(f)
        vals = [r.value for r in routes]
        spread = (max(vals) - min(vals)) / min(vals)
        checks.append(make_check(
            f"astar-k-routes-{D}",
            "spectral, center-root and Kronecker-limit routes agree",
            spread, 0.0, 1e-6, spread <= 1e-6,
        ))
        if D in printed:
            target, tol = printed[D]
            v = astar_kronecker(f).value
            rel = abs(v - target) / target
            checks.append(make_check(
                f"astar-k-printed-{D}",
                f"a*_K(D={D}) matches the printed {target}",
                v, target, tol, rel <= tol,
            ))
    return checks


# criteria 5/6: all zeros on the critical line by count/scan agreement


def crit_zeros_online_q(ctx: VerifyContext) -> list[Check]:
    checks = []
    heights = (1.0, 3.0, 7.0555, 10.0) if ctx.full else (1.0, 10.0)
    t_max = 30.0 if ctx.full else 20.0
    for a in heights:
        recs = ctx.certified_scan(FIELD_Q, a, t_max)
        n = count_rectangle(FIELD_Q, a, Rect(0.2, 0.8, 0.5, t_max))
        checks.append(make_check(
            f"zeros-online-q-a{a}-count",
            "argument-principle count equals the number of line zeros",
            n, len(recs), 0.0, n == len(recs),
        ))
        checks.append(make_check(
            f"zeros-online-q-a{a}-simple", "every located zero is simple",
            sum(r.simple for r in recs), len(recs), 0.0, all(r.simple for r in recs),
        ))
        worst = max((r.residual for r in recs), default=0.0)
        checks.append(make_check(
            f"zeros-online-q-a{a}-residual", "normalized residuals below 1e-9",
            worst, 0.0, 1e-9, worst < 1e-9,
        ))
    return checks


def crit_zeros_online_k(ctx: VerifyContext) -> list[Check]:
    checks = []
    if ctx.full:
        combos = [(D, a) for D in QUADRATIC_FIELDS for a in (1.0, 5.0)]
        t_max = 20.0
    else:
        combos = [(1, 1.0), (3, 1.0)]
        t_max = 10.0
    for D, a in combos:
        f = QUADRATIC_FIELDS[D]
        recs = ctx.scan(f, a, t_max)
        n = count_rectangle(f, a, Rect(0.4, 1.6, 0.5, t_max))
        checks.append(make_check(
            f"zeros-online-k-{D}-a{a}",
            "argument-principle count equals the number of line zeros (Re s = 1)",
            n, len(recs), 0.0, n == len(recs),
        ))
    return checks


# criterion 7: real-zero threshold behavior


def crit_real_zero_threshold(ctx: VerifyContext) -> list[Check]:
    checks = []
    f1 = QUADRATIC_FIELDS[1]

    absent_q = [find_real_zero(FIELD_Q, a) for a in (2.0, 5.0)]
    checks.append(make_check(
        "real-zero-q-absent", "no real zero for a in {2, 5} (a < a*)",
        [r is not None for r in absent_q], [False, False], 0.0,
        all(r is None for r in absent_q),
    ))
    present = [find_real_zero(FIELD_Q, a) for a in (8.0, 10.0, 100.0)]
    rhos = [r.re if r is not None else None for r in present]
    ok = (all(r is not None for r in present)
          and all(0.5 < r.re < 1.0 for r in present)
          and rhos[0] <= rhos[1] <= rhos[2])
    checks.append(make_check(
        "real-zero-q-present",
        "exactly one rho_a in (1/2, 1) for a in {8, 10, 100}, nondecreasing",
        rhos, "rho_8 <= rho_10 <= rho_100", 0.0, ok,
    ))

    r2 = find_real_zero(f1, 2.0)
    r31 = find_real_zero(f1, 3.1)
    r10 = find_real_zero(f1, 10.0)
    okk = r2 is None and r31 is not None and r10 is not None \
        and 1.0 < r31.re < 2.0 and 1.0 < r10.re < 2.0 and r31.re <= r10.re
    checks.append(make_check(
        "real-zero-k-presence",
        "Q(i): none at a=2, one rho_a in (1, 2) at a in {3.1, 10}",
        [r2 is None, None if r31 is None else r31.re, None if r10 is None else r10.re],
        "none, present, present", 0.0, okk,
    ))

    if ctx.full:
        for f, lo, hi in ((FIELD_Q, 6.5, 7.5), (f1, 2.0, 3.0)):
            bracket = threshold_crossing(f, lo, hi, tol=2e-4)
            target = real_zero_threshold(f)
            diff = abs(bracket - target)
            checks.append(make_check(
                f"real-zero-threshold-{f.label}",
                "bisection on a locates the real-zero threshold",
                bracket, target, 1e-3, diff <= 1e-3,
            ))
    return checks


# criterion 8: center values vs eps-extrapolation


def _center_extrapolated(field: FieldSpec, a: float) -> float:
    """phi at the center by extrapolating small off-center evaluations.

    phi(center + e) is even in e. For Q, two points at e = 1e-4, 1e-5
    suffice (the single zeta pole term is relatively accurate). For the K
    fields the L-factor near s=1 is a cancelling combination of 1/e-sized
    Hurwitz terms, so small e amplifies its fixed ~1e-12 relative error;
    larger offsets with one more Richardson level keep the oracle at ~1e-9.
    Offsets are re-derived from the stored points (exact in doubles).
    """
    center = field.critical_line_re

    def f(eps: float) -> tuple[float, float]:
        s = complex(center + eps, 0.0)
        return float(np.real(phi(field, a, s))), s.real - center

    if field.is_rational:
        f1, e1 = f(1e-4)
        f2, e2 = f(1e-5)
        return (f2 * e1 * e1 - f1 * e2 * e2) / (e1 * e1 - e2 * e2)
    vals = [f(1e-2), f(5e-3), f(2.5e-3)]
    level = vals
    fac = 4.0
    while len(level) > 1:
        nxt = []
        for (fa, ea), (fb, eb) in zip(level, level[1:]):
            nxt.append(((fac * fb - fa) / (fac - 1.0), eb))
        level = nxt
        fac *= 4.0
    return level[0][0]


def crit_center_value(ctx: VerifyContext) -> list[Check]:
    checks = []
    targets = [(FIELD_Q, a) for a in (2.0, 7.0555, 20.0)]
    for D in (1, 2, 3):
        targets += [(QUADRATIC_FIELDS[D], a) for a in (2.0, 7.0555, 20.0)]
    for f, a in targets:
        closed = phi_center_value(f, a)
        extrap = _center_extrapolated(f, a)
        diff = abs(closed - extrap)
        checks.append(make_check(
            f"center-value-{f.label}-a{a}",
            "phi at the center equals the closed-form ln(a/T) limit",
            closed, extrap, 1e-8, diff <= 1e-8,
        ))
    return checks


# criterion 9: Hecke Gamma_0(p)


def _hecke_scan_count(spec: HeckeSpec, t_max: float) -> tuple[int, int]:
    step = 0.05
    n = int(math.floor((t_max - 0.5) / step))
    ts = 0.5 + step * np.arange(n + 1)
    fv, _ = hecke_line_with_scale(spec, ts)
    n_scan = 0
    for i in np.nonzero(np.sign(fv[:-1]) * np.sign(fv[1:]) < 0)[0]:
        n_scan += 1
    cfg = ScanConfig(t_min=0.5, t_max=t_max)
    n_count = winding_number(
        lambda pts: hecke_entire_with_scale(spec, pts),
        Rect(0.2, 0.8, 0.5, t_max), cfg,
    )
    return n_scan, n_count


def crit_hecke(ctx: VerifyContext) -> list[Check]:
    checks = []
    rng = np.random.default_rng(202)
    pts = rng.uniform(0.2, 0.8, 20) + 1j * rng.uniform(-20.0, 20.0, 20)
    for p in (2, 3):
        d1 = hecke_det_direct(p, 1.3, pts)
        d2 = hecke_det_product(p, 1.3, pts)
        worst = float((np.abs(d1 - d2) / np.abs(d1)).max())
        checks.append(make_check(
            f"hecke-identity-p{p}",
            "expanded and factored Gamma_0(p) determinants agree",
            worst, 0.0, 1e-10, worst <= 1e-10,
        ))
    combos = [(p, sg, a) for p in (2, 3) for sg in (1, -1) for a in (1.0, 2.0)] \
        if ctx.full else [(2, 1, 1.0), (2, -1, 1.0)]
    t_max = 20.0 if ctx.full else 10.0
    for p, sg, a in combos:
        spec = HeckeSpec(p=p, sign=sg, a=a)
        n_scan, n_count = _hecke_scan_count(spec, t_max)
        checks.append(make_check(
            f"hecke-zeros-p{p}-s{sg:+d}-a{a}",
            "factor zeros lie on Re s = 1/2 (count/scan agreement)",
            n_count, n_scan, 0.0, n_count == n_scan,
        ))
    return checks


# criterion 10: Maass-Selberg positivity


def _ms_line_batch(a: float, rs: np.ndarray) -> np.ndarray:
    s0 = 0.5 + 1j * rs
    h = 1e-3
    c0 = c_scatter(s0)
    d1 = np.log(c_scatter(s0 + h) / c_scatter(s0 - h)) / (2.0 * h)
    d2 = np.log(c_scatter(s0 + h / 2.0) / c_scatter(s0 - h / 2.0)) / h
    cpc = (4.0 * d2 - d1) / 3.0
    la = math.log(a)
    osc = (c0 * np.exp(-2j * rs * la)).imag / rs
    return 2.0 * la - cpc.real - osc


def crit_ms_positivity(ctx: VerifyContext) -> list[Check]:
    checks = []
    rs = np.round(np.arange(0.2, 30.0 + 1e-9, 0.1), 10)
    heights = (1.0, 2.0, 10.0) if ctx.full else (2.0,)
    for a in heights:
        vals = _ms_line_batch(a, rs)
        worst = float(vals.min())
        checks.append(make_check(
            f"ms-positivity-line-a{a}",
            "Maass-Selberg norm positive on the critical line",
            worst, "> 0", 0.0, worst > 0.0,
        ))
    vals = [maass_selberg_norm_real(10.0, s) for s in (0.6, 0.75, 0.9)]
    checks.append(make_check(
        "ms-positivity-real",
        "Maass-Selberg norm positive at real points (a=10)",
        vals, "> 0", 0.0, min(vals) > 0.0,
    ))
    return checks


# criterion 11: eigenvalue-ladder monotonicity


def crit_ladder_monotonic(ctx: VerifyContext) -> list[Check]:
    checks = []
    jobs = [(FIELD_Q, [1.0, 2.0, 4.0, 8.0], 27.0, 10)]
    if ctx.full:
        jobs.append((QUADRATIC_FIELDS[1], [1.0, 2.0, 4.0], 23.0, 8))
    for f, grid, t_max, j_max in jobs:
        rep = monotonicity_check(f, grid, t_max, max_index=j_max, strict_margin=1e-6)
        checks.extend(rep.checks)
    return checks


# criterion 12: lattice oracle


def crit_lattice_oracle(ctx: VerifyContext) -> list[Check]:
    checks = []
    for D in (1, 3):
        f = QUADRATIC_FIELDS[D]
        direct = lattice_zeta_bruteforce(f, 2.0 + 0j, 2000.0)
        factored = complex(hurwitz_block(np.array([2.0 + 0j]), np.array([1.0]))[0, 0]) \
            * complex(dirichlet_l(2.0 + 0j, f.character))
        diff = abs(direct - factored)
        checks.append(make_check(
            f"lattice-oracle-{D}",
            "truncated lattice sum matches zeta(2) L(2, chi) at R=2000",
            [direct.real, direct.imag], [factored.real, factored.imag],
            1e-6, diff <= 1e-6,
        ))
    return checks


# ---------------------------------------------------------------------------
# registry and runner

CRITERIA = [
    ("functional-equations", crit_functional_equations, True),
    ("davenport", crit_davenport, True),
    ("astar-q", crit_astar_q, True),
    ("astar-k", crit_astar_k, True),
    ("zeros-online-q", crit_zeros_online_q, True),
    ("zeros-online-k", crit_zeros_online_k, True),
    ("real-zero-threshold", crit_real_zero_threshold, True),
    ("center-value", crit_center_value, True),
    ("hecke", crit_hecke, True),
    ("ms-positivity", crit_ms_positivity, True),
    ("ladder-monotonic", crit_ladder_monotonic, True),
    ("lattice-oracle", crit_lattice_oracle, True),
]


def _apply_tamper(checks: list[Check]) -> None:
    tamper = os.environ.get(TAMPER_ENV)
    if not tamper:
        return
    for c in checks:
        if c.id == tamper:
            c.status = "fail"
            c.tolerance = 0.0
            c.detail = "tolerance tampered via EISENZERO_TAMPER_CHECK"


def run_criterion(name: str, scope: str = "full") -> list[Check]:
    ctx = VerifyContext(scope=scope)
    for cid, fn, _ in CRITERIA:
        if cid == name:
            checks = fn(ctx)
            _apply_tamper(checks)
            return checks
    raise KeyError(f"unknown criterion {name!r}")


def run_suite(scope: str = "full") -> VerifyReport:
    if scope not in ("core", "full"):
        raise ValueError("suite must be 'core' or 'full'")
    ctx = VerifyContext(scope=scope)
    report = VerifyReport(suite=scope)
    for cid, fn, in_core in CRITERIA:
        if scope == "core" and not in_core:
            continue
        report.checks.extend(fn(ctx))
    _apply_tamper(report.checks)
    return report
