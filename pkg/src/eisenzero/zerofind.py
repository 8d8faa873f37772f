"""Locate, refine, count, and certify zeros of the constant-term functions.

Three cooperating methods:

  * critical-line scanning of the real rotated form
    F(a,t) = Re(Lambda(1+2it) a^it)        (Q,  phi0(a,1/2+it) = 2 sqrt(a) F)
    F(a,t) = Re(Lambda_K(1+it) a^it)       (K,  phiK(a,1+it)   = 2 a F)
    with sign-change bracketing and bisection;

  * argument-principle counting of the entire normalizations G0/G_K over
    rectangle boundaries, by adaptive phase tracking;

  * real-axis bisection inside the real-zero window.

Residuals and boundary-proximity checks are |G| in units of the sum of the
magnitudes of G's two constituent terms (see `entire_phi_with_scale`), the
conditioning-aware normalization; raw |G| decays like the gamma factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .constant_term import (
    entire_phi_with_scale,
    maass_selberg_norm_line,
    phi,
    phi_center_value,
    real_zero_threshold,
)
from .errors import (
    AmbiguousBracket,
    BoundaryNearZero,
    DomainError,
    PhaseStepExceeded,
    StepTooCoarse,
)
from .fields import FieldSpec
from .zeta import completed_zeta

LINE_EXCLUSION = 1e-6


@dataclass(frozen=True)
class ScanConfig:
    """Scan window, step, refinement tolerance, and winding parameters."""

    t_min: float = 0.5
    t_max: float = 30.0
    step: float = 0.05
    refine_tol: float = 1e-11
    winding_max_phase_step: float = math.pi / 2.0
    exclusion_radius: float = 0.05
    max_subdivision_depth: int = 12

    def __post_init__(self):
        if self.step <= 0.0:
            raise DomainError("step must be positive")
        if not self.exclusion_radius > 0.0:
            raise DomainError("exclusion radius must be positive")
        if self.t_min < self.exclusion_radius:
            raise DomainError("t_min must be >= exclusion radius")
        if self.t_max < self.t_min:
            raise DomainError("t_max must be >= t_min")

    @property
    def boundary_min_residual(self) -> float:
        return 10.0 * self.refine_tol


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle re_lo <= Re s <= re_hi, t_lo <= Im s <= t_hi."""

    re_lo: float
    re_hi: float
    t_lo: float
    t_hi: float

    def __post_init__(self):
        if not (self.re_hi > self.re_lo and self.t_hi > self.t_lo):
            raise DomainError("degenerate rectangle")


@dataclass
class ZeroRecord:
    """A refined zero of phi(a, .): location, normalized residual, implied
    eigenvalue, and (after certification) its simplicity flag."""

    field: FieldSpec
    a: float
    kind: str                 # "line" | "real"
    re: float
    im: float
    residual: float
    simple: bool
    mu: float
    method: str               # "SignChange" | "Bisection"
    ms_norm: float | None = dc_field(default=None, repr=False)

    @property
    def location(self) -> complex:
        return complex(self.re, self.im)

    @property
    def t(self) -> float:
        return self.im

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.label,
            "a": self.a,
            "kind": self.kind,
            "re": self.re,
            "im": self.im,
            "residual": self.residual,
            "simple": self.simple,
            "mu": self.mu,
            "method": self.method,
        }


def mu_from_location(field: FieldSpec, kind: str, re: float, im: float) -> float:
    """Zero -> cut-off-Laplacian eigenvalue map: rho(1-rho) for Q (1/4 + t^2
    on the line), rho(2-rho) for K (1 + t^2 on the line)."""
    if field.is_rational:
        return 0.25 + im * im if kind == "line" else re * (1.0 - re)
    return 1.0 + im * im if kind == "line" else re * (2.0 - re)


# ---------------------------------------------------------------------------
# the real rotated line form


def line_function(field: FieldSpec, a: float, t):
    """Real form F(a, t) whose sign changes locate the critical-line zeros.

    Q: phi0(a, 1/2+it) = 2 sqrt(a) F(a,t);  K: phiK(a, 1+it) = 2 a F(a,t).
    """
    vals, _ = line_with_scale(field, a, t)
    if np.isscalar(t) or isinstance(t, float):
        return float(vals[0])
    return vals


def line_with_scale(field: FieldSpec, a: float, t):
    """(F, |Lambda-term|) pairs; F/scale is the conditioning-aware residual."""
    tt = np.atleast_1d(np.asarray(t, dtype=np.float64)).ravel()
    if (np.abs(tt) < LINE_EXCLUSION).any():
        raise DomainError("line_function excluded near the t=0 center")
    k = 2.0 if field.is_rational else 1.0
    lam = completed_zeta(field, 1.0 + 1j * k * tt)
    z = lam * np.exp(1j * tt * math.log(a))
    return z.real.copy(), np.abs(z)


def _g_residual(field: FieldSpec, a: float, s: complex) -> float:
    vals, scales = entire_phi_with_scale(field, a, np.array([s]))
    return float(np.abs(vals[0]) / scales[0])


# ---------------------------------------------------------------------------
# critical-line scan


def scan_line(field: FieldSpec, a: float, config: ScanConfig) -> list[ZeroRecord]:
    """Bracket every sign change of the line form on [t_min, t_max] at the
    configured step and refine each bracket by bisection.

    Raises StepTooCoarse when two refined zeros land closer than 2*step
    (the grid cannot have separated them reliably).
    """
    if a < 1.0:
        raise DomainError("scan_line requires a >= 1")
    if config.t_max <= config.t_min:
        return []
    n = int(math.floor((config.t_max - config.t_min) / config.step))
    ts = config.t_min + config.step * np.arange(n + 1)
    if ts[-1] < config.t_max - 1e-12:
        ts = np.append(ts, config.t_max)
    fv, _ = line_with_scale(field, a, ts)

    records: list[ZeroRecord] = []
    for i in np.nonzero(np.sign(fv[:-1]) * np.sign(fv[1:]) < 0)[0]:
        lo, hi = float(ts[i]), float(ts[i + 1])
        flo = float(fv[i])
        while hi - lo > 2.0 * config.refine_tol:
            mid = 0.5 * (lo + hi)
            fm = line_function(field, a, mid)
            if fm == 0.0:
                lo = hi = mid
                break
            if (fm > 0.0) == (flo > 0.0):
                lo, flo = mid, fm
            else:
                hi = mid
        t0 = 0.5 * (lo + hi)
        s0 = complex(field.critical_line_re, t0)
        records.append(ZeroRecord(
            field=field, a=a, kind="line",
            re=field.critical_line_re, im=t0,
            residual=_g_residual(field, a, s0),
            simple=False,
            mu=mu_from_location(field, "line", field.critical_line_re, t0),
            method="SignChange",
        ))

    for r1, r2 in zip(records, records[1:]):
        if r2.im - r1.im < 2.0 * config.step:
            raise StepTooCoarse(
                f"zeros at t={r1.im:.6f}, {r2.im:.6f} within 2*step={2 * config.step};"
                " rescan with a smaller step"
            )
    return records


def scan_line_auto(field: FieldSpec, a: float, config: ScanConfig,
                   max_halvings: int = 6) -> list[ZeroRecord]:
    """scan_line with automatic step halving on StepTooCoarse."""
    cfg = config
    for _ in range(max_halvings):
        try:
            return scan_line(field, a, cfg)
        except StepTooCoarse:
            cfg = ScanConfig(
                t_min=cfg.t_min, t_max=cfg.t_max, step=cfg.step / 2.0,
                refine_tol=cfg.refine_tol,
                winding_max_phase_step=cfg.winding_max_phase_step,
                exclusion_radius=cfg.exclusion_radius,
                max_subdivision_depth=cfg.max_subdivision_depth,
            )
    return scan_line(field, a, cfg)


# ---------------------------------------------------------------------------
# argument-principle counting


def _wrap_phase(d: np.ndarray) -> np.ndarray:
    return (d + np.pi) % (2.0 * np.pi) - np.pi


def winding_number(eval_fn, rect: Rect, config: ScanConfig) -> int:
    """Winding number of an entire function around the rectangle boundary.

    eval_fn(points) must return (values, scales). Phase is tracked on
    adaptively subdivided boundary samples; any per-segment phase step above
    config.winding_max_phase_step triggers midpoint insertion, up to
    config.max_subdivision_depth rounds.
    """
    corners = [
        complex(rect.re_lo, rect.t_lo),
        complex(rect.re_hi, rect.t_lo),
        complex(rect.re_hi, rect.t_hi),
        complex(rect.re_lo, rect.t_hi),
    ]
    pts: list[complex] = []
    for c0, c1 in zip(corners, corners[1:] + corners[:1]):
        n = max(16, int(math.ceil(abs(c1 - c0) / 0.08)))
        seg = c0 + (c1 - c0) * np.arange(n) / n
        pts.extend(seg.tolist())
    pts.append(pts[0])

    pts_arr = np.asarray(pts, dtype=np.complex128)
    vals, scales = eval_fn(pts_arr)
    vals = np.asarray(vals, dtype=np.complex128)
    rel = np.abs(vals) / np.maximum(scales, 1e-300)
    if rel.min() < config.boundary_min_residual:
        raise BoundaryNearZero(
            f"min normalized |G| on boundary = {rel.min():.3g} "
            f"< {config.boundary_min_residual:.3g}"
        )

    phases = np.angle(vals)
    for _ in range(config.max_subdivision_depth):
        d = _wrap_phase(np.diff(phases))
        bad = np.abs(d) > config.winding_max_phase_step
        if not bad.any():
            total = float(d.sum())
            w = total / (2.0 * math.pi)
            if abs(w - round(w)) > 0.05:
                raise PhaseStepExceeded(f"winding sum {w:.4f} is not near an integer")
            return int(round(w))
        idx = np.nonzero(bad)[0]
        mids = 0.5 * (pts_arr[idx] + pts_arr[idx + 1])
        mvals, mscales = eval_fn(mids)
        mvals = np.asarray(mvals, dtype=np.complex128)
        mrel = np.abs(mvals) / np.maximum(mscales, 1e-300)
        if mrel.min() < config.boundary_min_residual:
            raise BoundaryNearZero(
                f"min normalized |G| on boundary = {mrel.min():.3g} "
                f"< {config.boundary_min_residual:.3g}"
            )
        pts_arr = np.insert(pts_arr, idx + 1, mids)
        vals = np.insert(vals, idx + 1, mvals)
        phases = np.angle(vals)
    raise PhaseStepExceeded(
        f"phase step above {config.winding_max_phase_step:.3f} after "
        f"{config.max_subdivision_depth} subdivision rounds"
    )


def count_rectangle(field: FieldSpec, a: float, rect: Rect,
                    config: ScanConfig | None = None) -> int:
    """Number of zeros of the entire normalization G inside the rectangle,
    by boundary winding. The boundary must keep clear of the removable
    center (where the evaluation of G is a cancelling ratio and, at the
    threshold height, G itself has its double zero)."""
    cfg = config or ScanConfig(t_min=max(abs(rect.t_lo), 0.05), t_max=max(abs(rect.t_hi), 0.1))
    for x in (field.critical_line_re,):
        on_vertical = min(abs(x - rect.re_lo), abs(x - rect.re_hi)) < cfg.exclusion_radius \
            and rect.t_lo - cfg.exclusion_radius < 0.0 < rect.t_hi + cfg.exclusion_radius
        on_horizontal = rect.re_lo - cfg.exclusion_radius < x < rect.re_hi + cfg.exclusion_radius \
            and min(abs(rect.t_lo), abs(rect.t_hi)) < cfg.exclusion_radius
        if on_vertical or on_horizontal:
            raise DomainError(
                f"rectangle boundary passes within the exclusion radius of s={x}"
            )

    def fn(points):
        return entire_phi_with_scale(field, a, points)

    return winding_number(fn, rect, cfg)


# ---------------------------------------------------------------------------
# real-axis zeros


def _real_phi(field: FieldSpec, a: float, sigma: float) -> float:
    return float(np.real(phi(field, a, complex(sigma, 0.0))))


def find_real_zero(field: FieldSpec, a: float, config: ScanConfig | None = None,
                   confirm_absent: bool = True) -> ZeroRecord | None:
    """The real zero rho_a in the window, if present (a above the threshold).

    Samples phi at the center (closed form), 64 interior points, and a
    geometric approach to the right endpoint (phi -> -inf there); a single
    sign change is refined by bisection. More than one crossing raises
    AmbiguousBracket. With no crossing, a rectangle count over the window
    strip confirms absence (unless confirm_absent=False).
    """
    if a < 1.0:
        raise DomainError("find_real_zero requires a >= 1")
    cfg = config or ScanConfig()
    lo, hi = field.real_zero_window
    width = hi - lo

    xs = [lo]
    fs = [phi_center_value(field, a)]
    for k in range(1, 65):
        x = lo + width * k / 65.0
        xs.append(x)
        fs.append(_real_phi(field, a, x))
    # approach the right endpoint geometrically until phi turns negative
    gap = hi - xs[-1]
    probe = gap
    for _ in range(48):
        probe *= 0.5
        x = hi - probe
        fx = _real_phi(field, a, x)
        xs.append(x)
        fs.append(fx)
        if fx < 0.0:
            break

    signs = np.sign(fs)
    crossings = [i for i in range(len(xs) - 1)
                 if signs[i] != 0 and signs[i + 1] != 0 and signs[i] != signs[i + 1]]
    if len(crossings) > 1:
        raise AmbiguousBracket(
            f"{len(crossings)} sign changes in the real window for a={a}; "
            "theory guarantees at most one"
        )
    if not crossings:
        if confirm_absent:
            strip = Rect(lo + 0.1 * width, hi - 0.04 * width, -0.2, 0.2)
            n = count_rectangle(field, a, strip, cfg)
            if n != 0:
                raise AmbiguousBracket(
                    f"window sampling found no crossing but the strip count is {n}"
                )
        return None

    i = crossings[0]
    xlo, xhi = xs[i], xs[i + 1]
    flo = fs[i]
    while xhi - xlo > 2.0 * cfg.refine_tol:
        mid = 0.5 * (xlo + xhi)
        fm = _real_phi(field, a, mid)
        if fm == 0.0:
            xlo = xhi = mid
            break
        if (fm > 0.0) == (flo > 0.0):
            xlo, flo = mid, fm
        else:
            xhi = mid
    rho = 0.5 * (xlo + xhi)
    return ZeroRecord(
        field=field, a=a, kind="real", re=rho, im=0.0,
        residual=_g_residual(field, a, complex(rho, 0.0)),
        simple=False,
        mu=mu_from_location(field, "real", rho, 0.0),
        method="Bisection",
    )


# ---------------------------------------------------------------------------
# certification


def certify_simple(record: ZeroRecord, config: ScanConfig | None = None) -> bool:
    """True iff a shrinking pair of boxes around the zero each count exactly
    one zero and the normalized |G'| clears 1e-8 (central difference, step
    1e-6). For line records the Maass-Selberg norm is recorded on the
    record as corroboration (Q case)."""
    cfg = config or ScanConfig()
    field, a = record.field, record.a
    s0 = record.location

    def boxes():
        if record.kind == "line":
            for h in (0.15, 0.05):
                yield Rect(s0.real - h, s0.real + h, s0.imag - h, s0.imag + h)
        else:
            center = field.real_zero_window[0]
            for h in (0.15, 0.05):
                re_lo = max(s0.real - h, center + max(0.02, cfg.exclusion_radius))
                if re_lo >= s0.real:
                    re_lo = center + 0.5 * (s0.real - center)
                yield Rect(re_lo, s0.real + h, -h, h)

    ok_counts = True
    for rect in boxes():
        count = None
        grow = 1.0
        for _ in range(3):
            try:
                scaled = Rect(
                    s0.real - (s0.real - rect.re_lo) * grow,
                    s0.real + (rect.re_hi - s0.real) * grow,
                    s0.imag + (rect.t_lo - s0.imag) * grow,
                    s0.imag + (rect.t_hi - s0.imag) * grow,
                )
                count = winding_number(
                    lambda pts: entire_phi_with_scale(field, a, pts), scaled, cfg
                )
                break
            except BoundaryNearZero:
                grow *= 1.22
        if count != 1:
            ok_counts = False
            break

    h = 1e-6
    vals, scales = entire_phi_with_scale(field, a, np.array([s0 + h, s0 - h]))
    deriv = abs(vals[0] - vals[1]) / (2.0 * h) / max(float(scales.mean()), 1e-300)
    ok_deriv = deriv > 1e-8

    if record.kind == "line" and field.is_rational:
        record.ms_norm = maass_selberg_norm_line(a, record.im)

    record.simple = bool(ok_counts and ok_deriv)
    return record.simple


def threshold_crossing(field: FieldSpec, lo: float, hi: float,
                       tol: float = 1e-4) -> float:
    """Bisect on a for the appearance of the real zero; the bracket must
    straddle the threshold. Uses fast absence checks (no strip counting)."""
    has_lo = find_real_zero(field, lo, confirm_absent=False) is not None
    has_hi = find_real_zero(field, hi, confirm_absent=False) is not None
    if has_lo or not has_hi:
        raise DomainError(f"bracket [{lo}, {hi}] does not straddle the threshold")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if find_real_zero(field, mid, confirm_absent=False) is None:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def scan_with_certification(field: FieldSpec, a: float,
                            config: ScanConfig) -> list[ZeroRecord]:
    """scan_line_auto followed by certify_simple on every record."""
    records = scan_line_auto(field, a, config)
    for rec in records:
        certify_simple(rec, config)
    return records
