"""Spectral translation layer: zeros to cut-off-Laplacian eigenvalues,
ladder monotonicity in the truncation height, the critical constant a* by
three independent routes, and real-zero trajectories.

The three a* routes:

  SpectralDerivative   Richardson log-derivative of xi (resp. xi_K) at 0;
                       a* = exp(2(1 + d)) for Q, exp(1 - d) for K.
  CenterRoot           Laurent constant of the completed zeta at its pole
                       (contour quadrature); the root in a of the center
                       value, mapped to the reported normalization.
  KroneckerClosedForm  eta-function closed form e^(2+gamma)/(2 pi sqrt(D))
                       with the branch fixed by the ring-of-integers
                       convention (K fields only).

All three report the closed-form normalization A (for the imaginary
quadratic fields A = e^2 * T where T is the real-zero threshold; for Q the
two coincide at 4 pi e^(-gamma)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._coeffs import EULER_GAMMA
from .constant_term import real_zero_threshold
from .errors import ConventionMismatch, DomainError, LadderMismatch
from .fields import FieldSpec, QUADRATIC_FIELDS
from .report import Check, VerifyReport, make_check
from .special import dedekind_eta, kronecker_symbol, log_gamma
from .zerofind import ScanConfig, ZeroRecord, find_real_zero, mu_from_location, scan_line_auto
from .zeta import _extract_pole_data, log_xi_derivative_at_zero, pole_data


@dataclass(frozen=True)
class AStarResult:
    field: FieldSpec
    method: str
    value: float
    accuracy_estimate: float


@dataclass
class Trajectory:
    """Per-height real-zero positions and line-zero ladders."""

    field: FieldSpec
    a_grid: list[float]
    rho: list[float | None]
    t_ladder: list[list[float]]


def mu_from_zero(field: FieldSpec, record: ZeroRecord) -> float:
    """Implied eigenvalue of the zero: rho(1-rho) for Q (= 1/4 + t^2 on the
    line), rho(2-rho) for K (= 1 + t^2 on the line)."""
    return mu_from_location(field, record.kind, record.re, record.im)


def astar_spectral(field: FieldSpec) -> AStarResult:
    """a* from the Richardson-extrapolated log-derivative of xi at 0."""
    d0, err = log_xi_derivative_at_zero(field)
    if field.is_rational:
        value = math.exp(2.0 * (1.0 + d0))
        acc = 2.0 * value * err
    else:
        value = math.exp(1.0 - d0)
        acc = value * err
    return AStarResult(field=field, method="SpectralDerivative",
                       value=value, accuracy_estimate=max(acc, 1e-12 * value))


def astar_center_root(field: FieldSpec) -> AStarResult:
    """a* from the Laurent constant A of the completed zeta at its pole.

    The center value of phi vanishes at ln a = -A/r (times 2 for Q, where
    the scattering argument is doubled); for the K fields the reported
    normalization carries the extra factor e^2.
    """
    data = pole_data(field)
    alt = _extract_pole_data(field, radius=0.35, nodes=64)
    if field.is_rational:
        value = math.exp(-2.0 * data.A)
        err = abs(math.exp(-2.0 * alt.A) - value)
    else:
        value = math.exp(2.0 + data.A / data.residue)
        err = abs(math.exp(2.0 + alt.A / alt.residue) - value)
    return AStarResult(field=field, method="CenterRoot",
                       value=value, accuracy_estimate=max(err, 1e-13 * value))


def _eta_branch_values(field: FieldSpec) -> tuple[float, float]:
    """(selected, other) closed-form values for the two eta branches."""
    D = field.D
    pref = math.exp(2.0 + EULER_GAMMA) / (2.0 * math.pi * math.sqrt(D))
    v_axis = pref / (2.0 * abs(dedekind_eta(complex(0.0, math.sqrt(D)))) ** 4)
    v_half = pref / abs(dedekind_eta(complex(0.5, math.sqrt(D) / 2.0))) ** 4
    if D % 4 in (1, 2):
        return v_axis, v_half
    return v_half, v_axis


def astar_kronecker(field: FieldSpec) -> AStarResult:
    """Closed-form a* via the Dedekind eta value at the lattice CM point.

    Branch selection follows the ring-of-integers convention (D = 1, 2
    mod 4: point i sqrt(D) with the extra factor 2; D = 3 mod 4: the
    half-integer point). If the selected branch disagrees with the
    spectral route while the other agrees, ConventionMismatch is raised
    carrying both values.
    """
    if field.is_rational:
        raise DomainError("astar_kronecker needs an imaginary quadratic field")
    selected, other = _eta_branch_values(field)
    spectral = astar_spectral(field).value
    rel_sel = abs(selected - spectral) / spectral
    rel_other = abs(other - spectral) / spectral
    if rel_sel > 1e-4 and rel_other <= 1e-4:
        raise ConventionMismatch(
            f"eta branch for D={field.D} disagrees with the spectral value "
            f"{spectral:.10g}: selected {selected:.10g}, other {other:.10g}",
            selected=selected, other=other,
        )
    return AStarResult(field=field, method="KroneckerClosedForm",
                       value=selected, accuracy_estimate=1e-12 * selected)


def astar_all(field: FieldSpec) -> list[AStarResult]:
    routes = [astar_spectral(field), astar_center_root(field)]
    if not field.is_rational:
        routes.append(astar_kronecker(field))
    return routes


def chowla_selberg_delta(D: int) -> float:
    """Modular discriminant Delta(sqrt(D) i) = eta(i sqrt(D))^24 by the
    Gamma-product closed form

        (8 pi D)^(-6) [prod_{m=1}^{4D} Gamma(m/4D)^chi(m)]^(3 w)

    with chi = (-4D/.); requires d = -4D fundamental with h = 1, i.e.
    D in {1, 2} among the class-number-one list."""
    if D not in (1, 2):
        raise DomainError(
            "the Gamma-product form needs D = 1, 2 mod 4 with class number one "
            f"(D in {{1, 2}}); got D={D}"
        )
    w = QUADRATIC_FIELDS[D].unit_count
    log_prod = 0.0
    for m in range(1, 4 * D + 1):
        chi = kronecker_symbol(-4 * D, m)
        if chi:
            log_prod += chi * float(np.real(log_gamma(complex(m / (4.0 * D), 0.0))))
    return (8.0 * math.pi * D) ** (-6.0) * math.exp(3.0 * w * log_prod)


# ---------------------------------------------------------------------------
# ladders and trajectories


def ladder(field: FieldSpec, a: float, t_max: float,
           config: ScanConfig | None = None) -> list[float]:
    """Sorted line-zero ordinates up to t_max (window buffer applied by the
    monotonicity checker, not here)."""
    cfg = config or ScanConfig(t_min=0.5, t_max=t_max)
    if cfg.t_max != t_max:
        cfg = ScanConfig(t_min=cfg.t_min, t_max=t_max, step=cfg.step,
                         refine_tol=cfg.refine_tol,
                         winding_max_phase_step=cfg.winding_max_phase_step,
                         exclusion_radius=cfg.exclusion_radius,
                         max_subdivision_depth=cfg.max_subdivision_depth)
    return [rec.im for rec in scan_line_auto(field, a, cfg)]


#: buffer subtracted from t_max when pairing ladders across heights
LADDER_BUFFER = 0.5


def monotonicity_check(field: FieldSpec, a_grid: list[float], t_max: float,
                       config: ScanConfig | None = None,
                       max_index: int | None = None,
                       strict_margin: float = 0.0) -> VerifyReport:
    """Eigenvalue-ladder monotonicity: for consecutive heights a < a' the
    branch-paired ordinates satisfy t_j(a) >= t_j(a') + margin.

    Ladders are windowed to t_max - 0.5 before pairing. Pairing is by
    eigenvalue branch: once a exceeds the real-zero threshold the lowest
    branch leaves the line through the center, so the larger-a ladder is
    shifted by the real-zero count. Unexplained shrinkage raises
    LadderMismatch.
    """
    if sorted(a_grid) != list(a_grid):
        raise DomainError("a_grid must be ascending")
    if any(a < 1.0 for a in a_grid):
        raise DomainError("heights must satisfy a >= 1")
    report = VerifyReport(suite=f"monotonicity-{field.label}")
    cut = t_max - LADDER_BUFFER
    # scan from low t so the descending lowest branch stays visible until
    # shortly before it leaves through the center
    cfg = config or ScanConfig(t_min=0.1, t_max=t_max)
    ladders = []
    for a in a_grid:
        full = ladder(field, a, t_max, cfg)
        ladders.append([t for t in full if t <= cut])

    threshold = real_zero_threshold(field)
    shifts = [1 if a > threshold else 0 for a in a_grid]

    for (a1, l1, s1), (a2, l2, s2) in zip(
        zip(a_grid, ladders, shifts), zip(a_grid[1:], ladders[1:], shifts[1:])
    ):
        delta = s2 - s1
        bottom_exits = delta + sum(1 for t in l1 if t < cfg.t_min + LADDER_BUFFER)
        if len(l2) < len(l1) - bottom_exits:
            raise LadderMismatch(
                f"ladder shrank from {len(l1)} to {len(l2)} between a={a1} and "
                f"a={a2}; only {bottom_exits} exits are explained"
            )
        pairs = []
        for k in range(delta, len(l1)):
            k2 = k - delta
            if k2 >= len(l2):
                break
            pairs.append((k, l1[k], l2[k2]))
        if max_index is not None:
            pairs = pairs[:max_index]
        violations = [p for p in pairs if not p[1] >= p[2] + strict_margin]
        worst = min((p[1] - p[2] for p in pairs), default=float("inf"))
        report.checks.append(make_check(
            id=f"ladder-{field.label}-a{a1}-to-a{a2}",
            anchor="each eigenvalue mu_j(a) decreases in a, so t_j(a) >= t_j(a')",
            measured=worst, expected=f">= {strict_margin}", tolerance=strict_margin,
            ok=not violations,
            detail=f"{len(pairs)} branch pairs compared"
            + ("" if not violations else f"; violations at {[p[0] for p in violations]}"),
        ))
        if max_index is not None:
            report.checks.append(make_check(
                id=f"ladder-depth-{field.label}-a{a1}-to-a{a2}",
                anchor=f"at least {max_index} branch pairs inside the window",
                measured=len(pairs), expected=max_index, tolerance=0.0,
                ok=len(pairs) >= max_index,
            ))
    return report


def rho_track(field: FieldSpec, a_grid: list[float], t_max: float | None = None,
              config: ScanConfig | None = None,
              confirm_absent: bool = False) -> Trajectory:
    """Real-zero positions along an ascending height grid (None below the
    threshold), with optional line-zero ladders when t_max is given."""
    if sorted(a_grid) != list(a_grid):
        raise DomainError("a_grid must be ascending")
    rho: list[float | None] = []
    ladders: list[list[float]] = []
    for a in a_grid:
        rec = find_real_zero(field, a, config, confirm_absent=confirm_absent)
        rho.append(None if rec is None else rec.re)
        ladders.append(ladder(field, a, t_max, config) if t_max is not None else [])
    present = [r for r in rho if r is not None]
    if any(b < a for a, b in zip(present, present[1:])):
        raise DomainError(f"rho trajectory not nondecreasing: {present}")
    threshold = real_zero_threshold(field)
    for a, r in zip(a_grid, rho):
        if (r is not None) != (a > threshold):
            raise DomainError(
                f"real zero presence at a={a} contradicts threshold {threshold:.6f}"
            )
    return Trajectory(field=field, a_grid=list(a_grid), rho=rho, t_ladder=ladders)
