"""Constant-term functions of the Eisenstein series for Q and the imaginary
quadratic fields, their pole-free scattering ratios, entire normalizations
for contour counting, Hecke congruence determinant factors, and the
Maass-Selberg norm expressions.

    phi0(a, s)     = Lambda(2s) a^s   + Lambda(2s-1) a^(1-s)
    phiK(a, s)     = Lambda_K(s) a^s  + Lambda_K(s-1) a^(2-s)
    c(s)           = Lambda(2s-1)/Lambda(2s)   = s/(s-1) xi(2s-1)/xi(2s)
    c_K(s)         = Lambda_K(s-1)/Lambda_K(s) = s/(s-2) xi_K(s-1)/xi_K(s)

phi0 is symmetric under s -> 1-s with a removable center at s = 1/2; phiK
under s -> 2-s with center s = 1. The center values are returned in closed
form: sqrt(a) ln(a/T) and (2a/w_K) ln(a/T_K), where T is the height at
which the center value vanishes (the real-zero threshold). For Q,
ln T = log(4 pi) - gamma; for K, ln T_K = -A_K/r_K from the Laurent data
of Lambda_K at its pole.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._coeffs import EULER_GAMMA
from .errors import DivisionError, DomainError, PoleError
from .fields import FieldSpec
from .special import POLE_EPS, _as_array, _restore
from .zeta import (
    completed_zeta,
    lambda_completed,
    pole_data,
    richardson_derivative,
    xi,
    xi_field,
)

#: radius around the removable center where the closed-form limit is returned
CENTER_EPS = 1e-8

#: ln of the critical height for Q: a* = 4 pi e^(-gamma)
LN_ASTAR_Q = math.log(4.0 * math.pi) - EULER_GAMMA


@dataclass(frozen=True)
class ConstantTermSpec:
    """A field together with a truncation height a >= 1."""

    field: FieldSpec
    a: float

    def __post_init__(self):
        if self.a < 1.0:
            raise DomainError("truncation height must satisfy a >= 1")


@dataclass(frozen=True)
class HeckeSpec:
    """One sign factor of the Gamma_0(p) determinant at height a."""

    p: int
    sign: int
    a: float

    def __post_init__(self):
        if self.p < 2 or any(self.p % k == 0 for k in range(2, int(self.p ** 0.5) + 1)):
            raise DomainError(f"p={self.p} is not prime")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        if self.a < 1.0:
            raise DomainError("truncation height must satisfy a >= 1")


def ln_center_root(field: FieldSpec) -> float:
    """ln T, where T is the height at which the center value of phi vanishes."""
    if field.is_rational:
        return LN_ASTAR_Q
    data = pole_data(field)
    return -data.A / data.residue


def real_zero_threshold(field: FieldSpec) -> float:
    """The height T above which phi(a, .) has its pair of real zeros."""
    return math.exp(ln_center_root(field))


def phi0_center_value(a: float) -> float:
    """Closed-form center value of phi0: sqrt(a) ln(a/a*)."""
    return math.sqrt(a) * (math.log(a) - LN_ASTAR_Q)


def phi_center_value(field: FieldSpec, a: float) -> float:
    """Closed-form value of phi at the removable center:
    sqrt(a) ln(a/T) for Q, (2a/w_K) ln(a/T_K) for K."""
    if field.is_rational:
        return phi0_center_value(a)
    return (2.0 * a / field.unit_count) * (math.log(a) - ln_center_root(field))


# ---------------------------------------------------------------------------
# phi


def phi0(a: float, s):
    """Zeroth Fourier coefficient Lambda(2s) a^s + Lambda(2s-1) a^(1-s).

    Poles at s = 0, 1; at the center s = 1/2 the analytic limit
    sqrt(a) ln(a/a*) is returned.
    """
    if a <= 0.0:
        raise DomainError("phi0 requires a > 0")
    arr, scalar = _as_array(s)
    if (np.abs(arr) < POLE_EPS).any() or (np.abs(arr - 1.0) < POLE_EPS).any():
        raise PoleError("phi0 has poles at s=0 and s=1")
    out = np.empty_like(arr)
    center = np.abs(arr - 0.5) < CENTER_EPS
    if center.any():
        out[center] = phi0_center_value(a)
    rest = ~center
    if rest.any():
        sr = arr[rest]
        la = math.log(a)
        out[rest] = (np.exp(sr * la) * lambda_completed(2.0 * sr)
                     + np.exp((1.0 - sr) * la) * lambda_completed(2.0 * sr - 1.0))
    return _restore(out, s, scalar)


def phiK(field: FieldSpec, a: float, s):
    """Constant term Lambda_K(s) a^s + Lambda_K(s-1) a^(2-s).

    Poles at s = 0, 2; at the center s = 1 the analytic limit
    (2a/w_K) ln(a/T_K) is returned.
    """
    if field.is_rational:
        raise DomainError("phiK needs an imaginary quadratic field")
    if a <= 0.0:
        raise DomainError("phiK requires a > 0")
    arr, scalar = _as_array(s)
    if (np.abs(arr) < POLE_EPS).any() or (np.abs(arr - 2.0) < POLE_EPS).any():
        raise PoleError("phiK has poles at s=0 and s=2")
    out = np.empty_like(arr)
    center = np.abs(arr - 1.0) < CENTER_EPS
    if center.any():
        out[center] = phi_center_value(field, a)
    rest = ~center
    if rest.any():
        sr = arr[rest]
        la = math.log(a)
        out[rest] = (np.exp(sr * la) * completed_zeta(field, sr)
                     + np.exp((2.0 - sr) * la) * completed_zeta(field, sr - 1.0))
    return _restore(out, s, scalar)


def phi(field: FieldSpec, a: float, s):
    """phi0 for Q, phiK otherwise."""
    if field.is_rational:
        return phi0(a, s)
    return phiK(field, a, s)


# ---------------------------------------------------------------------------
# scattering ratios


def _safe_ratio(num, den, what: str):
    if (np.abs(den) == 0.0).any():
        raise DivisionError(f"{what}: division by a zero of the completed zeta")
    with np.errstate(divide="ignore", invalid="ignore"):
        return num / den


def c_scatter(s):
    """Scattering function c(s) = Lambda(2s-1)/Lambda(2s), evaluated in the
    pole-free form (s/(s-1)) xi(2s-1)/xi(2s); c(1/2) = -1."""
    arr, scalar = _as_array(s)
    num = xi(2.0 * arr - 1.0)
    den = xi(2.0 * arr)
    vals = _safe_ratio(arr * num, (arr - 1.0) * den, "c_scatter")
    return _restore(vals, s, scalar)


def cK_scatter(field: FieldSpec, s):
    """Scattering function c_K(s) = Lambda_K(s-1)/Lambda_K(s) in the pole-free
    form (s/(s-2)) xi_K(s-1)/xi_K(s); c_K(1) = -1."""
    if field.is_rational:
        raise DomainError("cK_scatter needs an imaginary quadratic field")
    arr, scalar = _as_array(s)
    num = xi_field(field, arr - 1.0)
    den = xi_field(field, arr)
    vals = _safe_ratio(arr * num, (arr - 2.0) * den, "cK_scatter")
    return _restore(vals, s, scalar)


def scatter(field: FieldSpec, s):
    """c for Q, c_K otherwise."""
    if field.is_rational:
        return c_scatter(s)
    return cK_scatter(field, s)


def unit_constant_term(field: FieldSpec, a: float, s):
    """a^s + c(s) a^(1-s) (resp. a^s + c_K(s) a^(2-s)).

    This is phi divided by Lambda(2s) (resp. Lambda_K(s)); it vanishes at the
    center for *every* a because c(center) = -1, unlike phi itself whose
    center value is the ln(a/T) limit. Exposed so the distinction is testable.
    """
    arr, scalar = _as_array(s)
    la = math.log(a)
    if field.is_rational:
        vals = np.exp(arr * la) + c_scatter(arr) * np.exp((1.0 - arr) * la)
    else:
        vals = np.exp(arr * la) + cK_scatter(field, arr) * np.exp((2.0 - arr) * la)
    return _restore(vals, s, scalar)


# ---------------------------------------------------------------------------
# entire normalizations with their conditioning scales


def _g0_parts(a: float, arr: np.ndarray):
    la = math.log(a)
    t1 = (arr - 1.0) * np.exp(arr * la) * xi(2.0 * arr)
    t2 = arr * np.exp((1.0 - arr) * la) * xi(2.0 * arr - 1.0)
    den = 2.0 * (2.0 * arr - 1.0)
    near = np.abs(arr - 0.5) < 1e-7
    vals = np.empty_like(arr)
    scale = np.empty(arr.shape, dtype=np.float64)
    if near.any():
        eps = arr[near] - 0.5
        vals[near] = (eps * eps - 0.25) * phi0_center_value(a)
        scale[near] = np.maximum(np.abs(vals[near]), 1e-30)
    rest = ~near
    if rest.any():
        vals[rest] = (t1[rest] + t2[rest]) / den[rest]
        scale[rest] = (np.abs(t1[rest]) + np.abs(t2[rest])) / np.abs(den[rest])
    return vals, scale


def _gk_parts(field: FieldSpec, a: float, arr: np.ndarray):
    la = math.log(a)
    t1 = (arr - 2.0) * np.exp(arr * la) * xi_field(field, arr)
    t2 = arr * np.exp((2.0 - arr) * la) * xi_field(field, arr - 1.0)
    den = arr - 1.0
    near = np.abs(arr - 1.0) < 1e-7
    vals = np.empty_like(arr)
    scale = np.empty(arr.shape, dtype=np.float64)
    if near.any():
        eps = arr[near] - 1.0
        vals[near] = (eps * eps - 1.0) * phi_center_value(field, a)
        scale[near] = np.maximum(np.abs(vals[near]), 1e-30)
    rest = ~near
    if rest.any():
        vals[rest] = (t1[rest] + t2[rest]) / den[rest]
        scale[rest] = (np.abs(t1[rest]) + np.abs(t2[rest])) / np.abs(den[rest])
    return vals, scale


def entire_phi0(a: float, s):
    """G0(a, s) = s(s-1) phi0(a, s), entire; G0(a, 0) = G0(a, 1) = 1/2.

    Evaluated as ((s-1) a^s xi(2s) + s a^(1-s) xi(2s-1)) / (2(2s-1)) so no
    pole limit is ever formed; the numerator vanishes at the center.
    """
    arr, scalar = _as_array(s)
    vals, _ = _g0_parts(a, arr)
    return _restore(vals, s, scalar)


def entire_phiK(field: FieldSpec, a: float, s):
    """G_K(a, s) = s(s-2) phiK(a, s), entire; G_K(a, 0) = G_K(a, 2) = 2/w_K."""
    if field.is_rational:
        raise DomainError("entire_phiK needs an imaginary quadratic field")
    arr, scalar = _as_array(s)
    vals, _ = _gk_parts(field, a, arr)
    return _restore(vals, s, scalar)


def entire_phi_with_scale(field: FieldSpec, a: float, s):
    """(G, scale) pairs for contour work; scale is the sum of the magnitudes
    of the two constituent terms, the natural conditioning unit for |G|."""
    arr, _ = _as_array(s)
    if field.is_rational:
        return _g0_parts(a, arr)
    return _gk_parts(field, a, arr)


def entire_phi(field: FieldSpec, a: float, s):
    """G0 for Q, G_K otherwise."""
    if field.is_rational:
        return entire_phi0(a, s)
    return entire_phiK(field, a, s)


# ---------------------------------------------------------------------------
# Hecke congruence factors for Gamma_0(p)


def _hecke_uv(spec: HeckeSpec, arr: np.ndarray):
    la, lp = math.log(spec.a), math.log(spec.p)
    u = np.exp(arr * la) * (np.exp(arr * lp) + spec.sign)
    v = np.exp((1.0 - arr) * la) * (np.exp((1.0 - arr) * lp) + spec.sign)
    return u, v


def hecke_factor(spec: HeckeSpec, s):
    """One factor of the Gamma_0(p) determinant:
    a^s (p^s + sign) Lambda(2s) + a^(1-s) (p^(1-s) + sign) Lambda(2s-1)."""
    arr, scalar = _as_array(s)
    for pole in (0.0, 0.5, 1.0):
        if (np.abs(arr - pole) < POLE_EPS).any():
            raise PoleError(f"hecke_factor pole at s={pole}")
    u, v = _hecke_uv(spec, arr)
    vals = u * lambda_completed(2.0 * arr) + v * lambda_completed(2.0 * arr - 1.0)
    return _restore(vals, s, scalar)


def hecke_entire_with_scale(spec: HeckeSpec, s):
    """(2s)(2s-1)(2s-2) times the factor, entire, with its conditioning scale.

    The prefactor only vanishes at s = 0, 1/2, 1 (all on the real axis), so
    inside rectangles with t >= exclusion the zero set is the factor's.
    """
    arr, _ = _as_array(s)
    u, v = _hecke_uv(spec, arr)
    t1 = u * (2.0 * arr - 2.0) * xi(2.0 * arr)
    t2 = v * (2.0 * arr) * xi(2.0 * arr - 1.0)
    return t1 + t2, np.abs(t1) + np.abs(t2)


def hecke_line_with_scale(spec: HeckeSpec, t):
    """Real rotated form on the critical line:
    f(1/2+it) = 2 Re[a^(1/2+it) (p^(1/2+it) + sign) Lambda(1+2it)]."""
    tt = np.atleast_1d(np.asarray(t, dtype=np.float64))
    sr = 0.5 + 1j * tt
    u, _ = _hecke_uv(spec, sr)
    lam = lambda_completed(1.0 + 2j * tt)
    prod = u * lam
    return 2.0 * prod.real, 2.0 * np.abs(prod)


def hecke_det_direct(p: int, a: float, s):
    """det(a^s Id + a^(1-s) C(s)) for Gamma_0(p) expanded through c(s):
    a^(2s) + 2a (p-1)/(p^(2s)-1) c(s) + a^(2-2s) (p^(2-2s)-1)/(p^(2s)-1) c(s)^2."""
    arr, scalar = _as_array(s)
    cs = c_scatter(arr)
    p2s = np.exp(2.0 * arr * math.log(p))
    vals = (np.exp(2.0 * arr * math.log(a))
            + 2.0 * a * (p - 1.0) / (p2s - 1.0) * cs
            + np.exp((2.0 - 2.0 * arr) * math.log(a))
            * (np.exp((2.0 - 2.0 * arr) * math.log(p)) - 1.0) / (p2s - 1.0) * cs ** 2)
    return _restore(vals, s, scalar)


def hecke_det_product(p: int, a: float, s):
    """Same determinant as the product of the two sign factors divided by
    (p^(2s)-1) Lambda(2s)^2; numerator and denominator share no zeros."""
    arr, scalar = _as_array(s)
    num = np.ones_like(arr)
    for sign in (-1, 1):
        spec = HeckeSpec(p=p, sign=sign, a=a)
        u, v = _hecke_uv(spec, arr)
        num = num * (u * lambda_completed(2.0 * arr) + v * lambda_completed(2.0 * arr - 1.0))
    den = (np.exp(2.0 * arr * math.log(p)) - 1.0) * lambda_completed(2.0 * arr) ** 2
    vals = _safe_ratio(num, den, "hecke_det_product")
    return _restore(vals, s, scalar)


# ---------------------------------------------------------------------------
# Maass-Selberg norm expressions


def _log_derivative_of_c(s0: complex, h: float = 1e-3):
    """(c'/c)(s0) by Richardson-extrapolated central differences of
    Log(c(s0+h)/c(s0-h)); the ratio stays near 1 so the principal log is safe."""
    def d(hh: float) -> complex:
        return cmath.log(complex(c_scatter(s0 + hh)) / complex(c_scatter(s0 - hh))) / (2.0 * hh)

    d1, d2 = d(h), d(h / 2.0)
    return (4.0 * d2 - d1) / 3.0


def maass_selberg_norm_line(a: float, r: float) -> float:
    """Squared norm of the truncated Eisenstein series at s = 1/2 + ir:
    2 log a - (c'/c)(1/2 + ir) - Im(c(1/2+ir) a^(-2ir)) / r.

    The sign of the oscillating term follows from the diagonal Maass-Selberg
    inner product [conj(X) - X]/(2ir) with X = c(1/2+ir) a^(-2ir); it is the
    one consistent with positivity and with the norm vanishing as r -> 0.
    At a zero of a^s + c(s) a^(1-s) the term vanishes, so either sign leaves
    the simplicity argument untouched.
    """
    if a < 1.0:
        raise DomainError("maass_selberg_norm_line requires a >= 1")
    if r == 0.0 or abs(r) < 1e-9:
        raise DomainError("maass_selberg_norm_line requires r != 0")
    s0 = complex(0.5, r)
    cval = complex(c_scatter(s0))
    cpc = _log_derivative_of_c(s0)
    val = 2.0 * math.log(a) - cpc - (cval * cmath.exp(-2j * r * math.log(a))).imag / r
    return float(val.real)


def maass_selberg_norm_real(a: float, sigma: float) -> float:
    """Squared norm at a real point sigma in (1/2, 1):
    (a^(2s-1) - |c(s)|^2 a^(1-2s))/(2s-1) + 2 c(s) log a - c'(s)."""
    if a < 1.0:
        raise DomainError("maass_selberg_norm_real requires a >= 1")
    if not 0.5 < sigma < 1.0:
        raise DomainError("maass_selberg_norm_real requires sigma in (1/2, 1)")
    cval = float(np.real(c_scatter(complex(sigma, 0.0))))

    def creal(x: float) -> float:
        return float(np.real(c_scatter(complex(x, 0.0))))

    cprime, _ = richardson_derivative(creal, sigma, h=1e-3, levels=2)
    la = math.log(a)
    return ((a ** (2.0 * sigma - 1.0) - cval ** 2 * a ** (1.0 - 2.0 * sigma))
            / (2.0 * sigma - 1.0) + 2.0 * cval * la - cprime)
