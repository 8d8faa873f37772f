"""Completed zeta functions Lambda, Lambda_K, their entire versions xi, xi_K,
Laurent data at the poles, and a brute-force lattice oracle for zeta_K.

Lambda(s)   = pi^(-s/2) Gamma(s/2) zeta(s)
Lambda_K(s) = (sqrt|d_K|/2pi)^s Gamma(s) zeta(s) L(s, chi_{d_K})

Both have simple poles at s = 0 and s = 1 and satisfy f(s) = f(1-s); the
functional equation is *not* used internally, so verifying it exercises the
analytic continuation for real.
"""

from __future__ import annotations

import functools
import math
import threading
from dataclasses import dataclass

import numpy as np

from ._coeffs import LOG_PI
from .backend import kernels
from .errors import DomainError, PoleError, UnsupportedAccuracy
from .fields import FIELD_Q, FieldSpec
from .special import POLE_EPS, _as_array, _restore, dirichlet_l, hurwitz_block, log_gamma

#: |s| below which xi, xi_K switch to the local Laurent-driven expansion
EXPANSION_RADIUS = 1e-3


@dataclass(frozen=True)
class ZetaContext:
    """Evaluation envelope: requested accuracy and the supported |Im s| cap."""

    target_accuracy: float = 1e-11
    max_im: float = 100.0

    def __post_init__(self):
        if self.target_accuracy < 1e-13:
            raise UnsupportedAccuracy(
                f"target accuracy {self.target_accuracy:g} is tighter than the "
                "double-precision evaluators support (1e-13)"
            )
        if self.max_im <= 0:
            raise DomainError("max_im must be positive")

    def check(self, s) -> None:
        arr, _ = _as_array(s)
        if (np.abs(arr.imag) > self.max_im).any():
            raise DomainError(f"|Im s| exceeds the context cap {self.max_im}")


class MemoCache:
    """Insert-once memo for Lambda evaluations: concurrent reads are lock-free,
    insertion is single-writer, and a stored value is never replaced."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            return self._data.setdefault(key, value)

    def __len__(self):
        return len(self._data)


_memo: MemoCache | None = None


def set_memo(memo: MemoCache | None) -> None:
    """Install (or remove) the optional evaluation memo used by scalar calls."""
    global _memo
    _memo = memo


def _memo_key(tag: str, s: complex):
    return (tag, round(s.real, 14), round(s.imag, 14))


def _zeta_values(arr: np.ndarray) -> np.ndarray:
    return hurwitz_block(arr, np.array([1.0]))[:, 0]


def _check_poles(arr: np.ndarray, name: str) -> None:
    near0 = np.abs(arr) < POLE_EPS
    near1 = np.abs(arr - 1.0) < POLE_EPS
    if near0.any() or near1.any():
        which = "s=0" if near0.any() else "s=1"
        raise PoleError(f"{name} has a pole at {which}")


def lambda_completed(s, ctx: ZetaContext | None = None):
    """Completed zeta Lambda(s) = pi^(-s/2) Gamma(s/2) zeta(s); poles at 0, 1."""
    if ctx is not None:
        ctx.check(s)
    arr, scalar = _as_array(s)
    _check_poles(arr, "Lambda")
    if scalar and _memo is not None:
        key = _memo_key("Lambda", complex(arr[0]))
        hit = _memo.get(key)
        if hit is not None:
            return hit
    vals = np.exp(log_gamma(arr / 2.0) - arr * (0.5 * LOG_PI)) * _zeta_values(arr)
    if scalar and _memo is not None:
        return _memo.put(key, complex(vals[0]))
    return _restore(vals, s, scalar)


def lambda_K(field: FieldSpec, s, ctx: ZetaContext | None = None):
    """Completed Dedekind zeta Lambda_K(s) = (sqrt|d|/2pi)^s Gamma(s) zeta_K(s),
    with zeta_K factored as zeta(s) L(s, chi_d); poles at 0, 1."""
    if field.is_rational:
        raise DomainError("lambda_K needs an imaginary quadratic field")
    if ctx is not None:
        ctx.check(s)
    arr, scalar = _as_array(s)
    _check_poles(arr, "Lambda_K")
    if scalar and _memo is not None:
        key = _memo_key("Lambda_" + field.label, complex(arr[0]))
        hit = _memo.get(key)
        if hit is not None:
            return hit
    pref = math.log(math.sqrt(abs(field.discriminant)) / (2.0 * math.pi))
    vals = (np.exp(arr * pref + log_gamma(arr))
            * _zeta_values(arr)
            * dirichlet_l(arr, field.character))
    if scalar and _memo is not None:
        return _memo.put(key, complex(vals[0]))
    return _restore(vals, s, scalar)


def completed_zeta(field: FieldSpec, s, ctx: ZetaContext | None = None):
    """Lambda for Q, Lambda_K otherwise."""
    if field.is_rational:
        return lambda_completed(s, ctx)
    return lambda_K(field, s, ctx)


# ---------------------------------------------------------------------------
# Laurent data at the pole s=1 (equivalently s=0 via the functional equation)


@dataclass(frozen=True)
class PoleData:
    """Laurent data of the completed zeta at s=1:
    f(1+w) = residue/w + A + C w + E w^2 + F w^3 + ...

    `residue` is the exact class-number-formula value; `residue_measured`
    is the contour-extracted check value.
    """

    residue: float
    residue_measured: float
    A: float
    C: float
    E: float
    F: float


def _extract_pole_data(field: FieldSpec, radius: float = 0.25, nodes: int = 64) -> PoleData:
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    w = radius * np.exp(1j * theta)
    f = completed_zeta(field, 1.0 + w)
    coef = {}
    for k in (-1, 0, 1, 2, 3):
        coef[k] = complex((f * w ** (-k)).mean())
    r = 1.0 if field.is_rational else 1.0 / field.unit_count
    return PoleData(
        residue=r,
        residue_measured=coef[-1].real,
        A=coef[0].real,
        C=coef[1].real,
        E=coef[2].real,
        F=coef[3].real,
    )


@functools.lru_cache(maxsize=None)
def pole_data(field: FieldSpec) -> PoleData:
    """Cached Laurent data; trapezoidal contour quadrature is spectrally
    accurate here (nearest other singularity at distance 1)."""
    return _extract_pole_data(field)


def _xi_expansion(arr: np.ndarray, data: PoleData, reflected: bool) -> np.ndarray:
    # xi(s) = r - (r+A) s + (A+C) s^2 - (C+E) s^3 + O(s^4) near s=0;
    # near s=1 evaluate at 1-s using xi(s) = xi(1-s).
    w = (1.0 - arr) if reflected else arr
    r = data.residue
    return (r - (r + data.A) * w + (data.A + data.C) * w * w
            - (data.C + data.E) * w ** 3)


def _xi_generic(field: FieldSpec, arr: np.ndarray) -> np.ndarray:
    out = np.empty_like(arr)
    near0 = np.abs(arr) < EXPANSION_RADIUS
    near1 = np.abs(arr - 1.0) < EXPANSION_RADIUS
    # left of Re s = -1/2 the direct product walks into the gamma poles and
    # trivial zeros; xi(s) = xi(1-s) maps those points to the clean side
    deep = (~(near0 | near1)) & (arr.real < -0.5)
    rest = ~(near0 | near1 | deep)
    data = pole_data(field)
    if near0.any():
        out[near0] = _xi_expansion(arr[near0], data, reflected=False)
    if near1.any():
        out[near1] = _xi_expansion(arr[near1], data, reflected=True)
    if deep.any():
        a = 1.0 - arr[deep]
        out[deep] = a * (a - 1.0) * completed_zeta(field, a)
    if rest.any():
        a = arr[rest]
        out[rest] = a * (a - 1.0) * completed_zeta(field, a)
    return out


def xi(s):
    """Entire xi(s) = s(s-1) Lambda(s); xi(0) = xi(1) = 1."""
    arr, scalar = _as_array(s)
    return _restore(_xi_generic(FIELD_Q, arr), s, scalar)


def xi_K(field: FieldSpec, s):
    """Entire xi_K(s) = s(s-1) Lambda_K(s); xi_K(0) = xi_K(1) = 1/w_K."""
    if field.is_rational:
        raise DomainError("xi_K needs an imaginary quadratic field")
    arr, scalar = _as_array(s)
    return _restore(_xi_generic(field, arr), s, scalar)


def xi_field(field: FieldSpec, s):
    """xi for Q, xi_K otherwise."""
    arr, scalar = _as_array(s)
    return _restore(_xi_generic(field, arr), s, scalar)


# ---------------------------------------------------------------------------
# Lattice oracle


def lattice_zeta_bruteforce(field: FieldSpec, s, radius: float):
    """zeta_K(s) by direct summation over 0 < |m + n omega| <= radius of
    |m + n omega|^(-2s) / w_K, for Re s > 1.

    Truncation tail is O(radius^(2 - 2 Re s)); this is the independent
    oracle for the factored zeta_K = zeta * L.
    """
    if field.is_rational:
        raise DomainError("lattice oracle needs an imaginary quadratic field")
    s = complex(s)
    if s.real <= 1.0:
        raise DomainError("lattice sum requires Re s > 1")
    if radius < 10.0:
        raise DomainError("radius must be >= 10")
    om = field.omega
    total = kernels.lattice_sum(om.real, om.imag, float(radius), s)
    return total / field.unit_count


def lattice_tail_bound(field: FieldSpec, s, radius: float) -> float:
    """Crude tail estimate: 2 pi / covol * R^(2-2 sigma) / (2 sigma - 2)."""
    sigma = complex(s).real
    covol = field.omega.imag
    return 2.0 * math.pi / covol * radius ** (2.0 - 2.0 * sigma) / (2.0 * sigma - 2.0)


# ---------------------------------------------------------------------------
# Richardson-extrapolated derivatives


def richardson_derivative(f, x0: float, h: float = 0.01, levels: int = 3):
    """Central-difference derivative with Richardson extrapolation.

    Returns (value, error_estimate); the estimate is the magnitude of the
    last extrapolation correction.
    """
    table = []
    for k in range(levels):
        hk = h / (2.0 ** k)
        table.append((f(x0 + hk) - f(x0 - hk)) / (2.0 * hk))
    prev = table[-1]
    for m in range(1, levels):
        fac = 4.0 ** m
        table = [(fac * table[i + 1] - table[i]) / (fac - 1.0) for i in range(len(table) - 1)]
    err = abs(table[-1] - prev)
    return table[-1], err


def log_xi_derivative_at_zero(field: FieldSpec, h: float = 0.01):
    """d/ds log xi(s) at s=0 (xi is positive there), Richardson steps h, h/2, h/4."""
    def f(x):
        return math.log(float(np.real(xi_field(field, complex(x, 0.0)))))

    return richardson_derivative(f, 0.0, h=h, levels=3)
