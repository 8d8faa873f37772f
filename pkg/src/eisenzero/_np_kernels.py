"""Pure-numpy implementations of the hot numeric kernels.

Twin module of `_nb_kernels`; the active implementation is chosen in
`backend`. Same formulas, vectorized over arrays instead of explicit loops.
"""

import math

import numpy as np

from ._coeffs import (
    EM_COEF,
    EM_COEF_DIGAMMA,
    LOG_2PI,
    LOG_PI,
    STIRLING_COEF,
    STIRLING_RADIUS,
)

BACKEND_NAME = "numpy"

_LOG_2 = math.log(2.0)


def loggamma_many(z):
    """Canonical log-gamma on an array of complex points.

    Stirling series after upward recursion for Re z >= 1/2, reflection with
    a continuous log-sin branch otherwise; conjugate symmetry maps the lower
    half-plane to the upper. Poles must be excluded by the caller.
    """
    z = np.ascontiguousarray(z, dtype=np.complex128)
    shape = z.shape
    z = z.ravel()

    neg = z.imag < 0.0
    zz = np.where(neg, np.conj(z), z)
    refl = zz.real < 0.5
    zr = np.where(refl, 1.0 - zz, zz)

    acc = np.zeros_like(zr)
    mask = np.abs(zr) < STIRLING_RADIUS
    while mask.any():
        acc[mask] += np.log(zr[mask])
        zr[mask] += 1.0
        mask = np.abs(zr) < STIRLING_RADIUS

    base = (zr - 0.5) * np.log(zr) - zr + 0.5 * LOG_2PI
    w = 1.0 / zr
    w2 = w * w
    p = w.copy()
    ser = np.zeros_like(zr)
    for c in STIRLING_COEF:
        ser += c * p
        p *= w2
    base += ser - acc

    if refl.any():
        # continuous branch of log sin(pi z) for Im z >= 0
        zzr = zz[refl]
        lsp = (0.5j * np.pi - _LOG_2) - 1j * np.pi * zzr + np.log(1.0 - np.exp(2j * np.pi * zzr))
        out_r = LOG_PI - lsp - base[refl]
        base[refl] = out_r

    base = np.where(neg, np.conj(base), base)
    return base.reshape(shape)


def hurwitz_grid(s, q, nterms, order):
    """Euler-Maclaurin Hurwitz zeta on the grid (s_i, q_j).

    Returns (values[m, n], bound[m]) where bound is the absolute remainder
    estimate |B_{2M+2}/(2M+2)! (s)_{2M+1} P^{-s-2M-1}| * |s+2M+1|/(sigma+2M+1)
    taken at the smallest P = q + nterms of the row.
    """
    s = np.ascontiguousarray(np.atleast_1d(s), dtype=np.complex128).ravel()
    q = np.ascontiguousarray(np.atleast_1d(q), dtype=np.float64).ravel()
    m, n = s.size, q.size

    kq = q[None, :] + np.arange(nterms, dtype=np.float64)[:, None]
    lkq = np.log(kq)
    acc = np.zeros((m, n), dtype=np.complex128)
    ms = -s[:, None]
    for k in range(nterms):
        acc += np.exp(ms * lkq[k][None, :])

    P = q + float(nterms)
    pms = np.exp(ms * np.log(P)[None, :])
    acc += pms * (P[None, :] / (s[:, None] - 1.0) + 0.5)

    u = 1.0 / P
    poch = s.copy()
    for j in range(1, order + 1):
        acc += EM_COEF[j - 1] * poch[:, None] * pms * u[None, :]
        poch = poch * (s + (2.0 * j - 1.0)) * (s + 2.0 * j)
        u = u / (P * P)

    sig = s.real
    pmin = q.min() + float(nterms)
    expo = sig + 2.0 * order + 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.abs(s + (2.0 * order + 1.0)) / expo
        bound = np.abs(EM_COEF[order]) * np.abs(poch) * pmin ** (-expo) * ratio
    bound = np.where(expo > 0.0, bound, np.inf)
    return acc, bound


def digamma_neg(q, nterms, order):
    """-psi(q) for a real array q > 0, by the same Euler-Maclaurin scheme."""
    q = np.ascontiguousarray(np.atleast_1d(q), dtype=np.float64).ravel()
    kq = q[None, :] + np.arange(nterms, dtype=np.float64)[:, None]
    acc = (1.0 / kq).sum(axis=0)
    P = q + float(nterms)
    acc += -np.log(P) + 0.5 / P
    u = 1.0 / (P * P)
    for j in range(1, order + 1):
        acc += EM_COEF_DIGAMMA[j - 1] * u
        u = u / (P * P)
    return acc


def lattice_sum(om_re, om_im, rmax, s):
    """sum over lattice points 0 < |m + n*omega| <= rmax of |m + n*omega|^(-2s).

    Row-blocked over n; |m + n*omega|^2 = (m + n Re(omega))^2 + (n Im(omega))^2.
    """
    s = complex(s)
    r2 = rmax * rmax
    nmax = int(math.floor(rmax / om_im)) + 1
    total = 0.0 + 0.0j
    real_s = s.imag == 0.0
    for n in range(-nmax, nmax + 1):
        c = n * om_re
        y2 = (n * om_im) ** 2
        if y2 > r2:
            continue
        half = math.sqrt(r2 - y2)
        mlo = int(math.ceil(-c - half))
        mhi = int(math.floor(-c + half))
        if mhi < mlo:
            continue
        mm = np.arange(mlo, mhi + 1, dtype=np.float64)
        norm2 = (mm + c) ** 2 + y2
        if n == 0:
            norm2 = norm2[norm2 > 0.0]
        norm2 = norm2[norm2 <= r2]
        if real_s:
            total += (norm2 ** (-s.real)).sum()
        else:
            total += np.exp(-s * np.log(norm2)).sum()
    return complex(total)
